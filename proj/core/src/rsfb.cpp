// Recursive search, forward-backward variant. Each subtree found by the
// descent is shifted immediately and the search restarts from the root.

#include <algorithm>

#include "npvsched/algorithms.hpp"
#include "search_context.hpp"

namespace npvsched {

namespace {

// Optional pre-pass: activities whose only successor is the end dummy
// (backward: whose only predecessor is the start dummy) and whose cash flow
// calls for a shift go straight to their latest (earliest) start.
void delay_successorless(detail::SearchContext& ctx) {
  const ProjectNetwork& net = ctx.net();
  const bool forward = ctx.direction() == Direction::kForward;
  for (Vertex v = 2; v < net.size(); ++v) {
    const auto outward = forward ? net.successors(v) : net.predecessors(v);
    if (outward.size() != 1 || !net.is_dummy(outward[0])) continue;
    if (!ctx.out(v).empty() || ctx.in(v).size() != 1) continue;
    if (!ctx.wants_shift(ctx.discounted_cash(v))) continue;
    const std::vector<Vertex> single{v};
    ctx.detach(ctx.in(v)[0], v);
    ctx.mark(single, true);
    const ShiftBound bound = ctx.bound_for_marked(single);
    ctx.mark(single, false);
    ctx.attach(bound);
    ctx.shift(single, bound.distance);
  }
}

}  // namespace

SolverResult rsfb_solve(const ProjectNetwork& net, const SolveOptions& options) {
  const Direction direction = options.direction.value_or(choose_direction(net));
  detail::SearchContext ctx(net, direction, options);

  if (options.rsfb_prepass) delay_successorless(ctx);

  bool shifted = true;
  while (shifted) {
    ctx.count_restart();
    shifted = detail::recursive_descent(
        ctx, [&](Vertex parent, Vertex child, std::vector<Vertex>& members) {
          ctx.detach(parent, child);
          std::sort(members.begin(), members.end());
          ctx.mark(members, true);
          const ShiftBound bound = ctx.bound_for_marked(members);
          ctx.mark(members, false);
          ctx.attach(bound);
          ctx.shift(members, bound.distance);
          return true;
        });
  }
  ctx.metrics().raw_restart_counter = ctx.metrics().restarted_search;
  return ctx.finish(Algorithm::kRsfb);
}

}  // namespace npvsched
