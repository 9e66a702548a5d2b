// Hybrid search: recursive descent that collects every candidate subtree of
// one pass, then shifts the whole batch before searching again.

#include "npvsched/algorithms.hpp"
#include "search_context.hpp"

namespace npvsched {

SolverResult hs_solve(const ProjectNetwork& net, const SolveOptions& options) {
  const Direction direction = options.direction.value_or(choose_direction(net));
  detail::SearchContext ctx(net, direction, options);

  std::vector<std::vector<Vertex>> pending;
  while (true) {
    ctx.count_restart();
    pending.clear();
    detail::recursive_descent(
        ctx, [&](Vertex parent, Vertex child, std::vector<Vertex>& members) {
          ctx.detach(parent, child);
          pending.push_back(std::move(members));
          return false;
        });
    if (pending.empty()) break;
    detail::shift_groups(ctx, pending);
  }
  ctx.metrics().raw_restart_counter = ctx.metrics().restarted_search;
  return ctx.finish(Algorithm::kHs);
}

SolverResult solve(Algorithm algorithm, const ProjectNetwork& net,
                   const SolveOptions& options) {
  switch (algorithm) {
    case Algorithm::kRsfb: return rsfb_solve(net, options);
    case Algorithm::kSaafb: return saafb_solve(net, options);
    case Algorithm::kHs: return hs_solve(net, options);
  }
  return hs_solve(net, options);
}

}  // namespace npvsched
