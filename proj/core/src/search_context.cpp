#include "search_context.hpp"

#include <algorithm>
#include <string>

#include "npvsched/errors.hpp"

namespace npvsched {

const char* to_string(Direction direction) {
  return direction == Direction::kForward ? "forward" : "backward";
}

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRsfb: return "RSFB";
    case Algorithm::kSaafb: return "SAAFB";
    case Algorithm::kHs: return "HS";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "rsfb") return Algorithm::kRsfb;
  if (lower == "saafb") return Algorithm::kSaafb;
  if (lower == "hs") return Algorithm::kHs;
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view name) {
  if (name == "forward") return Direction::kForward;
  if (name == "backward") return Direction::kBackward;
  return std::nullopt;
}

Direction choose_direction(const ProjectNetwork& net) {
  int negative = 0;
  for (Vertex v = 2; v < net.size(); ++v) {
    if (net.cash_flow(v) < 0) ++negative;
  }
  const int activities = std::max(net.size() - 2, 0);
  return 2 * negative > activities ? Direction::kBackward : Direction::kForward;
}

ShiftBound compute_v(const ProjectNetwork& net,
                     std::span<const Vertex> moving_set,
                     const Schedule& schedule, Direction direction,
                     std::int64_t& edge_checked) {
  if (moving_set.empty()) {
    throw Error(ErrorKind::kShape, "compute_v needs a nonempty moving set");
  }
  std::vector<Vertex> sorted(moving_set.begin(), moving_set.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> moving(static_cast<std::size_t>(net.size() + 1), 0);
  for (Vertex v : sorted) moving[static_cast<std::size_t>(v)] = 1;
  return detail::scan_bound(net, sorted, moving, schedule, direction,
                            edge_checked);
}

namespace detail {

ShiftBound scan_bound(const ProjectNetwork& net,
                      std::span<const Vertex> sorted_members,
                      const std::vector<char>& moving, const Schedule& schedule,
                      Direction direction, std::int64_t& edge_checked) {
  const bool forward = direction == Direction::kForward;
  // Any feasible shift is at most the deadline.
  const int sentinel = net.deadline() + 1;
  ShiftBound best{0, 0, sentinel, false};
  auto consider = [&](Vertex k, Vertex l, int slack, bool extra) {
    if (slack < best.distance) best = {k, l, slack, extra};
  };

  for (Vertex node : sorted_members) {
    if (forward) {
      const int finish = schedule.start(node) + net.duration(node);
      for (Vertex succ : net.successors(node)) {
        ++edge_checked;
        if (!moving[static_cast<std::size_t>(succ)]) {
          consider(node, succ, schedule.start(succ) - finish, false);
        }
      }
      if (node == net.sink()) {
        ++edge_checked;
        consider(node, net.source(), net.deadline() - schedule.start(node), true);
      }
    } else {
      for (Vertex pred : net.predecessors(node)) {
        ++edge_checked;
        if (!moving[static_cast<std::size_t>(pred)]) {
          consider(node, pred,
                   schedule.start(node) - schedule.start(pred) - net.duration(pred),
                   false);
        }
      }
      if (node == net.source()) {
        ++edge_checked;
        consider(node, net.sink(), schedule.start(node), true);
      }
    }
  }
  if (best.distance == sentinel) {
    throw Error(ErrorKind::kUnboundedShift,
                "moving set has no boundary edge and no deadline bound");
  }
  return best;
}

SearchContext::SearchContext(const ProjectNetwork& net, Direction direction,
                             const SolveOptions& options)
    : net_(net),
      direction_(direction),
      options_(options),
      root_(direction == Direction::kForward ? net.source() : net.sink()),
      anchor_(direction == Direction::kForward ? net.sink() : net.source()),
      moving_(static_cast<std::size_t>(net.size() + 1), 0),
      started_(std::chrono::steady_clock::now()) {
  if (net.size() < 2) throw Error(ErrorKind::kBadInstance, "fewer than 2 vertices");
  const int cp = critical_path_length(net);
  if (net.deadline() < cp) {
    throw Error(ErrorKind::kDeadlineInfeasible,
                "deadline " + std::to_string(net.deadline()) +
                    " below critical path " + std::to_string(cp));
  }
  if (forward()) {
    // Early tree with the end dummy pinned at the deadline and hung from the
    // source by the extra edge instead of its binding predecessor.
    CpmResult early = early_schedule(net);
    schedule_ = std::move(early.schedule);
    tree_ = std::move(early.tree);
    const Vertex n = net.sink();
    std::vector<Vertex> preds(tree_.predecessors(n).begin(),
                              tree_.predecessors(n).end());
    for (Vertex p : preds) tree_.remove_edge(p, n);
    schedule_.set_start(n, net.deadline());
    tree_.set_extra_edge(true);
    tree_.set_role(TreeRole::kEarly);
  } else {
    CpmResult late = late_schedule(net);
    schedule_ = std::move(late.schedule);
    tree_ = std::move(late.tree);
  }
}

double SearchContext::discounted_cash(Vertex v) const {
  if (net_.is_dummy(v)) return 0.0;
  return net_.cash_flow(v) *
         net_.discount().factor(schedule_.start(v) + net_.duration(v));
}

void SearchContext::detach(Vertex parent, Vertex child) {
  if (forward()) tree_.remove_edge(parent, child);
  else tree_.remove_edge(child, parent);
}

void SearchContext::attach(const ShiftBound& bound) {
  if (bound.via_extra_edge) {
    tree_.set_extra_edge(true);
    return;
  }
  if (forward()) tree_.add_edge(bound.moving, bound.fixed);
  else tree_.add_edge(bound.fixed, bound.moving);
}

void SearchContext::mark(std::span<const Vertex> members, bool value) {
  for (Vertex v : members) moving_[static_cast<std::size_t>(v)] = value ? 1 : 0;
}

ShiftBound SearchContext::bound_for_marked(std::span<const Vertex> sorted_members) {
  return scan_bound(net_, sorted_members, moving_, schedule_, direction_,
                    metrics_.edge_checked);
}

void SearchContext::shift(std::span<const Vertex> members, int distance) {
  const int delta = forward() ? distance : -distance;
  for (Vertex v : members) schedule_.shift(v, delta);
  if (options_.record_shifts) {
    shifts_.push_back({distance, discounted_value(net_, schedule_), tree_feasible()});
  }
}

void SearchContext::count_restart() {
  if (++metrics_.restarted_search > options_.max_restarts) {
    throw Error(ErrorKind::kNoConvergence,
                "more than " + std::to_string(options_.max_restarts) +
                    " restarted searches");
  }
}

bool SearchContext::tree_feasible() const {
  if (schedule_.start(net_.source()) != 0) return false;
  if (schedule_.start(net_.sink()) > net_.deadline()) return false;
  for (auto [from, to] : tree_.edges()) {
    if (schedule_.start(from) + net_.duration(from) > schedule_.start(to)) {
      return false;
    }
  }
  return true;
}

SolverResult SearchContext::finish(Algorithm algorithm) {
  if (forward()) {
    // The end dummy carries no cash; report it at its earliest start.
    const Vertex n = net_.sink();
    int s = 0;
    for (Vertex p : net_.predecessors(n)) {
      s = std::max(s, schedule_.start(p) + net_.duration(p));
    }
    schedule_.set_start(n, s);
  }
  if (auto check = is_feasible(net_, schedule_); !check) {
    throw std::logic_error(std::string("solver produced an infeasible schedule: ") +
                           check.violated);
  }
  metrics_.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                started_)
          .count();
  SolverResult result;
  result.algorithm = algorithm;
  result.direction = direction_;
  result.npv = discounted_value(net_, schedule_);
  result.schedule = std::move(schedule_);
  result.metrics = metrics_;
  result.shifts = std::move(shifts_);
  return result;
}

namespace {

struct Frame {
  Vertex node = 0;
  std::vector<Vertex> out_children;
  std::vector<Vertex> in_children;
  std::size_t next = 0;
  std::vector<Vertex> members;
  double dc = 0.0;
};

}  // namespace

bool recursive_descent(SearchContext& ctx, const CandidateHandler& on_candidate) {
  std::vector<char> considered(static_cast<std::size_t>(ctx.vertex_count() + 1), 0);
  std::vector<Frame> stack;

  auto enter = [&](Vertex v) {
    ++ctx.metrics().recursion_or_iteration;
    considered[static_cast<std::size_t>(v)] = 1;
    Frame frame;
    frame.node = v;
    frame.out_children.assign(ctx.out(v).begin(), ctx.out(v).end());
    frame.in_children.assign(ctx.in(v).begin(), ctx.in(v).end());
    if (v == ctx.root() && ctx.tree().extra_edge_present()) {
      frame.in_children.push_back(ctx.anchor());
    }
    frame.members.push_back(v);
    frame.dc = ctx.discounted_cash(v);
    stack.push_back(std::move(frame));
  };

  enter(ctx.root());
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::size_t total = top.out_children.size() + top.in_children.size();
    Vertex child = 0;
    while (top.next < total) {
      const std::size_t i = top.next++;
      const Vertex candidate = i < top.out_children.size()
                                   ? top.out_children[i]
                                   : top.in_children[i - top.out_children.size()];
      if (!considered[static_cast<std::size_t>(candidate)]) {
        child = candidate;
        break;
      }
    }
    if (child != 0) {
      enter(child);
      continue;
    }

    Frame done = std::move(stack.back());
    stack.pop_back();
    if (stack.empty()) break;
    Frame& parent = stack.back();
    const bool out_child = parent.next <= parent.out_children.size();
    if (out_child && ctx.wants_shift(done.dc)) {
      if (on_candidate(parent.node, done.node, done.members)) return true;
      continue;
    }
    parent.members.insert(parent.members.end(), done.members.begin(),
                          done.members.end());
    parent.dc += done.dc;
  }
  return false;
}

void shift_groups(SearchContext& ctx, std::vector<std::vector<Vertex>>& groups) {
  const auto n = static_cast<std::size_t>(ctx.vertex_count() + 1);
  std::vector<int> group_of(n, -1);
  std::vector<Vertex> pending;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::sort(groups[g].begin(), groups[g].end());
    for (Vertex v : groups[g]) {
      group_of[static_cast<std::size_t>(v)] = static_cast<int>(g);
      pending.push_back(v);
    }
    ctx.mark(groups[g], true);
  }
  std::sort(pending.begin(), pending.end());

  while (!pending.empty()) {
    const ShiftBound bound = ctx.bound_for_marked(pending);
    auto& group = groups[static_cast<std::size_t>(
        group_of[static_cast<std::size_t>(bound.moving)])];
    ctx.attach(bound);
    ctx.shift(group, bound.distance);
    ctx.mark(group, false);
    for (Vertex v : group) group_of[static_cast<std::size_t>(v)] = -1;
    std::erase_if(pending, [&](Vertex v) {
      return group_of[static_cast<std::size_t>(v)] < 0;
    });
  }
}

}  // namespace detail
}  // namespace npvsched
