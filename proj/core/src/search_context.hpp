#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <vector>

#include "npvsched/algorithms.hpp"
#include "npvsched/model.hpp"
#include "npvsched/spanning_tree.hpp"

namespace npvsched::detail {

// Working state shared by the three solvers.
//
// All searches run on an "oriented" view of the tree: in forward mode it is
// the tree itself, in backward mode every edge is reversed. In that view the
// root is fixed, out-neighbours are the children a search may detach and
// shift away from the root, and in-neighbours are children that are always
// pulled along. The anchor (the other dummy) hangs off the root through the
// extra deadline edge, oriented anchor -> root.
class SearchContext {
 public:
  SearchContext(const ProjectNetwork& net, Direction direction,
                const SolveOptions& options);

  const ProjectNetwork& net() const { return net_; }
  Direction direction() const { return direction_; }
  Vertex root() const { return root_; }
  Vertex anchor() const { return anchor_; }
  int vertex_count() const { return net_.size(); }

  Schedule& schedule() { return schedule_; }
  SpanningTree& tree() { return tree_; }
  RunMetrics& metrics() { return metrics_; }

  std::span<const Vertex> out(Vertex v) const {
    return forward() ? tree_.successors(v) : tree_.predecessors(v);
  }
  std::span<const Vertex> in(Vertex v) const {
    return forward() ? tree_.predecessors(v) : tree_.successors(v);
  }

  /// Discounted cash of v at its current finish time.
  double discounted_cash(Vertex v) const;

  /// Gain sign test: the set with this discounted cash improves the NPV when
  /// moved away from the root (later in forward, earlier in backward).
  bool wants_shift(double dc) const {
    return forward() ? dc < -kSignTolerance : dc > kSignTolerance;
  }

  void detach(Vertex parent, Vertex child);
  void attach(const ShiftBound& bound);

  /// Shortest shift for the vertices currently marked as moving.
  ShiftBound bound_for_marked(std::span<const Vertex> sorted_members);
  void mark(std::span<const Vertex> members, bool value);

  /// Moves members away from the root by `distance` and records the event.
  void shift(std::span<const Vertex> members, int distance);

  void count_restart();

  SolverResult finish(Algorithm algorithm);

 private:
  bool forward() const { return direction_ == Direction::kForward; }
  bool tree_feasible() const;

  const ProjectNetwork& net_;
  Direction direction_;
  SolveOptions options_;
  Vertex root_;
  Vertex anchor_;
  Schedule schedule_;
  SpanningTree tree_;
  RunMetrics metrics_;
  std::vector<char> moving_;
  std::vector<ShiftEvent> shifts_;
  std::chrono::steady_clock::time_point started_;
};

/// Shared edge scan behind compute_v; `moving` is indexed by vertex id.
ShiftBound scan_bound(const ProjectNetwork& net,
                      std::span<const Vertex> sorted_members,
                      const std::vector<char>& moving, const Schedule& schedule,
                      Direction direction, std::int64_t& edge_checked);

/// Depth-first descent from the root in the oriented tree, one counted call
/// per vertex. Each out-child subtree whose discounted cash calls for a shift
/// is handed to `on_candidate(parent, child, members)`; returning true aborts
/// the descent. Returns true iff it was aborted.
using CandidateHandler =
    std::function<bool(Vertex parent, Vertex child, std::vector<Vertex>& members)>;
bool recursive_descent(SearchContext& ctx, const CandidateHandler& on_candidate);

/// Shifts a batch of disjoint detached groups: repeatedly bound the union,
/// move the group holding k* and re-attach it at (k*, l*).
void shift_groups(SearchContext& ctx, std::vector<std::vector<Vertex>>& groups);

}  // namespace npvsched::detail
