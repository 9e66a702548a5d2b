#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "npvsched/spanning_tree.hpp"

namespace npvsched {

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Absolute tolerance for comparing NPV values.
inline constexpr double kNpvTolerance = 1e-9;

struct Activity {
  Vertex id = 0;
  int duration = 0;
  double cash_flow = 0.0;
};

/// Continuous discount exponent; e^{-alpha} = 1 / (1 + r/100).
struct DiscountParams {
  double alpha = 0.0;

  static DiscountParams from_rate_pct(double rate_pct);
  double factor(double time) const;
};

/// Activity-on-node network with finish-start, zero-lag precedences.
///
/// The constructor only checks that the arrays agree in size and that edge
/// endpoints are in range; structural premises (acyclicity, single
/// source/sink, deadline) are reported by validate_network() so malformed
/// data can still be loaded and diagnosed.
class ProjectNetwork {
 public:
  ProjectNetwork(std::vector<int> durations, std::vector<double> cash_flows,
                 std::vector<Edge> edges, double discount_rate_pct,
                 int deadline);

  int size() const { return static_cast<int>(durations_.size()); }
  Vertex source() const { return 1; }
  Vertex sink() const { return size(); }
  bool is_dummy(Vertex v) const { return v == source() || v == sink(); }

  int duration(Vertex v) const { return durations_[index(v)]; }
  double cash_flow(Vertex v) const { return cash_flows_[index(v)]; }
  Activity activity(Vertex v) const {
    return {v, duration(v), cash_flow(v)};
  }

  /// Graph successors / predecessors in ascending vertex order.
  std::span<const Vertex> successors(Vertex v) const { return succ_[index(v)]; }
  std::span<const Vertex> predecessors(Vertex v) const {
    return pred_[index(v)];
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& durations() const { return durations_; }
  const std::vector<double>& cash_flows() const { return cash_flows_; }

  double discount_rate_pct() const { return discount_rate_pct_; }
  DiscountParams discount() const {
    return DiscountParams::from_rate_pct(discount_rate_pct_);
  }
  double alpha() const { return discount().alpha; }
  int deadline() const { return deadline_; }

  ProjectNetwork with_deadline(int deadline) const;

 private:
  static std::size_t index(Vertex v) { return static_cast<std::size_t>(v - 1); }

  std::vector<int> durations_;
  std::vector<double> cash_flows_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  double discount_rate_pct_ = 0.0;
  int deadline_ = 0;
};

/// Integer start times s_1..s_n.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(int n) : starts_(static_cast<std::size_t>(n), 0) {}
  explicit Schedule(std::vector<int> starts) : starts_(std::move(starts)) {}

  int size() const { return static_cast<int>(starts_.size()); }
  int start(Vertex v) const { return starts_[static_cast<std::size_t>(v - 1)]; }
  void set_start(Vertex v, int s) { starts_[static_cast<std::size_t>(v - 1)] = s; }
  void shift(Vertex v, int delta) { starts_[static_cast<std::size_t>(v - 1)] += delta; }

  const std::vector<int>& starts() const { return starts_; }

  bool operator==(const Schedule&) const = default;

 private:
  std::vector<int> starts_;
};

struct Violation {
  std::string rule;
  std::string where;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& rule) const;
};

ValidationReport validate_network(const ProjectNetwork& net);

struct FeasibilityResult {
  bool feasible = true;
  /// Empty when feasible, otherwise the first violated constraint.
  std::string violated;
  explicit operator bool() const { return feasible; }
};

/// Checks precedence, s_1 = 0, s_n <= deadline and non-negativity.
/// Throws Error(kShape) if the schedule length differs from the network size.
FeasibilityResult is_feasible(const ProjectNetwork& net, const Schedule& sched);

/// Sum of c_i e^{-alpha (s_i + d_i)} over the non-dummy activities.
/// Throws Error(kInfeasibleInput) for an infeasible schedule.
double npv(const ProjectNetwork& net, const Schedule& sched);

/// Same sum without the feasibility check; used on intermediate solver states.
double discounted_value(const ProjectNetwork& net, const Schedule& sched);

struct CpmResult {
  Schedule schedule;
  SpanningTree tree;
};

/// CPM forward pass. The tree holds one binding predecessor edge for every
/// vertex j > 1 (the lowest-numbered binding predecessor).
CpmResult early_schedule(const ProjectNetwork& net);

/// CPM backward pass anchored at s_n = deadline, with s_1 pinned to 0. The
/// tree holds one binding successor edge for every vertex 1 < i < n; vertex 1
/// is attached through the extra (1, n) edge.
/// Throws Error(kDeadlineInfeasible) if the deadline is below the critical path.
CpmResult late_schedule(const ProjectNetwork& net);

int critical_path_length(const ProjectNetwork& net);

}  // namespace npvsched
