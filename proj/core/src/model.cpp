#include "npvsched/model.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "npvsched/errors.hpp"

namespace npvsched {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape: return "shape error";
    case ErrorKind::kInfeasibleInput: return "infeasible input";
    case ErrorKind::kDeadlineInfeasible: return "deadline infeasible";
    case ErrorKind::kUnboundedShift: return "unbounded shift";
    case ErrorKind::kOracleTooLarge: return "instance too large for oracle";
    case ErrorKind::kDegenerateFactors: return "degenerate factors";
    case ErrorKind::kUnknownFactor: return "unknown factor";
    case ErrorKind::kBadInstance: return "bad instance";
    case ErrorKind::kNoConvergence: return "no convergence";
  }
  return "error";
}

DiscountParams DiscountParams::from_rate_pct(double rate_pct) {
  return {std::log1p(rate_pct / 100.0)};
}

double DiscountParams::factor(double time) const {
  return std::exp(-alpha * time);
}

ProjectNetwork::ProjectNetwork(std::vector<int> durations,
                               std::vector<double> cash_flows,
                               std::vector<Edge> edges,
                               double discount_rate_pct, int deadline)
    : durations_(std::move(durations)),
      cash_flows_(std::move(cash_flows)),
      edges_(std::move(edges)),
      discount_rate_pct_(discount_rate_pct),
      deadline_(deadline) {
  if (durations_.size() != cash_flows_.size()) {
    throw Error(ErrorKind::kShape,
                "durations and cash_flows differ in length");
  }
  const int n = size();
  succ_.resize(durations_.size());
  pred_.resize(durations_.size());
  for (const Edge& e : edges_) {
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
      throw Error(ErrorKind::kShape,
                  "edge (" + std::to_string(e.from) + "," +
                      std::to_string(e.to) + ") out of range");
    }
    succ_[index(e.from)].push_back(e.to);
    pred_[index(e.to)].push_back(e.from);
  }
  for (auto& list : succ_) std::sort(list.begin(), list.end());
  for (auto& list : pred_) std::sort(list.begin(), list.end());
}

ProjectNetwork ProjectNetwork::with_deadline(int deadline) const {
  ProjectNetwork copy = *this;
  copy.deadline_ = deadline;
  return copy;
}

bool ValidationReport::has(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

namespace {

std::string vertex_name(Vertex v) { return "vertex " + std::to_string(v); }

std::string edge_name(const Edge& e) {
  return "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

bool is_acyclic(const ProjectNetwork& net) {
  const int n = net.size();
  std::vector<int> indegree(static_cast<std::size_t>(n + 1), 0);
  for (const Edge& e : net.edges()) ++indegree[static_cast<std::size_t>(e.to)];
  std::queue<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop();
    ++seen;
    for (Vertex w : net.successors(v)) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  return seen == n;
}

std::vector<char> reachable(const ProjectNetwork& net, Vertex from,
                            bool forward) {
  std::vector<char> mark(static_cast<std::size_t>(net.size() + 1), 0);
  std::vector<Vertex> stack{from};
  mark[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto next = forward ? net.successors(v) : net.predecessors(v);
    for (Vertex w : next) {
      if (!mark[static_cast<std::size_t>(w)]) {
        mark[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return mark;
}

// Longest-path finish times in ascending id order; ids are topological.
std::vector<int> earliest_starts(const ProjectNetwork& net) {
  const int n = net.size();
  std::vector<int> es(static_cast<std::size_t>(n + 1), 0);
  for (Vertex v = 1; v <= n; ++v) {
    int s = 0;
    for (Vertex p : net.predecessors(v)) {
      s = std::max(s, es[static_cast<std::size_t>(p)] + net.duration(p));
    }
    es[static_cast<std::size_t>(v)] = s;
  }
  return es;
}

}  // namespace

ValidationReport validate_network(const ProjectNetwork& net) {
  ValidationReport report;
  auto add = [&](std::string rule, std::string where) {
    report.violations.push_back({std::move(rule), std::move(where)});
  };

  const int n = net.size();
  if (n < 2) {
    add("shape", "network needs at least the two dummies");
    return report;
  }

  std::vector<Edge> sorted = net.edges();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Edge& e = sorted[i];
    if (i > 0 && sorted[i - 1] == e) add("duplicate edge", edge_name(e));
    if (e.from == e.to) add("self loop", edge_name(e));
    else if (e.from > e.to) add("topological order", edge_name(e));
  }

  const bool acyclic = is_acyclic(net);
  if (!acyclic) add("cycle", "graph has a directed cycle");

  for (Vertex v = 1; v <= n; ++v) {
    if (net.duration(v) < 0) add("negative duration", vertex_name(v));
  }
  for (Vertex v : {net.source(), net.sink()}) {
    if (net.cash_flow(v) != 0.0) add("dummy cash flow", vertex_name(v));
    if (net.duration(v) != 0) add("dummy duration", vertex_name(v));
  }

  if (!net.predecessors(net.source()).empty()) {
    add("source", "vertex 1 has predecessors");
  }
  if (!net.successors(net.sink()).empty()) {
    add("sink", vertex_name(n) + " has successors");
  }
  for (Vertex v = 2; v < n; ++v) {
    if (net.predecessors(v).empty()) add("source", vertex_name(v) + " has no predecessor");
    if (net.successors(v).empty()) add("sink", vertex_name(v) + " has no successor");
  }

  auto from_source = reachable(net, net.source(), true);
  auto to_sink = reachable(net, net.sink(), false);
  for (Vertex v = 1; v <= n; ++v) {
    if (!from_source[static_cast<std::size_t>(v)] ||
        !to_sink[static_cast<std::size_t>(v)]) {
      add("not on a 1→n path", vertex_name(v));
    }
  }

  if (acyclic && !report.has("topological order")) {
    const int cp = critical_path_length(net);
    if (net.deadline() < cp) {
      add("deadline", "deadline " + std::to_string(net.deadline()) +
                          " below critical path " + std::to_string(cp));
    }
  }
  return report;
}

FeasibilityResult is_feasible(const ProjectNetwork& net, const Schedule& sched) {
  if (sched.size() != net.size()) {
    throw Error(ErrorKind::kShape,
                "schedule has " + std::to_string(sched.size()) +
                    " starts for " + std::to_string(net.size()) + " vertices");
  }
  if (sched.start(net.source()) != 0) return {false, "s_1 = 0"};
  for (Vertex v = 1; v <= net.size(); ++v) {
    if (sched.start(v) < 0) return {false, "s_" + std::to_string(v) + " >= 0"};
  }
  for (const Edge& e : net.edges()) {
    if (sched.start(e.from) + net.duration(e.from) > sched.start(e.to)) {
      return {false, "precedence " + edge_name(e)};
    }
  }
  if (sched.start(net.sink()) > net.deadline()) return {false, "deadline"};
  return {};
}

double discounted_value(const ProjectNetwork& net, const Schedule& sched) {
  const DiscountParams discount = net.discount();
  double total = 0.0;
  for (Vertex v = 2; v < net.size(); ++v) {
    total += net.cash_flow(v) *
             discount.factor(sched.start(v) + net.duration(v));
  }
  return total;
}

double npv(const ProjectNetwork& net, const Schedule& sched) {
  if (auto check = is_feasible(net, sched); !check) {
    throw Error(ErrorKind::kInfeasibleInput, "violates " + check.violated);
  }
  return discounted_value(net, sched);
}

int critical_path_length(const ProjectNetwork& net) {
  return earliest_starts(net)[static_cast<std::size_t>(net.sink())];
}

CpmResult early_schedule(const ProjectNetwork& net) {
  const int n = net.size();
  const auto es = earliest_starts(net);
  CpmResult result{Schedule(n), SpanningTree(n, TreeRole::kEarly)};
  for (Vertex v = 1; v <= n; ++v) {
    const int s = es[static_cast<std::size_t>(v)];
    result.schedule.set_start(v, s);
    for (Vertex p : net.predecessors(v)) {
      if (es[static_cast<std::size_t>(p)] + net.duration(p) == s) {
        result.tree.add_edge(p, v);
        break;
      }
    }
  }
  return result;
}

CpmResult late_schedule(const ProjectNetwork& net) {
  const int n = net.size();
  const int cp = critical_path_length(net);
  if (net.deadline() < cp) {
    throw Error(ErrorKind::kDeadlineInfeasible,
                "deadline " + std::to_string(net.deadline()) +
                    " below critical path " + std::to_string(cp));
  }
  std::vector<int> ls(static_cast<std::size_t>(n + 1), net.deadline());
  for (Vertex v = n - 1; v >= 1; --v) {
    int s = net.deadline() - net.duration(v);
    for (Vertex w : net.successors(v)) {
      s = std::min(s, ls[static_cast<std::size_t>(w)] - net.duration(v));
    }
    ls[static_cast<std::size_t>(v)] = s;
  }
  ls[1] = 0;

  CpmResult result{Schedule(n), SpanningTree(n, TreeRole::kLate)};
  for (Vertex v = 1; v <= n; ++v) {
    result.schedule.set_start(v, ls[static_cast<std::size_t>(v)]);
  }
  for (Vertex v = 2; v < n; ++v) {
    const int finish = ls[static_cast<std::size_t>(v)] + net.duration(v);
    for (Vertex w : net.successors(v)) {
      if (ls[static_cast<std::size_t>(w)] == finish) {
        result.tree.add_edge(v, w);
        break;
      }
    }
  }
  result.tree.set_extra_edge(true);
  return result;
}

}  // namespace npvsched
