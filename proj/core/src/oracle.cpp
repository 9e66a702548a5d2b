#include "npvsched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "npvsched/errors.hpp"

namespace npvsched {

namespace {

class Enumerator {
 public:
  Enumerator(const ProjectNetwork& net, std::int64_t budget)
      : net_(net),
        budget_(budget),
        discount_(net.discount()),
        current_(net.size()) {
    const int n = net.size();
    latest_ = late_schedule(net).schedule;
    late_value_.assign(static_cast<std::size_t>(n + 1), 0.0);
    for (Vertex v = 2; v < n; ++v) {
      late_value_[static_cast<std::size_t>(v)] = term(v, latest_.start(v));
    }
    release_.assign(static_cast<std::size_t>(n + 1), 0);
  }

  OracleResult run() {
    const int n = net_.size();
    current_.set_start(1, 0);
    if (n == 2) {
      current_.set_start(2, net_.duration(1));
      return {0.0, current_, 1};
    }
    descend(2, 0.0);
    OracleResult result;
    result.npv = best_value_;
    result.schedule = best_;
    result.nodes = nodes_;
    return result;
  }

 private:
  double term(Vertex v, int start) const {
    return net_.cash_flow(v) * discount_.factor(start + net_.duration(v));
  }

  int release(Vertex v) const {
    int s = 0;
    for (Vertex p : net_.predecessors(v)) {
      s = std::max(s, current_.start(p) + net_.duration(p));
    }
    return s;
  }

  // Upper bound on the value of activities from..n-1 given the starts of
  // 1..from-1: each activity alone at its best start, positive cash at the
  // earliest start the fixed part allows, negative cash at its late start.
  double optimistic_rest(Vertex from) {
    const int n = net_.size();
    double rest = 0.0;
    for (Vertex v = from; v < n; ++v) {
      int es = 0;
      for (Vertex p : net_.predecessors(v)) {
        const int start = p < from ? current_.start(p) : release_[static_cast<std::size_t>(p)];
        es = std::max(es, start + net_.duration(p));
      }
      release_[static_cast<std::size_t>(v)] = es;
      rest += net_.cash_flow(v) > 0 ? term(v, es) : late_value_[static_cast<std::size_t>(v)];
    }
    return rest;
  }

  // First start in [lo, hi] whose term exceeds `target`, for negative cash
  // (the term grows with the start).
  int first_start_above(Vertex v, double target, int lo, int hi) const {
    const double c = net_.cash_flow(v);
    if (target >= 0.0) return hi + 1;
    const double t = -std::log(target / c) / discount_.alpha - net_.duration(v);
    int s = std::clamp(static_cast<int>(std::floor(t)), lo - 1, hi + 1);
    while (s > lo && term(v, s - 1) > target) --s;
    while (s <= hi && term(v, s) <= target) ++s;
    return std::max(s, lo);
  }

  void visit() {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::kOracleTooLarge,
                  "visited more than " + std::to_string(budget_) + " nodes");
    }
  }

  void descend(Vertex v, double partial) {
    const int n = net_.size();
    if (v == n) {
      if (partial > best_value_) {
        best_value_ = partial;
        best_ = current_;
        best_.set_start(n, release(n));
      }
      return;
    }
    const int lo = release(v);
    const int hi = latest_.start(v);
    const double c = net_.cash_flow(v);
    for (int s = lo; s <= hi; ++s) {
      current_.set_start(v, s);
      const double value = partial + term(v, s);
      const double rest = optimistic_rest(v + 1);
      if (value + rest <= best_value_) {
        // The rest bound never grows with s: positive cash cannot recover,
        // negative cash may once its own term is large enough.
        if (c >= 0) break;
        const int next = first_start_above(v, best_value_ - partial - rest, s + 1, hi);
        if (next > hi) break;
        s = next - 1;
        continue;
      }
      visit();
      descend(v + 1, value);
    }
  }

  const ProjectNetwork& net_;
  std::int64_t budget_;
  DiscountParams discount_;
  Schedule latest_;
  std::vector<double> late_value_;
  std::vector<int> release_;
  Schedule current_;
  Schedule best_;
  double best_value_ = -std::numeric_limits<double>::infinity();
  std::int64_t nodes_ = 0;
};

}  // namespace

OracleResult brute_force_optimal(const ProjectNetwork& net, std::int64_t budget) {
  const int cp = critical_path_length(net);
  if (net.deadline() < cp) {
    throw Error(ErrorKind::kDeadlineInfeasible,
                "deadline " + std::to_string(net.deadline()) +
                    " below critical path " + std::to_string(cp));
  }
  return Enumerator(net, budget).run();
}

}  // namespace npvsched
