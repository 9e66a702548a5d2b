#include <gtest/gtest.h>

#include <numeric>
#include <ostream>

#include "fixtures.hpp"
#include "npvsched/algorithms.hpp"
#include "npvsched/errors.hpp"

namespace npvsched {

void PrintTo(Algorithm a, std::ostream* os) { *os << to_string(a); }

namespace {

constexpr Algorithm kAll[] = {Algorithm::kRsfb, Algorithm::kSaafb, Algorithm::kHs};

class EveryAlgorithm : public ::testing::TestWithParam<Algorithm> {};

TEST_P(EveryAlgorithm, MatchesFrozenOptima) {
  for (const auto& f : testing::frozen_optima()) {
    const ProjectNetwork net = f.make();
    for (auto direction : {std::optional<Direction>{}, std::optional{Direction::kForward},
                           std::optional{Direction::kBackward}}) {
      SolveOptions options;
      options.direction = direction;
      const SolverResult r = solve(GetParam(), net, options);
      EXPECT_NEAR(r.npv, f.npv, kNpvTolerance);
      EXPECT_TRUE(is_feasible(net, r.schedule));
      EXPECT_DOUBLE_EQ(r.npv, npv(net, r.schedule));
      EXPECT_EQ(r.algorithm, GetParam());
    }
  }
}

TEST_P(EveryAlgorithm, PrepassDoesNotChangeTheOptimum) {
  for (const auto& f : testing::frozen_optima()) {
    SolveOptions options;
    options.rsfb_prepass = true;
    EXPECT_NEAR(solve(GetParam(), f.make(), options).npv, f.npv, kNpvTolerance);
  }
}

TEST_P(EveryAlgorithm, AllPositiveGivesEarlySchedule) {
  const auto net = testing::six();
  ProjectNetwork positive(net.durations(), {0, 5, 20, 7, 25, 0}, net.edges(), 8, 15);
  const SolverResult r = solve(GetParam(), positive);
  EXPECT_EQ(r.direction, Direction::kForward);
  EXPECT_EQ(r.schedule, early_schedule(positive).schedule);
  EXPECT_EQ(r.metrics.restarted_search, 1);
  EXPECT_TRUE(r.shifts.empty());
}

TEST_P(EveryAlgorithm, AllNegativeGivesLateSchedule) {
  const auto net = testing::chain({0, -10, -10, 0}, 10, 20);
  const SolverResult r = solve(GetParam(), net);
  EXPECT_EQ(r.direction, Direction::kBackward);
  EXPECT_EQ(r.schedule, Schedule({0, 8, 13, 20}));
  EXPECT_EQ(r.metrics.restarted_search, 1);
}

TEST_P(EveryAlgorithm, ChainDelaysNegativeActivityToLatestStart) {
  const SolverResult r = solve(GetParam(), testing::chain());
  EXPECT_EQ(r.schedule.start(2), 0);
  EXPECT_EQ(r.schedule.start(3), 24 - 7);
}

TEST_P(EveryAlgorithm, ZeroRateTerminatesWithPlainSum) {
  const auto net = testing::six();
  ProjectNetwork flat(net.durations(), net.cash_flows(), net.edges(), 0, 15);
  const SolverResult r = solve(GetParam(), flat);
  EXPECT_TRUE(is_feasible(flat, r.schedule));
  const double sum = std::accumulate(flat.cash_flows().begin(), flat.cash_flows().end(), 0.0);
  EXPECT_DOUBLE_EQ(r.npv, sum);
}

TEST_P(EveryAlgorithm, CounterIdentity) {
  for (const auto& f : testing::frozen_optima()) {
    const RunMetrics m = solve(GetParam(), f.make()).metrics;
    EXPECT_EQ(m.computational_cost(), m.recursion_or_iteration + m.edge_checked);
    EXPECT_GE(m.restarted_search, 1);
    EXPECT_GE(m.computational_cost(), m.restarted_search);
  }
}

TEST_P(EveryAlgorithm, InfeasibleDeadline) {
  try {
    solve(GetParam(), testing::chain({0, 10, -10, 0}, 10, 11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDeadlineInfeasible);
  }
}

TEST_P(EveryAlgorithm, RecordsOneEventPerShift) {
  SolveOptions options;
  options.record_shifts = true;
  const SolverResult r = solve(GetParam(), testing::two_branch(), options);
  ASSERT_FALSE(r.shifts.empty());
  for (const ShiftEvent& e : r.shifts) {
    EXPECT_TRUE(e.tree_feasible);
    EXPECT_GE(e.distance, 0);
  }
  EXPECT_NEAR(r.shifts.back().value, r.npv, kNpvTolerance);
}

INSTANTIATE_TEST_SUITE_P(Solvers, EveryAlgorithm, ::testing::ValuesIn(kAll),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Direction, StrictMajorityOfNegatives) {
  std::vector<int> durations(12, 1);
  durations.front() = durations.back() = 0;
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= 11; ++v) {
    edges.push_back({1, v});
    edges.push_back({v, 12});
  }
  auto with_negatives = [&](int negatives) {
    std::vector<double> cash(12, 0.0);
    for (Vertex v = 2; v <= 11; ++v) cash[static_cast<std::size_t>(v - 1)] = v - 2 < negatives ? -1 : 1;
    return ProjectNetwork(durations, cash, edges, 10, 5);
  };
  EXPECT_EQ(choose_direction(with_negatives(0)), Direction::kForward);
  EXPECT_EQ(choose_direction(with_negatives(5)), Direction::kForward);
  EXPECT_EQ(choose_direction(with_negatives(6)), Direction::kBackward);
  EXPECT_EQ(choose_direction(with_negatives(10)), Direction::kBackward);
}

TEST(Restarts, BatchingNeedsFewerRestartsThanImmediateShifts) {
  const auto net = testing::two_branch();
  const auto rsfb = rsfb_solve(net);
  const auto hs = hs_solve(net);
  EXPECT_EQ(hs.metrics.restarted_search, 2);
  EXPECT_EQ(rsfb.metrics.restarted_search, 3);
  EXPECT_LT(hs.metrics.restarted_search, rsfb.metrics.restarted_search);
}

TEST(Restarts, SteepestAscentRawCounterMissesFirstCall) {
  for (const auto& f : testing::frozen_optima()) {
    const RunMetrics m = saafb_solve(f.make()).metrics;
    EXPECT_EQ(m.raw_restart_counter, m.restarted_search - 1);
  }
  const RunMetrics rs = rsfb_solve(testing::six()).metrics;
  EXPECT_EQ(rs.raw_restart_counter, rs.restarted_search);
}

TEST(Restarts, SteepestAscentAndHybridAgree) {
  for (const auto& f : testing::frozen_optima()) {
    EXPECT_EQ(saafb_solve(f.make()).metrics.restarted_search,
              hs_solve(f.make()).metrics.restarted_search);
  }
}

TEST(Names, ParseAndPrint) {
  EXPECT_EQ(parse_algorithm("rsfb"), Algorithm::kRsfb);
  EXPECT_EQ(parse_algorithm("SAAFB"), Algorithm::kSaafb);
  EXPECT_EQ(parse_algorithm("Hs"), Algorithm::kHs);
  EXPECT_FALSE(parse_algorithm("rs"));
  EXPECT_EQ(parse_direction("backward"), Direction::kBackward);
  EXPECT_FALSE(parse_direction("sideways"));
  EXPECT_STREQ(to_string(Algorithm::kSaafb), "SAAFB");
  EXPECT_STREQ(to_string(Direction::kForward), "forward");
}

}  // namespace
}  // namespace npvsched
