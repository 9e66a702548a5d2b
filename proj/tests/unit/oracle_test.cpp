#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "npvsched/errors.hpp"
#include "npvsched/oracle.hpp"

namespace npvsched {
namespace {

TEST(Oracle, FrozenOptima) {
  for (const auto& f : testing::frozen_optima()) {
    const OracleResult r = brute_force_optimal(f.make());
    EXPECT_NEAR(r.npv, f.npv, 1e-12);
    EXPECT_EQ(r.schedule, Schedule(f.starts));
    EXPECT_GT(r.nodes, 0);
  }
}

TEST(Oracle, SingleActivityPositiveStartsEarly) {
  ProjectNetwork net({0, 5, 0}, {0, 100, 0}, {{1, 2}, {2, 3}}, 10, 10);
  EXPECT_EQ(brute_force_optimal(net).schedule.start(2), 0);
}

TEST(Oracle, SingleActivityNegativeStartsLate) {
  ProjectNetwork net({0, 5, 0}, {0, -100, 0}, {{1, 2}, {2, 3}}, 10, 10);
  EXPECT_EQ(brute_force_optimal(net).schedule.start(2), 5);
}

TEST(Oracle, TiesGoToSmallestStartVector) {
  // Zero rate: every feasible schedule is optimal.
  ProjectNetwork net({0, 5, 0}, {0, -100, 0}, {{1, 2}, {2, 3}}, 0, 10);
  EXPECT_EQ(brute_force_optimal(net).schedule, Schedule({0, 0, 5}));
}

TEST(Oracle, InvariantUnderOrderPreservingRelabel) {
  // six() with activities 2 and 3 swapped.
  ProjectNetwork relabelled({0, 4, 3, 2, 5, 0}, {0, 20, -30, -40, 25, 0},
                            {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 6}, {5, 6}}, 8, 15);
  EXPECT_NEAR(brute_force_optimal(relabelled).npv, brute_force_optimal(testing::six()).npv, 1e-12);
}

TEST(Oracle, BudgetExceeded) {
  try {
    brute_force_optimal(testing::six(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOracleTooLarge);
  }
}

TEST(Oracle, DeadlineBelowCriticalPath) {
  try {
    brute_force_optimal(testing::chain({0, 1, 1, 0}, 10, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDeadlineInfeasible);
  }
}

TEST(Oracle, TwoVertexNetwork) {
  ProjectNetwork net({0, 0}, {0, 0}, {{1, 2}}, 10, 0);
  const OracleResult r = brute_force_optimal(net);
  EXPECT_EQ(r.npv, 0.0);
  EXPECT_EQ(r.schedule, Schedule({0, 0}));
}

}  // namespace
}  // namespace npvsched
