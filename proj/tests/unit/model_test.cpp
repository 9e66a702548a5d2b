#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "npvsched/errors.hpp"
#include "npvsched/model.hpp"

namespace npvsched {
namespace {

using testing::chain;
using testing::diamond;

TEST(Discount, AlphaIsLogOfOnePlusRate) {
  EXPECT_NEAR(DiscountParams::from_rate_pct(10).alpha, std::log(1.1), 1e-15);
  EXPECT_DOUBLE_EQ(DiscountParams::from_rate_pct(10).factor(1), 1 / 1.1);
  EXPECT_EQ(DiscountParams::from_rate_pct(0).alpha, 0.0);
}

TEST(Validate, ChainIsOk) {
  EXPECT_TRUE(validate_network(chain()).ok());
}

TEST(Validate, BackEdgeIsACycle) {
  ProjectNetwork net({0, 5, 7, 0}, {0, 1, 1, 0}, {{1, 2}, {2, 3}, {3, 4}, {4, 2}}, 10, 24);
  const auto report = validate_network(net);
  EXPECT_TRUE(report.has("cycle"));
}

TEST(Validate, UnreachableVertex) {
  // 3 has no path from 1.
  ProjectNetwork net({0, 5, 7, 0}, {0, 1, 1, 0}, {{1, 2}, {2, 4}, {3, 4}}, 10, 24);
  const auto report = validate_network(net);
  EXPECT_TRUE(report.has("not on a 1→n path"));
}

TEST(Validate, DummyDataAndDeadline) {
  ProjectNetwork net({1, 5, 7, 0}, {3, 1, 1, 0}, {{1, 2}, {2, 3}, {3, 4}}, 10, 5);
  const auto report = validate_network(net);
  EXPECT_TRUE(report.has("dummy cash flow"));
  EXPECT_TRUE(report.has("dummy duration"));
  EXPECT_TRUE(report.has("deadline"));
}

TEST(Validate, DuplicateAndSelfLoop) {
  ProjectNetwork net({0, 5, 0}, {0, 1, 0}, {{1, 2}, {1, 2}, {2, 2}, {2, 3}}, 10, 9);
  const auto report = validate_network(net);
  EXPECT_TRUE(report.has("duplicate edge"));
  EXPECT_TRUE(report.has("self loop"));
}

TEST(Network, ShapeErrors) {
  EXPECT_THROW(ProjectNetwork({0, 5, 0}, {0, 1}, {{1, 2}, {2, 3}}, 10, 9), Error);
  try {
    ProjectNetwork({0, 5, 0}, {0, 1, 0}, {{1, 7}}, 10, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kShape);
  }
}

TEST(Npv, SingleActivity) {
  ProjectNetwork net({0, 5, 0}, {0, 100, 0}, {{1, 2}, {2, 3}}, 10, 10);
  EXPECT_NEAR(npv(net, Schedule({0, 0, 5})), 62.09213230591549, 1e-12);
  EXPECT_NEAR(npv(net, Schedule({0, 0, 5})), 100 * std::pow(1.1, -5), 1e-12);
}

TEST(Npv, ZeroRateIsPlainSum) {
  const auto net = chain({0, 10, -4, 0}, 0, 30);
  EXPECT_DOUBLE_EQ(npv(net, Schedule({0, 0, 5, 12})), 6.0);
  EXPECT_DOUBLE_EQ(npv(net, Schedule({0, 3, 11, 30})), 6.0);
}

TEST(Npv, ZeroCashIsZero) {
  const auto net = chain({0, 0, 0, 0});
  EXPECT_EQ(npv(net, Schedule({0, 2, 9, 20})), 0.0);
}

TEST(Npv, RejectsInfeasibleSchedule) {
  try {
    npv(chain(), Schedule({0, 0, 3, 12}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasibleInput);
  }
}

TEST(Feasibility, Rules) {
  const auto net = chain();
  EXPECT_TRUE(is_feasible(net, Schedule({0, 0, 5, 12})));
  EXPECT_FALSE(is_feasible(net, Schedule({0, -1, 5, 12})));
  EXPECT_FALSE(is_feasible(net, Schedule({1, 1, 6, 13})));
  EXPECT_FALSE(is_feasible(net, Schedule({0, 0, 5, 25})));
  EXPECT_FALSE(is_feasible(net, Schedule({0, 1, 5, 12})).violated.empty());
  EXPECT_THROW(is_feasible(net, Schedule({0, 0, 5})), Error);
}

TEST(Cpm, ChainEarlyAndLate) {
  EXPECT_EQ(early_schedule(chain()).schedule, Schedule({0, 0, 5, 12}));
  EXPECT_EQ(late_schedule(chain({0, 10, -10, 0}, 10, 12)).schedule, Schedule({0, 0, 5, 12}));
  EXPECT_EQ(late_schedule(chain({0, 10, -10, 0}, 10, 20)).schedule, Schedule({0, 8, 13, 20}));
  EXPECT_EQ(critical_path_length(chain()), 12);
}

TEST(Cpm, SingleActivity) {
  ProjectNetwork net({0, 5, 0}, {0, 1, 0}, {{1, 2}, {2, 3}}, 10, 5);
  EXPECT_EQ(early_schedule(net).schedule, Schedule({0, 0, 5}));
}

TEST(Cpm, Diamond) {
  const auto net = diamond({0, 1, 1, 0}, 10, 7);
  EXPECT_EQ(early_schedule(net).schedule.start(4), 7);
  EXPECT_EQ(critical_path_length(net), 7);
  const Schedule late = late_schedule(net).schedule;
  EXPECT_EQ(late.start(2), 2);
  EXPECT_EQ(late.start(3), 0);
}

TEST(Cpm, ZeroDurations) {
  ProjectNetwork net({0, 0, 0, 0}, {0, 1, 1, 0}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, 10, 0);
  EXPECT_EQ(critical_path_length(net), 0);
}

TEST(Cpm, TreesSpanAndBind) {
  const auto net = testing::six();
  const auto early = early_schedule(net);
  EXPECT_TRUE(early.tree.is_spanning_tree());
  for (auto [i, j] : early.tree.edges()) {
    EXPECT_EQ(early.schedule.start(i) + net.duration(i), early.schedule.start(j));
  }
  const auto late = late_schedule(net);
  EXPECT_TRUE(late.tree.is_spanning_tree());
  EXPECT_TRUE(late.tree.extra_edge_present());
  for (auto [i, j] : late.tree.edges()) {
    EXPECT_EQ(late.schedule.start(i) + net.duration(i), late.schedule.start(j));
  }
  for (Vertex v = 1; v <= net.size(); ++v) {
    EXPECT_LE(early.schedule.start(v), late.schedule.start(v));
  }
}

TEST(Cpm, DeadlineBelowCriticalPath) {
  try {
    late_schedule(chain({0, 1, 1, 0}, 10, 11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDeadlineInfeasible);
  }
}

TEST(Npv, RedundantEdgeLeavesValueUnchanged) {
  const auto plain = chain();
  ProjectNetwork redundant({0, 5, 7, 0}, {0, 10, -10, 0}, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}, 10, 24);
  const Schedule s({0, 0, 5, 12});
  EXPECT_DOUBLE_EQ(npv(plain, s), npv(redundant, s));
}

}  // namespace
}  // namespace npvsched
