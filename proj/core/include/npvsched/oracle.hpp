#pragma once

#include <cstdint>

#include "npvsched/model.hpp"

namespace npvsched {

inline constexpr std::int64_t kDefaultOracleBudget = 10'000'000;

struct OracleResult {
  double npv = 0.0;
  Schedule schedule;
  /// Partial assignments visited by the enumeration.
  std::int64_t nodes = 0;
};

/// Exhaustive optimum over integer start vectors.
///
/// Vertices are assigned in ascending (topological) order, each over
/// [max predecessor finish, late start], so every leaf is feasible. Branches
/// whose optimistic completion (every remaining activity at its individually
/// best CPM bound) cannot beat the incumbent are cut. Ties go to the
/// lexicographically smallest start vector; the end dummy is placed at its
/// earliest start.
///
/// Throws Error(kOracleTooLarge) once more than `budget` nodes are visited and
/// Error(kDeadlineInfeasible) if the deadline is below the critical path.
OracleResult brute_force_optimal(const ProjectNetwork& net,
                                 std::int64_t budget = kDefaultOracleBudget);

}  // namespace npvsched
