#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "npvsched/model.hpp"

namespace npvsched {

enum class Direction { kForward, kBackward };
enum class Algorithm { kRsfb, kSaafb, kHs };

const char* to_string(Direction direction);
const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<Direction> parse_direction(std::string_view name);

/// Sign threshold for the detach tests on discounted cash (and on the
/// equivalent gradient, scaled by alpha).
inline constexpr double kSignTolerance = 1e-12;

/// Instrumentation counters of one solver run.
struct RunMetrics {
  /// Recursive calls (RSFB, HS) or SAD iterations (SAAFB).
  std::int64_t recursion_or_iteration = 0;
  /// Edges examined while computing shift distances.
  std::int64_t edge_checked = 0;
  /// Number of tree searches started: Step_3 calls, SAD calls or HRS calls.
  std::int64_t restarted_search = 0;
  /// Restart counter with the original loop convention. Equals
  /// restarted_search except for SAAFB, where the while-loop counter misses
  /// the first SAD call.
  std::int64_t raw_restart_counter = 0;
  double wall_time_ms = 0.0;

  std::int64_t computational_cost() const {
    return recursion_or_iteration + edge_checked;
  }
};

/// State after one shift, recorded when SolveOptions::record_shifts is set.
struct ShiftEvent {
  int distance = 0;
  double value = 0.0;
  /// Precedence constraints hold on every tree edge, s_1 = 0, s_n <= deadline.
  bool tree_feasible = true;
};

struct SolveOptions {
  /// Overrides choose_direction(); used to exercise the mirrored code path.
  std::optional<Direction> direction;
  bool record_shifts = false;
  /// RSFB only: before the first search, move activities with no real
  /// successor (backward: no real predecessor) and an unfavourable cash flow
  /// to their latest (earliest) start. Off by default.
  bool rsfb_prepass = false;
  /// Guard against non-terminating searches; exceeded -> Error(kNoConvergence).
  std::int64_t max_restarts = 50'000'000;
};

struct SolverResult {
  Algorithm algorithm = Algorithm::kRsfb;
  Direction direction = Direction::kForward;
  Schedule schedule;
  double npv = 0.0;
  RunMetrics metrics;
  std::vector<ShiftEvent> shifts;
};

/// Backward iff strictly more than half of the non-dummy activities have a
/// negative cash flow.
Direction choose_direction(const ProjectNetwork& net);

/// Result of the shortest-shift search: `moving` is k* (inside the moving
/// set), `fixed` is l* (outside it), `distance` the shift magnitude v.
struct ShiftBound {
  Vertex moving = 0;
  Vertex fixed = 0;
  int distance = 0;
  /// The bound came from the (1, n) deadline edge rather than a graph edge.
  bool via_extra_edge = false;
};

/// Smallest slack between the moving set and the rest of the network.
///
/// Forward: min over graph edges (k, l), k in the set, l outside, of
/// s_l - s_k - d_k; if the sink is in the set, the deadline slack
/// deadline - s_n is also a candidate. Backward: min over edges (l, k) of
/// s_k - s_l - d_l, with s_1 as the candidate for the source. Ties keep the
/// first candidate in ascending (vertex, neighbour) order. Every candidate
/// examined increments `edge_checked`.
ShiftBound compute_v(const ProjectNetwork& net,
                     std::span<const Vertex> moving_set,
                     const Schedule& schedule, Direction direction,
                     std::int64_t& edge_checked);

SolverResult rsfb_solve(const ProjectNetwork& net, const SolveOptions& options = {});
SolverResult saafb_solve(const ProjectNetwork& net, const SolveOptions& options = {});
SolverResult hs_solve(const ProjectNetwork& net, const SolveOptions& options = {});

SolverResult solve(Algorithm algorithm, const ProjectNetwork& net,
                   const SolveOptions& options = {});

}  // namespace npvsched
