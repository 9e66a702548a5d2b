#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "npvsched/instance.hpp"

namespace npvsched {

using Rng = std::mt19937_64;

/// Per-instance seed derived from the master seed and the instance index, so
/// instances can be generated independently and in any order.
std::uint64_t instance_seed(std::uint64_t master_seed, std::uint64_t index);

/// Uniform draw of the experimental factors for sampling design 1, 2 or 3:
///
///   design 1: vertices 16..80, layers 2..vertices-1, maxDegree 2 or 3,
///             percNeg 0,10,..,100
///   design 2: as design 1 with vertices 16..320
///   design 3: even vertices 16..320, layers 2, maxDegree (vertices-2)/2,
///             percNeg 0,10,..,50
///
/// All designs: discRate 1..20 %, cpMult continuous in [1, 2], cash flows
/// in -100..100, durations 5..10.
FactorAssignment sample_factors(int design, Rng& rng);

/// Exactly round(percNeg% of count) values in [min, -1] (ties rounded down,
/// so percNeg <= 50 never produces a negative majority), the rest in
/// [1, max], in random order.
std::vector<double> assign_cash_flows(int count, int perc_neg_pct, int min,
                                      int max, Rng& rng);

/// Layered random DAG for the factors. Records the edge count in the
/// returned factors. Throws Error(kDegenerateFactors) when the factors admit
/// no layered network (e.g. more layers than non-dummy activities).
Instance generate_network(const FactorAssignment& factors, Rng& rng);

/// sample_factors + generate_network, redrawing factors that turn out
/// degenerate. Deterministic in (design, master_seed, index).
Instance generate_instance(int design, std::uint64_t master_seed,
                           std::uint64_t index);

}  // namespace npvsched
