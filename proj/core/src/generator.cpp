#include "npvsched/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "npvsched/errors.hpp"

namespace npvsched {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(master_seed ^ splitmix64(index));
}

FactorAssignment sample_factors(int design, Rng& rng) {
  if (design < 1 || design > 3) {
    throw Error(ErrorKind::kDegenerateFactors,
                "unknown design " + std::to_string(design));
  }
  FactorAssignment f;
  f.design = design;
  if (design == 3) {
    f.vertices = 16 + 2 * uniform_int(rng, 0, (320 - 16) / 2);
    f.layers = 2;
    f.max_degree = (f.vertices - 2) / 2;
  } else {
    f.vertices = uniform_int(rng, 16, design == 1 ? 80 : 320);
    f.layers = uniform_int(rng, 2, f.vertices - 1);
    f.max_degree = uniform_int(rng, 2, 3);
  }
  f.disc_rate_pct = uniform_int(rng, 1, 20);
  f.perc_neg_pct = 10 * uniform_int(rng, 0, design == 3 ? 5 : 10);
  f.cp_mult = std::uniform_real_distribution<double>(1.0, 2.0)(rng);
  return f;
}

std::vector<double> assign_cash_flows(int count, int perc_neg_pct, int min,
                                      int max, Rng& rng) {
  const int scaled = perc_neg_pct * count;
  const int negatives = scaled / 100 + (scaled % 100 > 50 ? 1 : 0);
  std::vector<double> flows;
  flows.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    flows.push_back(i < negatives ? uniform_int(rng, min, -1)
                                  : uniform_int(rng, 1, max));
  }
  std::shuffle(flows.begin(), flows.end(), rng);
  return flows;
}

Instance generate_network(const FactorAssignment& factors, Rng& rng) {
  const int n = factors.vertices;
  const int inner = n - 2;
  if (inner < 1 || factors.layers < 1 || factors.layers > inner) {
    throw Error(ErrorKind::kDegenerateFactors,
                std::to_string(factors.layers) + " layers for " +
                    std::to_string(inner) + " activities");
  }
  if (factors.max_degree < 1) {
    throw Error(ErrorKind::kDegenerateFactors, "maxDegree below 1");
  }

  // Layer of each non-dummy vertex 2..n-1; ids increase with the layer.
  std::vector<int> layer_size(static_cast<std::size_t>(factors.layers), 1);
  for (int i = factors.layers; i < inner; ++i) {
    ++layer_size[static_cast<std::size_t>(uniform_int(rng, 0, factors.layers - 1))];
  }
  if (factors.design == 3) {
    if (inner % 2 != 0 || factors.layers != 2) {
      throw Error(ErrorKind::kDegenerateFactors,
                  "design 3 needs two equal layers");
    }
    layer_size = {inner / 2, inner / 2};
  }
  std::vector<int> layer_of(static_cast<std::size_t>(n + 1), -1);
  {
    Vertex v = 2;
    for (int l = 0; l < factors.layers; ++l) {
      for (int k = 0; k < layer_size[static_cast<std::size_t>(l)]; ++k) {
        layer_of[static_cast<std::size_t>(v++)] = l;
      }
    }
  }

  std::vector<Edge> candidates;
  for (Vertex i = 2; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (layer_of[static_cast<std::size_t>(i)] < layer_of[static_cast<std::size_t>(j)]) {
        candidates.push_back({i, j});
      }
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);

  std::vector<int> out_degree(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> in_degree(static_cast<std::size_t>(n + 1), 0);
  std::vector<Edge> edges;
  for (const Edge& e : candidates) {
    auto& out = out_degree[static_cast<std::size_t>(e.from)];
    auto& in = in_degree[static_cast<std::size_t>(e.to)];
    if (out < factors.max_degree && in < factors.max_degree) {
      edges.push_back(e);
      ++out;
      ++in;
    }
  }
  for (Vertex v = 2; v < n; ++v) {
    if (in_degree[static_cast<std::size_t>(v)] == 0) edges.push_back({1, v});
    if (out_degree[static_cast<std::size_t>(v)] == 0) edges.push_back({v, n});
  }
  std::sort(edges.begin(), edges.end());

  std::vector<int> durations(static_cast<std::size_t>(n), 0);
  for (Vertex v = 2; v < n; ++v) {
    durations[static_cast<std::size_t>(v - 1)] =
        uniform_int(rng, factors.duration_min, factors.duration_max);
  }
  std::vector<double> cash_flows(static_cast<std::size_t>(n), 0.0);
  const auto inner_flows = assign_cash_flows(inner, factors.perc_neg_pct,
                                             factors.cash_flow_min,
                                             factors.cash_flow_max, rng);
  std::copy(inner_flows.begin(), inner_flows.end(), cash_flows.begin() + 1);

  FactorAssignment recorded = factors;
  recorded.edges = static_cast<int>(edges.size());
  ProjectNetwork draft(durations, cash_flows, edges, factors.disc_rate_pct, 0);
  const int deadline = static_cast<int>(
      std::lround(factors.cp_mult * critical_path_length(draft)));
  return {draft.with_deadline(deadline), recorded};
}

Instance generate_instance(int design, std::uint64_t master_seed,
                           std::uint64_t index) {
  Rng rng(instance_seed(master_seed, index));
  while (true) {
    FactorAssignment factors = sample_factors(design, rng);
    try {
      return generate_network(factors, rng);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateFactors) throw;
    }
  }
}

}  // namespace npvsched
