#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "npvsched/algorithms.hpp"
#include "npvsched/model.hpp"

namespace npvsched {

/// Experimental factors of one generated instance, plus the value ranges the
/// generator drew durations and cash flows from.
struct FactorAssignment {
  int design = 1;
  int vertices = 0;       // n, dummies included
  int layers = 0;
  int max_degree = 0;
  int disc_rate_pct = 0;
  int perc_neg_pct = 0;
  double cp_mult = 1.0;
  int edges = 0;          // recorded after generation
  int cash_flow_min = -100;
  int cash_flow_max = 100;
  int duration_min = 5;
  int duration_max = 10;
};

struct Instance {
  ProjectNetwork network;
  std::optional<FactorAssignment> factors;
};

nlohmann::json factors_to_json(const FactorAssignment& factors);
FactorAssignment factors_from_json(const nlohmann::json& j);

/// {"n", "durations", "cash_flows", "edges", "discount_rate_pct", "deadline",
///  "meta"}; vertices are 1-based.
nlohmann::json instance_to_json(const Instance& instance);

/// Throws Error(kBadInstance) on missing fields or inconsistent lengths.
Instance instance_from_json(const nlohmann::json& j);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& instance);

/// {"algorithm", "direction", "npv", "starts", "metrics": {...}}
nlohmann::json result_to_json(const SolverResult& result);
SolverResult result_from_json(const nlohmann::json& j);

}  // namespace npvsched
