#include "npvsched/instance.hpp"

#include <fstream>

#include "npvsched/errors.hpp"

namespace npvsched {

using nlohmann::json;

json factors_to_json(const FactorAssignment& f) {
  return json{{"design", f.design},
              {"vertices", f.vertices},
              {"layers", f.layers},
              {"max_degree", f.max_degree},
              {"disc_rate_pct", f.disc_rate_pct},
              {"perc_neg_pct", f.perc_neg_pct},
              {"cp_mult", f.cp_mult},
              {"edges", f.edges},
              {"cash_flow_range", {f.cash_flow_min, f.cash_flow_max}},
              {"activity_dur_range", {f.duration_min, f.duration_max}}};
}

FactorAssignment factors_from_json(const json& j) {
  FactorAssignment f;
  f.design = j.value("design", 0);
  f.vertices = j.value("vertices", 0);
  f.layers = j.value("layers", 0);
  f.max_degree = j.value("max_degree", 0);
  f.disc_rate_pct = j.value("disc_rate_pct", 0);
  f.perc_neg_pct = j.value("perc_neg_pct", 0);
  f.cp_mult = j.value("cp_mult", 1.0);
  f.edges = j.value("edges", 0);
  if (auto it = j.find("cash_flow_range"); it != j.end()) {
    f.cash_flow_min = it->at(0).get<int>();
    f.cash_flow_max = it->at(1).get<int>();
  }
  if (auto it = j.find("activity_dur_range"); it != j.end()) {
    f.duration_min = it->at(0).get<int>();
    f.duration_max = it->at(1).get<int>();
  }
  return f;
}

json instance_to_json(const Instance& instance) {
  const ProjectNetwork& net = instance.network;
  json edges = json::array();
  for (const Edge& e : net.edges()) edges.push_back({e.from, e.to});
  json j{{"n", net.size()},
         {"durations", net.durations()},
         {"cash_flows", net.cash_flows()},
         {"edges", std::move(edges)},
         {"discount_rate_pct", net.discount_rate_pct()},
         {"deadline", net.deadline()}};
  j["meta"] = instance.factors ? factors_to_json(*instance.factors) : json::object();
  return j;
}

Instance instance_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto durations = j.at("durations").get<std::vector<int>>();
    auto cash_flows = j.at("cash_flows").get<std::vector<double>>();
    if (static_cast<int>(durations.size()) != n ||
        static_cast<int>(cash_flows.size()) != n) {
      throw Error(ErrorKind::kBadInstance,
                  "durations/cash_flows length differs from n");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    Instance instance{
        ProjectNetwork(std::move(durations), std::move(cash_flows),
                       std::move(edges), j.at("discount_rate_pct").get<double>(),
                       j.at("deadline").get<int>()),
        std::nullopt};
    if (auto it = j.find("meta"); it != j.end() && it->is_object() && !it->empty()) {
      instance.factors = factors_from_json(*it);
    }
    return instance;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kBadInstance, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kShape) throw Error(ErrorKind::kBadInstance, e.what());
    throw;
  }
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kBadInstance, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kBadInstance, path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << instance_to_json(instance).dump() << '\n';
}

json result_to_json(const SolverResult& r) {
  return json{{"algorithm", to_string(r.algorithm)},
              {"direction", to_string(r.direction)},
              {"npv", r.npv},
              {"starts", r.schedule.starts()},
              {"metrics",
               {{"recursion_or_iteration", r.metrics.recursion_or_iteration},
                {"edge_checked", r.metrics.edge_checked},
                {"restarted_search", r.metrics.restarted_search},
                {"computational_cost", r.metrics.computational_cost()},
                {"wall_time_ms", r.metrics.wall_time_ms}}}};
}

SolverResult result_from_json(const json& j) {
  SolverResult r;
  auto algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
  auto direction = parse_direction(j.at("direction").get<std::string>());
  if (!algorithm || !direction) {
    throw Error(ErrorKind::kBadInstance, "unknown algorithm or direction");
  }
  r.algorithm = *algorithm;
  r.direction = *direction;
  r.npv = j.at("npv").get<double>();
  r.schedule = Schedule(j.at("starts").get<std::vector<int>>());
  const json& m = j.at("metrics");
  r.metrics.recursion_or_iteration = m.at("recursion_or_iteration").get<std::int64_t>();
  r.metrics.edge_checked = m.at("edge_checked").get<std::int64_t>();
  r.metrics.restarted_search = m.at("restarted_search").get<std::int64_t>();
  r.metrics.wall_time_ms = m.at("wall_time_ms").get<double>();
  return r;
}

}  // namespace npvsched
