#include "cli.hpp"

#include <CLI11/CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "npvsched/algorithms.hpp"
#include "npvsched/bench.hpp"
#include "npvsched/errors.hpp"
#include "npvsched/generator.hpp"
#include "npvsched/instance.hpp"
#include "npvsched/oracle.hpp"

namespace npvsched::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr Algorithm kAllAlgorithms[] = {Algorithm::kRsfb, Algorithm::kSaafb,
                                        Algorithm::kHs};
const std::vector<std::string> kFactors{"vertices", "layers",  "maxDegree", "discRate",
                                        "percNeg",  "cpMult", "edges"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("npvsched", sink);
  logger->set_pattern("[%l] %v");
  const char* level = std::getenv("NPV_SCHED_LOG");
  const std::string name = level ? level : "info";
  if (name == "error") logger->set_level(spdlog::level::err);
  else if (name == "debug") logger->set_level(spdlog::level::debug);
  else logger->set_level(spdlog::level::info);
  return logger;
}

std::vector<Algorithm> parse_algorithm_list(const std::string& list) {
  std::vector<Algorithm> out;
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    auto a = parse_algorithm(name);
    if (!a) throw UsageError("unknown algorithm '" + name + "'");
    out.push_back(*a);
  }
  if (out.empty()) throw UsageError("empty algorithm list");
  return out;
}

Instance load_valid_instance(const std::string& path, spdlog::logger& log) {
  Instance instance = read_instance(path);
  const ValidationReport report = validate_network(instance.network);
  if (!report.ok()) {
    for (const Violation& v : report.violations) {
      log.error("{}: {} ({})", path, v.rule, v.where);
    }
    throw Error(ErrorKind::kBadInstance, path + " fails validation");
  }
  return instance;
}

json summary_json(const SixNumberSummary& s) {
  return {{"count", s.count}, {"min", s.min},   {"q1", s.q1}, {"median", s.median},
          {"mean", s.mean},   {"q3", s.q3},     {"max", s.max}};
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<ExperimentRecord> only(const std::vector<ExperimentRecord>& records,
                                   Algorithm algorithm) {
  std::vector<ExperimentRecord> out;
  for (const auto& r : records) {
    if (r.ok() && r.algorithm == algorithm) out.push_back(r);
  }
  return out;
}

std::optional<double> series_rho(const MaxCostSeries& series) {
  if (series.points.size() < 2) return std::nullopt;
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& [k, v] : series.points) {
    x.push_back(k);
    y.push_back(v);
  }
  return spearman(x, y);
}

json stats_report(const std::vector<ExperimentRecord>& records, const std::string& report,
                  const std::string& metric, const std::string& factor,
                  std::optional<int> cap) {
  json out = json::object();
  if (report == "summary") {
    for (const char* m : {"comp_cost", "restarted"}) {
      if (!metric.empty() && metric != m) continue;
      json& block = out[m];
      for (const auto& [a, s] : summarize(records, m)) block[to_string(a)] = summary_json(s);
    }
    return out;
  }
  const std::string m = metric.empty() ? "comp_cost" : metric;
  if (report == "ks") {
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        auto a = metric_values(records, kAllAlgorithms[i], m);
        auto b = metric_values(records, kAllAlgorithms[j], m);
        if (a.empty() || b.empty()) continue;
        const KsResult ks = ks_two_sample(a, b);
        rows.push_back({{"a", to_string(kAllAlgorithms[i])},
                        {"b", to_string(kAllAlgorithms[j])},
                        {"d", ks.d},
                        {"p", ks.p},
                        {"similar", ks.similar}});
      }
    }
    out["metric"] = m;
    out["tests"] = std::move(rows);
    return out;
  }
  if (report == "spearman") {
    out["metric"] = m;
    for (Algorithm a : kAllAlgorithms) {
      const auto subset = only(records, a);
      if (subset.size() < 2) continue;
      json& block = out[to_string(a)];
      std::vector<double> y;
      for (const auto& r : subset) y.push_back(metric_value(r, m));
      for (const auto& f : kFactors) {
        std::vector<double> x;
        for (const auto& r : subset) x.push_back(factor_value(r.factors, f));
        block["records"][f] = optional_json(spearman(x, y));
        block["max_cost"][f] = optional_json(series_rho(max_cost_series(subset, f, m, cap)));
      }
      std::vector<double> cost;
      std::vector<double> wall;
      for (const auto& r : subset) {
        if (r.factors.perc_neg_pct > 50) continue;
        cost.push_back(static_cast<double>(r.comp_cost));
        wall.push_back(r.wall_ms);
      }
      block["comp_cost_vs_wall_ms"] =
          cost.size() >= 2 ? optional_json(spearman(cost, wall)) : json(nullptr);
    }
    return out;
  }
  if (report == "maxcost") {
    out["factor"] = factor;
    out["metric"] = m;
    out["perc_neg_cap"] = cap ? json(*cap) : json(nullptr);
    for (Algorithm a : kAllAlgorithms) {
      const auto subset = only(records, a);
      if (subset.empty()) continue;
      json points = json::array();
      for (const auto& [k, v] : max_cost_series(subset, factor, m, cap).points) {
        points.push_back({k, v});
      }
      out["series"][to_string(a)] = std::move(points);
    }
    return out;
  }
  throw UsageError("unknown report '" + report + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);

  CLI::App app{"Max-NPV project scheduling: solvers, oracle, generator and benchmarks",
               "npvsched"};
  app.require_subcommand(1);

  int design = 1;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string in_path;
  std::string algo;
  std::string algos = "rsfb,saafb,hs";
  std::string direction;
  unsigned parallelism = 0;
  bool prepass = false;
  std::string report;
  std::string metric;
  std::string factor = "vertices";
  std::optional<int> cap;
  std::int64_t budget = kDefaultOracleBudget;

  auto* generate = app.add_subcommand("generate", "Write random instances as JSON files");
  generate->add_option("--design", design, "Sampling design")->required()->check(CLI::Range(1, 3));
  generate->add_option("--count", count, "Number of instances")->required();
  generate->add_option("--seed", seed, "Master seed")->required();
  generate->add_option("--out", out_path, "Output directory")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance, print the result JSON");
  solve_cmd->add_option("--algo", algo, "rsfb, saafb or hs")->required();
  solve_cmd->add_option("--in", in_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--direction", direction, "Force forward or backward search");
  solve_cmd->add_flag("--rsfb-prepass", prepass, "RSFB: delay successor-less activities first");

  auto* bench = app.add_subcommand("bench", "Generate and solve a batch, write the CSV");
  bench->add_option("--design", design, "Sampling design")->required()->check(CLI::Range(1, 3));
  bench->add_option("--count", count, "Number of instances")->required();
  bench->add_option("--seed", seed, "Master seed")->required();
  bench->add_option("--algos", algos, "Comma-separated algorithm list");
  bench->add_option("--out", out_path, "Output CSV ('-' for stdout)")->required();
  bench->add_option("--parallelism", parallelism, "Worker threads (0 = all cores)");
  bench->add_flag("--rsfb-prepass", prepass, "RSFB: delay successor-less activities first");

  auto* stats = app.add_subcommand("stats", "Statistics over a bench CSV");
  stats->add_option("--in", in_path, "Bench CSV")->required()->check(CLI::ExistingFile);
  stats->add_option("--report", report, "summary, ks, spearman or maxcost")
      ->required()
      ->check(CLI::IsMember({"summary", "ks", "spearman", "maxcost"}));
  stats->add_option("--metric", metric, "comp_cost, restarted or wall_ms")
      ->check(CLI::IsMember({"comp_cost", "restarted", "wall_ms"}));
  stats->add_option("--factor", factor, "Factor for maxcost")->check(CLI::IsMember(kFactors));
  stats->add_option("--perc-neg-cap", cap, "Only records with percNeg at most this value");

  auto* check = app.add_subcommand("oracle-check", "Compare every solver with the exhaustive optimum");
  check->add_option("--in", in_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--budget", budget, "Oracle node budget");

  std::vector<const char*> argv{"npvsched"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (*generate) {
      fs::create_directories(out_path);
      for (std::uint64_t i = 0; i < count; ++i) {
        std::ostringstream name;
        name << "instance_" << std::setw(6) << std::setfill('0') << i << ".json";
        const fs::path path = fs::path(out_path) / name.str();
        write_instance(path, generate_instance(design, seed, i));
        out << path.string() << '\n';
      }
      log->info("wrote {} instances to {}", count, out_path);
      return kOk;
    }

    if (*solve_cmd) {
      const auto algorithm = parse_algorithm(algo);
      if (!algorithm) throw UsageError("unknown algorithm '" + algo + "'");
      SolveOptions options;
      options.rsfb_prepass = prepass;
      if (!direction.empty()) {
        options.direction = parse_direction(direction);
        if (!options.direction) throw UsageError("unknown direction '" + direction + "'");
      }
      const Instance instance = load_valid_instance(in_path, *log);
      const SolverResult result = solve(*algorithm, instance.network, options);
      log->debug("{}: {} restarts, cost {}", in_path, result.metrics.restarted_search,
                 result.metrics.computational_cost());
      out << result_to_json(result).dump(2) << '\n';
      return kOk;
    }

    if (*bench) {
      const auto list = parse_algorithm_list(algos);
      SolveOptions options;
      options.rsfb_prepass = prepass;
      log->info("design {}: solving {} instances with {} algorithm(s)", design, count, list.size());
      const auto records = run_batch(design, count, seed, list, parallelism, options);
      std::size_t failed = 0;
      for (const auto& r : records) {
        if (!r.ok()) {
          ++failed;
          log->error("instance {} {}: {}", r.instance_id, to_string(r.algorithm), r.status);
        }
      }
      if (out_path == "-") {
        write_csv(out, records);
      } else {
        std::ofstream file(out_path);
        if (!file) throw Error(ErrorKind::kBadInstance, "cannot write " + out_path);
        write_csv(file, records);
      }
      log->info("{} rows, {} flagged", records.size(), failed);
      return kOk;
    }

    if (*stats) {
      std::ifstream file(in_path);
      const auto records = read_csv(file);
      out << stats_report(records, report, metric, factor, cap).dump(2) << '\n';
      return kOk;
    }

    if (*check) {
      const Instance instance = load_valid_instance(in_path, *log);
      const OracleResult oracle = brute_force_optimal(instance.network, budget);
      out << std::setprecision(12) << std::fixed;
      out << "oracle " << oracle.npv << '\n';
      bool pass = true;
      for (Algorithm a : kAllAlgorithms) {
        const SolverResult r = solve(a, instance.network);
        const bool match = std::abs(r.npv - oracle.npv) <= kNpvTolerance;
        pass = pass && match;
        out << to_string(a) << ' ' << r.npv << ' ' << to_string(r.direction)
            << (match ? "" : " MISMATCH") << '\n';
      }
      out << (pass ? "PASS" : "FAIL") << '\n';
      return pass ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    log->error("{}", e.what());
    return e.kind() == ErrorKind::kUnknownFactor ? kUsageError : kDataError;
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return kDataError;
  }
  return kUsageError;
}

}  // namespace npvsched::cli
