#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "npvsched/algorithms.hpp"
#include "npvsched/instance.hpp"

namespace npvsched {

/// One (instance, algorithm) run.
struct ExperimentRecord {
  std::uint64_t instance_id = 0;
  FactorAssignment factors;
  Algorithm algorithm = Algorithm::kRsfb;
  Direction direction = Direction::kForward;
  double npv = 0.0;
  std::int64_t comp_cost = 0;
  std::int64_t restarted = 0;
  double wall_ms = 0.0;
  std::int64_t recursion_or_iteration = 0;
  std::int64_t edge_checked = 0;
  std::int64_t raw_restarted = 0;
  /// "ok", or the error kind of a failed run. Failed rows carry no metrics
  /// and are skipped by the statistics below.
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

ExperimentRecord make_record(std::uint64_t instance_id,
                             const FactorAssignment& factors,
                             const SolverResult& result);

/// Generates `count` instances of `design` from `seed` and solves each with
/// every algorithm in `algorithms`. Rows are ordered by instance, then by the
/// order of `algorithms`, independent of `parallelism` (0 = hardware threads).
std::vector<ExperimentRecord> run_batch(int design, std::uint64_t count,
                                        std::uint64_t seed,
                                        const std::vector<Algorithm>& algorithms,
                                        unsigned parallelism = 0,
                                        const SolveOptions& options = {});

/// The fixed header columns followed by recursion_or_iteration, edge_checked,
/// raw_restarted and status.
const std::vector<std::string>& csv_header();
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
/// Throws Error(kBadInstance) on a malformed header or row.
std::vector<ExperimentRecord> read_csv(std::istream& in);

/// Metric columns usable by the statistics: "comp_cost", "restarted",
/// "wall_ms", "npv".
double metric_value(const ExperimentRecord& record, std::string_view metric);

std::vector<double> metric_values(const std::vector<ExperimentRecord>& records,
                                  Algorithm algorithm, std::string_view metric);

struct SixNumberSummary {
  std::size_t count = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Linear-interpolation quantile (R type 7) of an unsorted sample.
double quantile(std::vector<double> values, double p);
SixNumberSummary summarize(const std::vector<double>& values);
/// Per algorithm; algorithms without rows are omitted.
std::map<Algorithm, SixNumberSummary> summarize(
    const std::vector<ExperimentRecord>& records, std::string_view metric);

struct KsResult {
  double d = 0.0;
  double p = 1.0;
  bool similar = true;  // p > 0.05
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value at
/// lambda = sqrt(n_a n_b / (n_a + n_b)) D.
KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b);

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

/// Pearson correlation of mid-ranks. nullopt when either rank vector is
/// constant. Throws std::invalid_argument on length mismatch or fewer than
/// two points.
std::optional<double> spearman(const std::vector<double>& x,
                               const std::vector<double>& y);

struct MaxCostSeries {
  std::string factor;
  /// (factor value, max metric) in ascending factor value.
  std::vector<std::pair<double, double>> points;
};

/// Factor names: vertices, layers, maxDegree, discRate, percNeg, cpMult,
/// edges. Throws Error(kUnknownFactor) otherwise. With `perc_neg_cap`, only
/// records with percNeg <= cap take part.
MaxCostSeries max_cost_series(const std::vector<ExperimentRecord>& records,
                              std::string_view factor, std::string_view metric,
                              std::optional<int> perc_neg_cap = std::nullopt);

double factor_value(const FactorAssignment& factors, std::string_view factor);

}  // namespace npvsched
