#include "npvsched/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "npvsched/errors.hpp"
#include "npvsched/generator.hpp"

namespace npvsched {

namespace {

std::string status_of(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  std::string s = err ? to_string(err->kind()) : "internal error";
  std::replace(s.begin(), s.end(), ' ', '_');
  return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

template <class T>
T parse_field(const std::string& text, const char* column) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (in.fail() || !in.eof()) {
    throw Error(ErrorKind::kBadInstance,
                std::string("bad value '") + text + "' in column " + column);
  }
  return value;
}

// Fractional ranks, ties get the mean of the positions they span.
std::vector<double> mid_ranks(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

ExperimentRecord make_record(std::uint64_t instance_id,
                             const FactorAssignment& factors,
                             const SolverResult& result) {
  ExperimentRecord r;
  r.instance_id = instance_id;
  r.factors = factors;
  r.algorithm = result.algorithm;
  r.direction = result.direction;
  r.npv = result.npv;
  r.comp_cost = result.metrics.computational_cost();
  r.restarted = result.metrics.restarted_search;
  r.wall_ms = result.metrics.wall_time_ms;
  r.recursion_or_iteration = result.metrics.recursion_or_iteration;
  r.edge_checked = result.metrics.edge_checked;
  r.raw_restarted = result.metrics.raw_restart_counter;
  return r;
}

std::vector<ExperimentRecord> run_batch(int design, std::uint64_t count,
                                        std::uint64_t seed,
                                        const std::vector<Algorithm>& algorithms,
                                        unsigned parallelism,
                                        const SolveOptions& options) {
  const std::size_t width = algorithms.size();
  std::vector<ExperimentRecord> rows(static_cast<std::size_t>(count) * width);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      const Instance instance = generate_instance(design, seed, i);
      for (std::size_t a = 0; a < width; ++a) {
        ExperimentRecord& row = rows[static_cast<std::size_t>(i) * width + a];
        try {
          row = make_record(i, *instance.factors,
                            solve(algorithms[a], instance.network, options));
        } catch (const std::exception& e) {
          row = ExperimentRecord{};
          row.instance_id = i;
          row.factors = *instance.factors;
          row.algorithm = algorithms[a];
          row.direction = choose_direction(instance.network);
          row.status = status_of(e);
        }
      }
    }
  };

  if (parallelism == 0) parallelism = std::max(1u, std::thread::hardware_concurrency());
  parallelism = static_cast<unsigned>(
      std::min<std::uint64_t>(parallelism, std::max<std::uint64_t>(count, 1)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < parallelism; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> header{
      "instance_id", "design", "vertices", "layers", "max_degree",
      "disc_rate_pct", "perc_neg_pct", "cp_mult", "edges", "algorithm",
      "direction", "npv", "comp_cost", "restarted", "wall_ms",
      "recursion_or_iteration", "edge_checked", "raw_restarted", "status"};
  return header;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  const auto& header = csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  std::ostringstream line;
  line << std::setprecision(17);
  for (const ExperimentRecord& r : records) {
    line.str({});
    const FactorAssignment& f = r.factors;
    line << r.instance_id << ',' << f.design << ',' << f.vertices << ','
         << f.layers << ',' << f.max_degree << ',' << f.disc_rate_pct << ','
         << f.perc_neg_pct << ',' << f.cp_mult << ',' << f.edges << ','
         << to_string(r.algorithm) << ',' << to_string(r.direction) << ','
         << r.npv << ',' << r.comp_cost << ',' << r.restarted << ','
         << std::setprecision(6) << r.wall_ms << std::setprecision(17) << ','
         << r.recursion_or_iteration << ','
         << r.edge_checked << ',' << r.raw_restarted << ',' << r.status << '\n';
    out << line.str();
  }
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::kBadInstance, "empty CSV");
  const auto header = split(line, ',');
  const auto& expected = csv_header();
  if (header.size() < 15 ||
      !std::equal(expected.begin(), expected.begin() + 15, header.begin())) {
    throw Error(ErrorKind::kBadInstance, "unexpected CSV header");
  }
  const bool extended = header.size() >= expected.size();

  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto v = split(line, ',');
    if (v.size() != header.size()) {
      throw Error(ErrorKind::kBadInstance, "row width differs from header: " + line);
    }
    ExperimentRecord r;
    r.instance_id = parse_field<std::uint64_t>(v[0], "instance_id");
    r.factors.design = parse_field<int>(v[1], "design");
    r.factors.vertices = parse_field<int>(v[2], "vertices");
    r.factors.layers = parse_field<int>(v[3], "layers");
    r.factors.max_degree = parse_field<int>(v[4], "max_degree");
    r.factors.disc_rate_pct = parse_field<int>(v[5], "disc_rate_pct");
    r.factors.perc_neg_pct = parse_field<int>(v[6], "perc_neg_pct");
    r.factors.cp_mult = parse_field<double>(v[7], "cp_mult");
    r.factors.edges = parse_field<int>(v[8], "edges");
    auto algorithm = parse_algorithm(v[9]);
    auto direction = parse_direction(v[10]);
    if (!algorithm || !direction) {
      throw Error(ErrorKind::kBadInstance, "unknown algorithm or direction: " + line);
    }
    r.algorithm = *algorithm;
    r.direction = *direction;
    r.npv = parse_field<double>(v[11], "npv");
    r.comp_cost = parse_field<std::int64_t>(v[12], "comp_cost");
    r.restarted = parse_field<std::int64_t>(v[13], "restarted");
    r.wall_ms = parse_field<double>(v[14], "wall_ms");
    if (extended) {
      r.recursion_or_iteration = parse_field<std::int64_t>(v[15], "recursion_or_iteration");
      r.edge_checked = parse_field<std::int64_t>(v[16], "edge_checked");
      r.raw_restarted = parse_field<std::int64_t>(v[17], "raw_restarted");
      r.status = v[18];
    }
    records.push_back(std::move(r));
  }
  return records;
}

double metric_value(const ExperimentRecord& record, std::string_view metric) {
  if (metric == "comp_cost") return static_cast<double>(record.comp_cost);
  if (metric == "restarted") return static_cast<double>(record.restarted);
  if (metric == "wall_ms") return record.wall_ms;
  if (metric == "npv") return record.npv;
  throw Error(ErrorKind::kUnknownFactor, "unknown metric " + std::string(metric));
}

std::vector<double> metric_values(const std::vector<ExperimentRecord>& records,
                                  Algorithm algorithm, std::string_view metric) {
  std::vector<double> values;
  for (const ExperimentRecord& r : records) {
    if (r.ok() && r.algorithm == algorithm) values.push_back(metric_value(r, metric));
  }
  return values;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = p * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

SixNumberSummary summarize(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("summary of an empty sample");
  SixNumberSummary s;
  s.count = values.size();
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  return s;
}

std::map<Algorithm, SixNumberSummary> summarize(
    const std::vector<ExperimentRecord>& records, std::string_view metric) {
  std::map<Algorithm, SixNumberSummary> out;
  for (Algorithm a : {Algorithm::kRsfb, Algorithm::kSaafb, Algorithm::kHs}) {
    auto values = metric_values(records, a, metric);
    if (!values.empty()) out[a] = summarize(values);
  }
  return out;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Theta-function form converges fast for small lambda.
    const double pi = std::numbers::pi;
    const double y = std::exp(-pi * pi / (8.0 * lambda * lambda));
    double sum = 0.0;
    for (int k = 1; k <= 20; ++k) sum += std::pow(y, (2 * k - 1) * (2 * k - 1));
    return std::clamp(1.0 - std::sqrt(2.0 * pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? term : -term);
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("KS needs two nonempty samples");
  std::vector<double> x = a;
  std::vector<double> y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  KsResult r;
  r.d = d;
  r.p = d == 0.0 ? 1.0 : kolmogorov_survival(std::sqrt(na * nb / (na + nb)) * d);
  r.similar = r.p > 0.05;
  return r;
}

std::optional<double> spearman(const std::vector<double>& x,
                               const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("spearman: fewer than two points");
  const auto rx = mid_ranks(x);
  const auto ry = mid_ranks(y);
  const double mean = (static_cast<double>(x.size()) + 1.0) / 2.0;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double factor_value(const FactorAssignment& f, std::string_view factor) {
  if (factor == "vertices") return f.vertices;
  if (factor == "layers") return f.layers;
  if (factor == "maxDegree") return f.max_degree;
  if (factor == "discRate") return f.disc_rate_pct;
  if (factor == "percNeg") return f.perc_neg_pct;
  if (factor == "cpMult") return f.cp_mult;
  if (factor == "edges") return f.edges;
  throw Error(ErrorKind::kUnknownFactor, "unknown factor " + std::string(factor));
}

MaxCostSeries max_cost_series(const std::vector<ExperimentRecord>& records,
                              std::string_view factor, std::string_view metric,
                              std::optional<int> perc_neg_cap) {
  MaxCostSeries series;
  series.factor = std::string(factor);
  factor_value(FactorAssignment{}, factor);
  std::map<double, double> best;
  for (const ExperimentRecord& r : records) {
    if (!r.ok()) continue;
    if (perc_neg_cap && r.factors.perc_neg_pct > *perc_neg_cap) continue;
    const double key = factor_value(r.factors, factor);
    const double value = metric_value(r, metric);
    auto [it, inserted] = best.try_emplace(key, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
  series.points.assign(best.begin(), best.end());
  return series;
}

}  // namespace npvsched
