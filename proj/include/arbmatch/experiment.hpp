#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arbmatch/generators.hpp"
#include "arbmatch/graph.hpp"

namespace arbmatch {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GeneratorKind { Forests, Stars, Tree, Empty };
enum class EstimatorKind { Logspace, Alg4, Alg2, Alg1, Dynamic };

std::string_view to_string(GeneratorKind kind);
std::string_view to_string(EstimatorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);
std::optional<EstimatorKind> parse_estimator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Forests;
  std::size_t n = 100;
  unsigned c = 1;
  std::size_t k = 10;  // stars
  std::size_t s = 5;   // leaves per star
  std::uint64_t seed_start = 1;

  /// Graph for trial `trial`, drawn with seed seed_start + trial.
  Graph generate(std::size_t trial) const;
  /// Arboricity bound carried by the generated graphs.
  unsigned arboricity() const;
};

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::Logspace;
  std::optional<std::size_t> mu;    // default 2c+1
  std::optional<double> alpha;      // default 6c
  std::optional<double> p;          // alg1 only; default 1
  double epsilon = 0.5;
  double delete_fraction = 0.0;     // dynamic only
};

struct ExperimentConfig {
  GeneratorSpec generator;
  OrderingPolicy ordering = OrderingPolicy::UniformRandom;
  EstimatorSpec estimator;
  std::size_t trials = 1;
  std::uint64_t seed = 1;  // master seed for orderings and estimator coins
  std::size_t workers = 1;
  std::string output;

  std::size_t mu() const;
  double alpha() const;
  /// Throws ConfigError on an invalid parameter combination.
  void validate() const;
};

/// Flat `key = value` text; '#' starts a comment. Unknown keys are errors.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::optional<double> value;
  std::size_t m_star = 0;
  std::optional<double> ratio;  // present iff m_star > 0 and not fail
  std::size_t space_peak = 0;
  bool fail = false;
  double ms = 0.0;
};

/// One record per trial, in trial order. `on_record` sees each record as soon
/// as all earlier trials have finished, so a CSV writer can stream them.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config,
                                        const std::function<void(const TrialRecord&)>& on_record = {});

// CSV with header `seed,value,m_star,ratio,space_peak,fail,ms`.
inline constexpr std::string_view kCsvHeader = "seed,value,m_star,ratio,space_peak,fail,ms";
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const TrialRecord& record);
/// Throws IoError if the file cannot be written.
void emit_csv(const std::vector<TrialRecord>& records, const std::string& path);
/// Throws ParseError on malformed rows.
std::vector<TrialRecord> parse_csv(std::string_view text);

/// Shortest round-trip decimal; integral values print without a fraction.
std::string format_number(double value);
/// Like format_number but always carries a decimal point ("3.0").
std::string format_ratio(double value);

struct RatioSummary {
  std::size_t trials = 0;
  std::size_t fails = 0;
  std::size_t with_ratio = 0;
  double min = 0, median = 0, max = 0;
  std::optional<double> lower_bound, upper_bound;
  double success_fraction = 0;  // share of ratio-bearing trials inside the bounds
};

/// Ratio bounds promised for the configured estimator, if any.
std::pair<std::optional<double>, std::optional<double>> ratio_bounds(const ExperimentConfig& config);
RatioSummary summarize(const ExperimentConfig& config, const std::vector<TrialRecord>& records);

}  // namespace arbmatch
