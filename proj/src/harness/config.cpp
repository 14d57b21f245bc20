#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

#include "arbmatch/experiment.hpp"
#include "arbmatch/vertex_sampling.hpp"
#include "text_lines.hpp"

namespace arbmatch {

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 4> kGenerators{{
    {GeneratorKind::Forests, "forests"},
    {GeneratorKind::Stars, "stars"},
    {GeneratorKind::Tree, "tree"},
    {GeneratorKind::Empty, "empty"},
}};

constexpr std::array<std::pair<EstimatorKind, std::string_view>, 5> kEstimators{{
    {EstimatorKind::Logspace, "logspace"},
    {EstimatorKind::Alg4, "alg4"},
    {EstimatorKind::Alg2, "alg2"},
    {EstimatorKind::Alg1, "alg1"},
    {EstimatorKind::Dynamic, "dynamic"},
}};

template <typename Table, typename Kind>
std::string_view name_of(const Table& table, Kind kind) {
  for (const auto& [k, name] : table) {
    if (k == kind) return name;
  }
  return "unknown";
}

template <typename Table>
auto kind_of(const Table& table, std::string_view name)
    -> std::optional<std::remove_cvref_t<decltype(table[0].first)>> {
  for (const auto& [k, known] : table) {
    if (known == name) return k;
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) { return name_of(kGenerators, kind); }
std::string_view to_string(EstimatorKind kind) { return name_of(kEstimators, kind); }
std::optional<GeneratorKind> parse_generator_kind(std::string_view name) { return kind_of(kGenerators, name); }
std::optional<EstimatorKind> parse_estimator_kind(std::string_view name) { return kind_of(kEstimators, name); }

Graph GeneratorSpec::generate(std::size_t trial) const {
  const std::uint64_t seed = seed_start + trial;
  switch (kind) {
    case GeneratorKind::Forests:
      return generate_union_of_forests(n, c, seed);
    case GeneratorKind::Stars:
      return generate_star_forest(k, s);
    case GeneratorKind::Tree:
      return generate_random_tree(n, seed);
    case GeneratorKind::Empty:
      return Graph(n, {}, c);
  }
  return {};
}

unsigned GeneratorSpec::arboricity() const {
  switch (kind) {
    case GeneratorKind::Forests:
    case GeneratorKind::Empty:
      return c;
    case GeneratorKind::Stars:
    case GeneratorKind::Tree:
      return 1;
  }
  return c;
}

std::size_t ExperimentConfig::mu() const {
  return estimator.mu.value_or(2 * static_cast<std::size_t>(generator.arboricity()) + 1);
}

double ExperimentConfig::alpha() const { return estimator.alpha.value_or(6.0 * generator.arboricity()); }

void ExperimentConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  const auto& gen = generator;
  if (gen.c < 1) throw ConfigError("c must be >= 1");
  switch (gen.kind) {
    case GeneratorKind::Forests:
    case GeneratorKind::Tree:
      if (gen.n < 2) throw ConfigError("n must be >= 2");
      break;
    case GeneratorKind::Stars:
      if (gen.k < 1 || gen.s < 1) throw ConfigError("k and s must be >= 1");
      break;
    case GeneratorKind::Empty:
      break;
  }
  const unsigned c = gen.arboricity();
  if (!(estimator.epsilon > 0.0 && estimator.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  switch (estimator.kind) {
    case EstimatorKind::Alg1:
    case EstimatorKind::Alg2:
    case EstimatorKind::Dynamic:
      if (mu() <= 2 * static_cast<std::size_t>(c)) {
        throw ConfigError("mu must exceed 2c (mu=" + std::to_string(mu()) + ", c=" + std::to_string(c) + ")");
      }
      break;
    case EstimatorKind::Alg4:
      if (alpha() < 1.0) throw ConfigError("alpha must be >= 1");
      break;
    case EstimatorKind::Logspace:
      break;
  }
  if (estimator.p && !(*estimator.p > 0.0 && *estimator.p <= 1.0)) throw ConfigError("p must lie in (0, 1]");
  if (!(estimator.delete_fraction >= 0.0 && estimator.delete_fraction <= 1.0)) {
    throw ConfigError("delete_fraction must lie in [0, 1]");
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  detail::LineReader reader(text);
  std::string_view raw;
  while (reader.next(raw)) {
    auto line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(reader.line_number()) + ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto& gen = config.generator;
    auto& est = config.estimator;
    if (key == "generator") {
      auto kind = parse_generator_kind(value);
      if (!kind) throw ConfigError("unknown generator '" + std::string(value) + "'");
      gen.kind = *kind;
    } else if (key == "estimator") {
      auto kind = parse_estimator_kind(value);
      if (!kind) throw ConfigError("unknown estimator '" + std::string(value) + "'");
      est.kind = *kind;
    } else if (key == "ordering") {
      auto policy = parse_ordering(value);
      if (!policy) throw ConfigError("unknown ordering '" + std::string(value) + "'");
      config.ordering = *policy;
    } else if (key == "n") {
      gen.n = number<std::size_t>(key, value);
    } else if (key == "c") {
      gen.c = number<unsigned>(key, value);
    } else if (key == "k") {
      gen.k = number<std::size_t>(key, value);
    } else if (key == "s") {
      gen.s = number<std::size_t>(key, value);
    } else if (key == "seed_start") {
      gen.seed_start = number<std::uint64_t>(key, value);
    } else if (key == "seed") {
      config.seed = number<std::uint64_t>(key, value);
    } else if (key == "trials") {
      config.trials = number<std::size_t>(key, value);
    } else if (key == "workers") {
      config.workers = number<std::size_t>(key, value);
    } else if (key == "mu") {
      est.mu = number<std::size_t>(key, value);
    } else if (key == "alpha") {
      est.alpha = number<double>(key, value);
    } else if (key == "p") {
      est.p = number<double>(key, value);
    } else if (key == "epsilon") {
      est.epsilon = number<double>(key, value);
    } else if (key == "delete_fraction") {
      est.delete_fraction = number<double>(key, value);
    } else if (key == "output") {
      config.output = std::string(value);
    } else {
      throw ConfigError("unknown key '" + std::string(key) + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace arbmatch
