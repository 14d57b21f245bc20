#include "arbmatch/level_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arbmatch/random.hpp"

namespace arbmatch {

namespace {

double log_n(std::size_t n) { return std::log(static_cast<double>(std::max<std::size_t>(n, 1))); }

}  // namespace

double LevelSamplingParams::tau(std::size_t n) const {
  if (tau_override) return *tau_override;
  return 64.0 * alpha * alpha * log_n(n) / (static_cast<double>(c) * epsilon * epsilon);
}

double LevelSamplingParams::tau_prime(std::size_t n) const {
  if (tau_prime_override) return *tau_prime_override;
  return 8.0 * log_n(n) / (epsilon * epsilon);
}

std::size_t LevelSamplingParams::level_count(std::size_t n) const {
  const double scale = static_cast<double>(c) * static_cast<double>(n);
  if (scale <= 1.0) return 1;
  // The small slack keeps exact powers of (1+eps) from rounding up a level.
  return static_cast<std::size_t>(std::ceil(std::log(scale) / std::log1p(epsilon) - 1e-9)) + 1;
}

void LevelSamplingParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  if (c < 1) throw std::invalid_argument("c must be >= 1");
}

double level_coin(std::uint64_t seed, std::size_t level, std::size_t position) {
  return unit_interval(split_seed(seed, level, position));
}

LevelSampler::LevelSampler(std::size_t n, const LevelSamplingParams& params, std::uint64_t seed)
    : params_(params), seed_(seed) {
  params_.validate();
  tau_ = params_.tau(n);
  tau_prime_ = params_.tau_prime(n);
  const std::size_t count = params_.level_count(n);
  levels_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    levels_[i].index = i;
    levels_[i].p = std::pow(1.0 + params_.epsilon, -static_cast<double>(i));
  }
}

void LevelSampler::drop_test(LevelState& level, std::size_t position) {
  auto it = level.tests.find(position);
  for (Vertex x : {it->second.edge.u, it->second.edge.v}) {
    auto list = level.by_vertex.find(x);
    auto& ids = list->second;
    *std::find(ids.begin(), ids.end(), position) = ids.back();
    ids.pop_back();
    if (ids.empty()) level.by_vertex.erase(list);
  }
  level.tests.erase(it);
}

void LevelSampler::feed_level(LevelState& level, const StreamEvent& event) {
  // Existing tests see the event before the event itself may be sampled.
  std::vector<std::size_t> failed;
  for (Vertex x : {event.u, event.v}) {
    auto list = level.by_vertex.find(x);
    if (list == level.by_vertex.end()) continue;
    for (std::size_t id : list->second) {
      auto& test = level.tests.at(id);
      test.feed(event);
      if (!test.active()) failed.push_back(id);
    }
  }
  for (std::size_t id : failed) drop_test(level, id);

  if (level_coin(seed_, level.index, position_) < level.p) {
    level.tests.emplace(position_, AlphaGoodTest(event.edge(), params_.alpha));
    level.by_vertex[event.u].push_back(position_);
    level.by_vertex[event.v].push_back(position_);
  }

  if (static_cast<double>(level.tests.size()) > tau_) {
    level.terminated = true;
    level.tests.clear();
    level.by_vertex.clear();
  }
}

void LevelSampler::feed(const StreamEvent& event) {
  if (!event.is_insert()) throw HasDeletions();
  ++position_;
  for (auto& level : levels_) {
    if (!level.terminated) feed_level(level, event);
  }
}

std::optional<double> LevelSampler::result() const {
  const auto& base = levels_.front();
  if (!base.terminated && static_cast<double>(base.live()) <= tau_) {
    return static_cast<double>(base.live());
  }
  const double threshold = tau_prime_ * (1.0 + params_.epsilon);
  for (const auto& level : levels_) {
    if (level.terminated || static_cast<double>(level.live()) > threshold) continue;
    return static_cast<double>(level.live()) / level.p;
  }
  return std::nullopt;
}

std::size_t LevelSampler::items() const {
  std::size_t total = 0;
  for (const auto& level : levels_) {
    if (!level.terminated) total += 3 * level.live();
  }
  return total;
}

std::vector<std::size_t> LevelSampler::survivors(std::size_t level) const {
  std::vector<std::size_t> out;
  out.reserve(levels_.at(level).tests.size());
  for (const auto& [position, test] : levels_[level].tests) out.push_back(position);
  std::sort(out.begin(), out.end());
  return out;
}

Estimate alg4_estimate_e_alpha(const EdgeStream& stream, const LevelSamplingParams& params,
                               std::uint64_t seed) {
  stream.require_insert_only();
  LevelSampler sampler(stream.n(), params, seed);
  SpaceMeter meter;
  for (const auto& ev : stream) {
    sampler.feed(ev);
    meter.observe(sampler.items());
  }
  Estimate out;
  out.algorithm = "alg4";
  out.value = sampler.result();
  out.space_peak = meter.peak();
  out.seed = seed;
  out.params = {{"alpha", params.alpha},
                {"c", static_cast<double>(params.c)},
                {"epsilon", params.epsilon},
                {"tau", sampler.tau()},
                {"tau_prime", sampler.tau_prime()},
                {"levels", static_cast<double>(sampler.levels().size())}};
  return out;
}

Estimate alg4_estimate_e_alpha(const EdgeStream& stream, double alpha, unsigned c, double epsilon,
                               std::uint64_t seed) {
  LevelSamplingParams params;
  params.alpha = alpha;
  params.c = c;
  params.epsilon = epsilon;
  return alg4_estimate_e_alpha(stream, params, seed);
}

}  // namespace arbmatch
