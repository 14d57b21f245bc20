#include "arbmatch/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "arbmatch/generators.hpp"
#include "arbmatch/random.hpp"

namespace arbmatch {

namespace {

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace

std::size_t greedy_cutoff(std::size_t n, unsigned c, double beta, double epsilon) {
  const double nc = static_cast<double>(n) * c;
  return static_cast<std::size_t>(std::ceil(beta * std::sqrt(8.0 * nc) / epsilon));
}

std::size_t dynamic_cutoff(std::size_t n, unsigned c, double beta, double epsilon) {
  const double nc = static_cast<double>(n) * c;
  return static_cast<std::size_t>(std::ceil(std::cbrt(8.0 * beta * nc / (epsilon * epsilon))));
}

double sampling_rate(double beta, double epsilon, std::size_t cutoff) {
  const double lambda = epsilon / beta;
  return std::min(1.0, 8.0 / (lambda * lambda * static_cast<double>(std::max<std::size_t>(cutoff, 1))));
}

Estimate alg2_estimate(const EdgeStream& stream, unsigned c, std::size_t mu, double epsilon,
                       std::uint64_t seed) {
  stream.require_insert_only();
  require_epsilon(epsilon);
  const double beta = approximation_factor(mu, c);
  const std::size_t t = greedy_cutoff(stream.n(), c, beta, epsilon);
  const VertexSampleParams params{mu, sampling_rate(beta, epsilon, t), c, epsilon};

  BoundedGreedyMatching greedy(t);
  VertexSampleEstimator sampler(stream.n(), params, seed);
  SpaceMeter meter;
  meter.observe(greedy.items() + sampler.items());
  for (const auto& ev : stream) {
    greedy.feed(ev.edge());
    sampler.feed(ev);
    meter.observe(greedy.items() + sampler.items());
  }

  const bool greedy_wins = !greedy.terminated() && greedy.size() < t;
  Estimate out;
  out.algorithm = "alg2";
  out.value = greedy_wins ? 2.0 * static_cast<double>(greedy.size()) : sampler.result();
  out.space_peak = meter.peak();
  out.seed = seed;
  out.params = {{"c", static_cast<double>(c)},
                {"mu", static_cast<double>(mu)},
                {"epsilon", epsilon},
                {"beta", beta},
                {"t", static_cast<double>(t)},
                {"p", params.p},
                {"greedy", greedy_wins ? 1.0 : 0.0}};
  return out;
}

Estimate estimate_matching_logspace(const EdgeStream& stream, unsigned c, double epsilon,
                                    std::uint64_t seed) {
  const double alpha = 6.0 * c;
  Estimate out;
  std::size_t peak = 0;
  int attempt = 0;
  for (; attempt <= kLogspaceRetries; ++attempt) {
    const std::uint64_t run_seed = attempt == 0 ? seed : split_seed(seed, attempt);
    out = alg4_estimate_e_alpha(stream, alpha, c, epsilon, run_seed);
    peak = std::max(peak, out.space_peak);
    if (!out.failed()) break;
  }
  out.algorithm = "logspace";
  if (out.value) *out.value *= 3.0;
  out.space_peak = peak;
  out.seed = seed;
  out.params.emplace_back("attempts", static_cast<double>(std::min(attempt + 1, kLogspaceRetries + 1)));
  return out;
}

Estimate dynamic_estimate(const EdgeStream& stream, unsigned c, std::size_t mu, double epsilon,
                          std::uint64_t seed) {
  require_epsilon(epsilon);
  const std::size_t budget = stream_length_budget(stream.n(), c);
  if (stream.size() > budget) {
    throw BudgetExceeded("stream of " + std::to_string(stream.size()) + " events exceeds budget " +
                         std::to_string(budget));
  }
  const double beta = approximation_factor(mu, c);
  const std::size_t t = dynamic_cutoff(stream.n(), c, beta, epsilon);
  const VertexSampleParams params{mu, sampling_rate(beta, epsilon, t), c, epsilon};

  SampledDynamicMatching greedy(t, 4 * t * t, split_seed(seed, 0x6d61746368ULL));
  VertexSampleEstimator sampler(stream.n(), params, seed);
  SpaceMeter meter;
  meter.observe(greedy.items() + sampler.items());
  for (const auto& ev : stream) {
    greedy.feed(ev);
    sampler.feed(ev);
    meter.observe(greedy.items() + sampler.items());
  }

  const bool greedy_wins = !greedy.saturated() && greedy.size() < t;
  Estimate out;
  out.algorithm = "dynamic";
  out.value = greedy_wins ? 2.0 * static_cast<double>(greedy.size()) : sampler.result();
  out.space_peak = meter.peak();
  out.seed = seed;
  out.params = {{"c", static_cast<double>(c)},
                {"mu", static_cast<double>(mu)},
                {"epsilon", epsilon},
                {"beta", beta},
                {"t", static_cast<double>(t)},
                {"p", params.p},
                {"sample_capacity", static_cast<double>(4 * t * t)},
                {"greedy", greedy_wins ? 1.0 : 0.0}};
  return out;
}

}  // namespace arbmatch
