#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "arbmatch/estimators.hpp"
#include "arbmatch/experiment.hpp"
#include "arbmatch/matching.hpp"
#include "arbmatch/random.hpp"

namespace arbmatch {

namespace {

// Child-seed slots under the master seed.
constexpr std::uint64_t kOrderingStream = 1;
constexpr std::uint64_t kEstimatorStream = 2;

TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial) {
  const Graph g = config.generator.generate(trial);
  const unsigned c = config.generator.arboricity();
  const auto& est = config.estimator;
  const std::uint64_t order_seed = split_seed(config.seed, trial, kOrderingStream);
  const std::uint64_t coin_seed = split_seed(config.seed, trial, kEstimatorStream);

  const EdgeStream stream = est.kind == EstimatorKind::Dynamic
                                ? generate_dynamic_stream(g, est.delete_fraction, order_seed)
                                : order_stream(g, config.ordering, order_seed);

  TrialRecord record;
  record.seed = config.generator.seed_start + trial;
  record.m_star = maximum_matching_size(g);

  const auto start = std::chrono::steady_clock::now();
  Estimate e;
  switch (est.kind) {
    case EstimatorKind::Logspace:
      e = estimate_matching_logspace(stream, c, est.epsilon, coin_seed);
      break;
    case EstimatorKind::Alg4:
      e = alg4_estimate_e_alpha(stream, config.alpha(), c, est.epsilon, coin_seed);
      break;
    case EstimatorKind::Alg2:
      e = alg2_estimate(stream, c, config.mu(), est.epsilon, coin_seed);
      break;
    case EstimatorKind::Alg1:
      e = alg1_estimate(stream, VertexSampleParams{config.mu(), est.p.value_or(1.0), c, est.epsilon}, coin_seed);
      break;
    case EstimatorKind::Dynamic:
      e = dynamic_estimate(stream, c, config.mu(), est.epsilon, coin_seed);
      break;
  }
  record.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  record.value = e.value;
  record.fail = e.failed();
  record.space_peak = e.space_peak;
  if (record.value && record.m_star > 0) record.ratio = *record.value / static_cast<double>(record.m_star);
  return record;
}

}  // namespace

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config,
                                        const std::function<void(const TrialRecord&)>& on_record) {
  config.validate();
  const std::size_t trials = config.trials;
  std::vector<TrialRecord> records(trials);

  if (config.workers <= 1 || trials == 1) {
    for (std::size_t i = 0; i < trials; ++i) {
      records[i] = run_trial(config, i);
      if (on_record) on_record(records[i]);
    }
    return records;
  }

  std::vector<char> done(trials, 0);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= trials) return;
      TrialRecord r;
      try {
        r = run_trial(config, i);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        records[i] = r;
        done[i] = 1;
      }
      ready.notify_one();
    }
  };

  std::vector<std::jthread> pool;
  const std::size_t count = std::min(config.workers, trials);
  for (std::size_t w = 0; w < count; ++w) pool.emplace_back(worker);

  // Single writer: hand records out strictly in trial order.
  for (std::size_t emitted = 0; emitted < trials; ++emitted) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return done[emitted] != 0; });
    if (failure) break;
    const TrialRecord r = records[emitted];
    lock.unlock();
    if (on_record) on_record(r);
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::pair<std::optional<double>, std::optional<double>> ratio_bounds(const ExperimentConfig& config) {
  const double eps = config.estimator.epsilon;
  const unsigned c = config.generator.arboricity();
  switch (config.estimator.kind) {
    case EstimatorKind::Logspace:
      return {1.0 - 3.0 * eps, (22.5 * c + 6.0) * (1.0 + 3.0 * eps)};
    case EstimatorKind::Alg1:
    case EstimatorKind::Alg2:
    case EstimatorKind::Dynamic:
      return {1.0 - eps, (1.0 + eps) * approximation_factor(config.mu(), c)};
    case EstimatorKind::Alg4:
      break;
  }
  return {std::nullopt, std::nullopt};
}

RatioSummary summarize(const ExperimentConfig& config, const std::vector<TrialRecord>& records) {
  RatioSummary s;
  s.trials = records.size();
  std::tie(s.lower_bound, s.upper_bound) = ratio_bounds(config);
  std::vector<double> ratios;
  std::size_t inside = 0;
  for (const auto& r : records) {
    if (r.fail) ++s.fails;
    if (!r.ratio) continue;
    ratios.push_back(*r.ratio);
    const bool ok = (!s.lower_bound || *r.ratio >= *s.lower_bound) && (!s.upper_bound || *r.ratio <= *s.upper_bound);
    if (ok) ++inside;
  }
  s.with_ratio = ratios.size();
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    s.min = ratios.front();
    s.max = ratios.back();
    const std::size_t mid = ratios.size() / 2;
    s.median = ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
    s.success_fraction = static_cast<double>(inside) / static_cast<double>(ratios.size());
  }
  return s;
}

}  // namespace arbmatch
