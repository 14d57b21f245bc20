#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "arbmatch/alpha_good.hpp"
#include "arbmatch/estimate.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch {

struct LevelSamplingParams {
  double alpha = 6;
  unsigned c = 1;
  double epsilon = 0.5;
  // Test hooks: replace the per-level cap or the selection threshold.
  // An infinite cap keeps every level alive.
  std::optional<double> tau_override;
  std::optional<double> tau_prime_override;

  /// Per-level cap on live tests: 64 alpha^2 ln(n) / (c eps^2).
  double tau(std::size_t n) const;
  /// Selection threshold: 8 ln(n) / eps^2.
  double tau_prime(std::size_t n) const;
  /// Levels 0 .. ceil(log_{1+eps}(c n)).
  std::size_t level_count(std::size_t n) const;
  /// Throws std::invalid_argument unless 0 < eps < 1, alpha >= 1, c >= 1.
  void validate() const;
};

/// Sampling coin for `level` at 1-based stream `position`. Level i keeps the
/// event when the coin is below (1+eps)^-i.
double level_coin(std::uint64_t seed, std::size_t level, std::size_t position);

struct LevelState {
  std::size_t index = 0;
  double p = 1.0;
  bool terminated = false;
  std::unordered_map<std::size_t, AlphaGoodTest> tests;       // live tests by stream position
  std::unordered_map<Vertex, std::vector<std::size_t>> by_vertex;

  std::size_t live() const { return tests.size(); }
};

/// One-pass estimator of the number of alpha-good edges.
///
/// Level i samples each edge with probability (1+eps)^-i and runs an
/// alpha-good test on it; failed tests are dropped and a level whose live
/// test count passes tau is shut down for good. At the end an intact level 0
/// gives |E_alpha| exactly; otherwise the first intact level with at most
/// (1+eps) tau' survivors is scaled up by 1/p_i. No such level means Fail.
class LevelSampler {
 public:
  LevelSampler(std::size_t n, const LevelSamplingParams& params, std::uint64_t seed);

  void feed(const StreamEvent& event);
  std::optional<double> result() const;

  const std::vector<LevelState>& levels() const { return levels_; }
  double tau() const { return tau_; }
  double tau_prime() const { return tau_prime_; }
  std::size_t position() const { return position_; }
  /// 3 items per live test over the intact levels.
  std::size_t items() const;
  /// Sorted stream positions of the live tests at `level`.
  std::vector<std::size_t> survivors(std::size_t level) const;

 private:
  void feed_level(LevelState& level, const StreamEvent& event);
  void drop_test(LevelState& level, std::size_t position);

  LevelSamplingParams params_;
  std::uint64_t seed_;
  double tau_;
  double tau_prime_;
  std::size_t position_ = 0;
  std::vector<LevelState> levels_;
};

/// Estimate of |E_alpha| on an insert-only stream.
Estimate alg4_estimate_e_alpha(const EdgeStream& stream, const LevelSamplingParams& params,
                               std::uint64_t seed);
Estimate alg4_estimate_e_alpha(const EdgeStream& stream, double alpha, unsigned c, double epsilon,
                               std::uint64_t seed);

}  // namespace arbmatch
