#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "arbmatch/estimate.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch {

/// beta = mu * (2 mu / (mu - 2c + 1) + 1); requires mu > 2c.
double approximation_factor(std::size_t mu, unsigned c);

struct VertexSampleParams {
  std::size_t mu = 3;
  double p = 1.0;
  unsigned c = 1;
  double epsilon = 0.5;

  double beta() const { return approximation_factor(mu, c); }
  double lambda() const { return epsilon / beta(); }
  /// Throws std::invalid_argument unless mu > 2c, 0 < p <= 1 and epsilon > 0.
  void validate() const;
};

/// One-pass estimator of M_mu + h_mu by vertex sampling.
///
/// Every vertex joins the sample S independently with probability p. An edge
/// with an endpoint in S is stored; a sampled endpoint bumps its degree
/// counter d, an unsampled one its lower-bound counter l. Deletions undo the
/// insert, and an unsampled vertex whose last stored edge disappears is
/// dropped from the neighborhood of S.
///
/// result() = (|S1| + |S2|) / p, where S2 holds the sampled vertices with
/// d > mu and S1 the sampled vertices with d <= mu having a stored neighbor
/// whose counter is <= mu.
class VertexSampleEstimator {
 public:
  VertexSampleEstimator(std::size_t n, const VertexSampleParams& params, std::uint64_t seed);

  void feed(const StreamEvent& event);
  double result() const;

  bool in_sample(Vertex v) const { return sampled_[v] != 0; }
  /// d(v) for sampled v, l(v) for a vertex in the neighborhood of S.
  std::optional<std::size_t> counter(Vertex v) const;
  std::size_t sample_size() const { return sample_size_; }
  std::size_t stored_edges() const { return stored_edges_; }
  std::size_t neighborhood_size() const { return lower_bound_counters_; }
  /// |S| + |H| + |neighborhood counters|.
  std::size_t items() const { return sample_size_ + stored_edges_ + lower_bound_counters_; }
  const VertexSampleParams& params() const { return params_; }

 private:
  void attach(Vertex x, Vertex other);
  void detach(Vertex x, Vertex other);

  VertexSampleParams params_;
  std::vector<char> sampled_;
  std::size_t sample_size_ = 0;
  std::unordered_map<Vertex, std::size_t> counters_;
  std::unordered_map<Vertex, std::vector<Vertex>> stored_neighbors_;  // keyed by sampled vertices
  std::size_t stored_edges_ = 0;
  std::size_t lower_bound_counters_ = 0;
};

/// Runs VertexSampleEstimator over an insert-only stream.
Estimate alg1_estimate(const EdgeStream& stream, const VertexSampleParams& params, std::uint64_t seed);

}  // namespace arbmatch
