#include "arbmatch/vertex_sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arbmatch/random.hpp"

namespace arbmatch {

double approximation_factor(std::size_t mu, unsigned c) {
  if (mu <= 2 * static_cast<std::size_t>(c)) {
    throw std::invalid_argument("mu must exceed 2c (mu=" + std::to_string(mu) +
                                ", c=" + std::to_string(c) + ")");
  }
  const auto m = static_cast<double>(mu);
  return m * (2.0 * m / (m - 2.0 * c + 1.0) + 1.0);
}

void VertexSampleParams::validate() const {
  if (c < 1) throw std::invalid_argument("c must be >= 1");
  approximation_factor(mu, c);
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

VertexSampleEstimator::VertexSampleEstimator(std::size_t n, const VertexSampleParams& params,
                                             std::uint64_t seed)
    : params_(params), sampled_(n, 0) {
  params_.validate();
  for (Vertex v = 0; v < n; ++v) {
    if (unit_interval(split_seed(seed, v)) < params_.p) {
      sampled_[v] = 1;
      ++sample_size_;
    }
  }
}

void VertexSampleEstimator::attach(Vertex x, Vertex other) {
  auto [it, fresh] = counters_.try_emplace(x, 0);
  ++it->second;
  if (in_sample(x)) {
    stored_neighbors_[x].push_back(other);
  } else if (fresh) {
    ++lower_bound_counters_;
  }
}

void VertexSampleEstimator::detach(Vertex x, Vertex other) {
  auto it = counters_.find(x);
  if (it == counters_.end()) return;
  if (--it->second == 0) {
    counters_.erase(it);
    if (!in_sample(x)) --lower_bound_counters_;
  }
  if (in_sample(x)) {
    auto list = stored_neighbors_.find(x);
    auto& nbrs = list->second;
    auto pos = std::find(nbrs.begin(), nbrs.end(), other);
    *pos = nbrs.back();
    nbrs.pop_back();
    if (nbrs.empty()) stored_neighbors_.erase(list);
  }
}

void VertexSampleEstimator::feed(const StreamEvent& event) {
  const Vertex u = event.u, v = event.v;
  if (!in_sample(u) && !in_sample(v)) return;
  if (event.is_insert()) {
    ++stored_edges_;
    attach(u, v);
    attach(v, u);
  } else {
    // Every live edge with a sampled endpoint was stored on insert.
    --stored_edges_;
    detach(u, v);
    detach(v, u);
  }
}

std::optional<std::size_t> VertexSampleEstimator::counter(Vertex v) const {
  auto it = counters_.find(v);
  if (it == counters_.end()) return std::nullopt;
  return it->second;
}

double VertexSampleEstimator::result() const {
  const std::size_t mu = params_.mu;
  std::size_t low_with_low_neighbor = 0;  // |S1|
  std::size_t high = 0;                   // |S2|
  for (const auto& [v, nbrs] : stored_neighbors_) {
    const std::size_t d = counters_.at(v);
    if (d > mu) {
      ++high;
      continue;
    }
    const bool has_low_neighbor = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) {
      return counters_.at(w) <= mu;
    });
    if (has_low_neighbor) ++low_with_low_neighbor;
  }
  return static_cast<double>(low_with_low_neighbor + high) / params_.p;
}

Estimate alg1_estimate(const EdgeStream& stream, const VertexSampleParams& params, std::uint64_t seed) {
  stream.require_insert_only();
  VertexSampleEstimator estimator(stream.n(), params, seed);
  SpaceMeter meter;
  meter.observe(estimator.items());
  for (const auto& ev : stream) {
    estimator.feed(ev);
    meter.observe(estimator.items());
  }
  Estimate out;
  out.algorithm = "alg1";
  out.value = estimator.result();
  out.space_peak = meter.peak();
  out.seed = seed;
  out.params = {{"mu", static_cast<double>(params.mu)},
                {"p", params.p},
                {"c", static_cast<double>(params.c)},
                {"epsilon", params.epsilon},
                {"beta", params.beta()}};
  return out;
}

}  // namespace arbmatch
