#pragma once

#include <cstddef>
#include <cstdint>

#include "arbmatch/bounded_matching.hpp"
#include "arbmatch/estimate.hpp"
#include "arbmatch/level_sampling.hpp"
#include "arbmatch/stream.hpp"
#include "arbmatch/vertex_sampling.hpp"

namespace arbmatch {

/// Greedy cutoff for insert-only streams: ceil(beta * sqrt(8 n c) / eps).
std::size_t greedy_cutoff(std::size_t n, unsigned c, double beta, double epsilon);
/// Greedy cutoff for dynamic streams: ceil((8 beta n c / eps^2)^(1/3)).
std::size_t dynamic_cutoff(std::size_t n, unsigned c, double beta, double epsilon);
/// Vertex sampling rate min(1, 8 / (lambda^2 t)) with lambda = eps / beta.
double sampling_rate(double beta, double epsilon, std::size_t cutoff);

/// Insert-only matching-size estimate: a bounded greedy matching and the
/// vertex-sampling estimator run side by side; returns 2r when the greedy
/// matching stays below its cutoff t, the sampling estimate otherwise.
Estimate alg2_estimate(const EdgeStream& stream, unsigned c, std::size_t mu, double epsilon,
                       std::uint64_t seed);

inline constexpr int kLogspaceRetries = 3;

/// 3 * (estimate of |E_{6c}|). A Fail is retried with up to kLogspaceRetries
/// fresh seeds before it is reported.
Estimate estimate_matching_logspace(const EdgeStream& stream, unsigned c, double epsilon,
                                    std::uint64_t seed);

/// Matching-size estimate for streams with deletions. Same structure as
/// alg2_estimate with the dynamic cutoff; the greedy side runs on a
/// 4t^2-edge sample. Throws BudgetExceeded if the stream is longer than 4cn.
Estimate dynamic_estimate(const EdgeStream& stream, unsigned c, std::size_t mu, double epsilon,
                          std::uint64_t seed);

}  // namespace arbmatch
