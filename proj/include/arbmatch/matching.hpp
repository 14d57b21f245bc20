#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arbmatch/graph.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch {

inline constexpr Vertex kUnmatched = static_cast<Vertex>(-1);

struct BlossomOptions {
  // Seed the search with a degree-one-first greedy matching.
  bool heuristic_start = true;
  // Drop every vertex of a failed alternating tree from later searches.
  bool prune_failed_trees = true;
};

/// Maximum-cardinality matching of a general graph via Edmonds' augmenting
/// paths with blossom contraction. Returns mate[v] (kUnmatched if free).
std::vector<Vertex> maximum_matching(const Graph& g, const BlossomOptions& options = {});

std::size_t maximum_matching_size(const Graph& g, const BlossomOptions& options = {});

/// True when `mate` is symmetric and every matched pair is an edge of g.
bool is_valid_matching(const Graph& g, const std::vector<Vertex>& mate);

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kBruteForceEdgeCap = 24;

/// Exhaustive search over edge subsets. Only usable for m <= kBruteForceEdgeCap.
std::size_t brute_force_matching_size(const Graph& g);

/// Size of the matching that admits each arriving edge whose endpoints are
/// both free. Throws HasDeletions on a dynamic stream.
std::size_t greedy_maximal_matching(const EdgeStream& stream);

}  // namespace arbmatch
