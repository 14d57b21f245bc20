#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arbmatch/graph.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch {

/// Exact offline quantities relating degree structure to matching size.
///
/// G_L is the subgraph induced by vertices of degree <= mu.
struct CharacterizationReport {
  std::size_t m_star = 0;  // maximum matching of G
  std::size_t h_mu = 0;    // vertices with degree > mu
  std::size_t s_mu = 0;    // edges of G_L
  std::size_t m_mu = 0;    // maximum matching of G_L
  std::size_t n_l = 0;     // non-isolated vertices of G_L
  std::optional<std::size_t> e_alpha;
  std::size_t mu = 0;
  std::optional<double> alpha;
};

/// Fills every field except e_alpha/alpha. Requires mu >= 1.
CharacterizationReport characterize(const Graph& g, std::size_t mu);

/// 1-based stream positions i whose edge (u,v) has at most `alpha` edges
/// incident to u, and at most `alpha` incident to v, strictly after i.
/// Throws HasDeletions.
std::vector<std::size_t> offline_alpha_good_set(const EdgeStream& stream, double alpha);

}  // namespace arbmatch
