#pragma once

// Test-only reference computations. Each is a direct, slow restatement of a
// definition and shares no code path with the library routine it checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "arbmatch/graph.hpp"
#include "arbmatch/random.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch::oracle {

/// Quadratic scan of the later-neighbor definition of an alpha-good edge.
inline std::vector<std::size_t> alpha_good_positions(const std::vector<Edge>& order, double alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t at_u = 0, at_v = 0;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[j].touches(order[i].u)) ++at_u;
      if (order[j].touches(order[i].v)) ++at_v;
    }
    if (static_cast<double>(std::max(at_u, at_v)) <= alpha) out.push_back(i + 1);
  }
  return out;
}

inline std::vector<Edge> edges_of(const EdgeStream& s) {
  std::vector<Edge> out;
  for (const auto& ev : s) out.push_back(ev.edge());
  return out;
}

/// Degree of every vertex, counted straight from the edge list.
inline std::vector<std::size_t> degrees(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> d(n, 0);
  for (const auto& e : edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

/// Maximum matching by dynamic programming over vertex subsets (n <= 20):
/// the lowest vertex of a subset is either left free or matched to one of
/// its neighbors inside the subset.
inline std::size_t matching_by_subset_dp(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : edges) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  std::vector<std::uint8_t> best(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    std::uint8_t value = best[rest];
    for (std::uint32_t cand = nbr[v] & rest; cand; cand &= cand - 1) {
      const int w = __builtin_ctz(cand);
      value = std::max<std::uint8_t>(value, static_cast<std::uint8_t>(1 + best[rest & ~(1u << w)]));
    }
    best[mask] = value;
  }
  return best[full];
}

/// Offline value of the vertex-sampling estimator from the final edge set:
/// d(v) = deg(v) for sampled v, l(w) = number of sampled neighbors of w.
inline double vertex_sample_value(std::size_t n, const std::vector<Edge>& edges, std::size_t mu,
                                  double p, std::uint64_t seed) {
  std::vector<bool> in_s(n);
  for (Vertex v = 0; v < n; ++v) in_s[v] = unit_interval(split_seed(seed, v)) < p;
  const auto deg = degrees(n, edges);
  std::vector<std::size_t> sampled_nbrs(n, 0);
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    if (in_s[e.u]) ++sampled_nbrs[e.v];
    if (in_s[e.v]) ++sampled_nbrs[e.u];
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto counter = [&](Vertex w) { return in_s[w] ? deg[w] : sampled_nbrs[w]; };
  std::size_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_s[v] || deg[v] == 0) continue;
    if (deg[v] > mu) {
      ++count;
      continue;
    }
    for (Vertex w : adj[v]) {
      if (counter(w) <= mu) {
        ++count;
        break;
      }
    }
  }
  return static_cast<double>(count) / p;
}

inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return build_graph(10, e);
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e, 1u);
}

inline Graph star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e, 1u);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

/// Random simple graph on n vertices keeping each pair with probability q.
inline Graph random_graph(std::size_t n, double q, Rng& rng) {
  std::bernoulli_distribution keep(q);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (keep(rng)) e.emplace_back(i, j);
  return build_graph(n, e);
}

}  // namespace arbmatch::oracle
