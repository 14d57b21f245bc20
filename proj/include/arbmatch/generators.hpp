#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arbmatch/graph.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch {

/// Union of c random spanning forests on n vertices. Each forest is grown by
/// random-edge Kruskal and stops at n-1 accepted edges; an edge already drawn
/// by an earlier forest is skipped. c_declared = c.
Graph generate_union_of_forests(std::size_t n, unsigned c, std::uint64_t seed);

/// k disjoint stars with s leaves each. Star j has center j*(s+1) and leaves
/// center+1 .. center+s; edges are listed star by star.
Graph generate_star_forest(std::size_t k, std::size_t s);

/// Uniform random labeled tree via a random Pruefer sequence.
Graph generate_random_tree(std::size_t n, std::uint64_t seed);

/// Standard Pruefer decoding over labels [0, n); `sequence` has n-2 entries.
Graph prufer_decode(std::size_t n, std::span<const Vertex> sequence);

enum class OrderingPolicy { AsGenerated, UniformRandom, StarByStar, LeavesLast, CentersFirst };

std::string_view to_string(OrderingPolicy policy);
std::optional<OrderingPolicy> parse_ordering(std::string_view name);

/// Insert-only stream with each edge of g exactly once.
///
///  - AsGenerated: g.edges() order.
///  - UniformRandom: uniform shuffle driven by `seed`.
///  - StarByStar: repeatedly take the vertex with most remaining edges (ties to
///    the lower id) and emit all of its remaining edges.
///  - CentersFirst: stable sort by max endpoint degree, descending.
///  - LeavesLast: stable sort by min endpoint degree, descending, so edges
///    hanging off low-degree vertices arrive last.
EdgeStream order_stream(const Graph& g, OrderingPolicy policy, std::uint64_t seed);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kStreamBudgetPerVertex = 4;

/// Maximum events allowed in a dynamic stream: 4 * c * n.
constexpr std::size_t stream_length_budget(std::size_t n, unsigned c) {
  return kStreamBudgetPerVertex * static_cast<std::size_t>(c) * n;
}

/// Inserts every edge of g in random order, interleaved with
/// round(delete_fraction * m) decoy edges that are inserted and later
/// deleted. Decoys are pairs outside g chosen so that g plus all decoys keeps
/// degeneracy <= 2c; if such pairs run out, fewer decoys are used.
/// c is g.c_declared(), or degeneracy(g) when unset.
/// Throws BudgetExceeded when the stream would exceed stream_length_budget.
EdgeStream generate_dynamic_stream(const Graph& g, double delete_fraction, std::uint64_t seed);

}  // namespace arbmatch
