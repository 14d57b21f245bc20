#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arbmatch {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  bool touches(Vertex x) const { return u == x || v == x; }
};

/// Normalizes the endpoint order. Does not reject self-loops.
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(e.u) << 32) | e.v);
  }
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { DuplicateEdge, SelfLoop, VertexOutOfRange };

  GraphError(Kind kind, Vertex a, Vertex b);

  Kind kind() const { return kind_; }
  std::pair<Vertex, Vertex> offending() const { return offending_; }

 private:
  Kind kind_;
  std::pair<Vertex, Vertex> offending_;
};

const char* to_string(GraphError::Kind kind);

/// Malformed graph or stream text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on the dense vertex range [0, n).
///
/// Edges keep the order in which they were supplied (generators rely on
/// that for the as-generated stream order). Adjacency is held in CSR form
/// with sorted neighbor lists. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on a self-loop, a duplicate, or an out-of-range endpoint.
  Graph(std::size_t n, std::vector<Edge> edges, std::optional<unsigned> c_declared = std::nullopt);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<unsigned> c_declared() const { return c_declared_; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  bool has_edge(Vertex a, Vertex b) const;

  Graph with_arboricity(std::optional<unsigned> c) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::optional<unsigned> c_declared_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list,
                  std::optional<unsigned> c_declared = std::nullopt);

/// Subgraph on the same vertex range keeping only edges whose endpoints both
/// satisfy `keep`.
Graph induced_subgraph(const Graph& g, const std::function<bool(Vertex)>& keep);

bool is_forest(const Graph& g);

/// Smallest k such that repeatedly deleting a vertex of degree <= k empties
/// the graph. Sandwiches arboricity: a <= degeneracy <= 2a - 1.
unsigned degeneracy(const Graph& g);

// Plain text graph format:
//   n <count>
//   u v
//   ...
// Lines starting with '#' are comments; a "# arboricity <c>" comment sets
// c_declared.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

}  // namespace arbmatch
