#include "arbmatch/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace arbmatch {

namespace {

std::string describe(GraphError::Kind kind, Vertex a, Vertex b) {
  return std::string(to_string(kind)) + ": (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

GraphError::GraphError(Kind kind, Vertex a, Vertex b)
    : std::invalid_argument(describe(kind, a, b)), kind_(kind), offending_(a, b) {}

const char* to_string(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::DuplicateEdge:
      return "duplicate edge";
    case GraphError::Kind::SelfLoop:
      return "self-loop";
    case GraphError::Kind::VertexOutOfRange:
      return "vertex out of range";
  }
  return "graph error";
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::optional<unsigned> c_declared)
    : n_(n), edges_(std::move(edges)), c_declared_(c_declared) {
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(edges_.size() * 2);
  std::vector<std::size_t> degree(n_, 0);
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw GraphError(GraphError::Kind::VertexOutOfRange, e.u, e.v);
    if (e.u == e.v) throw GraphError(GraphError::Kind::SelfLoop, e.u, e.v);
    e = make_edge(e.u, e.v);
    if (!seen.insert(e).second) throw GraphError(GraphError::Kind::DuplicateEdge, e.u, e.v);
    ++degree[e.u];
    ++degree[e.v];
  }

  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph Graph::with_arboricity(std::optional<unsigned> c) const {
  Graph copy = *this;
  copy.c_declared_ = c;
  return copy;
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list,
                  std::optional<unsigned> c_declared) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    // Keep the caller's orientation until validation so errors echo the input pair.
    if (a >= n || b >= n) throw GraphError(GraphError::Kind::VertexOutOfRange, a, b);
    if (a == b) throw GraphError(GraphError::Kind::SelfLoop, a, b);
    edges.push_back(make_edge(a, b));
  }
  return Graph(n, std::move(edges), c_declared);
}

Graph induced_subgraph(const Graph& g, const std::function<bool(Vertex)>& keep) {
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (keep(e.u) && keep(e.v)) kept.push_back(e);
  }
  return Graph(g.n(), std::move(kept), g.c_declared());
}

bool is_forest(const Graph& g) {
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    Vertex a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace arbmatch
