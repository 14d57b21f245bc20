#include "arbmatch/generators.hpp"

#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "arbmatch/random.hpp"

namespace arbmatch {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

Graph generate_union_of_forests(std::size_t n, unsigned c, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_union_of_forests: n must be >= 2");
  if (c < 1) throw std::invalid_argument("generate_union_of_forests: c must be >= 1");

  Rng rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::unordered_set<Edge, EdgeHash> present;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(c) * (n - 1));

  for (unsigned forest = 0; forest < c; ++forest) {
    // Drawing pairs with replacement visits pairs in uniformly random order;
    // a repeated pair is already inside one component and gets rejected, so
    // this is Kruskal over a shuffled complete-graph edge sequence.
    DisjointSets components(n);
    std::size_t accepted = 0;
    while (accepted + 1 < n) {
      const Vertex a = pick(rng);
      const Vertex b = pick(rng);
      if (a == b || !components.unite(a, b)) continue;
      ++accepted;
      const Edge e = make_edge(a, b);
      if (present.insert(e).second) edges.push_back(e);
    }
  }
  return Graph(n, std::move(edges), c);
}

Graph generate_star_forest(std::size_t k, std::size_t s) {
  if (k < 1 || s < 1) throw std::invalid_argument("generate_star_forest: k and s must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(k * s);
  for (std::size_t star = 0; star < k; ++star) {
    const auto center = static_cast<Vertex>(star * (s + 1));
    for (std::size_t leaf = 1; leaf <= s; ++leaf) {
      edges.push_back({center, static_cast<Vertex>(center + leaf)});
    }
  }
  return Graph(k * (s + 1), std::move(edges), 1u);
}

Graph prufer_decode(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 2) throw std::invalid_argument("prufer_decode: n must be >= 2");
  if (sequence.size() != n - 2) throw std::invalid_argument("prufer_decode: sequence must have n-2 entries");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : sequence) {
    if (x >= n) throw std::invalid_argument("prufer_decode: label out of range");
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex x : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(make_edge(leaf, x));
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  const Vertex b = leaves.top();
  edges.push_back(make_edge(a, b));
  return Graph(n, std::move(edges), 1u);
}

Graph generate_random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_random_tree: n must be >= 2");
  Rng rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> sequence(n - 2);
  for (auto& x : sequence) x = pick(rng);
  return prufer_decode(n, sequence);
}

}  // namespace arbmatch
