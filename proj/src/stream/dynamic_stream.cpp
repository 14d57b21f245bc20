#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "arbmatch/generators.hpp"
#include "arbmatch/random.hpp"

namespace arbmatch {

EdgeStream generate_dynamic_stream(const Graph& g, double delete_fraction, std::uint64_t seed) {
  if (!(delete_fraction >= 0.0 && delete_fraction <= 1.0)) {
    throw std::invalid_argument("generate_dynamic_stream: delete_fraction must lie in [0, 1]");
  }
  const unsigned c = g.c_declared().value_or(std::max(1u, degeneracy(g)));
  const auto decoys_wanted =
      static_cast<std::size_t>(std::llround(delete_fraction * static_cast<double>(g.m())));
  const std::size_t length = g.m() + 2 * decoys_wanted;
  const std::size_t budget = stream_length_budget(g.n(), c);
  if (length > budget) {
    throw BudgetExceeded("dynamic stream of " + std::to_string(length) + " events exceeds budget " +
                         std::to_string(budget));
  }

  Rng rng(seed);
  std::vector<Edge> base = g.edges();
  std::shuffle(base.begin(), base.end(), rng);
  std::vector<StreamEvent> events;
  events.reserve(length);
  for (const auto& e : base) events.push_back(StreamEvent::insert(e.u, e.v));

  if (decoys_wanted == 0 || g.n() < 2) return EdgeStream(g.n(), std::move(events), c);

  // Every intermediate live graph is a subgraph of g + decoys, and
  // degeneracy is monotone under taking subgraphs.
  const unsigned cap = 2 * c;
  std::vector<Edge> with_decoys = g.edges();
  std::vector<std::size_t> degree(g.n());
  for (Vertex v = 0; v < g.n(); ++v) degree[v] = g.degree(v);
  std::unordered_set<Edge, EdgeHash> taken(with_decoys.begin(), with_decoys.end());

  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.n() - 1));
  std::size_t placed = 0;
  const std::size_t max_attempts = 100 * decoys_wanted + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && placed < decoys_wanted; ++attempt) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b) continue;
    const Edge e = make_edge(a, b);
    if (taken.contains(e)) continue;
    // An endpoint of degree <= cap cannot sit in the (cap+1)-core, so the
    // full peel is only needed when both endpoints would exceed cap.
    if (degree[a] + 1 > cap && degree[b] + 1 > cap) {
      with_decoys.push_back(e);
      if (degeneracy(Graph(g.n(), with_decoys)) > cap) {
        with_decoys.pop_back();
        continue;
      }
    } else {
      with_decoys.push_back(e);
    }
    taken.insert(e);
    ++degree[a];
    ++degree[b];

    std::uniform_int_distribution<std::size_t> slot(0, events.size());
    const std::size_t at = slot(rng);
    events.insert(events.begin() + static_cast<std::ptrdiff_t>(at), StreamEvent::insert(e.u, e.v));
    std::uniform_int_distribution<std::size_t> later(at + 1, events.size());
    const std::size_t del = later(rng);
    events.insert(events.begin() + static_cast<std::ptrdiff_t>(del), StreamEvent::erase(e.u, e.v));
    ++placed;
  }
  return EdgeStream(g.n(), std::move(events), c);
}

}  // namespace arbmatch
