#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "arbmatch/generators.hpp"
#include "arbmatch/random.hpp"

namespace arbmatch {

namespace {

constexpr std::array<std::pair<OrderingPolicy, std::string_view>, 5> kPolicyNames{{
    {OrderingPolicy::AsGenerated, "as-generated"},
    {OrderingPolicy::UniformRandom, "random"},
    {OrderingPolicy::StarByStar, "star-by-star"},
    {OrderingPolicy::LeavesLast, "leaves-last"},
    {OrderingPolicy::CentersFirst, "centers-first"},
}};

std::vector<Edge> star_by_star(const Graph& g) {
  std::vector<std::size_t> remaining(g.n());
  // (-remaining degree, vertex) so begin() is the largest star center.
  std::set<std::pair<std::ptrdiff_t, Vertex>> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    remaining[v] = g.degree(v);
    if (remaining[v] > 0) queue.emplace(-static_cast<std::ptrdiff_t>(remaining[v]), v);
  }
  std::vector<char> removed(g.n(), 0);
  std::vector<Edge> order;
  order.reserve(g.m());
  while (!queue.empty()) {
    const Vertex center = queue.begin()->second;
    queue.erase(queue.begin());
    removed[center] = 1;
    for (Vertex w : g.neighbors(center)) {
      if (removed[w]) continue;
      order.push_back(make_edge(center, w));
      queue.erase({-static_cast<std::ptrdiff_t>(remaining[w]), w});
      if (--remaining[w] > 0) queue.emplace(-static_cast<std::ptrdiff_t>(remaining[w]), w);
    }
  }
  return order;
}

}  // namespace

std::string_view to_string(OrderingPolicy policy) {
  for (const auto& [p, name] : kPolicyNames) {
    if (p == policy) return name;
  }
  return "unknown";
}

std::optional<OrderingPolicy> parse_ordering(std::string_view name) {
  for (const auto& [p, known] : kPolicyNames) {
    if (known == name) return p;
  }
  return std::nullopt;
}

EdgeStream order_stream(const Graph& g, OrderingPolicy policy, std::uint64_t seed) {
  std::vector<Edge> order = g.edges();
  auto by_degree = [&](auto key) {
    std::stable_sort(order.begin(), order.end(),
                     [&](const Edge& a, const Edge& b) { return key(a) > key(b); });
  };
  switch (policy) {
    case OrderingPolicy::AsGenerated:
      break;
    case OrderingPolicy::UniformRandom: {
      Rng rng(seed);
      std::shuffle(order.begin(), order.end(), rng);
      break;
    }
    case OrderingPolicy::StarByStar:
      order = star_by_star(g);
      break;
    case OrderingPolicy::CentersFirst:
      by_degree([&](const Edge& e) { return std::max(g.degree(e.u), g.degree(e.v)); });
      break;
    case OrderingPolicy::LeavesLast:
      by_degree([&](const Edge& e) { return std::min(g.degree(e.u), g.degree(e.v)); });
      break;
  }
  return EdgeStream::from_edges(g.n(), order, g.c_declared());
}

}  // namespace arbmatch
