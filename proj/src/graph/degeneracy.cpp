#include <algorithm>
#include <vector>

#include "arbmatch/graph.hpp"

namespace arbmatch {

// Bucket-queue peeling (Matula-Beck), O(n + m).
unsigned degeneracy(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return 0;

  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // order[] holds vertices sorted by current degree; bin_start[d] is the
  // first slot of degree-d vertices; pos[v] locates v in order[].
  std::vector<std::size_t> bin_start(max_deg + 2, 0);
  for (Vertex v = 0; v < n; ++v) ++bin_start[deg[v] + 1];
  for (std::size_t d = 1; d < bin_start.size(); ++d) bin_start[d] += bin_start[d - 1];
  std::vector<Vertex> order(n);
  std::vector<std::size_t> pos(n);
  {
    auto fill = bin_start;
    for (Vertex v = 0; v < n; ++v) {
      pos[v] = fill[deg[v]]++;
      order[pos[v]] = v;
    }
  }

  std::size_t result = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    result = std::max(result, deg[v]);
    for (Vertex w : g.neighbors(v)) {
      if (deg[w] > deg[v]) {
        const std::size_t dw = deg[w];
        const std::size_t first = bin_start[dw];
        const Vertex swap_with = order[first];
        if (swap_with != w) {
          std::swap(order[pos[w]], order[first]);
          std::swap(pos[w], pos[swap_with]);
        }
        ++bin_start[dw];
        --deg[w];
      }
    }
  }
  return static_cast<unsigned>(result);
}

}  // namespace arbmatch
