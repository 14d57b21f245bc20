#include "arbmatch/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace arbmatch {

namespace {

// Degree-one-first greedy start (Karp-Sipser without the random phase):
// matching a pendant vertex to its only neighbor is always safe, so on
// forests this is already maximum and the search below does no work.
void heuristic_start(const Graph& g, std::vector<Vertex>& mate) {
  const std::size_t n = g.n();
  std::vector<std::size_t> live_degree(n);
  std::vector<Vertex> pendant;
  for (Vertex v = 0; v < n; ++v) {
    live_degree[v] = g.degree(v);
    if (live_degree[v] == 1) pendant.push_back(v);
  }
  auto remove_vertex = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (mate[y] != kUnmatched) continue;
      if (--live_degree[y] == 1) pendant.push_back(y);
    }
  };
  auto drain = [&] {
    while (!pendant.empty()) {
      const Vertex v = pendant.back();
      pendant.pop_back();
      if (mate[v] != kUnmatched || live_degree[v] != 1) continue;
      Vertex partner = kUnmatched;
      for (Vertex w : g.neighbors(v)) {
        if (mate[w] == kUnmatched) {
          partner = w;
          break;
        }
      }
      if (partner == kUnmatched) continue;
      mate[v] = partner;
      mate[partner] = v;
      remove_vertex(v);
      remove_vertex(partner);
    }
  };
  drain();
  for (Vertex v = 0; v < n; ++v) {
    if (mate[v] != kUnmatched) continue;
    for (Vertex w : g.neighbors(v)) {
      if (mate[w] == kUnmatched) {
        mate[v] = w;
        mate[w] = v;
        remove_vertex(v);
        remove_vertex(w);
        drain();
        break;
      }
    }
  }
}

// Edmonds' blossom algorithm, one BFS alternating tree per free root.
// Per-search state is reset only on the vertices the search touched.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& g, std::vector<Vertex>& mate, bool prune)
      : g_(g),
        mate_(mate),
        prune_(prune),
        parent_(g.n(), kUnmatched),
        base_(g.n()),
        in_tree_(g.n(), 0),
        in_blossom_(g.n(), 0),
        lca_mark_(g.n(), 0),
        dead_(g.n(), 0) {
    for (Vertex v = 0; v < g.n(); ++v) base_[v] = v;
  }

  void run() {
    for (Vertex root = 0; root < g_.n(); ++root) {
      if (mate_[root] != kUnmatched || dead_[root] || g_.degree(root) == 0) continue;
      const Vertex end = find_augmenting_path(root);
      if (end != kUnmatched) {
        augment(end);
      } else if (prune_) {
        // No augmenting path from root: its alternating tree stays Hungarian
        // for the rest of the run.
        for (Vertex v : touched_) dead_[v] = 1;
      }
      reset();
    }
  }

 private:
  void touch(Vertex v) {
    if (!in_tree_[v] && parent_[v] == kUnmatched) touched_.push_back(v);
  }

  void reset() {
    for (Vertex v : touched_) {
      parent_[v] = kUnmatched;
      base_[v] = v;
      in_tree_[v] = 0;
    }
    touched_.clear();
    queue_.clear();
  }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    ++stamp_;
    for (;;) {
      a = base_[a];
      lca_mark_[a] = stamp_;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      blossom_bases_.push_back(base_[v]);
      blossom_bases_.push_back(base_[mate_[v]]);
      touch(v);
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void enqueue(Vertex v) {
    touch(v);
    in_tree_[v] = 1;
    queue_.push_back(v);
  }

  Vertex find_augmenting_path(Vertex root) {
    enqueue(root);
    while (!queue_.empty()) {
      const Vertex v = queue_.front();
      queue_.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (dead_[to] || base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          contract(v, to);
        } else if (parent_[to] == kUnmatched) {
          touch(to);
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          enqueue(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  void contract(Vertex v, Vertex to) {
    const Vertex blossom_base = lowest_common_ancestor(v, to);
    mark_path(v, blossom_base, to);
    mark_path(to, blossom_base, v);
    // Only tree vertices can carry a base inside this blossom.
    const std::size_t count = touched_.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Vertex x = touched_[i];
      if (in_blossom_[base_[x]]) {
        base_[x] = blossom_base;
        if (!in_tree_[x]) enqueue(x);
      }
    }
    for (Vertex b : blossom_bases_) in_blossom_[b] = 0;
    blossom_bases_.clear();
  }

  void augment(Vertex v) {
    while (v != kUnmatched) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  std::vector<Vertex>& mate_;
  bool prune_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<std::uint64_t> lca_mark_;
  std::vector<char> dead_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> blossom_bases_;
  std::deque<Vertex> queue_;
  std::uint64_t stamp_ = 0;
};

}  // namespace

std::vector<Vertex> maximum_matching(const Graph& g, const BlossomOptions& options) {
  std::vector<Vertex> mate(g.n(), kUnmatched);
  if (options.heuristic_start) heuristic_start(g, mate);
  BlossomSearch(g, mate, options.prune_failed_trees).run();
  return mate;
}

std::size_t maximum_matching_size(const Graph& g, const BlossomOptions& options) {
  const auto mate = maximum_matching(g, options);
  return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(),
                                                [](Vertex m) { return m != kUnmatched; })) /
         2;
}

bool is_valid_matching(const Graph& g, const std::vector<Vertex>& mate) {
  if (mate.size() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    const Vertex w = mate[v];
    if (w == kUnmatched) continue;
    if (w >= g.n() || mate[w] != v || w == v || !g.has_edge(v, w)) return false;
  }
  return true;
}

namespace {

// Include/exclude branching over edges in order; visits every matching
// exactly once, which is the full set of pairwise-disjoint edge subsets.
std::size_t best_from(const std::vector<Edge>& edges, std::size_t i, std::vector<char>& used,
                      std::size_t current) {
  if (i == edges.size()) return current;
  std::size_t best = best_from(edges, i + 1, used, current);
  const Edge& e = edges[i];
  if (!used[e.u] && !used[e.v]) {
    used[e.u] = used[e.v] = 1;
    best = std::max(best, best_from(edges, i + 1, used, current + 1));
    used[e.u] = used[e.v] = 0;
  }
  return best;
}

}  // namespace

std::size_t brute_force_matching_size(const Graph& g) {
  if (g.m() > kBruteForceEdgeCap) {
    throw TooLarge("brute-force matching supports at most " + std::to_string(kBruteForceEdgeCap) +
                   " edges, got " + std::to_string(g.m()));
  }
  std::vector<char> used(g.n(), 0);
  return best_from(g.edges(), 0, used, 0);
}

std::size_t greedy_maximal_matching(const EdgeStream& stream) {
  stream.require_insert_only();
  std::unordered_set<Vertex> matched;
  std::size_t size = 0;
  for (const auto& ev : stream) {
    if (matched.contains(ev.u) || matched.contains(ev.v)) continue;
    matched.insert(ev.u);
    matched.insert(ev.v);
    ++size;
  }
  return size;
}

}  // namespace arbmatch
