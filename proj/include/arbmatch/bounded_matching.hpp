#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arbmatch/graph.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch {

/// Greedy maximal matching that gives up once it would exceed `cap` edges.
class BoundedGreedyMatching {
 public:
  explicit BoundedGreedyMatching(std::size_t cap) : cap_(cap) {}

  void feed(const Edge& e);

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }
  bool terminated() const { return terminated_; }
  std::size_t items() const { return terminated_ ? 0 : size_; }

 private:
  std::size_t cap_;
  std::size_t size_ = 0;
  bool terminated_ = false;
  std::unordered_set<Vertex> matched_;
};

/// Bounded maximal matching under insertions and deletions, maintained on a
/// uniform edge sample.
///
/// Each inserted edge is kept with probability min(1, capacity / live), where
/// live is the running count of live edges; a full sample evicts a random
/// member. The matching is greedy over the sample, capped at `cap` edges,
/// and is rebuilt whenever a deletion or eviction changes the sample.
class SampledDynamicMatching {
 public:
  SampledDynamicMatching(std::size_t cap, std::size_t sample_capacity, std::uint64_t seed);

  void feed(const StreamEvent& event);

  std::size_t size() const { return matched_edges_; }
  std::size_t cap() const { return cap_; }
  /// Greedy wanted more than `cap` edges on the current sample.
  bool saturated() const { return saturated_; }
  std::size_t sample_size() const { return sample_.size(); }
  std::size_t items() const { return sample_.size() + matched_edges_ + 1; }

 private:
  void add_to_sample(const Edge& e);
  void remove_from_sample(const Edge& e);
  void try_match(const Edge& e);
  void rebuild();

  std::size_t cap_;
  std::size_t sample_capacity_;
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::size_t live_ = 0;
  std::vector<Edge> sample_;
  std::unordered_map<Edge, std::size_t, EdgeHash> sample_index_;
  std::unordered_set<Vertex> matched_vertices_;
  std::size_t matched_edges_ = 0;
  bool saturated_ = false;
};

}  // namespace arbmatch
