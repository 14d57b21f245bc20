#include "arbmatch/bounded_matching.hpp"

#include <algorithm>

#include "arbmatch/random.hpp"

namespace arbmatch {

void BoundedGreedyMatching::feed(const Edge& e) {
  if (terminated_) return;
  if (matched_.contains(e.u) || matched_.contains(e.v)) return;
  if (size_ == cap_) {
    terminated_ = true;
    matched_.clear();
    return;
  }
  matched_.insert(e.u);
  matched_.insert(e.v);
  ++size_;
}

SampledDynamicMatching::SampledDynamicMatching(std::size_t cap, std::size_t sample_capacity,
                                               std::uint64_t seed)
    : cap_(cap), sample_capacity_(std::max<std::size_t>(1, sample_capacity)), seed_(seed) {}

void SampledDynamicMatching::try_match(const Edge& e) {
  if (saturated_) return;
  if (matched_vertices_.contains(e.u) || matched_vertices_.contains(e.v)) return;
  if (matched_edges_ == cap_) {
    saturated_ = true;
    return;
  }
  matched_vertices_.insert(e.u);
  matched_vertices_.insert(e.v);
  ++matched_edges_;
}

void SampledDynamicMatching::rebuild() {
  matched_vertices_.clear();
  matched_edges_ = 0;
  saturated_ = false;
  for (const auto& e : sample_) try_match(e);
}

void SampledDynamicMatching::add_to_sample(const Edge& e) {
  sample_index_.emplace(e, sample_.size());
  sample_.push_back(e);
}

void SampledDynamicMatching::remove_from_sample(const Edge& e) {
  auto it = sample_index_.find(e);
  const std::size_t at = it->second;
  sample_index_.erase(it);
  if (at + 1 != sample_.size()) {
    sample_[at] = sample_.back();
    sample_index_[sample_[at]] = at;
  }
  sample_.pop_back();
}

void SampledDynamicMatching::feed(const StreamEvent& event) {
  ++position_;
  const Edge e = event.edge();
  if (event.is_insert()) {
    ++live_;
    const double keep = std::min(1.0, static_cast<double>(sample_capacity_) / static_cast<double>(live_));
    if (unit_interval(split_seed(seed_, position_, 0)) >= keep) return;
    if (sample_.size() == sample_capacity_) {
      const auto victim = static_cast<std::size_t>(unit_interval(split_seed(seed_, position_, 1)) *
                                                   static_cast<double>(sample_.size()));
      remove_from_sample(sample_[victim]);
      add_to_sample(e);
      rebuild();
      return;
    }
    add_to_sample(e);
    try_match(e);
    return;
  }
  --live_;
  if (!sample_index_.contains(e)) return;
  remove_from_sample(e);
  rebuild();
}

}  // namespace arbmatch
