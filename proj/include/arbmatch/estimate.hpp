#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arbmatch {

/// Result of one estimator run. An empty `value` is the Fail marker.
struct Estimate {
  std::string algorithm;
  std::optional<double> value;
  // Peak simultaneous stored items: 1 per stored edge, 1 per counter,
  // 3 per alpha-good test.
  std::size_t space_peak = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> params;

  bool failed() const { return !value.has_value(); }

  std::optional<double> param(const std::string& name) const {
    for (const auto& [key, v] : params) {
      if (key == name) return v;
    }
    return std::nullopt;
  }
};

/// Tracks the running and peak item count of an estimator.
class SpaceMeter {
 public:
  void observe(std::size_t items) { peak_ = std::max(peak_, items); }
  std::size_t peak() const { return peak_; }

 private:
  std::size_t peak_ = 0;
};

}  // namespace arbmatch
