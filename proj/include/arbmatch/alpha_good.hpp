#pragma once

#include <cstddef>

#include "arbmatch/graph.hpp"
#include "arbmatch/stream.hpp"

namespace arbmatch {

enum class TestStatus { Active, Failed };

/// Watches one stream edge and counts the edges that arrive after it at
/// each endpoint. Fails as soon as either count exceeds alpha.
struct AlphaGoodTest {
  Edge edge;
  std::size_t r_u = 0;
  std::size_t r_v = 0;
  double alpha = 0;
  TestStatus status = TestStatus::Active;

  AlphaGoodTest() = default;
  AlphaGoodTest(Edge e, double alpha_threshold) : edge(e), alpha(alpha_threshold) {}

  bool active() const { return status == TestStatus::Active; }

  /// Returns true if the event touched the tested edge.
  bool feed(const StreamEvent& event);
};

AlphaGoodTest alpha_good_test_feed(AlphaGoodTest test, const StreamEvent& event);

}  // namespace arbmatch
