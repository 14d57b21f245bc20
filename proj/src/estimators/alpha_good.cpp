#include "arbmatch/alpha_good.hpp"

#include <algorithm>

namespace arbmatch {

bool AlphaGoodTest::feed(const StreamEvent& event) {
  if (status == TestStatus::Failed) return false;
  const bool at_u = event.u == edge.u || event.v == edge.u;
  const bool at_v = event.u == edge.v || event.v == edge.v;
  if (at_u) ++r_u;
  if (at_v) ++r_v;
  if (static_cast<double>(std::max(r_u, r_v)) > alpha) status = TestStatus::Failed;
  return at_u || at_v;
}

AlphaGoodTest alpha_good_test_feed(AlphaGoodTest test, const StreamEvent& event) {
  test.feed(event);
  return test;
}

}  // namespace arbmatch
