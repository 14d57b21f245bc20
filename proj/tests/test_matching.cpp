#include <vector>

#include "arbmatch/generators.hpp"
#include "arbmatch/matching.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arbmatch;

TEST_SUITE("matching") {
  TEST_CASE("maximum_matching_size on named graphs") {
    CHECK(maximum_matching_size(oracle::complete(3)) == 1);
    CHECK(maximum_matching_size(oracle::path(4)) == 2);
    CHECK(maximum_matching_size(oracle::petersen()) == 5);
    CHECK(maximum_matching_size(Graph(5, {})) == 0);
    CHECK(maximum_matching_size(oracle::complete(7)) == 3);
  }

  TEST_CASE("brute force examples") {
    const std::vector<std::pair<Vertex, Vertex>> single{{0, 1}};
    CHECK(brute_force_matching_size(build_graph(2, single)) == 1);
    CHECK(brute_force_matching_size(oracle::star(5)) == 1);
    const std::vector<std::pair<Vertex, Vertex>> triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    CHECK(brute_force_matching_size(build_graph(6, triangles)) == 2);
    CHECK(brute_force_matching_size(oracle::petersen()) == 5);
    CHECK_THROWS_AS(brute_force_matching_size(oracle::complete(8)), TooLarge);
  }

  TEST_CASE("three exact routes agree on random small graphs") {
    Rng rng(2024);
    for (int round = 0; round < 2000; ++round) {
      const std::size_t n = 2 + round % 8;
      const double q = 0.15 + 0.1 * (round % 7);
      const Graph g = oracle::random_graph(n, q, rng);
      if (g.m() > kBruteForceEdgeCap) continue;
      const std::size_t expected = oracle::matching_by_subset_dp(g.n(), g.edges());
      CHECK(brute_force_matching_size(g) == expected);
      const auto mate = maximum_matching(g);
      CHECK(is_valid_matching(g, mate));
      CHECK(maximum_matching_size(g) == expected);
    }
  }

  TEST_CASE("all blossom variants agree with subset DP on 16-vertex graphs") {
    Rng rng(99);
    const BlossomOptions plain{false, false};
    const BlossomOptions no_prune{true, false};
    const BlossomOptions no_start{false, true};
    for (int round = 0; round < 300; ++round) {
      const Graph g = oracle::random_graph(16, 0.08 + 0.02 * (round % 10), rng);
      const std::size_t expected = oracle::matching_by_subset_dp(g.n(), g.edges());
      CHECK(maximum_matching_size(g) == expected);
      CHECK(maximum_matching_size(g, plain) == expected);
      CHECK(maximum_matching_size(g, no_prune) == expected);
      CHECK(maximum_matching_size(g, no_start) == expected);
    }
  }

  TEST_CASE("pruned and unpruned searches agree on larger sparse graphs") {
    const BlossomOptions plain{false, false};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = generate_union_of_forests(300, 1 + static_cast<unsigned>(seed % 3), seed);
      const auto mate = maximum_matching(g);
      CHECK(is_valid_matching(g, mate));
      CHECK(maximum_matching_size(g) == maximum_matching_size(g, plain));
    }
  }

  TEST_CASE("greedy maximal matching") {
    auto stream_of = [](std::size_t n, std::vector<Edge> order) { return EdgeStream::from_edges(n, order); };
    CHECK(greedy_maximal_matching(stream_of(4, {{0, 1}, {1, 2}, {2, 3}})) == 2);
    CHECK(greedy_maximal_matching(stream_of(4, {{1, 2}, {0, 1}, {2, 3}})) == 1);
    CHECK(greedy_maximal_matching(stream_of(2, {{0, 1}})) == 1);
    const EdgeStream dynamic(2, {StreamEvent::insert(0, 1), StreamEvent::erase(0, 1)});
    CHECK_THROWS_AS(greedy_maximal_matching(dynamic), HasDeletions);
  }

  TEST_CASE("greedy is at least half of maximum under every policy") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Graph g = generate_union_of_forests(60, 2, seed);
      const std::size_t best = maximum_matching_size(g);
      for (auto policy : {OrderingPolicy::AsGenerated, OrderingPolicy::UniformRandom, OrderingPolicy::StarByStar,
                          OrderingPolicy::LeavesLast, OrderingPolicy::CentersFirst}) {
        const std::size_t greedy = greedy_maximal_matching(order_stream(g, policy, seed));
        CHECK(2 * greedy >= best);
        CHECK(greedy <= best);
      }
    }
  }

  TEST_CASE("maximum matching never shrinks along an insert-only stream") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const EdgeStream s = order_stream(generate_union_of_forests(40, 2, seed), OrderingPolicy::UniformRandom, seed);
      std::size_t previous = 0;
      for (std::size_t k = 0; k <= s.size(); ++k) {
        const std::size_t now = maximum_matching_size(s.prefix_graph(k));
        CHECK(now >= previous);
        previous = now;
      }
    }
  }
}
