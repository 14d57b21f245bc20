#include <vector>

#include "arbmatch/graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arbmatch;

TEST_SUITE("graph") {
  TEST_CASE("build_graph accepts a simple edge list") {
    const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 2}};
    const Graph g = build_graph(3, e);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
  }

  TEST_CASE("build_graph rejects duplicates, loops and out-of-range endpoints") {
    auto kind_of = [](std::size_t n, std::vector<std::pair<Vertex, Vertex>> e) {
      try {
        build_graph(n, e);
      } catch (const GraphError& err) {
        return std::make_pair(err.kind(), err.offending());
      }
      FAIL("expected GraphError");
      return std::make_pair(GraphError::Kind::SelfLoop, std::make_pair(Vertex{0}, Vertex{0}));
    };
    CHECK(kind_of(3, {{0, 1}, {0, 1}}).first == GraphError::Kind::DuplicateEdge);
    CHECK(kind_of(3, {{0, 1}, {1, 0}}).first == GraphError::Kind::DuplicateEdge);
    const auto out_of_range = kind_of(2, {{0, 2}});
    CHECK(out_of_range.first == GraphError::Kind::VertexOutOfRange);
    CHECK(out_of_range.second == std::make_pair(Vertex{0}, Vertex{2}));
    CHECK(kind_of(3, {{1, 1}}).first == GraphError::Kind::SelfLoop);
  }

  TEST_CASE("degeneracy of small families") {
    CHECK(degeneracy(oracle::path(6)) == 1);
    CHECK(degeneracy(oracle::star(9)) == 1);
    CHECK(degeneracy(oracle::complete(3)) == 2);
    CHECK(degeneracy(oracle::complete(5)) == 4);
    CHECK(degeneracy(oracle::petersen()) == 3);
    CHECK(degeneracy(Graph(4, {})) == 0);
  }

  TEST_CASE("degeneracy matches a naive peel on random graphs") {
    Rng rng(11);
    for (int round = 0; round < 200; ++round) {
      const Graph g = oracle::random_graph(12, 0.3, rng);
      // Naive: repeatedly delete a minimum-degree vertex, track the max.
      std::vector<bool> gone(g.n(), false);
      unsigned naive = 0;
      for (std::size_t step = 0; step < g.n(); ++step) {
        Vertex pick = 0;
        std::size_t best = SIZE_MAX;
        for (Vertex v = 0; v < g.n(); ++v) {
          if (gone[v]) continue;
          std::size_t d = 0;
          for (Vertex w : g.neighbors(v)) d += gone[w] ? 0 : 1;
          if (d < best) best = d, pick = v;
        }
        naive = std::max<unsigned>(naive, static_cast<unsigned>(best));
        gone[pick] = true;
      }
      CHECK(degeneracy(g) == naive);
    }
  }

  TEST_CASE("is_forest") {
    CHECK(is_forest(oracle::path(5)));
    CHECK_FALSE(is_forest(oracle::complete(3)));
    CHECK(is_forest(Graph(3, {})));
  }

  TEST_CASE("graph text format") {
    const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {2, 1}};
    const Graph g = build_graph(3, e, 2u);
    const std::string text = serialize_graph(g);
    CHECK(text == "n 3\n# arboricity 2\n0 1\n1 2\n");
    const Graph back = parse_graph(text);
    CHECK(back.edges() == g.edges());
    CHECK(back.c_declared() == 2u);
    CHECK(parse_graph("n 2\n  0   1 \n").m() == 1);
    CHECK_THROWS_AS(parse_graph("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 2\n"), ParseError);
    try {
      parse_graph("n 3\n0 1\nx 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.line() == 3);
    }
  }
}
