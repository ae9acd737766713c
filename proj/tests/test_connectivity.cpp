#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wsatlab/connectivity.hpp"
#include "wsatlab/constructions.hpp"
#include "wsatlab/error.hpp"
#include "wsatlab/search.hpp"

using namespace wsatlab;

TEST_SUITE("connectivity") {
  TEST_CASE("k-core peels low degrees") {
    const Edge es[] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    const Graph g(5, es);
    CHECK(k_core(g, g.vertices(), 2) == VertexSet{0, 1, 2});
    CHECK(k_core(g, g.vertices(), 3).empty());
  }

  TEST_CASE("vertex connectivity of standard graphs") {
    CHECK(vertex_connectivity(complement(Graph(6)), VertexSet::first(6)) == 5);
    Graph cycle(6);
    for (int i = 0; i < 6; ++i) cycle.add_edge(i, (i + 1) % 6);
    CHECK(vertex_connectivity(cycle, cycle.vertices()) == 2);
    Graph k33(6);
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
    CHECK(vertex_connectivity(k33, k33.vertices()) == 3);
  }

  TEST_CASE("subgraph detection matches brute force on n <= 8") {
    std::mt19937_64 rng(41);
    int positive = 0, negative = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const Graph g = oracle::random_graph(n, 0.3 + 0.5 * (trial % 6) / 5.0, rng);
      for (int k = 1; k <= 4; ++k) {
        const auto found = has_k_connected_subgraph(g, k);
        REQUIRE(found.has_value() == oracle::has_k_connected_subgraph(g, k));
        if (found) {
          CHECK(oracle::k_connected(g, *found, k));
          ++positive;
        } else {
          ++negative;
        }
      }
    }
    CHECK(positive > 200);
    CHECK(negative > 200);
  }

  TEST_CASE("decomposition lists exactly the maximal k-connected sets") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 4 + static_cast<int>(rng() % 5);
      const Graph g = oracle::random_graph(n, 0.5, rng);
      for (int k = 1; k <= 3; ++k) {
        std::vector<VertexSet> maximal;
        for (std::uint64_t bits = 1; bits < (1ULL << n); ++bits) {
          const VertexSet x(bits);
          if (!oracle::k_connected(g, x, k)) continue;
          bool is_max = true;
          for (int v : g.vertices() - x) is_max = is_max && !oracle::k_connected(g, x | VertexSet::single(v), k);
          if (!is_max) continue;
          // Maximal under single additions; also require no larger superset.
          for (std::uint64_t sup = bits; sup < (1ULL << n) && is_max; ++sup)
            if ((sup & bits) == bits && sup != bits && oracle::k_connected(g, VertexSet(sup), k)) is_max = false;
          if (is_max) maximal.push_back(x);
        }
        std::sort(maximal.begin(), maximal.end());
        REQUIRE(k_connected_decomposition(g, k) == maximal);
      }
    }
  }

  TEST_CASE("erasable certificate graphs have no (j+2)-connected subgraph") {
    for (int s = 3; s <= 6; ++s) CHECK(check_erasable_obstruction(fig1_graph(s).graph, 1));
    CHECK(check_erasable_obstruction(appendix_graph(8, 10).graph, 1));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
      const auto h = heuristic_search(9, 3, 4, 12, rng(), 3000);
      if (h) CHECK(connectivity_report(h->first, 4).decomposition.empty());
    }
    CHECK_FALSE(check_erasable_obstruction(complement(Graph(4)), 1));
    CHECK_THROWS_AS(check_erasable_obstruction(Graph(3), -1), InvalidArgument);
  }

  TEST_CASE("edge bounds") {
    const EdgeBounds b = edge_bounds(10, 3);
    CHECK(b.mader == Rational(8 * 7, 2));
    CHECK(b.bk == Rational(19 * 3 * 7, 12));
    CHECK(b.bk_applies);
    CHECK_FALSE(edge_bounds(7, 3).bk_applies);
    CHECK(edge_bounds(20, 4).bk_applies);
    CHECK_THROWS_AS(edge_bounds(3, 3), InvalidArgument);
  }
}
