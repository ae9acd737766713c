#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wsatlab/canonical.hpp"
#include "wsatlab/codec.hpp"
#include "wsatlab/error.hpp"

using namespace wsatlab;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& p) {
  Graph h(g.vertex_count());
  for (Edge e : g.edges()) h.add_edge(p[e.u], p[e.v]);
  return h;
}

Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  const auto edges = complete_edge_list(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((mask >> i) & 1U) g.add_edge(edges[i]);
  return g;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("form is invariant under every relabeling for n <= 7") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 7; ++n) {
      for (int trial = 0; trial < (n < 7 ? 4 : 2); ++trial) {
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const std::string form = canonical_form(g);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
          REQUIRE(canonical_form(permuted(g, p)) == form);
        } while (std::next_permutation(p.begin(), p.end()));
      }
    }
  }

  TEST_CASE("form separates isomorphism classes") {
    // Numbers of unlabeled graphs on n vertices.
    const std::pair<int, std::size_t> classes[] = {{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
    for (auto [n, expected] : classes) {
      std::set<std::string> forms;
      const std::uint64_t total = 1ULL << (n * (n - 1) / 2);
      for (std::uint64_t mask = 0; mask < total; ++mask) forms.insert(canonical_form(from_mask(n, mask)));
      CHECK(forms.size() == expected);
    }
  }

  TEST_CASE("form is the graph6 of the relabeled graph") {
    std::mt19937_64 rng(5);
    const Graph g = oracle::random_graph(9, 0.4, rng);
    const auto order = canonical_order(g);
    CHECK(canonical_form(g) == emit_graph6(relabel(g, order)));
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(9);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(sorted == ident);
  }

  TEST_CASE("regular graphs with many automorphisms") {
    // Petersen graph, relabeled.
    Graph p(10);
    for (int i = 0; i < 5; ++i) {
      p.add_edge(i, (i + 1) % 5);
      p.add_edge(i, i + 5);
      p.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    std::vector<int> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
    CHECK(canonical_form(p) == canonical_form(permuted(p, perm)));
    CHECK(canonical_form(complement(Graph(16))) == emit_graph6(complement(Graph(16))));
    CHECK_THROWS_AS(canonical_form(Graph(17)), InvalidArgument);
  }
}
