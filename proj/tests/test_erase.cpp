#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wsatlab/erase.hpp"
#include "wsatlab/error.hpp"
#include "wsatlab/search.hpp"

using namespace wsatlab;

namespace {

Graph random_with_edges(int n, int m, std::mt19937_64& rng) {
  auto all = complete_edge_list(n);
  std::shuffle(all.begin(), all.end(), rng);
  Graph g(n);
  for (int i = 0; i < m && i < static_cast<int>(all.size()); ++i) g.add_edge(all[i]);
  return g;
}

}  // namespace

TEST_SUITE("erase") {
  TEST_CASE("mode helpers") {
    CHECK(excluded_count(ExactMode{3, 3}, 7) == 1);
    CHECK(excluded_count(RelaxedMode{2}, 9) == 2);
    CHECK(describe(ExactMode{3, 4}) == "exact(s=3,t=4)");
  }

  TEST_CASE("exact witness search matches the partition oracle") {
    std::mt19937_64 rng(21);
    int found = 0, refused = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 5);
      const Graph g = oracle::random_graph(n, 0.25 + 0.5 * (trial % 3) / 2.0, rng);
      if (g.empty()) continue;
      for (int s = 1; 2 * s <= n; ++s)
        for (int t = s; s + t <= n; ++t)
          for (Edge e : g.edges()) {
            const auto w = find_exact_witness(g, e, s, t);
            const bool expect = oracle::exact_erasable_edge(g, e, s, t);
            REQUIRE(w.has_value() == expect);
            REQUIRE(has_witness(g, e, ExactMode{s, t}) == expect);
            if (w) {
              ++found;
              CHECK(check_exact_witness(g, *w, s, t).empty());
              CHECK(w->excluded.size() == n - s - t);
            } else {
              ++refused;
            }
          }
    }
    CHECK(found > 100);
    CHECK(refused > 100);
  }

  TEST_CASE("relaxed witness search matches the cut oracle") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 250; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const Graph g = oracle::random_graph(n, 0.3 + 0.2 * (trial % 4), rng);
      for (int j = 0; j + 1 <= n && j <= 4; ++j)
        for (Edge e : g.edges()) {
          const auto w = find_relaxed_witness(g, e, j);
          REQUIRE(w.has_value() == oracle::relaxed_erasable_edge(g, e, j));
          REQUIRE(has_witness(g, e, RelaxedMode{j}) == w.has_value());
          if (!w) continue;
          if (n == j + 1) {
            CHECK(std::holds_alternative<TrivialSmallGraph>(*w));
          } else {
            const auto& r = std::get<RelaxedWitness>(*w);
            CHECK(r.cut.size() == j);
            CHECK(check_relaxed_witness(g, r, j).empty());
          }
        }
    }
  }

  TEST_CASE("greedy erasability matches search over every erase order") {
    std::mt19937_64 rng(23);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 160; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 3);
      const Graph g = random_with_edges(n, 4 + static_cast<int>(rng() % 8), rng);
      const int m = g.edge_count();
      const int s = 1 + static_cast<int>(rng() % 3);
      const int t = s + static_cast<int>(rng() % 2);
      if (s + t > n) continue;
      const bool expect = oracle::erasable(g, s, t);
      const EraseOutcome out = greedy_erase(g, ExactMode{s, t});
      REQUIRE(out.succeeded() == expect);
      CHECK(is_erasable(g, ExactMode{s, t}) == expect);
      expect ? ++yes : ++no;
      if (out.succeeded()) {
        CHECK(out.erased() == m);
        CHECK(replay_certificate(g, out.certificate).valid);
      } else {
        CHECK(out.stuck->remaining.edge_count() == m - out.erased());
        CHECK_FALSE(has_erasable_edge(out.stuck->remaining, ExactMode{s, t}));
        CHECK(erasable_edge_count(g, ExactMode{s, t}) == out.erased());
      }
      const int j = static_cast<int>(rng() % 3);
      CHECK(greedy_erase(g, RelaxedMode{j}).succeeded() == oracle::erasable(g, 0, 0, j));
    }
    CHECK(yes > 10);
    CHECK(no > 10);
  }

  TEST_CASE("erasability is hereditary to spanning subgraphs") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = random_with_edges(8, 8 + static_cast<int>(rng() % 6), rng);
      const EraseMode mode = ExactMode{3, 4};
      if (!is_erasable(g, mode)) continue;
      for (Edge e : g.edges()) CHECK(is_erasable(g.without_edge(e), mode));
    }
  }

  TEST_CASE("complete graph is stuck immediately") {
    const Graph k7 = complement(Graph(7));
    const EraseOutcome out = greedy_erase(k7, ExactMode{3, 3});
    CHECK_FALSE(out.succeeded());
    CHECK(out.erased() == 0);
    CHECK(out.stuck->remaining == k7);
  }

  TEST_CASE("replay rejects tampered certificates") {
    const Edge es[] = {{0, 1}, {1, 2}, {2, 3}, {0, 4}};
    const Graph g(7, es);
    const EraseMode mode = ExactMode{3, 3};
    const EraseOutcome out = greedy_erase(g, mode);
    REQUIRE(out.succeeded());
    CHECK(replay_certificate(g, out.certificate).valid);

    EraseCertificate missing = out.certificate;
    missing.steps.pop_back();
    const auto r1 = replay_certificate(g, missing);
    CHECK_FALSE(r1.valid);
    CHECK(r1.failed_step == static_cast<int>(missing.steps.size()));

    EraseCertificate twice = out.certificate;
    twice.steps.push_back(twice.steps.front());
    CHECK_FALSE(replay_certificate(g, twice).valid);

    EraseCertificate swapped = out.certificate;
    auto& w = std::get<ExactWitness>(swapped.steps[0].witness);
    std::swap(w.side1, w.excluded);
    const auto r2 = replay_certificate(g, swapped);
    CHECK_FALSE(r2.valid);
    CHECK(r2.failed_step == 0);

    EraseCertificate other_mode = out.certificate;
    other_mode.mode = ExactMode{2, 3};
    CHECK_FALSE(replay_certificate(g, other_mode).valid);
  }

  TEST_CASE("witness search preconditions") {
    const Edge es[] = {{0, 1}};
    const Graph g(5, es);
    CHECK_THROWS_AS(find_exact_witness(g, Edge{0, 2}, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(find_exact_witness(g, Edge{0, 1}, 3, 2), InvalidArgument);
    CHECK_THROWS_AS(find_exact_witness(g, Edge{0, 1}, 3, 3), InvalidArgument);
  }

  TEST_CASE("K_{s,t} detection matches brute force") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 4 + static_cast<int>(rng() % 6);
      const Graph h = oracle::random_graph(n, 0.4 + 0.4 * (trial % 3) / 2.0, rng);
      for (int s = 1; 2 * s <= n && s <= 3; ++s)
        for (int t = s; s + t <= n && t <= 4; ++t) {
          const auto kst = contains_kst(h, s, t);
          REQUIRE(kst.has_value() == oracle::contains_kst(h, s, t));
          if (kst) {
            CHECK(kst->first.size() == s);
            CHECK(kst->second.size() == t);
            for (int x : kst->first)
              for (int y : kst->second) CHECK(h.has_edge(x, y));
          }
        }
    }
  }

  TEST_CASE("weak saturation duality agrees with the closure oracle") {
    std::mt19937_64 rng(26);
    int saturated = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 3);
      const int s = 2, t = 2 + static_cast<int>(rng() % 2);
      const Graph h = oracle::random_graph(n, 0.35 + 0.15 * (trial % 3), rng);
      const SaturationReport r = is_weakly_saturated(h, s, t);
      REQUIRE(r.saturated() == oracle::weakly_saturated_by_closure(h, s, t));
      if (!r.saturated()) continue;
      ++saturated;
      // Each added edge completes a K_{s,t} with the reported parts.
      Graph cur = h;
      for (const SaturationStep& step : r.order) {
        cur.add_edge(step.added);
        CHECK(check_kst_through_edge(cur, step.added, {step.part_s, step.part_t}, s, t).empty());
      }
      CHECK(cur == complement(Graph(n)));
    }
    CHECK(saturated > 5);
  }
}
