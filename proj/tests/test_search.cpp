#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "wsatlab/error.hpp"
#include "wsatlab/bounds.hpp"
#include "wsatlab/search.hpp"

using namespace wsatlab;

namespace {

SearchTask make_task(int n, EraseMode mode, int m, Strategy st = Strategy::ExhaustiveLabeled) {
  SearchTask t;
  t.n = n;
  t.mode = mode;
  t.target_edges = m;
  t.strategy = st;
  return t;
}

// Any m-edge erasable graph by brute force over all m-subsets.
bool oracle_exists(int n, int s, int t, int j, int m) {
  const auto all = complete_edge_list(n);
  const int N = static_cast<int>(all.size());
  for (std::uint64_t mask = 0; mask < (1ULL << N); ++mask) {
    if (__builtin_popcountll(mask) != m) continue;
    Graph g(n);
    for (int i = 0; i < N; ++i)
      if ((mask >> i) & 1U) g.add_edge(all[i]);
    if (oracle::erasable(g, s, t, j)) return true;
  }
  return false;
}

std::string temp_path(const char* name) { return std::string(WSATLAB_TEST_TMPDIR) + "/" + name; }

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("strategy names") {
    CHECK(parse_strategy("labeled") == Strategy::ExhaustiveLabeled);
    CHECK(parse_strategy("isofree") == Strategy::IsomorphFree);
    CHECK(to_string(Strategy::Heuristic) == "heuristic");
    CHECK_THROWS_AS(parse_strategy("dfs"), InvalidArgument);
  }

  TEST_CASE("verdicts match the brute-force oracle on five vertices") {
    struct Case {
      int s, t, j;
    };
    for (Case c : {Case{1, 1, -1}, Case{1, 2, -1}, Case{2, 2, -1}, Case{2, 3, -1}, Case{0, 0, 1}, Case{0, 0, 2}}) {
      const EraseMode mode = c.j < 0 ? EraseMode{ExactMode{c.s, c.t}} : EraseMode{RelaxedMode{c.j}};
      for (int m = 0; m <= 10; ++m) {
        CAPTURE(describe(mode));
        CAPTURE(m);
        const bool expect = oracle_exists(5, c.s, c.t, c.j, m);
        const SearchOutcome lab = exists_erasable(make_task(5, mode, m));
        const SearchOutcome iso = exists_erasable(make_task(5, mode, m, Strategy::IsomorphFree));
        REQUIRE((lab.verdict == Verdict::Found) == expect);
        REQUIRE((iso.verdict == Verdict::Found) == expect);
        if (lab.verdict == Verdict::Found) {
          CHECK(lab.graph->edge_count() == m);
          CHECK(replay_certificate(*lab.graph, *lab.certificate).valid);
          CHECK(m <= max_erasable_edges_bound(5, mode));
        }
      }
    }
  }

  TEST_CASE("pruning changes counts but not verdicts") {
    for (auto [n, s, t] : {std::array{6, 2, 3}, {6, 3, 3}, {6, 2, 2}, {6, 1, 3}}) {
      const EraseMode mode = ExactMode{s, t};
      for (int m = 1; m <= 11; ++m) {
        SearchTask with = make_task(n, mode, m);
        SearchTask without = with;
        without.pruning = false;
        const SearchOutcome a = exists_erasable(with);
        const SearchOutcome b = exists_erasable(without);
        CAPTURE(n);
        CAPTURE(s);
        CAPTURE(t);
        CAPTURE(m);
        REQUIRE(a.verdict == b.verdict);
        if (a.verdict == Verdict::ExhaustedNone) {
          CHECK(a.graphs_examined + a.pruned == oracle::binomial(15, m));
          CHECK(b.graphs_examined == oracle::binomial(15, m));
          CHECK(b.pruned == 0);
        } else {
          // Both walks visit edge sets in the same order, so the first hit agrees.
          CHECK(*a.graph == *b.graph);
        }
      }
    }
  }

  TEST_CASE("prune never rejects part of an erasable graph") {
    std::mt19937_64 rng(51);
    int checked = 0;
    for (auto [n, s, t] : {std::array{7, 3, 3}, {8, 3, 4}, {9, 3, 5}, {8, 2, 3}}) {
      const EraseMode mode = ExactMode{s, t};
      // Largest size an erasable graph is known to reach.
      const int top = static_cast<int>(binom2(n) - known_wsat(n, s, t).upper);
      for (int trial = 0; trial < 8; ++trial) {
        const int m = top - static_cast<int>(rng() % 3);
        const auto hit = heuristic_search(n, s, t, m, rng(), 4000);
        if (!hit) continue;
        const auto edges = hit->first.edges();
        for (int k = 0; k <= m; ++k) {
          auto pick = edges;
          std::shuffle(pick.begin(), pick.end(), rng);
          Graph part(n);
          for (int i = 0; i < k; ++i) part.add_edge(pick[i]);
          CHECK_FALSE(prune(part, m - k, mode));
          ++checked;
        }
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("step bound rejects impossible targets") {
    const Graph empty(7);
    CHECK(violates_step_bound(empty, 12, ExactMode{3, 3}));
    CHECK_FALSE(violates_step_bound(empty, 11, ExactMode{3, 3}));
    CHECK(max_erasable_edges_bound(7, ExactMode{3, 3}) == 11);
    CHECK(max_erasable_edges_bound(6, ExactMode{3, 3}) == 5);
    Graph triangle(6);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    CHECK(violates_step_bound(triangle, 0, ExactMode{3, 3}));
    CHECK(prune(complement(Graph(5)), 0, RelaxedMode{1}));
  }

  TEST_CASE("worker count does not change the answer") {
    for (int m : {8, 9}) {
      SearchTask one = make_task(7, ExactMode{3, 3}, m);
      SearchTask three = one;
      three.workers = 3;
      const SearchOutcome a = exists_erasable(one);
      const SearchOutcome b = exists_erasable(three);
      REQUIRE(a.verdict == b.verdict);
      if (a.verdict == Verdict::Found) {
        CHECK(*a.graph == *b.graph);
        CHECK(*a.certificate == *b.certificate);
      } else {
        CHECK(a.graphs_examined == b.graphs_examined);
        CHECK(a.pruned == b.pruned);
        CHECK(a.nodes == b.nodes);
      }
    }
    SearchTask iso = make_task(7, ExactMode{3, 3}, 8, Strategy::IsomorphFree);
    const SearchOutcome x = exists_erasable(iso);
    iso.workers = 2;
    const SearchOutcome y = exists_erasable(iso);
    CHECK(*x.graph == *y.graph);
    CHECK(x.graphs_examined == y.graphs_examined);
  }

  TEST_CASE("checkpoint resume reproduces the totals") {
    const std::string path = temp_path("resume.ckpt");
    std::remove(path.c_str());
    SearchTask task = make_task(7, ExactMode{3, 3}, 9);
    task.split_depth = 2;
    const SearchOutcome plain = exists_erasable(task);
    task.checkpoint_path = path;
    const SearchOutcome first = exists_erasable(task);
    CHECK(first.verdict == Verdict::ExhaustedNone);
    CHECK(first.graphs_examined == plain.graphs_examined);

    // Keep the header and a handful of finished subtasks, as after a crash.
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    in.close();
    REQUIRE(lines.size() > 10);
    {
      std::ofstream out(path);
      for (std::size_t i = 0; i < 8; ++i) out << lines[i] << '\n';
    }
    const SearchOutcome resumed = exists_erasable(task);
    CHECK(resumed.verdict == Verdict::ExhaustedNone);
    CHECK(resumed.graphs_examined == plain.graphs_examined);
    CHECK(resumed.pruned == plain.pruned);
    CHECK(resumed.nodes == plain.nodes);

    SearchTask other = task;
    other.target_edges = 10;
    CHECK_THROWS_AS(exists_erasable(other), InvalidArgument);
    std::remove(path.c_str());
  }

  TEST_CASE("heuristic is reproducible from its seed") {
    const auto a = heuristic_search(8, 3, 4, 11, 99, 3000);
    const auto b = heuristic_search(8, 3, 4, 11, 99, 3000);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->first == b->first);
      CHECK(replay_certificate(a->first, a->second).valid);
    }
    SearchTask task = make_task(8, ExactMode{3, 4}, 13, Strategy::Heuristic);
    task.iteration_budget = 2000;
    const SearchOutcome none = exists_erasable(task);
    CHECK(none.verdict == Verdict::Inconclusive);
    CHECK_FALSE(none.exhaustive);
    task.target_edges = 12;
    const SearchOutcome hit = exists_erasable(task);
    CHECK(hit.verdict == Verdict::Found);
    CHECK(hit.graph->edge_count() == 12);
  }

  TEST_CASE("heuristic finds the largest erasable size at (4,6)") {
    const auto hit = heuristic_search(11, 4, 6, 18, kDefaultSeed, 20000);
    REQUIRE(hit.has_value());
    CHECK(hit->first.edge_count() == 18);
    CHECK(replay_certificate(hit->first, hit->second).valid);
  }

  TEST_CASE("wsat on small instances") {
    CHECK(compute_wsat(6, 3, 3, Strategy::ExhaustiveLabeled).value == 11);
    CHECK(compute_wsat(6, 3, 3, Strategy::IsomorphFree).value == 11);
    const WsatResult r = compute_wsat(7, 2, 3, Strategy::IsomorphFree);
    CHECK(r.value == known_wsat(7, 2, 3).lower);
    CHECK(replay_certificate(r.graph, r.certificate).valid);
    CHECK_THROWS_AS(compute_wsat(10, 3, 3, Strategy::ExhaustiveLabeled), InvalidArgument);
    CHECK_THROWS_AS(compute_wsat(7, 3, 3, Strategy::Heuristic), InvalidArgument);
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(exists_erasable(make_task(5, ExactMode{3, 3}, 2)), InvalidArgument);
    CHECK_THROWS_AS(exists_erasable(make_task(5, ExactMode{2, 2}, 11)), InvalidArgument);
    CHECK_THROWS_AS(exists_erasable(make_task(5, ExactMode{2, 2}, -1)), InvalidArgument);
    CHECK(exists_erasable(make_task(5, ExactMode{2, 2}, 0)).verdict == Verdict::Found);
  }
}
