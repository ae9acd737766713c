#include <sstream>

#include "doctest.h"
#include "wsatlab/error.hpp"
#include "wsatlab/report.hpp"

using namespace wsatlab;

namespace {

EraseCertificate sample_exact() { return certificate_from_schedule(fig1_graph(4)).certificate; }

EraseCertificate sample_relaxed() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 4);
  const EraseOutcome out = greedy_erase(g, RelaxedMode{1});
  REQUIRE(out.succeeded());
  return out.certificate;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("certificate line format round trip") {
    for (const EraseCertificate& cert : {sample_exact(), sample_relaxed()}) {
      const std::string text = certificate_to_text(cert);
      CHECK(certificate_from_text(text) == cert);
      CHECK(parse_certificate_auto(text) == cert);
    }
    const std::string text = certificate_to_text(sample_exact());
    CHECK(text.rfind("mode exact s=4 t=4\nerase ", 0) == 0);
    CHECK(text.find(" | excluded: ") != std::string::npos);
    CHECK(certificate_to_text(sample_relaxed()).find(" | cut: ") != std::string::npos);
  }

  TEST_CASE("trivial relaxed steps") {
    EraseCertificate cert;
    cert.mode = RelaxedMode{1};
    cert.steps.push_back({Edge{0, 1}, TrivialSmallGraph{}});
    const std::string text = certificate_to_text(cert);
    CHECK(text == "mode relaxed j=1\nerase 0 1 | trivial\n");
    CHECK(certificate_from_text(text) == cert);
    CHECK(certificate_from_json(to_json(cert)) == cert);
    const Graph g(2, std::vector<Edge>{{0, 1}});
    CHECK(replay_certificate(g, cert).valid);
  }

  TEST_CASE("certificate JSON mirror round trip") {
    for (const EraseCertificate& cert : {sample_exact(), sample_relaxed()}) {
      const Json j = to_json(cert);
      CHECK(certificate_from_json(Json::parse(j.dump())) == cert);
      CHECK(parse_certificate_auto(j.dump(2)) == cert);
    }
  }

  TEST_CASE("certificate parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
      try {
        certificate_from_text(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return -1;
    };
    CHECK(line_of("mode exact s=3\n") == 1);
    CHECK(line_of("# hi\nmode exact s=3 t=3\nerase 0 1 | excluded: 2 | side1: 0 | side2: 1\nerase 0 | x\n") == 4);
    CHECK(line_of("mode exact s=3 t=3\nerase 0 1 | cut: 2\n") == 2);
    CHECK(line_of("mode relaxed j=1\nerase 0 1 | side1: 2\n") == 2);
    CHECK(line_of("mode relaxed j=1\nerase 0 99 | cut: 2\n") == 2);
    CHECK_THROWS_AS(certificate_from_text(""), ParseError);
    CHECK_THROWS_AS(parse_certificate_auto("{\"mode\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_certificate_auto("{nope"), ParseError);
  }

  TEST_CASE("graph JSON") {
    const Graph g = fig1_graph(3).graph;
    const Json j = to_json(g);
    CHECK(j["n"] == 7);
    CHECK(graph_from_json(j) == g);
    CHECK(graph_from_json(Json(j["graph6"])) == g);
    Json bad = j;
    bad["graph6"] = "F????";
    CHECK_THROWS_AS(graph_from_json(bad), ParseError);
  }

  TEST_CASE("search outcome JSON round trip") {
    SearchTask task;
    task.n = 6;
    task.mode = ExactMode{3, 3};
    task.target_edges = 4;
    for (int m : {4, 5}) {
      task.target_edges = m;
      const SearchOutcome o = exists_erasable(task);
      const SearchOutcome back = search_outcome_from_json(Json::parse(search_to_json(task, o).dump()));
      CHECK(back.verdict == o.verdict);
      CHECK(back.graphs_examined == o.graphs_examined);
      CHECK(back.pruned == o.pruned);
      CHECK(back.nodes == o.nodes);
      CHECK(back.exhaustive == o.exhaustive);
      CHECK(back.wall_seconds == o.wall_seconds);
      CHECK(back.graph == o.graph);
      CHECK(back.certificate == o.certificate);
    }
  }

  TEST_CASE("trace text and JSON carry the same numbers") {
    const auto c = fig1_graph(3);
    const ProcessTrace trace = trace_process(c.graph, certificate_from_schedule(c).certificate);
    const Json j = to_json(trace);
    const std::string text = to_text(trace);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "initial f=1 c=1 s=3");
    std::getline(in, line);  // header
    CHECK(line.rfind("step", 0) == 0);
    for (const Json& row : j["rows"]) {
      REQUIRE(std::getline(in, line));
      std::istringstream cols(line);
      int step, closed, f, cc, s, lambda, q;
      std::string edge, vec;
      cols >> step >> edge >> closed >> f >> cc >> s >> lambda >> vec >> q;
      CHECK(step == row["step"]);
      CHECK(edge == std::to_string(row["edge"][0].get<int>()) + "-" + std::to_string(row["edge"][1].get<int>()));
      CHECK(closed == row["closed"]);
      CHECK(f == row["f"]);
      CHECK(cc == row["c"]);
      CHECK(s == row["s"]);
      CHECK(lambda == row["lambda"]);
      CHECK(vec == "(" + std::to_string(row["vector"][0].get<int>()) + "," +
                       std::to_string(row["vector"][1].get<int>()) + ")");
      CHECK(q == row["q"]);
    }
    CHECK(j["rows"].size() == 8);
    CHECK(j["rows"].back()["s"] == 14);
    std::getline(in, line);
    CHECK(line == "steps=8 s_final=14 Q=3");
  }

  TEST_CASE("bounds grid as TSV") {
    std::vector<WsatBound> rows;
    for (int n = 6; n <= 9; ++n) rows.push_back(known_wsat(n, 3, 3));
    const std::string tsv = bounds_grid_tsv(rows);
    std::istringstream in(tsv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n\ts\tt\tlower\tupper\texact\tsources");
    int count = 0;
    while (std::getline(in, line)) {
      CHECK(line.find("\tyes\t") != std::string::npos);
      ++count;
    }
    CHECK(count == 4);
    CHECK(bounds_grid_json(rows)["rows"].size() == 4);
  }

  TEST_CASE("verify report for a stuck graph") {
    VerifyReport r;
    r.graph = complement(Graph(7));
    r.mode = ExactMode{3, 3};
    r.outcome = greedy_erase(r.graph, r.mode);
    const Json j = to_json(r);
    CHECK(j["erasable"] == false);
    CHECK(j["stuck"]["remaining"]["edges"].size() == 21);
    CHECK(to_text(r).find("erasable: no") != std::string::npos);
  }
}
