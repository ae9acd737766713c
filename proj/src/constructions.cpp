#include "wsatlab/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "wsatlab/bounds.hpp"
#include "wsatlab/error.hpp"

namespace wsatlab {

int ConstructionOutput::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidArgument("no vertex labelled " + label);
  return static_cast<int>(it - labels.begin());
}

namespace {

std::string indexed(const std::string& base, int i) { return base + std::to_string(i); }

void check_count(const ConstructionOutput& c) {
  if (c.graph.edge_count() != c.expected_edge_count)
    throw Error(c.name + ": built " + std::to_string(c.graph.edge_count()) + " edges, expected " +
                std::to_string(c.expected_edge_count));
}

// Hint helpers keep schedules readable.
ScheduleStep close(int closed, int u, int v) { return {make_edge(u, v), VertexSet::single(closed)}; }
ScheduleStep plain(int u, int v) { return {make_edge(u, v), std::nullopt}; }

// The fan of `hub` over `path`: peel the path from its first vertex.
void fan_schedule(std::vector<ScheduleStep>& out, int hub, const std::vector<int>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.push_back(plain(hub, path[i]));
    out.push_back(plain(path[i], path[i + 1]));
  }
  if (!path.empty()) out.push_back(plain(hub, path.back()));
}

// Shared vertex layout of fig2 and fig3:
// a = 0, b = 1, a_i = 2 + i (i < t), b_i = 2 + t + i (i < s - 1).
struct PathsLayout {
  int s, t;
  int a() const { return 0; }
  int b() const { return 1; }
  int ai(int i) const { return 2 + ((i % t) + t) % t; }
  int bi(int i) const { return 2 + t + i; }
};

ConstructionOutput paths_graph(const std::string& name, int s, int t, bool with_last_spoke) {
  const PathsLayout L{s, t};
  ConstructionOutput c;
  c.name = name;
  c.s = s;
  c.t = t;
  c.graph = Graph(s + t + 1);
  c.labels = {"a", "b"};
  for (int i = 0; i < t; ++i) c.labels.push_back(indexed("a", i));
  for (int i = 0; i < s - 1; ++i) c.labels.push_back(indexed("b", i));
  for (int i = 0; i < t; ++i)
    if (with_last_spoke || i != t - 1) c.graph.add_edge(L.a(), L.ai(i));
  for (int i = 0; i + 1 < t; ++i) c.graph.add_edge(L.ai(i), L.ai(i + 1));
  for (int i = 0; i < s - 1; ++i) c.graph.add_edge(L.b(), L.bi(i));
  for (int i = 0; i + 1 < s - 1; ++i) c.graph.add_edge(L.bi(i), L.bi(i + 1));
  c.graph.add_edge(L.a(), L.b());
  c.graph.add_edge(L.b(), L.ai(t - 1));
  return c;
}

std::vector<int> b_path(const PathsLayout& L) {
  std::vector<int> out;
  for (int i = 0; i < L.s - 1; ++i) out.push_back(L.bi(i));
  return out;
}

}  // namespace

ConstructionOutput fig1_graph(int s) {
  if (s < 3) throw InvalidArgument("fig1_graph needs s >= 3");
  // a = 0, b = 1, c = 2, d = 3, a_i = 4 + i (i < s - 1), b_i = 3 + s + i (i < s - 2).
  const int a = 0, b = 1, c_ = 2, d = 3;
  auto ai = [](int i) { return 4 + i; };
  auto bi = [s](int i) { return 3 + s + i; };
  ConstructionOutput c;
  c.name = "fig1";
  c.s = s;
  c.t = s;
  c.graph = Graph(2 * s + 1);
  c.labels = {"a", "b", "c", "d"};
  for (int i = 0; i < s - 1; ++i) c.labels.push_back(indexed("a", i));
  for (int i = 0; i < s - 2; ++i) c.labels.push_back(indexed("b", i));
  c.expected_edge_count = 4 * s - 4;

  c.graph.add_edge(a, b);
  c.graph.add_edge(b, c_);
  c.graph.add_edge(c_, d);
  c.graph.add_edge(d, a);
  for (int i = 0; i < s - 1; ++i) c.graph.add_edge(a, ai(i));
  for (int i = 0; i + 1 < s - 1; ++i) c.graph.add_edge(ai(i), ai(i + 1));
  for (int i = 0; i < s - 2; ++i) c.graph.add_edge(b, bi(i));
  for (int i = 0; i + 1 < s - 2; ++i) c.graph.add_edge(bi(i), bi(i + 1));
  check_count(c);

  auto& sch = c.schedule;
  sch.push_back(close(d, a, b));
  sch.push_back(close(a, c_, d));
  sch.push_back(close(a, b, c_));
  sch.push_back(close(ai(0), a, d));
  sch.push_back(close(ai(1), ai(0), a));
  sch.push_back(close(a, ai(0), ai(1)));
  for (int i = 1; i <= s - 3; ++i) {
    sch.push_back(plain(a, ai(i)));
    sch.push_back(plain(ai(i), ai(i + 1)));
  }
  sch.push_back(plain(a, ai(s - 2)));
  std::vector<int> p2;
  for (int i = 0; i < s - 2; ++i) p2.push_back(bi(i));
  fan_schedule(sch, b, p2);
  return c;
}

ConstructionOutput fig2_graph(int s, int t) {
  if (s < 3 || t <= s) throw InvalidArgument("fig2_graph needs 3 <= s < t");
  if (std::gcd(s, t) != 1) throw InvalidArgument("fig2_graph needs gcd(s, t) = 1");
  const PathsLayout L{s, t};
  ConstructionOutput c = paths_graph("fig2", s, t, true);
  c.expected_edge_count = 2 * s + 2 * t - 2;
  check_count(c);

  auto& sch = c.schedule;
  sch.push_back(close(L.a(), L.ai(t - 1), L.b()));
  sch.push_back(close(L.ai(0), L.a(), L.b()));
  for (int h = 1; h <= t - 1; ++h) {
    const int x = (h * s) % t;
    sch.push_back(close(L.a(), L.ai(x - 1), L.ai(x)));
  }
  for (int i = 0; i < t; ++i) sch.push_back(close(L.b(), L.ai(i), L.a()));
  fan_schedule(sch, L.b(), b_path(L));
  return c;
}

ConstructionOutput fig3_graph(int s, int t) {
  if (s < 3 || t <= s) throw InvalidArgument("fig3_graph needs 3 <= s < t");
  const PathsLayout L{s, t};
  ConstructionOutput c = paths_graph("fig3", s, t, false);
  c.expected_edge_count = 2 * s + 2 * t - 3;
  check_count(c);

  auto& sch = c.schedule;
  sch.push_back(close(L.a(), L.ai(t - 1), L.b()));
  sch.push_back(close(L.ai(0), L.a(), L.b()));
  std::vector<Edge> gone;
  for (int h = 1; (h * s) % t != 0; ++h) {
    const int x = (h * s) % t;
    sch.push_back(close(L.a(), L.ai(x - 1), L.ai(x)));
    gone.push_back(make_edge(L.ai(x - 1), L.ai(x)));
  }
  auto pending = [&](Edge e) { return std::find(gone.begin(), gone.end(), e) == gone.end(); };
  const Edge last = make_edge(L.ai(t - 2), L.ai(t - 1));
  if (pending(last)) {
    sch.push_back(close(L.b(), L.ai(t - 2), L.ai(t - 1)));
    gone.push_back(last);
  }
  for (int j = 0; j <= t - 2; ++j) {
    const Edge e = make_edge(L.ai(j), L.ai(j + 1));
    if (!pending(e)) continue;
    // Only the closed vertex is recorded; the side is left to the search.
    sch.push_back(close(L.a(), L.ai(j), L.ai(j + 1)));
    gone.push_back(e);
  }
  for (int i = 0; i <= t - 2; ++i) sch.push_back(close(L.b(), L.ai(i), L.a()));
  fan_schedule(sch, L.b(), b_path(L));
  return c;
}

ConstructionOutput theorem3_graph(int s, int t, int j) {
  if (s <= 2 || t < s || j < 2 || j >= t - 2) throw InvalidArgument("theorem3_graph needs 2 < s <= t and 2 <= j < t - 2");
  // a_i = i - 1, b_i = s + i - 1, c_i = s + t + i - 1, all 1-based as drawn.
  auto A = [](int i) { return i - 1; };
  auto B = [s](int i) { return s + i - 1; };
  auto C = [s, t](int i) { return s + t + i - 1; };
  const int n = s + t + j;
  ConstructionOutput c;
  c.name = "theorem3";
  c.s = s;
  c.t = t;
  c.saturated_form = true;
  c.graph = Graph(n);
  for (int i = 1; i <= s; ++i) c.labels.push_back(indexed("a", i));
  for (int i = 1; i <= t; ++i) c.labels.push_back(indexed("b", i));
  for (int i = 1; i <= j; ++i) c.labels.push_back(indexed("c", i));
  c.expected_edge_count = static_cast<int>(binom2(n) - static_cast<std::int64_t>(j) * (s + t - 2) - (2 * t - 3));

  for (int i = 1; i <= s; ++i)
    for (int k = i + 1; k <= s; ++k) c.graph.add_edge(A(i), A(k));
  for (int i = j + 3; i <= t; ++i)
    for (int k = i + 1; k <= t; ++k) c.graph.add_edge(B(i), B(k));
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= t; ++k)
      if (i != 1 || k != 1) c.graph.add_edge(A(i), B(k));
  for (int i = 2; i <= t; ++i)
    for (int k = 1; k <= j; ++k) c.graph.add_edge(B(i), C(k));
  c.graph.add_edge(B(1), B(j + 3));
  check_count(c);

  auto range = [](auto f, int lo, int hi) {
    VertexSet out;
    for (int i = lo; i <= hi; ++i) out.insert(f(i));
    return out;
  };
  auto& sch = c.saturation_schedule;
  auto hint = [&](int u, int v, VertexSet ps, VertexSet pt) {
    sch.push_back({make_edge(u, v), KstParts{ps, pt}});
  };
  sch.push_back({make_edge(A(1), B(1)), std::nullopt});
  for (int i = 1; i <= j; ++i)
    hint(B(1), C(i), VertexSet::single(C(i)) | range(A, 2, s), range(B, 1, t));
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= j; ++k)
      hint(A(i), C(k), VertexSet::single(C(k)) | (range(A, 1, s) - VertexSet::single(A(i))),
           VertexSet::single(A(i)) | range(B, 1, t - 1));
  for (int i = 1; i <= j; ++i)
    for (int k = i + 1; k <= j; ++k)
      hint(C(i), C(k), VertexSet::single(C(i)) | range(A, 1, s - 1), VertexSet::single(C(k)) | range(B, 1, t - 1));
  for (int i = 1; i <= j + 1; ++i) {
    const Edge e = make_edge(B(1 + i), B(j + 3));
    if (j >= s) {
      // The drawn t-part names a_(j+1), which does not exist for j >= s.
      sch.push_back({e, std::nullopt});
      continue;
    }
    const VertexSet pt = range(A, 1, j + 1) | range(B, j + 4, t) | VertexSet::single(B(1)) | VertexSet::single(B(1 + i));
    const VertexSet ps = j <= s - 2 ? range(C, 1, j) | range(A, j + 2, s) | VertexSet::single(B(j + 3))
                                    : range(C, 1, s - 1) | VertexSet::single(B(j + 3));
    hint(B(1 + i), B(j + 3), ps, pt);
  }
  for (int i = 1; i < j + 3; ++i) {
    for (int k = j + 4; k <= t; ++k) {
      const Edge e = make_edge(B(i), B(k));
      if (i == 1) {
        // The drawn t-part lists b_1 twice here and has only t - 1 vertices.
        sch.push_back({e, std::nullopt});
        continue;
      }
      const VertexSet pt = VertexSet::single(B(i)) | range(C, 1, j) | VertexSet::single(B(1)) |
                           VertexSet::single(A(s)) | (range(B, j + 3, t) - VertexSet::single(B(k)));
      hint(B(i), B(k), VertexSet::single(B(k)) | range(A, 1, s - 1), pt);
    }
  }
  for (int i = 1; i <= j + 2; ++i) {
    for (int k = i + 1; k <= j + 2; ++k) {
      const VertexSet pt =
          VertexSet::single(B(k)) | VertexSet::single(A(s)) | range(C, 1, j) | range(B, j + 3, t);
      hint(B(i), B(k), VertexSet::single(B(i)) | range(A, 1, s - 1), pt);
    }
  }
  return c;
}

ConstructionOutput appendix_graph(int s, int t) {
  ConstructionOutput c;
  c.name = "appendix";
  c.s = s;
  c.t = t;
  if (s == 4 && t == 6) {
    // a = 0, a1..a4 = 1..4, b = 5, b1..b4 = 6..9, c = 10.
    c.graph = Graph(11);
    c.labels = {"a", "a1", "a2", "a3", "a4", "b", "b1", "b2", "b3", "b4", "c"};
    for (int hub : {0, 5}) {
      for (int i = 1; i <= 4; ++i) c.graph.add_edge(hub, hub + i);
      for (int i = 1; i <= 3; ++i) c.graph.add_edge(hub + i, hub + i + 1);
    }
    c.graph.add_edge(10, 1);
    c.graph.add_edge(10, 4);
    c.graph.add_edge(10, 9);
    c.graph.add_edge(4, 7);
    c.expected_edge_count = 18;
  } else if ((s == 6 && t == 8) || (s == 8 && t == 10)) {
    static const std::vector<std::pair<int, int>> k68 = {
        {1, 6},  {1, 8},  {2, 10}, {2, 12},  {3, 4},   {3, 5},   {3, 13},  {3, 14}, {4, 7},
        {4, 12}, {4, 14}, {5, 7},  {5, 9},   {5, 10},  {6, 8},   {6, 10},  {6, 12}, {7, 9},
        {7, 14}, {8, 10}, {8, 15}, {10, 12}, {10, 15}, {11, 13}, {12, 13}, {13, 14}};
    static const std::vector<std::pair<int, int>> k810 = {
        {1, 3},   {1, 6},   {1, 9},   {1, 11},  {1, 16},  {1, 17},  {1, 18},  {2, 7},   {2, 9},
        {2, 10},  {2, 14},  {3, 8},   {3, 11},  {3, 18},  {4, 9},   {4, 13},  {4, 14},  {4, 15},
        {5, 6},   {5, 8},   {6, 11},  {7, 13},  {8, 17},  {8, 19},  {9, 14},  {9, 15},  {9, 19},
        {10, 13}, {10, 17}, {11, 17}, {12, 14}, {12, 15}, {13, 14}, {18, 19}};
    const auto& list = s == 6 ? k68 : k810;
    const int n = s + t + 1;
    c.graph = Graph(n);
    for (int i = 1; i <= n; ++i) c.labels.push_back(std::to_string(i));
    for (auto [u, v] : list) c.graph.add_edge(u - 1, v - 1);
    c.expected_edge_count = static_cast<int>(list.size());
  } else {
    throw InvalidArgument("appendix graphs exist only for (4,6), (6,8), (8,10)");
  }
  check_count(c);
  return c;
}

ScheduleReplay certificate_from_schedule(const ConstructionOutput& c) {
  if (c.saturated_form) throw InvalidArgument(c.name + " carries a saturation schedule, not an erase schedule");
  ScheduleReplay out;
  out.certificate.mode = ExactMode{c.s, c.t};
  Graph cur = c.graph;
  for (std::size_t i = 0; i < c.schedule.size(); ++i) {
    const ScheduleStep& step = c.schedule[i];
    const std::string where = "schedule entry " + std::to_string(i) + " (" + to_string(step.edge) + ")";
    if (!cur.has_edge(step.edge)) {
      out.notes.push_back(where + ": edge already gone, skipped");
      continue;
    }
    std::optional<ExactWitness> w;
    if (step.excluded_hint) {
      w = find_exact_witness_excluding(cur, step.edge, c.s, c.t, *step.excluded_hint);
      if (w) ++out.hinted_steps;
      else out.notes.push_back(where + ": hint " + to_string(*step.excluded_hint) + " failed, searched instead");
    }
    if (!w) w = find_exact_witness(cur, step.edge, c.s, c.t);
    if (!w) {
      out.notes.push_back(where + ": no witness, left for completion");
      continue;
    }
    out.certificate.steps.push_back({step.edge, *w});
    cur.remove_edge(step.edge);
    ++out.scheduled_steps;
  }
  const EraseOutcome rest = greedy_erase(cur, out.certificate.mode);
  for (const EraseStep& st : rest.certificate.steps) out.certificate.steps.push_back(st);
  out.completion_steps = rest.erased();
  out.complete = rest.succeeded();
  if (!out.complete)
    out.notes.push_back("completion stalled with " + std::to_string(rest.stuck->remaining.edge_count()) + " edges left");
  return out;
}

SaturationReplay replay_saturation_schedule(const ConstructionOutput& c) {
  SaturationReplay out;
  out.kst_free = !contains_kst(c.graph, c.s, c.t).has_value();
  Graph cur = c.graph;
  for (std::size_t i = 0; i < c.saturation_schedule.size(); ++i) {
    const SaturationHint& step = c.saturation_schedule[i];
    const std::string where = "addition " + std::to_string(i) + " (" + to_string(step.edge) + ")";
    if (cur.has_edge(step.edge)) {
      out.notes.push_back(where + ": edge already present");
      return out;
    }
    cur.add_edge(step.edge);
    std::optional<KstParts> parts;
    if (step.parts) {
      const std::string why = check_kst_through_edge(cur, step.edge, *step.parts, c.s, c.t);
      if (why.empty()) {
        parts = step.parts;
        ++out.hinted_steps;
      } else {
        out.notes.push_back(where + ": hinted parts fail (" + why + "), searched instead");
      }
    }
    if (!parts) parts = find_kst_through_edge(cur, step.edge, c.s, c.t);
    if (!parts) {
      out.notes.push_back(where + ": creates no K_{s,t}");
      return out;
    }
    out.order.push_back({step.edge, parts->first, parts->second});
  }
  out.complete = cur.edge_count() == binom2(cur.vertex_count());
  if (!out.complete) out.notes.push_back("schedule leaves " + std::to_string(binom2(cur.vertex_count()) - cur.edge_count()) + " edges missing");
  return out;
}

}  // namespace wsatlab
