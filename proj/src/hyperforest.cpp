#include "wsatlab/hyperforest.hpp"

#include <algorithm>
#include <numeric>

#include "wsatlab/error.hpp"

namespace wsatlab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // False when a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

void normalize(HyperforestState& state) { std::sort(state.hyperedges.begin(), state.hyperedges.end()); }

}  // namespace

int HyperforestState::component_count() const {
  UnionFind uf(vertex_count);
  int count = vertex_count;
  for (VertexSet f : hyperedges) {
    const int root = f.front();
    for (int v : f)
      if (uf.unite(root, v)) --count;
  }
  return count;
}

std::pair<int, int> increment_vector(Increment inc) {
  switch (inc) {
    case Increment::NoSplit: return {1, 0};
    case Increment::Split: return {1, 1};
    case Increment::OneSingleton: return {0, 1};
    case Increment::TwoSingletons: return {-1, 1};
  }
  return {0, 0};
}

std::string to_string(Increment inc) {
  const auto [df, dc] = increment_vector(inc);
  return "(" + std::to_string(df) + "," + std::to_string(dc) + ")";
}

HyperforestState init_hyperforest(const Graph& g) {
  HyperforestState state;
  state.vertex_count = g.vertex_count();
  for (VertexSet comp : connected_components(g))
    if (comp.size() >= 2) state.hyperedges.push_back(comp);
  normalize(state);
  return state;
}

StepResult apply_step(const HyperforestState& state, const Graph& g_before, Edge e, int closed, int step_index) {
  if (!g_before.has_edge(e)) throw TraceError("edge " + to_string(e) + " is not in the graph", step_index);
  if (closed < 0 || closed >= g_before.vertex_count() || e.touches(closed))
    throw TraceError("closed vertex " + std::to_string(closed) + " is invalid for edge " + to_string(e), step_index);

  const Graph g_after = g_before.without_edge(e);
  std::vector<VertexSet> hyper;
  std::size_t holder = state.hyperedges.size();
  int holders = 0;
  for (std::size_t i = 0; i < state.hyperedges.size(); ++i) {
    if (e.ends().is_subset_of(state.hyperedges[i])) {
      holder = i;
      ++holders;
    }
  }
  if (holders != 1)
    throw TraceError("edge " + to_string(e) + " lies in " + std::to_string(holders) + " hyperedges", step_index);

  // Edge-operation.
  const VertexSet f = state.hyperedges[holder];
  const auto parts = connected_components(g_after, f);
  Increment inc = Increment::NoSplit;
  if (parts.size() == 2) {
    const int small = std::min(parts[0].size(), parts[1].size());
    const int big = std::max(parts[0].size(), parts[1].size());
    inc = small > 1 ? Increment::Split : big > 1 ? Increment::OneSingleton : Increment::TwoSingletons;
  } else if (parts.size() != 1) {
    throw TraceError("hyperedge " + to_string(f) + " splits into " + std::to_string(parts.size()) + " parts",
                     step_index);
  }
  for (std::size_t i = 0; i < state.hyperedges.size(); ++i)
    if (i != holder) hyper.push_back(state.hyperedges[i]);
  for (VertexSet p : parts)
    if (p.size() > 1) hyper.push_back(p);

  // Vertex-operation, in ascending order of minimum vertex.
  std::sort(hyper.begin(), hyper.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  const VertexSet cv = VertexSet::single(closed);
  std::vector<VertexSet> next;
  for (VertexSet h : hyper) {
    if (!h.contains(closed)) {
      next.push_back(h);
      continue;
    }
    for (VertexSet piece : connected_components(g_after, h - cv)) next.push_back(piece | cv);
  }

  StepResult out;
  out.state.vertex_count = state.vertex_count;
  out.state.hyperedges = std::move(next);
  normalize(out.state);

  TraceRecord& rec = out.record;
  rec.step_index = step_index;
  rec.erased = e;
  rec.closed = closed;
  rec.f_before = state.hyperedge_count();
  rec.c_before = state.component_count();
  rec.f_after = out.state.hyperedge_count();
  rec.c_after = out.state.component_count();
  rec.increment = inc;
  const auto [vf, vc] = increment_vector(inc);
  rec.lambda = rec.f_after - rec.f_before - vf;
  if (rec.c_after - rec.c_before != vc || rec.lambda < 0)
    throw TraceError("change (" + std::to_string(rec.f_after - rec.f_before) + "," +
                         std::to_string(rec.c_after - rec.c_before) + ") does not fit base vector " + to_string(inc),
                     step_index);
  rec.q = rec.s_after() - rec.s_before() - 1;
  return out;
}

PropertyReport check_properties(const HyperforestState& state, const Graph& g) {
  PropertyReport report;
  const auto& hs = state.hyperedges;
  for (const Edge& e : g.edges()) {
    const bool covered = std::any_of(hs.begin(), hs.end(), [&](VertexSet f) { return e.ends().is_subset_of(f); });
    if (!covered) report.violations.push_back("edge " + to_string(e) + " is not covered by a hyperedge");
  }
  for (VertexSet f : hs) {
    if (f.size() < 2) report.violations.push_back("hyperedge " + to_string(f) + " has fewer than two vertices");
    else if (!is_connected(g, f)) report.violations.push_back("hyperedge " + to_string(f) + " induces a disconnected graph");
  }
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t k = i + 1; k < hs.size(); ++k)
      if ((hs[i] & hs[k]).size() > 1)
        report.violations.push_back("hyperedges " + to_string(hs[i]) + " and " + to_string(hs[k]) +
                                    " share more than one vertex");
  // Incidence graph: vertex nodes 0..n-1, hyperedge nodes n..n+f-1.
  UnionFind uf(state.vertex_count + static_cast<int>(hs.size()));
  bool acyclic = true;
  for (std::size_t i = 0; i < hs.size() && acyclic; ++i)
    for (int v : hs[i])
      if (!uf.unite(v, state.vertex_count + static_cast<int>(i))) acyclic = false;
  if (!acyclic) report.violations.push_back("incidence graph has a cycle");
  return report;
}

ProcessTrace trace_process(const Graph& g, const EraseCertificate& cert) {
  const auto* exact = std::get_if<ExactMode>(&cert.mode);
  if (!exact || exact->s + exact->t + 1 != g.vertex_count())
    throw InvalidArgument("tracing needs an exact certificate with n = s + t + 1");
  const VerificationReport replay = replay_certificate(g, cert);
  if (!replay.valid) throw TraceError("certificate does not replay: " + replay.message, replay.failed_step + 1);

  ProcessTrace trace;
  trace.vertex_count = g.vertex_count();
  HyperforestState state = init_hyperforest(g);
  trace.s0 = state.semi_invariant();
  Graph cur = g;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const int step = static_cast<int>(i) + 1;
    const EraseStep& es = cert.steps[i];
    const auto& w = std::get<ExactWitness>(es.witness);
    StepResult r = apply_step(state, cur, es.edge, w.excluded.front(), step);
    cur.remove_edge(es.edge);
    const PropertyReport props = check_properties(r.state, cur);
    if (!props.ok()) throw TraceError(props.violations.front(), step);
    if (r.record.s_after() < r.record.s_before() + 1) throw TraceError("semi-invariant did not increase", step);
    state = std::move(r.state);
    trace.total_q += r.record.q;
    trace.records.push_back(r.record);
  }
  trace.s_final = state.semi_invariant();
  trace.final_state = state;
  const int m = static_cast<int>(trace.records.size());
  if (m + trace.total_q != trace.s_final - trace.s0)
    throw TraceError("m + Q differs from s_m - s_0", m);
  if (trace.s_final != 2 * g.vertex_count()) throw TraceError("final semi-invariant is not 2n", m);
  return trace;
}

}  // namespace wsatlab
