#include "wsatlab/erase.hpp"

#include <algorithm>
#include <bitset>

#include "wsatlab/error.hpp"

namespace wsatlab {

int excluded_count(const EraseMode& mode, int n) {
  if (const auto* exact = std::get_if<ExactMode>(&mode)) return n - exact->s - exact->t;
  return std::get<RelaxedMode>(mode).j;
}

std::string describe(const EraseMode& mode) {
  if (const auto* exact = std::get_if<ExactMode>(&mode))
    return "exact(s=" + std::to_string(exact->s) + ",t=" + std::to_string(exact->t) + ")";
  return "relaxed(j=" + std::to_string(std::get<RelaxedMode>(mode).j) + ")";
}

namespace {

void require_edge(const Graph& g, Edge e) {
  if (e.u >= e.v || e.v >= g.vertex_count() || !g.has_edge(e))
    throw InvalidArgument("edge " + to_string(e) + " is not in the graph");
}

void require_exact_params(const Graph& g, int s, int t) {
  if (s < 1 || t < s) throw InvalidArgument("exact erase needs 1 <= s <= t");
  if (s + t > g.vertex_count())
    throw InvalidArgument("exact erase needs s + t <= n (s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                          ", n=" + std::to_string(g.vertex_count()) + ")");
}

// Reachable set from `from` inside g[within] with the single edge e deleted.
VertexSet reach_without(const Graph& g, int from, VertexSet within, Edge e) {
  VertexSet reach = VertexSet::single(from);
  VertexSet frontier = reach;
  while (!frontier.empty()) {
    VertexSet next;
    for (int x : frontier) {
      VertexSet nb = g.neighbors(x);
      if (x == e.u) nb.erase(e.v);
      if (x == e.v) nb.erase(e.u);
      next |= nb;
    }
    next = (next & within) - reach;
    reach |= next;
    frontier = next;
  }
  return reach;
}

using SizeMask = std::bitset<Graph::kMaxVertices + 1>;

std::optional<ExactWitness> witness_for_excluded(const Graph& g, Edge e, int s, int t, VertexSet excluded) {
  const VertexSet avail = g.vertices() - excluded;
  const VertexSet cu = reach_without(g, e.u, avail, e);
  if (cu.contains(e.v)) return std::nullopt;
  const VertexSet cv = reachable(g, e.v, avail - cu);
  const int su = cu.size();
  const int sv = cv.size();
  if ((su > s && su > t) || (sv > s && sv > t) || su + sv > s + t) return std::nullopt;

  // The other components are atoms: each goes wholly to one side. Subset-sum
  // over their sizes with one reachability row per prefix, so an assignment
  // can be read back from the rows.
  std::array<VertexSet, Graph::kMaxVertices> comps{};
  int count = 0;
  VertexSet rest = avail - cu - cv;
  while (!rest.empty()) {
    comps[count] = reachable(g, rest.front(), rest);
    rest -= comps[count];
    ++count;
  }
  std::array<SizeMask, Graph::kMaxVertices + 1> rows{};
  rows[0].set(0);
  for (int k = 0; k < count; ++k) rows[k + 1] = rows[k] | (rows[k] << comps[k].size());

  // side1 (size s) takes cu first, then cv: the first feasible orientation wins.
  for (int orient = 0; orient < 2; ++orient) {
    const VertexSet anchor = orient == 0 ? cu : cv;
    const VertexSet other = orient == 0 ? cv : cu;
    const int need = s - anchor.size();
    if (need < 0 || t - other.size() < 0 || !rows[count].test(static_cast<std::size_t>(need))) continue;
    VertexSet side1 = anchor;
    int remaining = need;
    for (int k = count; k > 0; --k) {
      if (rows[k - 1].test(static_cast<std::size_t>(remaining))) continue;
      side1 |= comps[k - 1];
      remaining -= comps[k - 1].size();
    }
    ExactWitness w{e, excluded, side1, avail - side1};
    return w;
  }
  return std::nullopt;
}

// Visits the k-subsets of pool in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(VertexSet pool, int k, VertexSet acc, F& f) {
  if (k == 0) return f(acc);
  while (pool.size() >= k) {
    const int v = pool.front();
    pool.erase(v);
    if (for_each_subset(pool, k - 1, acc | VertexSet::single(v), f)) return true;
  }
  return false;
}

// Decision-only split test for a fixed excluded set.
bool split_exists(const Graph& g, Edge e, int s, VertexSet excluded) {
  const VertexSet avail = g.vertices() - excluded;
  const VertexSet cu = reach_without(g, e.u, avail, e);
  if (cu.contains(e.v)) return false;
  const VertexSet cv = reachable(g, e.v, avail - cu);
  const int need_u = s - cu.size();
  const int need_v = s - cv.size();
  if (need_u < 0 && need_v < 0) return false;
  std::uint64_t sums = 1;
  VertexSet rest = avail - cu - cv;
  while (!rest.empty()) {
    const VertexSet comp = reachable(g, rest.front(), rest);
    rest -= comp;
    sums |= sums << comp.size();
  }
  return (need_u >= 0 && ((sums >> need_u) & 1U)) || (need_v >= 0 && ((sums >> need_v) & 1U));
}

bool connected_after(const Graph& g, Edge e, VertexSet removed) {
  return reach_without(g, e.u, g.vertices() - removed, e).contains(e.v);
}

}  // namespace

std::optional<ExactWitness> find_exact_witness(const Graph& g, Edge e, int s, int t) {
  require_exact_params(g, s, t);
  require_edge(g, e);
  const int j = g.vertex_count() - s - t;
  std::optional<ExactWitness> found;
  auto visit = [&](VertexSet excluded) {
    found = witness_for_excluded(g, e, s, t, excluded);
    return found.has_value();
  };
  for_each_subset(g.vertices() - e.ends(), j, VertexSet(), visit);
  return found;
}

std::optional<ExactWitness> find_exact_witness_excluding(const Graph& g, Edge e, int s, int t, VertexSet excluded) {
  require_exact_params(g, s, t);
  require_edge(g, e);
  if (excluded.size() != g.vertex_count() - s - t || excluded.intersects(e.ends()) ||
      !excluded.is_subset_of(g.vertices()))
    return std::nullopt;
  return witness_for_excluded(g, e, s, t, excluded);
}

std::string check_exact_witness(const Graph& g, const ExactWitness& w, int s, int t) {
  const Edge e = w.edge;
  if (e.u >= e.v || e.v >= g.vertex_count() || !g.has_edge(e)) return "edge " + to_string(e) + " is not present";
  if (w.side1.size() != s) return "side1 has size " + std::to_string(w.side1.size()) + ", expected " + std::to_string(s);
  if (w.side2.size() != t) return "side2 has size " + std::to_string(w.side2.size()) + ", expected " + std::to_string(t);
  if (w.side1.intersects(w.side2) || w.side1.intersects(w.excluded) || w.side2.intersects(w.excluded) ||
      (w.side1 | w.side2 | w.excluded) != g.vertices())
    return "excluded, side1 and side2 do not partition the vertex set";
  const bool forward = w.side1.contains(e.u) && w.side2.contains(e.v);
  const bool backward = w.side1.contains(e.v) && w.side2.contains(e.u);
  if (!forward && !backward) return "edge " + to_string(e) + " does not cross the sides";
  for (int x : w.side1) {
    VertexSet cross = g.neighbors(x) & w.side2;
    if (x == e.u) cross.erase(e.v);
    if (x == e.v) cross.erase(e.u);
    if (!cross.empty())
      return "edge " + to_string(make_edge(x, cross.front())) + " also crosses the sides";
  }
  return {};
}

std::optional<Witness> find_relaxed_witness(const Graph& g, Edge e, int j) {
  if (j < 0) throw InvalidArgument("relaxed erase needs j >= 0");
  require_edge(g, e);
  const int n = g.vertex_count();
  if (n < j + 1) throw InvalidArgument("relaxed erase needs at least j + 1 vertices");
  if (n == j + 1) return Witness{TrivialSmallGraph{}};
  const Graph h = g.without_edge(e);
  VertexCut cut = min_vertex_cut(h, e.u, e.v, h.vertices());
  if (cut.size > j) return std::nullopt;
  VertexSet filler = h.vertices() - e.ends() - cut.cut;
  while (cut.cut.size() < j) {
    const int v = filler.front();
    filler.erase(v);
    cut.cut.insert(v);
  }
  return Witness{RelaxedWitness{e, cut.cut}};
}

std::string check_relaxed_witness(const Graph& g, const RelaxedWitness& w, int j) {
  const Edge e = w.edge;
  if (e.u >= e.v || e.v >= g.vertex_count() || !g.has_edge(e)) return "edge " + to_string(e) + " is not present";
  if (w.cut.size() != j) return "cut has size " + std::to_string(w.cut.size()) + ", expected " + std::to_string(j);
  if (w.cut.intersects(e.ends())) return "cut contains an endpoint";
  if (!w.cut.is_subset_of(g.vertices())) return "cut leaves the vertex set";
  if (connected_after(g, e, w.cut)) return "endpoints stay connected after removing the cut";
  return {};
}

std::optional<Witness> find_witness(const Graph& g, Edge e, const EraseMode& mode) {
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    auto w = find_exact_witness(g, e, exact->s, exact->t);
    if (!w) return std::nullopt;
    return Witness{*w};
  }
  return find_relaxed_witness(g, e, std::get<RelaxedMode>(mode).j);
}

bool has_witness(const Graph& g, Edge e, const EraseMode& mode) {
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    const int j = g.vertex_count() - exact->s - exact->t;
    auto visit = [&](VertexSet excluded) { return split_exists(g, e, exact->s, excluded); };
    return for_each_subset(g.vertices() - e.ends(), j, VertexSet(), visit);
  }
  const int j = std::get<RelaxedMode>(mode).j;
  if (g.vertex_count() == j + 1) return true;
  return min_vertex_cut(g.without_edge(e), e.u, e.v, g.vertices()).size <= j;
}

std::string check_witness(const Graph& g, const EraseStep& step, const EraseMode& mode) {
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    const auto* w = std::get_if<ExactWitness>(&step.witness);
    if (!w) return "exact mode needs an exact witness";
    if (w->edge != step.edge) return "witness edge differs from the step edge";
    return check_exact_witness(g, *w, exact->s, exact->t);
  }
  const int j = std::get<RelaxedMode>(mode).j;
  if (std::holds_alternative<TrivialSmallGraph>(step.witness)) {
    if (!g.has_edge(step.edge)) return "edge " + to_string(step.edge) + " is not present";
    if (g.vertex_count() != j + 1) return "trivial erase needs exactly j + 1 vertices";
    return {};
  }
  const auto* w = std::get_if<RelaxedWitness>(&step.witness);
  if (!w) return "relaxed mode needs a cut witness";
  if (w->edge != step.edge) return "witness edge differs from the step edge";
  return check_relaxed_witness(g, *w, j);
}

namespace {

void validate_mode(const Graph& g, const EraseMode& mode) {
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    require_exact_params(g, exact->s, exact->t);
  } else {
    const int j = std::get<RelaxedMode>(mode).j;
    if (j < 0 || g.vertex_count() < j + 1) throw InvalidArgument("relaxed erase needs j >= 0 and n >= j + 1");
  }
}

}  // namespace

EraseOutcome greedy_erase(const Graph& g, const EraseMode& mode) {
  validate_mode(g, mode);
  EraseOutcome out;
  out.certificate.mode = mode;
  Graph cur = g;
  while (!cur.empty()) {
    bool progressed = false;
    for (const Edge& e : cur.edges()) {
      if (auto w = find_witness(cur, e, mode)) {
        out.certificate.steps.push_back({e, *w});
        cur.remove_edge(e);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      out.stuck = StuckReport{cur, cur.edges()};
      break;
    }
  }
  return out;
}

bool has_erasable_edge(const Graph& g, const EraseMode& mode) {
  validate_mode(g, mode);
  for (const Edge& e : g.edges())
    if (find_witness(g, e, mode)) return true;
  return false;
}

VerificationReport replay_certificate(const Graph& g, const EraseCertificate& cert) {
  VerificationReport report;
  Graph cur = g;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const EraseStep& step = cert.steps[i];
    auto fail = [&](const std::string& why) {
      report.valid = false;
      report.failed_step = static_cast<int>(i);
      report.message = "step " + std::to_string(i) + " (" + to_string(step.edge) + "): " + why;
      return report;
    };
    if (step.edge.u >= step.edge.v || step.edge.v >= cur.vertex_count() || !cur.has_edge(step.edge))
      return fail("edge is absent at its turn");
    const std::string why = check_witness(cur, step, cert.mode);
    if (!why.empty()) return fail(why);
    cur.remove_edge(step.edge);
  }
  if (!cur.empty()) {
    report.valid = false;
    report.failed_step = static_cast<int>(cert.steps.size());
    report.message = "certificate leaves " + std::to_string(cur.edge_count()) + " edges";
  }
  return report;
}

namespace {

// Extends `chosen` within `pool` until it has `need` more members while the
// common neighbourhood keeps at least `t` vertices with `required` inside.
bool grow_part(const Graph& g, const std::vector<int>& pool, std::size_t start, int need, VertexSet chosen,
               VertexSet common, VertexSet required, int t, KstParts& out) {
  if (!required.is_subset_of(common) || common.size() < t) return false;
  if (need == 0) {
    VertexSet b = required;
    for (int v : common - required) {
      if (b.size() == t) break;
      b.insert(v);
    }
    out = {chosen, b};
    return true;
  }
  for (std::size_t i = start; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
    const int v = pool[i];
    if (required.contains(v)) continue;
    if (grow_part(g, pool, i + 1, need - 1, chosen | VertexSet::single(v), common & g.neighbors(v), required, t,
                  out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<KstParts> contains_kst(const Graph& g, int s, int t) {
  if (s < 1 || t < s) throw InvalidArgument("K_{s,t} search needs 1 <= s <= t");
  std::vector<int> pool;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= t) pool.push_back(v);
  std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  KstParts out;
  if (grow_part(g, pool, 0, s, VertexSet(), g.vertices(), VertexSet(), t, out)) return out;
  return std::nullopt;
}

std::optional<KstParts> find_kst_through_edge(const Graph& g, Edge e, int s, int t) {
  if (s < 1 || t < s) throw InvalidArgument("K_{s,t} search needs 1 <= s <= t");
  if (!g.has_edge(e)) return std::nullopt;
  for (int orient = 0; orient < 2; ++orient) {
    const int x = orient == 0 ? e.u : e.v;  // endpoint in the s-part
    const int y = orient == 0 ? e.v : e.u;  // endpoint in the t-part
    const std::vector<int> pool = (g.neighbors(y) - VertexSet::single(x)).to_vector();
    KstParts out;
    if (grow_part(g, pool, 0, s - 1, VertexSet::single(x), g.neighbors(x), VertexSet::single(y), t, out))
      return out;
  }
  return std::nullopt;
}

std::string check_kst_through_edge(const Graph& g, Edge e, const KstParts& parts, int s, int t) {
  const auto& [a, b] = parts;
  if (a.size() != s || b.size() != t) return "parts have sizes " + std::to_string(a.size()) + " and " +
                                             std::to_string(b.size());
  if (a.intersects(b)) return "parts overlap";
  if (!((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))))
    return "edge " + to_string(e) + " does not cross the parts";
  for (int x : a)
    if (!b.is_subset_of(g.neighbors(x))) return "cross pair missing at vertex " + std::to_string(x);
  return {};
}

SaturationReport is_weakly_saturated(const Graph& h, int s, int t) {
  if (s < 1 || t < s || h.vertex_count() < s + t) throw InvalidArgument("saturation check needs 1 <= s <= t, s + t <= n");
  SaturationReport report;
  report.kst = contains_kst(h, s, t);
  report.kst_free = !report.kst.has_value();
  report.complement_erase = greedy_erase(complement(h), ExactMode{s, t});
  for (const EraseStep& step : report.complement_erase.certificate.steps) {
    const auto& w = std::get<ExactWitness>(step.witness);
    report.order.push_back({step.edge, w.side1, w.side2});
  }
  return report;
}

}  // namespace wsatlab
