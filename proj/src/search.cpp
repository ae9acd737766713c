#include "wsatlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "wsatlab/bounds.hpp"
#include "wsatlab/canonical.hpp"
#include "wsatlab/connectivity.hpp"
#include "wsatlab/error.hpp"

namespace wsatlab {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::ExhaustiveLabeled: return "labeled";
    case Strategy::IsomorphFree: return "isofree";
    case Strategy::Heuristic: return "heuristic";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "labeled" || name == "exhaustive") return Strategy::ExhaustiveLabeled;
  if (name == "isofree" || name == "isomorph-free") return Strategy::IsomorphFree;
  if (name == "heuristic") return Strategy::Heuristic;
  throw InvalidArgument("unknown strategy '" + name + "' (labeled, isofree, heuristic)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "found";
    case Verdict::ExhaustedNone: return "exhausted-none";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Stall remainder of the erase process; scans cyclically instead of restarting.
Graph erase_until_stall(const Graph& g, const EraseMode& mode) {
  Graph cur = g;
  const std::vector<Edge> edges = g.edges();
  std::vector<char> alive(edges.size(), 1);
  std::size_t left = edges.size();
  std::size_t misses = 0;
  for (std::size_t i = 0; left > 0 && misses < left; i = (i + 1) % edges.size()) {
    if (!alive[i]) continue;
    if (has_witness(cur, edges[i], mode)) {
      cur.remove_edge(edges[i]);
      alive[i] = 0;
      --left;
      misses = 0;
    } else {
      ++misses;
    }
  }
  return cur;
}

void check_mode(int n, const EraseMode& mode) {
  if (n < 1 || n > Graph::kMaxVertices) throw InvalidArgument("vertex count out of range");
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    if (exact->s < 1 || exact->t < exact->s || exact->s + exact->t > n)
      throw InvalidArgument("exact mode needs 1 <= s <= t and s + t <= n");
  } else {
    const int j = std::get<RelaxedMode>(mode).j;
    if (j < 0 || j + 1 > n) throw InvalidArgument("relaxed mode needs 0 <= j <= n - 1");
  }
}

// The newest edge erasable in the child means the child reduces to its
// parent, which is erasable; otherwise run the full process.
bool child_erasable(const Graph& child, Edge added, const EraseMode& mode) {
  return has_witness(child, added, mode) || is_erasable(child, mode);
}

bool connectivity_obstructed(const Graph& g, int j) {
  if (k_core(g, g.vertices(), j + 2).empty()) return false;
  return has_k_connected_subgraph(g, j + 2).has_value();
}

// Binomials saturating at uint64 max.
class BinomialTable {
 public:
  BinomialTable(int n_max, int k_max) : k_max_(k_max), rows_(n_max + 1, std::vector<std::uint64_t>(k_max + 1, 0)) {
    for (int a = 0; a <= n_max; ++a) {
      rows_[a][0] = 1;
      for (int b = 1; b <= std::min(a, k_max); ++b) {
        const std::uint64_t x = rows_[a - 1][b - 1];
        const std::uint64_t y = b <= a - 1 ? rows_[a - 1][b] : 0;
        rows_[a][b] = x > kMax - y ? kMax : x + y;
      }
    }
  }
  std::uint64_t operator()(int a, int b) const {
    if (b < 0 || a < 0 || b > a || b > k_max_) return 0;
    return rows_[a][b];
  }
  static constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

 private:
  int k_max_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct Counters {
  std::uint64_t examined = 0, pruned = 0, nodes = 0;
  void add(const Counters& o) {
    examined += o.examined;
    pruned += o.pruned;
    nodes += o.nodes;
  }
};

enum class NodeCheck { Pruned, NotErasable, Erasable };

struct LabeledContext {
  const SearchTask& task;
  std::vector<Edge> alphabet;
  int total = 0;  // C(n,2)
  int m = 0;
  int j = 0;
  BinomialTable binom;

  explicit LabeledContext(const SearchTask& t)
      : task(t),
        alphabet(complete_edge_list(t.n)),
        total(static_cast<int>(alphabet.size())),
        m(t.target_edges),
        j(excluded_count(t.mode, t.n)),
        binom(total, t.target_edges) {}

  NodeCheck check(const Graph& g, int k, Edge added) const {
    if (task.pruning) {
      if (violates_step_bound(g, m - k, task.mode)) return NodeCheck::Pruned;
      if (connectivity_obstructed(g, j)) return NodeCheck::Pruned;
      return child_erasable(g, added, task.mode) ? NodeCheck::Erasable : NodeCheck::NotErasable;
    }
    if (k < m) return NodeCheck::Erasable;
    return is_erasable(g, task.mode) ? NodeCheck::Erasable : NodeCheck::NotErasable;
  }
};

struct Subtask {
  std::vector<int> prefix;  // alphabet indices, increasing
};

// Depth-first walk over increasing index sequences. Nodes at depth `cut`
// (when cut < m) are handed to on_cut instead of being expanded.
template <typename Abort, typename OnCut>
class Walker {
 public:
  Walker(const LabeledContext& ctx, int cut, Abort& abort, OnCut& on_cut)
      : ctx_(ctx), cut_(cut), abort_(abort), on_cut_(on_cut) {}

  Counters counters;
  std::optional<Graph> found;
  std::vector<int> path;

  // g holds path; returns true when found or aborted.
  bool descend(Graph& g, int k, int last) {
    if (k == ctx_.m) {
      found = g;
      return true;
    }
    if (k == cut_) {
      on_cut_(path);
      return false;
    }
    for (int i = last + 1; i <= ctx_.total - (ctx_.m - k); ++i) {
      if (abort_()) return true;
      const Edge e = ctx_.alphabet[i];
      g.add_edge(e);
      path.push_back(i);
      ++counters.nodes;
      const NodeCheck verdict = ctx_.check(g, k + 1, e);
      bool stop = false;
      if (k + 1 == ctx_.m) {
        if (verdict == NodeCheck::Pruned) {
          ++counters.pruned;
        } else {
          ++counters.examined;
          if (verdict == NodeCheck::Erasable) stop = descend(g, k + 1, i);
        }
      } else if (verdict == NodeCheck::Erasable) {
        stop = descend(g, k + 1, i);
      } else {
        counters.pruned += ctx_.binom(ctx_.total - i - 1, ctx_.m - k - 1);
      }
      path.pop_back();
      if (stop) return true;
      g.remove_edge(e);
    }
    return false;
  }

 private:
  const LabeledContext& ctx_;
  int cut_;
  Abort& abort_;
  OnCut& on_cut_;
};

template <typename Abort, typename OnCut>
Walker<Abort, OnCut> make_walker(const LabeledContext& ctx, int cut, Abort& abort, OnCut& on_cut) {
  return Walker<Abort, OnCut>(ctx, cut, abort, on_cut);
}

std::string task_signature(const SearchTask& task, std::size_t subtasks) {
  std::ostringstream out;
  out << "task n=" << task.n << " mode=" << describe(task.mode) << " m=" << task.target_edges
      << " pruning=" << (task.pruning ? 1 : 0) << " split=" << task.split_depth << " subtasks=" << subtasks;
  return out.str();
}

constexpr const char* kCheckpointHeader = "wsatlab-checkpoint 1";

class Checkpoint {
 public:
  Checkpoint(const std::string& path, const std::string& signature) : path_(path) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (in) {
      std::string line;
      int line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
          if (line != kCheckpointHeader) throw ParseError("not a wsatlab checkpoint", line_no);
        } else if (line_no == 2) {
          if (line != signature) throw InvalidArgument("checkpoint " + path_ + " belongs to a different search: " + line);
        } else {
          std::istringstream fields(line);
          std::string tag;
          std::size_t idx = 0;
          Counters c;
          if (!(fields >> tag >> idx >> c.examined >> c.pruned >> c.nodes) || tag != "done")
            throw ParseError("bad checkpoint record '" + line + "'", line_no);
          done_[idx] = c;
        }
      }
      if (line_no < 2) throw ParseError("truncated checkpoint " + path_);
      out_.open(path_, std::ios::app);
    } else {
      out_.open(path_);
      out_ << kCheckpointHeader << '\n' << signature << '\n';
      out_.flush();
    }
    if (!out_) throw InvalidArgument("cannot write checkpoint " + path_);
  }

  const Counters* done(std::size_t idx) const {
    auto it = done_.find(idx);
    return it == done_.end() ? nullptr : &it->second;
  }

  void record(std::size_t idx, const Counters& c) {
    if (path_.empty()) return;
    std::lock_guard<std::mutex> lock(mutex_);
    out_ << "done " << idx << ' ' << c.examined << ' ' << c.pruned << ' ' << c.nodes << '\n';
    out_.flush();
  }

 private:
  std::string path_;
  std::map<std::size_t, Counters> done_;
  std::ofstream out_;
  std::mutex mutex_;
};

int resolve_workers(int workers) {
  if (workers >= 1) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SearchOutcome finish_found(const Graph& g, const EraseMode& mode) {
  SearchOutcome out;
  EraseOutcome erase = greedy_erase(g, mode);
  if (!erase.succeeded()) throw Error("internal: search accepted a graph that greedy_erase rejects");
  const VerificationReport report = replay_certificate(g, erase.certificate);
  if (!report.valid) throw Error("internal: search certificate failed replay: " + report.message);
  out.verdict = Verdict::Found;
  out.graph = g;
  out.certificate = std::move(erase.certificate);
  return out;
}

SearchOutcome labeled_search(const SearchTask& task) {
  const LabeledContext ctx(task);
  const int m = task.target_edges;
  if (ctx.binom(ctx.total, m) >= (std::uint64_t{1} << 62))
    throw InvalidArgument("labeled search space C(" + std::to_string(ctx.total) + "," + std::to_string(m) +
                          ") is too large");

  // Prefix phase: expand to the split depth once, collecting subtasks.
  const int cut = std::clamp(task.split_depth, 0, m);
  std::vector<Subtask> subtasks;
  auto never = [] { return false; };
  auto collect = [&](const std::vector<int>& p) { subtasks.push_back(Subtask{p}); };
  auto head = make_walker(ctx, cut < m ? cut : -1, never, collect);
  Graph root(task.n);
  const bool head_found = head.descend(root, 0, -1);

  SearchOutcome out;
  out.exhaustive = true;
  if (head_found) {
    out = finish_found(*head.found, task.mode);
    out.exhaustive = true;
    out.graphs_examined = head.counters.examined;
    out.pruned = head.counters.pruned;
    out.nodes = head.counters.nodes;
    return out;
  }

  Checkpoint checkpoint(task.checkpoint_path, task_signature(task, subtasks.size()));

  struct Slot {
    Counters counters;
    std::optional<Graph> found;
  };
  std::vector<Slot> slots(subtasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto run_worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= subtasks.size() || idx > best.load()) return;
      if (const Counters* prior = checkpoint.done(idx)) {
        slots[idx].counters = *prior;
        continue;
      }
      auto abort = [&] { return best.load(std::memory_order_relaxed) < idx; };
      auto no_cut = [](const std::vector<int>&) {};
      auto walker = make_walker(ctx, -1, abort, no_cut);
      Graph g(task.n);
      for (int i : subtasks[idx].prefix) g.add_edge(ctx.alphabet[i]);
      walker.path = subtasks[idx].prefix;
      const auto& prefix = subtasks[idx].prefix;
      const bool stop = walker.descend(g, static_cast<int>(prefix.size()), prefix.empty() ? -1 : prefix.back());
      slots[idx].counters = walker.counters;
      if (walker.found) {
        slots[idx].found = walker.found;
        std::size_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
      } else if (!stop) {
        checkpoint.record(idx, walker.counters);
      }
    }
  };

  const int workers = std::min<int>(resolve_workers(task.workers), std::max<std::size_t>(1, subtasks.size()));
  if (workers <= 1) {
    run_worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker);
    for (auto& th : pool) th.join();
  }

  Counters total = head.counters;
  for (const Slot& s : slots) total.add(s.counters);
  const std::size_t winner = best.load();
  if (winner < slots.size()) {
    out = finish_found(*slots[winner].found, task.mode);
    out.exhaustive = true;
  } else {
    out.verdict = Verdict::ExhaustedNone;
  }
  out.graphs_examined = total.examined;
  out.pruned = total.pruned;
  out.nodes = total.nodes;
  return out;
}

// One representative per class: the lexicographically smallest edge list, so
// the result does not depend on which worker reached the class first.
void keep_smallest(std::map<std::string, Graph>& reps, const std::string& key, const Graph& g) {
  auto [it, inserted] = reps.try_emplace(key, g);
  if (!inserted && g.edges() < it->second.edges()) it->second = g;
}

SearchOutcome isomorph_free_search(const SearchTask& task) {
  if (task.n > kCanonicalMaxVertices)
    throw InvalidArgument("isomorph-free search supports n <= " + std::to_string(kCanonicalMaxVertices));
  const int m = task.target_edges;
  const int j = excluded_count(task.mode, task.n);
  const int workers = resolve_workers(task.workers);

  SearchOutcome out;
  out.exhaustive = true;
  std::vector<Graph> level{Graph(task.n)};
  for (int k = 0; k < m && !level.empty(); ++k) {
    const bool leaf = k + 1 == m;
    // Each worker extends a strided share of the level into its own map;
    // maps are merged in key order so the next level is deterministic.
    std::vector<std::map<std::string, Graph>> parts(workers);
    std::vector<Counters> counts(workers);
    auto extend = [&](int w) {
      for (std::size_t r = static_cast<std::size_t>(w); r < level.size(); r += workers) {
        const Graph& rep = level[r];
        for (int u = 0; u < task.n; ++u) {
          for (int v = u + 1; v < task.n; ++v) {
            if (rep.has_edge(u, v)) continue;
            const Edge e{u, v};
            const Graph child = rep.with_edge(e);
            ++counts[w].nodes;
            bool keep;
            if (task.pruning) {
              if (violates_step_bound(child, m - k - 1, task.mode) || connectivity_obstructed(child, j)) {
                ++counts[w].pruned;
                continue;
              }
              if (leaf) ++counts[w].examined;
              keep = child_erasable(child, e, task.mode);
            } else if (leaf) {
              ++counts[w].examined;
              keep = is_erasable(child, task.mode);
            } else {
              keep = true;
            }
            if (!keep) continue;
            keep_smallest(parts[w], canonical_form(child), child);
          }
        }
      }
    };
    if (workers <= 1) {
      extend(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(extend, w);
      for (auto& th : pool) th.join();
    }
    std::map<std::string, Graph> merged;
    for (int w = 0; w < workers; ++w) {
      out.nodes += counts[w].nodes;
      out.pruned += counts[w].pruned;
      out.graphs_examined += counts[w].examined;
      for (auto& [key, g] : parts[w]) keep_smallest(merged, key, g);
    }
    level.clear();
    for (auto& [key, g] : merged) level.push_back(g);
  }
  const std::uint64_t examined = out.graphs_examined, pruned = out.pruned, nodes = out.nodes;
  if (!level.empty()) {
    out = finish_found(level.front(), task.mode);
    out.exhaustive = true;
  } else {
    out.verdict = Verdict::ExhaustedNone;
  }
  out.graphs_examined = examined;
  out.pruned = pruned;
  out.nodes = nodes;
  return out;
}

std::optional<std::pair<Graph, EraseCertificate>> local_search(int n, const EraseMode& mode, int m,
                                                               std::uint64_t seed, std::int64_t budget,
                                                               std::uint64_t* moves_out) {
  const std::vector<Edge> alphabet = complete_edge_list(n);
  const int total = static_cast<int>(alphabet.size());
  if (m < 0 || m > total || m > max_erasable_edges_bound(n, mode)) return std::nullopt;

  std::mt19937_64 rng(seed);
  std::vector<int> order(total);
  for (int i = 0; i < total; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Graph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(alphabet[order[i]]);

  auto score_of = [&](const Graph& h, Graph* rest) {
    Graph r = erase_until_stall(h, mode);
    const int sc = m - r.edge_count();
    if (rest) *rest = std::move(r);
    return sc;
  };
  Graph stuck;
  int score = score_of(g, &stuck);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::int64_t moves = 0;
  for (; moves < budget && score < m; ++moves) {
    // Drop an edge of the stalled core, mostly; add a random non-edge.
    const std::vector<Edge> core = stuck.edges();
    const std::vector<Edge> present = g.edges();
    const std::vector<Edge>& pick_from = (!core.empty() && coin(rng) < 0.8) ? core : present;
    const Edge out_e = pick_from[std::uniform_int_distribution<std::size_t>(0, pick_from.size() - 1)(rng)];
    Edge in_e;
    do {
      in_e = alphabet[std::uniform_int_distribution<int>(0, total - 1)(rng)];
    } while (g.has_edge(in_e));
    Graph cand = g;
    cand.remove_edge(out_e);
    cand.add_edge(in_e);
    Graph cand_stuck;
    const int cand_score = score_of(cand, &cand_stuck);
    if (cand_score > score || (cand_score == score && coin(rng) < 0.3)) {
      g = std::move(cand);
      stuck = std::move(cand_stuck);
      score = cand_score;
    }
  }
  if (moves_out) *moves_out = static_cast<std::uint64_t>(moves);
  if (score < m) return std::nullopt;
  SearchOutcome done = finish_found(g, mode);
  return std::make_pair(*done.graph, *done.certificate);
}

}  // namespace

bool is_erasable(const Graph& g, const EraseMode& mode) { return erase_until_stall(g, mode).empty(); }

int erasable_edge_count(const Graph& g, const EraseMode& mode) {
  return g.edge_count() - erase_until_stall(g, mode).edge_count();
}

std::int64_t max_erasable_edges_bound(int n, const EraseMode& mode) {
  check_mode(n, mode);
  const int j = excluded_count(mode, n);
  const std::int64_t all = binom2(n);
  std::int64_t bound;
  if (j == 0) {
    bound = n - 1;
  } else if (j == 1) {
    bound = 2 * static_cast<std::int64_t>(n) - 3;
  } else {
    bound = fj_bound(j, n);
  }
  return std::clamp<std::int64_t>(bound, 0, all);
}

bool violates_step_bound(const Graph& partial, int remaining, const EraseMode& mode) {
  const int n = partial.vertex_count();
  const int j = excluded_count(mode, n);
  const std::int64_t k = partial.edge_count();
  const std::int64_t m = k + remaining;
  if (j == 0) {
    // Erasable means acyclic; each further edge must merge two components.
    const auto comps = static_cast<std::int64_t>(connected_components(partial).size());
    if (k != n - comps) return true;
    return remaining > comps - 1;
  }
  if (j == 1) {
    const auto comps = static_cast<std::int64_t>(connected_components(partial).size());
    const std::int64_t c_final = std::max<std::int64_t>(1, comps - remaining);
    const std::int64_t f_final = m > 0 ? 1 : 0;
    return m > 2 * static_cast<std::int64_t>(n) - (f_final + 2 * c_final);
  }
  const int span = std::min<std::int64_t>(n, partial.non_isolated().size() + 2 * static_cast<std::int64_t>(remaining));
  const std::int64_t cap = span >= j + 1 ? fj_bound(j, span) : binom2(span);
  return m > std::min(cap, binom2(span));
}

bool prune(const Graph& partial, int remaining, const EraseMode& mode) {
  check_mode(partial.vertex_count(), mode);
  if (violates_step_bound(partial, remaining, mode)) return true;
  if (connectivity_obstructed(partial, excluded_count(mode, partial.vertex_count()))) return true;
  return !partial.empty() && !has_erasable_edge(partial, mode);
}

SearchOutcome exists_erasable(const SearchTask& task) {
  check_mode(task.n, task.mode);
  if (task.target_edges < 0) throw InvalidArgument("target edge count must be non-negative");
  if (task.target_edges > binom2(task.n)) throw InvalidArgument("target edge count exceeds C(n,2)");
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  if (task.target_edges == 0) {
    out = finish_found(Graph(task.n), task.mode);
    out.exhaustive = task.strategy != Strategy::Heuristic;
  } else if (task.strategy == Strategy::ExhaustiveLabeled) {
    out = labeled_search(task);
  } else if (task.strategy == Strategy::IsomorphFree) {
    out = isomorph_free_search(task);
  } else {
    std::uint64_t moves = 0;
    auto hit = local_search(task.n, task.mode, task.target_edges, task.seed, task.iteration_budget, &moves);
    if (hit) {
      out.verdict = Verdict::Found;
      out.graph = hit->first;
      out.certificate = hit->second;
    } else {
      out.verdict = Verdict::Inconclusive;
    }
    out.nodes = moves;
    out.exhaustive = false;
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::optional<std::pair<Graph, EraseCertificate>> heuristic_search(int n, int s, int t, int m, std::uint64_t seed,
                                                                   std::int64_t budget) {
  const EraseMode mode = ExactMode{s, t};
  check_mode(n, mode);
  return local_search(n, mode, m, seed, budget, nullptr);
}

WsatResult compute_wsat(int n, int s, int t, Strategy strategy, int workers) {
  if (strategy == Strategy::Heuristic) throw InvalidArgument("wsat needs an exhaustive strategy");
  const EraseMode mode = ExactMode{s, t};
  check_mode(n, mode);
  const int limit = strategy == Strategy::ExhaustiveLabeled ? 9 : 11;
  if (n > limit)
    throw InvalidArgument(to_string(strategy) + " wsat is limited to n <= " + std::to_string(limit));

  const auto start = std::chrono::steady_clock::now();
  WsatResult result;
  result.n = n;
  result.s = s;
  result.t = t;
  for (std::int64_t m = max_erasable_edges_bound(n, mode); m >= 0; --m) {
    SearchTask task;
    task.n = n;
    task.mode = mode;
    task.target_edges = static_cast<int>(m);
    task.strategy = strategy;
    task.workers = workers;
    const SearchOutcome out = exists_erasable(task);
    result.graphs_examined += out.graphs_examined;
    result.pruned += out.pruned;
    if (out.verdict == Verdict::Found) {
      result.max_erasable = static_cast<int>(m);
      result.value = binom2(n) - m;
      result.graph = *out.graph;
      result.certificate = *out.certificate;
      break;
    }
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const WsatBound known = known_wsat(n, s, t);
  if (result.value < known.lower || result.value > known.upper)
    throw DiscrepancyError("computed wsat(" + std::to_string(n) + ", K_{" + std::to_string(s) + "," +
                           std::to_string(t) + "}) = " + std::to_string(result.value) + " outside known [" +
                           std::to_string(known.lower) + ", " + std::to_string(known.upper) + "] from " +
                           known.source());
  return result;
}

}  // namespace wsatlab
