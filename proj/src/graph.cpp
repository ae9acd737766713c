#include "wsatlab/graph.hpp"

#include <cassert>

#include "wsatlab/error.hpp"

namespace wsatlab {

std::string to_string(VertexSet set) {
  std::string out = "{";
  bool first = true;
  for (int v : set) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string to_string(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw InvalidArgument("vertex count must lie in [0, 64], got " + std::to_string(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const Edge& e : edges) add_edge(e);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidArgument("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "} on " +
                          std::to_string(n_) + " vertices");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u] - VertexSet::first(u + 1)) out.push_back({u, v});
  return out;
}

VertexSet Graph::non_isolated() const {
  VertexSet out;
  for (int v = 0; v < n_; ++v)
    if (!adj_[v].empty()) out.insert(v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != other.adj_[v]) return false;
  return true;
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  const VertexSet all = g.vertices();
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : all - g.neighbors(u) - VertexSet::first(u + 1)) out.add_edge(u, v);
  return out;
}

VertexSet reachable(const Graph& g, int from, VertexSet within) {
  VertexSet reach = VertexSet::single(from);
  VertexSet frontier = reach;
  while (!frontier.empty()) {
    VertexSet next;
    for (int x : frontier) next |= g.neighbors(x);
    next = (next & within) - reach;
    reach |= next;
    frontier = next;
  }
  return reach;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = reachable(g, rest.front(), rest);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  return reachable(g, within.front(), within) == within;
}

namespace {

// Unit-capacity flow on the vertex-split digraph: every vertex x becomes
// in(x) -> out(x) with capacity 1, every edge {x, y} becomes out(x) -> in(y)
// and out(y) -> in(x). The source is out(u), the sink in(v).
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int u, int v, VertexSet within) : g_(g), u_(u), v_(v), within_(within) {}

  int run() {
    int flow = 0;
    while (augment()) ++flow;
    return flow;
  }

  /// Internal vertices whose split arc crosses the final residual cut.
  VertexSet cut() const { return reached_in_ - reached_out_; }

 private:
  // Residual BFS; on success pushes one unit along the found path.
  bool augment() {
    std::array<int, 2 * Graph::kMaxVertices> parent{};
    reached_in_ = VertexSet();
    reached_out_ = VertexSet::single(u_);
    std::vector<int> queue{out_node(u_)};
    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      const int node = queue[head];
      const int x = node / 2;
      if (is_out(node)) {
        // Edge arcs have unbounded capacity, so they never saturate.
        for (int y : (g_.neighbors(x) & within_) - reached_in_) {
          if (y == u_) continue;
          reached_in_.insert(y);
          parent[in_node(y)] = node;
          if (y == v_) {
            found = true;
            break;
          }
          queue.push_back(in_node(y));
        }
        if (!found && used_.contains(x) && !reached_in_.contains(x)) {
          reached_in_.insert(x);
          parent[in_node(x)] = node;
          queue.push_back(in_node(x));
        }
      } else {
        if (!used_.contains(x) && !reached_out_.contains(x)) {
          reached_out_.insert(x);
          parent[out_node(x)] = node;
          queue.push_back(out_node(x));
        }
        for (int y : in_flow_[x] - reached_out_) {
          reached_out_.insert(y);
          parent[out_node(y)] = node;
          queue.push_back(out_node(y));
        }
      }
    }
    if (!found) return false;

    int node = in_node(v_);
    while (node != out_node(u_)) {
      const int prev = parent[node];
      const int a = prev / 2;
      const int b = node / 2;
      if (is_out(prev) && !is_out(node)) {
        if (a == b) {
          used_.erase(a);  // cancel internal arc
        } else {
          arc_flow_[a].insert(b);
          in_flow_[b].insert(a);
        }
      } else if (!is_out(prev) && is_out(node)) {
        if (a == b) {
          used_.insert(a);
        } else {
          arc_flow_[b].erase(a);  // cancel out(b) -> in(a)
          in_flow_[a].erase(b);
        }
      }
      node = prev;
    }
    return true;
  }

  static int in_node(int x) { return 2 * x; }
  static int out_node(int x) { return 2 * x + 1; }
  static bool is_out(int node) { return node & 1; }

  const Graph& g_;
  int u_;
  int v_;
  VertexSet within_;
  VertexSet used_;
  std::array<VertexSet, Graph::kMaxVertices> arc_flow_{};
  std::array<VertexSet, Graph::kMaxVertices> in_flow_{};
  VertexSet reached_in_;
  VertexSet reached_out_;
};

}  // namespace

VertexCut min_vertex_cut(const Graph& g, int u, int v, VertexSet within) {
  if (u == v) throw InvalidArgument("local connectivity needs distinct vertices");
  if (!within.contains(u) || !within.contains(v))
    throw InvalidArgument("terminals must lie inside the vertex set");
  if (g.has_edge(u, v)) throw InvalidArgument("local connectivity needs non-adjacent terminals");
  SplitFlow flow(g, u, v, within);
  VertexCut out;
  out.size = flow.run();
  out.cut = flow.cut();
  assert(out.cut.size() == out.size);
  return out;
}

int local_vertex_connectivity(const Graph& g, int u, int v) {
  return min_vertex_cut(g, u, v, g.vertices()).size;
}

std::vector<Edge> complete_edge_list(int n) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

}  // namespace wsatlab
