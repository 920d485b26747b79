#include "planar_turan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace planar_turan {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  build_matrix();
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError("self-loop at " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw GraphError("duplicate edge");
    }
  }
  build_matrix();
}

void Graph::build_matrix() {
  const std::size_t n = adj_.size();
  words_ = (n + 63) / 64;
  matrix_.assign(n * words_, 0);
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex w : adj_[u]) matrix_[u * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    degree_sum += adj_[u].size();
  }
  edge_count_ = static_cast<int>(degree_sum / 2);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return (matrix_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : degree(0);
  for (const auto& nbrs : adj_) best = std::min(best, static_cast<int>(nbrs.size()));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex w : adj_[u]) {
      if (u < w) out.push_back({u, w});
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const int n = order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph(n, es);
}

Graph path_graph(int n) {
  if (n < 1) throw GraphError("path needs at least 1 vertex");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph star_graph(int t) {
  if (t < 1) throw GraphError("star needs at least one leaf");
  std::vector<Edge> es;
  for (int i = 1; i <= t; ++i) es.push_back({0, i});
  return Graph(t + 1, es);
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw GraphError("negative part size");
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.push_back({i, a + j});
  return Graph(a + b, es);
}

Graph join(const Graph& g, const Graph& h) {
  const int off = g.order();
  std::vector<Edge> es = g.edges();
  for (const Edge& e : h.edges()) es.push_back({e.u + off, e.v + off});
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) es.push_back({u, v + off});
  return Graph(off + h.order(), es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.order();
  std::vector<Edge> es = g.edges();
  for (const Edge& e : h.edges()) es.push_back({e.u + off, e.v + off});
  return Graph(off + h.order(), es);
}

Graph copies(int t, const Graph& g) {
  if (t < 1) throw GraphError("copies needs t >= 1");
  Graph out = g;
  for (int i = 1; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw GraphError("not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), es);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  const Vertex vs[] = {v};
  return delete_vertices(g, vs);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw GraphError("edge to delete is absent");
  std::vector<Edge> es;
  const Edge gone{std::min(u, v), std::max(u, v)};
  for (const Edge& e : g.edges())
    if (e != gone) es.push_back(e);
  return Graph(g.order(), es);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("self-loop");
  if (g.has_edge(u, v)) throw GraphError("edge already present");
  std::vector<Edge> es = g.edges();
  es.push_back({u, v});
  return Graph(g.order(), es);
}

Graph add_vertex_adjacent_to(const Graph& g, std::span<const Vertex> s) {
  std::vector<Edge> es = g.edges();
  const Vertex x = g.order();
  for (Vertex v : s) {
    if (v < 0 || v >= x) throw GraphError("vertex out of range");
    es.push_back({v, x});
  }
  return Graph(x + 1, es);
}

Graph add_vertex_adjacent_to(const Graph& g, std::initializer_list<Vertex> s) {
  return add_vertex_adjacent_to(g, std::span<const Vertex>(s.begin(), s.size()));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("repeated vertex in subset");
  }
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.order()) throw GraphError("vertex out of range");
    index[sorted[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> es;
  for (Vertex u : sorted)
    for (Vertex w : g.neighbors(u))
      if (u < w && index[w] >= 0) es.push_back({index[u], index[w]});
  return Graph(static_cast<int>(sorted.size()), es);
}

Graph neighborhood_subgraph(const Graph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  return induced_subgraph(g, nbrs);
}

std::map<int, int> degree_profile(const Graph& g) {
  std::map<int, int> out;
  for (Vertex v = 0; v < g.order(); ++v) ++out[g.degree(v)];
  return out;
}

}  // namespace planar_turan
