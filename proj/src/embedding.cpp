#include "planar_turan/embedding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace planar_turan {

PlaneEmbedding::PlaneEmbedding(Graph g, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  if (static_cast<int>(rotation_.size()) != graph_.order()) {
    throw GraphError("rotation system size does not match graph order");
  }
  for (Vertex v = 0; v < graph_.order(); ++v) {
    std::vector<Vertex> sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    auto nbrs = graph_.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end())) {
      throw GraphError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
  }
  if (graph_.is_connected()) {
    const int f = face_count();
    if (graph_.order() - graph_.size() + f != 2) {
      throw GraphError("rotation system violates Euler's formula (not a plane embedding)");
    }
  }
}

Vertex PlaneEmbedding::next_around(Vertex v, Vertex u) const {
  const auto& rot = rotation_.at(v);
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end()) throw GraphError("not a neighbor");
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

std::vector<std::vector<Vertex>> PlaneEmbedding::trace() const {
  const int n = graph_.order();
  // dart (v, i) is v -> rotation_[v][i]; back[v][i] is the index of v in the
  // rotation of that neighbor.
  std::vector<std::vector<int>> back(n), used(n);
  for (Vertex v = 0; v < n; ++v) {
    back[v].resize(rotation_[v].size());
    used[v].assign(rotation_[v].size(), 0);
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      const auto& other = rotation_[rotation_[v][i]];
      back[v][i] = static_cast<int>(std::find(other.begin(), other.end(), v) - other.begin());
    }
  }
  std::vector<std::vector<Vertex>> walks;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      if (used[v][i]) continue;
      std::vector<Vertex> walk;
      Vertex a = v;
      int ia = static_cast<int>(i);
      while (!used[a][ia]) {
        used[a][ia] = 1;
        walk.push_back(a);
        const Vertex b = rotation_[a][ia];
        const int deg = static_cast<int>(rotation_[b].size());
        const int ib = (back[a][ia] + 1) % deg;
        a = b;
        ia = ib;
      }
      walks.push_back(std::move(walk));
    }
  }
  if (walks.empty()) walks.emplace_back();
  return walks;
}

std::vector<std::vector<Vertex>> PlaneEmbedding::faces() const {
  if (!graph_.is_connected()) throw DisconnectedGraph();
  return trace();
}

int PlaneEmbedding::face_count() const { return static_cast<int>(trace().size()); }

PlanarityResult planarity(const Graph& g) {
  using namespace boost;
  using BoostGraph = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>,
                                    property<edge_index_t, int>>;
  const int n = g.order();
  BoostGraph bg(static_cast<std::size_t>(n));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [ed, ok] = add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    put(edge_index, bg, ed, index++);
  }
  using EdgeDesc = graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(static_cast<std::size_t>(n));
  auto emb = make_iterator_property_map(storage.begin(), get(vertex_index, bg));
  const bool ok = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                               boyer_myrvold_params::embedding = emb);
  PlanarityResult out;
  if (!ok) return out;
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (const EdgeDesc& ed : storage[v]) {
      const auto s = static_cast<Vertex>(source(ed, bg));
      const auto t = static_cast<Vertex>(target(ed, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  }
  out.embedding.emplace(g, std::move(rotation));
  return out;
}

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return false;
  return planarity(g).planar();
}

FaceVector face_vector(const PlaneEmbedding& e) {
  FaceVector out;
  for (const auto& walk : e.faces()) ++out[static_cast<int>(walk.size())];
  return out;
}

bool is_triangulation(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.size() != 3 * n - 6 || !g.is_connected()) return false;
  return is_planar(g);
}

int incident_triangle_count(const PlaneEmbedding& e, Vertex v) {
  if (v < 0 || v >= e.graph().order()) throw GraphError("vertex out of range");
  int count = 0;
  for (const auto& walk : e.faces()) {
    if (walk.size() == 3 && std::find(walk.begin(), walk.end(), v) != walk.end()) ++count;
  }
  return count;
}

std::string to_text(const PlaneEmbedding& e) {
  std::ostringstream out;
  for (Vertex v = 0; v < e.graph().order(); ++v) {
    out << v << ':';
    for (Vertex w : e.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

PlaneEmbedding embedding_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int v = 0;
    char colon = 0;
    if (!(ls >> v >> colon) || colon != ':' || v != static_cast<int>(rotation.size())) {
      throw GraphError("malformed embedding line: " + line);
    }
    rotation.emplace_back();
    int w = 0;
    while (ls >> w) {
      rotation.back().push_back(w);
      if (v < w) edges.push_back({v, w});
    }
  }
  Graph g(static_cast<int>(rotation.size()), edges);
  return PlaneEmbedding(std::move(g), std::move(rotation));
}

}  // namespace planar_turan
