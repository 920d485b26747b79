#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planar_turan {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when an operation's preconditions on its graph arguments fail.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted and duplicate-free. A packed adjacency matrix is
/// built once at construction so that edge queries are O(1).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Builds from an edge list; rejects loops, duplicates and out-of-range ends.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  int min_degree() const;
  int max_degree() const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Packed adjacency row of v: bit w of the row is set iff vw is an edge.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {matrix_.data() + static_cast<std::size_t>(check(v)) * words_, words_};
  }
  std::size_t row_words() const { return words_; }

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  Vertex check(Vertex v) const {
    if (v < 0 || v >= order()) throw GraphError("vertex out of range");
    return v;
  }
  void build_matrix();

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> matrix_;
  std::size_t words_ = 0;
  int edge_count_ = 0;
};

// ---- primitive families ----------------------------------------------------

Graph empty_graph(int n);
Graph complete_graph(int n);
/// C_n on 0..n-1 in index order; n >= 3.
Graph cycle_graph(int n);
/// P_n on 0..n-1 in index order; n >= 1.
Graph path_graph(int n);
/// K_{1,t} with hub 0; t >= 1.
Graph star_graph(int t);
Graph complete_bipartite(int a, int b);

// ---- combinators -----------------------------------------------------------

/// G + H: disjoint copies (G first) with every cross edge added.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
/// tG; t >= 1.
Graph copies(int t, const Graph& g);
/// Renames vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// ---- edits (never mutate the input) ----------------------------------------

/// Removes v; remaining labels are compacted preserving relative order.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, std::span<const Vertex> vs);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
/// Appends vertex n adjacent to every vertex of s.
Graph add_vertex_adjacent_to(const Graph& g, std::span<const Vertex> s);
Graph add_vertex_adjacent_to(const Graph& g, std::initializer_list<Vertex> s);

/// G[S]; vertices are renumbered in increasing order of their label in G.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
/// G[N(v)] (open neighborhood), vertices in increasing label order.
Graph neighborhood_subgraph(const Graph& g, Vertex v);

/// degree -> number of vertices with that degree (n_k in the usual notation).
std::map<int, int> degree_profile(const Graph& g);

}  // namespace planar_turan
