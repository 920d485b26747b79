// Internal small-graph engine shared by the pattern checkers and the oracle.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"

namespace planar_turan::detail {

using Mask = std::uint64_t;

inline constexpr int kLocalCapacity = 64;

inline Mask bit(int v) { return Mask{1} << v; }

/// Mutable graph on at most 64 vertices stored as adjacency bitmasks.
struct LocalGraph {
  int n = 0;
  std::array<Mask, kLocalCapacity> adj{};

  LocalGraph() = default;
  explicit LocalGraph(int order) : n(order) {}

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1U; }
  void add_edge(int u, int v) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  void remove_edge(int u, int v) {
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
  }
  int degree(int v) const { return std::popcount(adj[v]); }
  int order() const { return n; }
  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }
};

LocalGraph to_local(const Graph& g);
Graph to_graph(const LocalGraph& g);

/// G[N(v)] with local vertices numbered in increasing host order; host_of
/// receives the host label of each local vertex.
LocalGraph local_neighborhood(const LocalGraph& g, int v, std::vector<int>& host_of);
LocalGraph local_neighborhood(const Graph& g, Vertex v, std::vector<int>& host_of);

/// Lexicographically least vertex sequence of a k-cycle (consecutive entries
/// adjacent, last adjacent to first).
std::optional<std::vector<int>> find_cycle(const LocalGraph& g, int k, const SearchLimits& limits);
/// Lexicographically least vertex sequence of a path on t vertices.
std::optional<std::vector<int>> find_path(const LocalGraph& g, int t, const SearchLimits& limits);
/// Lexicographically least sequence (a1, b1, ..., at, bt) of t disjoint edges.
std::optional<std::vector<int>> find_matching_sequence(const LocalGraph& g, int t);

/// Maximum matching restricted to the vertices in `alive`.
int matching_size(const LocalGraph& g, Mask alive);
std::vector<int> blossom_matching(const std::vector<std::vector<int>>& adj);

/// Generic subgraph search. With lexmin the pattern is processed in vertex
/// order and the first map found is the lexicographically least.
std::optional<std::vector<int>> find_embedding(const Graph& pattern, const LocalGraph& host, bool lexmin);
std::optional<std::vector<int>> find_embedding(const Graph& pattern, const Graph& host, bool lexmin);

/// Pattern occurrence in a local host (map realize(p) -> host), lexmin.
std::optional<std::vector<int>> find_pattern(const LocalGraph& host, const PatternSpec& p,
                                             const Graph& realized, const SearchLimits& limits);

/// The base X of a cone pattern K_1 + X inside one neighborhood graph; rest
/// is realize(p) without its apex.
std::optional<std::vector<int>> find_cone_base(const LocalGraph& nb, const PatternSpec& p, const Graph& rest,
                                               const SearchLimits& limits);

}  // namespace planar_turan::detail
