// Edge-deletion search over one triangulation: hitting sets for pattern
// occurrences plus degree-constraint pruning.
#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "local_graph.hpp"
#include "planar_turan/oracle.hpp"

namespace planar_turan::detail {

struct Timeout {};

class DeletionSearch {
 public:
  struct State {
    const LocalGraph& graph;
    Mask deleted;  // edge indices
    Mask kept;
    int depth;
  };
  /// Return true to stop the enumeration.
  using Visitor = std::function<bool(const State&)>;

  DeletionSearch(const Graph& host, const std::vector<PatternSpec>& patterns, const SearchLimits& limits,
                 std::optional<std::chrono::steady_clock::time_point> deadline);

  const std::vector<Edge>& edges() const { return edges_; }

  /// Visits every free state reachable with at most k deletions (each
  /// deletion set at most once). Returns true if the visitor stopped.
  bool enumerate(int k, const Visitor& visit);

  /// Greedy upper bound on the deletions needed for freeness.
  int greedy_deletions();
  /// Lower bound for the root graph.
  int root_lower_bound();

  Graph graph_without(Mask deleted) const;

  /// Degree pruning used by enumerate; the constraints hold only the degree
  /// parts that are monotone under deletion.
  void set_degree_pruning(std::optional<int> min_degree, std::optional<int> max_degree,
                          std::optional<std::vector<int>> target_sorted_desc);
  bool degrees_feasible(const LocalGraph& g, int remaining) const;

  long long nodes() const { return nodes_; }

 private:
  std::optional<Mask> find_occurrence(const LocalGraph& g) const;
  int lower_bound(const LocalGraph& g, Mask kept) const;
  bool recurse(LocalGraph& g, Mask deleted, Mask kept, int depth, int k, const Visitor& visit);
  void tick();

  int n_;
  LocalGraph root_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> eid_;
  std::vector<PatternSpec> patterns_;
  std::vector<Graph> realized_;
  std::vector<std::vector<Edge>> pattern_edges_;
  SearchLimits limits_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  long long nodes_ = 0;
  std::optional<int> min_degree_, max_degree_;
  std::optional<std::vector<int>> target_;
};

}  // namespace planar_turan::detail
