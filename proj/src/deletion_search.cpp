#include "deletion_search.hpp"

#include <algorithm>

namespace planar_turan::detail {

namespace {

constexpr int kInfeasible = 1 << 20;

bool is_star_like(const PatternSpec& p) {
  return p.kind == PatternSpec::Kind::Star || (p.kind == PatternSpec::Kind::Fan && p.b == 2);
}

}  // namespace

DeletionSearch::DeletionSearch(const Graph& host, const std::vector<PatternSpec>& patterns, const SearchLimits& limits,
                               std::optional<std::chrono::steady_clock::time_point> deadline)
    : n_(host.order()),
      root_(to_local(host)),
      edges_(host.edges()),
      eid_(host.order(), std::vector<int>(host.order(), -1)),
      patterns_(patterns),
      limits_(limits),
      deadline_(deadline) {
  if (edges_.size() > 64) throw OracleError("deletion search needs at most 64 edges");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    eid_[edges_[i].u][edges_[i].v] = eid_[edges_[i].v][edges_[i].u] = static_cast<int>(i);
  }
  for (const auto& p : patterns_) {
    realized_.push_back(realize(p));
    pattern_edges_.push_back(realized_.back().edges());
  }
}

void DeletionSearch::tick() {
  ++nodes_;
  if (deadline_ && (nodes_ & 255) == 0 && std::chrono::steady_clock::now() > *deadline_) throw Timeout{};
}

std::optional<Mask> DeletionSearch::find_occurrence(const LocalGraph& g) const {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (realized_[i].order() > n_) continue;
    auto map = find_pattern(g, patterns_[i], realized_[i], limits_);
    if (!map) continue;
    Mask occ = 0;
    for (const Edge& e : pattern_edges_[i]) occ |= bit(eid_[(*map)[e.u]][(*map)[e.v]]);
    return occ;
  }
  return std::nullopt;
}

int DeletionSearch::lower_bound(const LocalGraph& g, Mask kept) const {
  if (patterns_.size() == 1 && is_star_like(patterns_[0])) {
    int excess = 0;
    for (int v = 0; v < g.n; ++v) excess += std::max(0, g.degree(v) - (patterns_[0].a - 1));
    return (excess + 1) / 2;
  }
  LocalGraph copy = g;
  int count = 0;
  while (auto occ = find_occurrence(copy)) {
    if ((*occ & ~kept) == 0) return kInfeasible;
    ++count;
    for (Mask m = *occ; m; m &= m - 1) {
      const Edge& e = edges_[std::countr_zero(m)];
      copy.remove_edge(e.u, e.v);
    }
  }
  return count;
}

int DeletionSearch::root_lower_bound() { return lower_bound(root_, 0); }

int DeletionSearch::greedy_deletions() {
  LocalGraph g = root_;
  int count = 0;
  while (auto occ = find_occurrence(g)) {
    int best = -1, score = -1;
    for (Mask m = *occ; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      const int s = g.degree(edges_[i].u) + g.degree(edges_[i].v);
      if (s > score) {
        score = s;
        best = i;
      }
    }
    g.remove_edge(edges_[best].u, edges_[best].v);
    ++count;
  }
  return count;
}

void DeletionSearch::set_degree_pruning(std::optional<int> min_degree, std::optional<int> max_degree,
                                        std::optional<std::vector<int>> target_sorted_desc) {
  min_degree_ = min_degree;
  max_degree_ = max_degree;
  target_ = std::move(target_sorted_desc);
}

bool DeletionSearch::degrees_feasible(const LocalGraph& g, int remaining) const {
  if (min_degree_) {
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) < *min_degree_) return false;
  }
  if (max_degree_) {
    int excess = 0;
    for (int v = 0; v < g.n; ++v) {
      const int x = std::max(0, g.degree(v) - *max_degree_);
      if (x > remaining) return false;
      excess += x;
    }
    if (excess > 2 * remaining) return false;
  }
  if (target_) {
    std::array<int, kLocalCapacity> cur{};
    for (int v = 0; v < g.n; ++v) cur[v] = g.degree(v);
    std::sort(cur.begin(), cur.begin() + g.n, std::greater<>());
    for (int v = 0; v < g.n; ++v)
      if (cur[v] < (*target_)[v]) return false;
  }
  return true;
}

bool DeletionSearch::recurse(LocalGraph& g, Mask deleted, Mask kept, int depth, int k, const Visitor& visit) {
  tick();
  if (!degrees_feasible(g, k - depth)) return false;
  const auto occ = find_occurrence(g);
  if (!occ) return visit(State{g, deleted, kept, depth});
  if (depth == k) return false;
  if (depth + lower_bound(g, kept) > k) return false;
  Mask keep = kept;
  for (Mask m = *occ & ~kept; m; m &= m - 1) {
    const int i = std::countr_zero(m);
    const Edge& e = edges_[i];
    g.remove_edge(e.u, e.v);
    const bool stop = recurse(g, deleted | bit(i), keep, depth + 1, k, visit);
    g.add_edge(e.u, e.v);
    if (stop) return true;
    keep |= bit(i);
  }
  return false;
}

bool DeletionSearch::enumerate(int k, const Visitor& visit) {
  LocalGraph g = root_;
  return recurse(g, 0, 0, 0, k, visit);
}

Graph DeletionSearch::graph_without(Mask deleted) const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!(deleted & bit(static_cast<int>(i)))) es.push_back(edges_[i]);
  return Graph(n_, es);
}

}  // namespace planar_turan::detail
