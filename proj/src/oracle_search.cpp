#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "deletion_search.hpp"
#include "parallel.hpp"
#include "planar_turan/embedding.hpp"
#include "planar_turan/oracle.hpp"

namespace planar_turan {

namespace {

using detail::DeletionSearch;
using detail::Mask;
using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_of(const SearchBudget& budget) {
  if (!budget.time_limit) return std::nullopt;
  return Clock::now() + *budget.time_limit;
}

void atomic_min(std::atomic<int>& target, int value) {
  int cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

std::optional<std::vector<int>> sorted_target(const std::optional<std::map<int, int>>& profile) {
  if (!profile) return std::nullopt;
  std::vector<int> out;
  for (auto [d, c] : *profile) out.insert(out.end(), c, d);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Second phase of the witness search: delete `more` further edges among
// those neither deleted nor kept so far.
bool extend_deletions(DeletionSearch& search, detail::LocalGraph g, Mask deleted, Mask kept, int more,
                      const WitnessConstraints& c, const SearchLimits& limits, std::optional<Graph>& out) {
  const auto& edges = search.edges();
  std::vector<int> free_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Mask b = detail::bit(static_cast<int>(i));
    if (!(deleted & b) && !(kept & b)) free_edges.push_back(static_cast<int>(i));
  }
  std::function<bool(std::size_t, int, Mask)> go = [&](std::size_t from, int left, Mask del) {
    if (!search.degrees_feasible(g, left)) return false;
    if (left == 0) {
      Graph h = search.graph_without(del);
      if (!satisfies(h, c, limits)) return false;
      out = std::move(h);
      return true;
    }
    for (std::size_t j = from; j + left <= free_edges.size(); ++j) {
      const Edge& e = edges[free_edges[j]];
      g.remove_edge(e.u, e.v);
      const bool done = go(j + 1, left - 1, del | detail::bit(free_edges[j]));
      g.add_edge(e.u, e.v);
      if (done) return true;
    }
    return false;
  };
  return go(0, more, deleted);
}

}  // namespace

bool satisfies(const Graph& g, const WitnessConstraints& c, const SearchLimits& limits) {
  if (!is_planar(g)) return false;
  if (c.min_degree && g.order() > 0 && g.min_degree() < *c.min_degree) return false;
  if (c.max_degree && g.order() > 0 && g.max_degree() > *c.max_degree) return false;
  const auto profile = degree_profile(g);
  for (auto [d, count] : c.degree_counts) {
    auto it = profile.find(d);
    if ((it == profile.end() ? 0 : it->second) != count) return false;
  }
  if (c.exact_profile && profile != *c.exact_profile) return false;
  for (const auto& p : c.free_of)
    if (!is_pattern_free(g, p, limits)) return false;
  return true;
}

ExactResult exact_planar_turan(int n, const PatternSpec& p, const SearchBudget& budget, const OracleOptions& opts) {
  const auto census = enumerate_triangulations(n, opts);
  const int full = 3 * n - 6;
  const int max_d = std::min(full, budget.max_deletions.value_or(full));
  const auto deadline = deadline_of(budget);
  const std::size_t count = census.size();

  std::vector<int> greedy(count);
  detail::parallel_for(count, opts.threads, [&](std::size_t i) {
    greedy[i] = DeletionSearch(census.graphs[i], {p}, opts.limits, std::nullopt).greedy_deletions();
  });
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return greedy[a] < greedy[b]; });

  const int known = *std::min_element(greedy.begin(), greedy.end());
  std::atomic<int> best{known};
  std::atomic<bool> timed_out{false};
  // found[i]: least deletions for census[i] when it is <= the bound in force;
  // proven[i]: every smaller count was refuted.
  std::vector<int> found(count, -1), proven(count, 0);
  std::vector<Mask> found_set(count, 0);
  std::vector<std::optional<Graph>> found_graph(count);

  detail::parallel_for(count, opts.threads, [&](std::size_t pos) {
    const std::size_t i = order[pos];
    if (timed_out.load()) return;
    DeletionSearch search(census.graphs[i], {p}, opts.limits, deadline);
    try {
      int k = search.root_lower_bound();
      proven[i] = std::min(k, max_d + 1);
      for (; k <= std::min(best.load(), max_d); ++k) {
        Mask hit = 0;
        const bool ok = search.enumerate(k, [&](const DeletionSearch::State& s) {
          hit = s.deleted;
          return true;
        });
        if (ok) {
          found[i] = k;
          found_set[i] = hit;
          found_graph[i] = search.graph_without(hit);
          atomic_min(best, k);
          proven[i] = k;
          return;
        }
        proven[i] = k + 1;
      }
    } catch (const detail::Timeout&) {
      timed_out.store(true);
    }
  });

  ExactResult out;
  // Every census member not refuted beyond some d still bounds ex from above.
  int least_proven = full;
  for (std::size_t i = 0; i < count; ++i) least_proven = std::min(least_proven, found[i] >= 0 ? found[i] : proven[i]);
  if (!timed_out && best.load() <= max_d) {
    const int d = best.load();
    for (std::size_t i = 0; i < count; ++i) {
      if (found[i] == d) {
        out.value = {full - d, full - d, false, "oracle", ""};
        out.witness = found_graph[i];
        out.deletions = d;
        return out;
      }
    }
  }
  out.budget_exhausted = true;
  out.value = {full - known, full - least_proven, false, "budget-exhausted", ""};
  if (out.value.lo > out.value.hi) out.value.lo = out.value.hi;
  return out;
}

WitnessResult search_witness(int n, int e, const WitnessConstraints& c, const SearchBudget& budget,
                             const OracleOptions& opts) {
  const int full = 3 * n - 6;
  if (e > full || e < 0) throw OracleError("edge count outside 0..3n-6");
  const int k = full - e;
  WitnessResult out;
  if (budget.max_deletions && *budget.max_deletions < k) {
    out.status = WitnessStatus::BudgetExhausted;
    return out;
  }
  // Cheap refutations before touching the census.
  if (c.max_degree && 2 * e > n * *c.max_degree) return out;
  if (c.min_degree && 2 * e < n * *c.min_degree) return out;
  if (c.exact_profile) {
    int sum = 0, verts = 0;
    for (auto [d, cnt] : *c.exact_profile) {
      sum += d * cnt;
      verts += cnt;
    }
    if (sum != 2 * e || verts != n) return out;
  }
  const auto census = enumerate_triangulations(n, opts);
  const auto deadline = deadline_of(budget);
  const auto target = sorted_target(c.exact_profile);
  std::optional<int> max_deg = c.max_degree;
  std::optional<int> min_deg = c.min_degree;

  std::atomic<std::size_t> first_hit{census.size()};
  std::atomic<bool> timed_out{false};
  std::vector<std::optional<Graph>> hits(census.size());
  detail::parallel_for(census.size(), opts.threads, [&](std::size_t i) {
    if (i > first_hit.load() || timed_out.load()) return;
    DeletionSearch search(census.graphs[i], c.free_of, opts.limits, deadline);
    search.set_degree_pruning(min_deg, max_deg, target);
    try {
      std::optional<Graph> got;
      search.enumerate(k, [&](const DeletionSearch::State& s) {
        return extend_deletions(search, s.graph, s.deleted, s.kept, k - s.depth, c, opts.limits, got);
      });
      if (got) {
        hits[i] = std::move(got);
        std::size_t cur = first_hit.load();
        while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (const detail::Timeout&) {
      timed_out.store(true);
    }
  });
  // Under a timeout the hit may not be the first in census order, but it is
  // still a valid witness.
  const std::size_t hit = first_hit.load();
  if (hit < census.size()) {
    out.status = WitnessStatus::Found;
    out.graph = hits[hit];
  } else {
    out.status = timed_out.load() ? WitnessStatus::BudgetExhausted : WitnessStatus::None;
  }
  return out;
}

WitnessResult exists_planar_with_degree_profile(int n, const std::map<int, int>& profile, const SearchBudget& budget,
                                                const OracleOptions& opts) {
  int sum = 0, verts = 0;
  for (auto [d, cnt] : profile) {
    if (d < 0 || cnt < 0) throw OracleError("degree profile entries must be non-negative");
    sum += d * cnt;
    verts += cnt;
  }
  if (verts != n) throw OracleError("degree profile does not account for n vertices");
  if (sum % 2 != 0) throw OracleError("degree sum is odd");
  if (sum > 2 * (3 * n - 6)) throw OracleError("degree sum exceeds 2(3n - 6)");
  WitnessConstraints c;
  c.exact_profile = profile;
  return search_witness(n, sum / 2, c, budget, opts);
}

}  // namespace planar_turan
