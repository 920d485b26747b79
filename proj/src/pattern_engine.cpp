#include <algorithm>
#include <numeric>
#include <string>

#include "local_graph.hpp"

namespace planar_turan::detail {

LocalGraph to_local(const Graph& g) {
  if (g.order() > kLocalCapacity) throw SearchLimitExceeded("graph exceeds 64 vertices");
  LocalGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

Graph to_graph(const LocalGraph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.n; ++u)
    for (Mask m = g.adj[u] & ~(bit(u + 1) - 1); m; m &= m - 1) es.push_back({u, std::countr_zero(m)});
  return Graph(g.n, es);
}

LocalGraph local_neighborhood(const LocalGraph& g, int v, std::vector<int>& host_of) {
  host_of.clear();
  std::array<int, kLocalCapacity> local{};
  for (Mask m = g.adj[v]; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    local[w] = static_cast<int>(host_of.size());
    host_of.push_back(w);
  }
  LocalGraph out(static_cast<int>(host_of.size()));
  const Mask nbrs = g.adj[v];
  for (int i = 0; i < out.n; ++i) {
    for (Mask m = g.adj[host_of[i]] & nbrs; m; m &= m - 1) out.adj[i] |= bit(local[std::countr_zero(m)]);
  }
  return out;
}

LocalGraph local_neighborhood(const Graph& g, Vertex v, std::vector<int>& host_of) {
  auto nbrs = g.neighbors(v);
  if (nbrs.size() > static_cast<std::size_t>(kLocalCapacity)) {
    throw SearchLimitExceeded("neighborhood of vertex " + std::to_string(v) + " exceeds 64 vertices");
  }
  host_of.assign(nbrs.begin(), nbrs.end());
  LocalGraph out(static_cast<int>(host_of.size()));
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j)
      if (g.has_edge(host_of[i], host_of[j])) out.add_edge(i, j);
  return out;
}

namespace {

Mask two_core(const LocalGraph& g) {
  Mask alive = g.all();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask m = alive; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (std::popcount(g.adj[v] & alive) < 2) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

// Vertices lying in components with at least t vertices.
Mask big_components(const LocalGraph& g, int t) {
  Mask out = 0, seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen & bit(s)) continue;
    Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = g.adj[v] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    if (std::popcount(comp) >= t) out |= comp;
  }
  return out;
}

void guard(Mask searched, const SearchLimits& limits) {
  if (std::popcount(searched) > limits.max_search_vertices) {
    throw SearchLimitExceeded("cycle/path search on " + std::to_string(std::popcount(searched)) +
                              " vertices exceeds the limit of " + std::to_string(limits.max_search_vertices));
  }
}

bool extend_cycle(const LocalGraph& g, Mask allowed, int k, std::vector<int>& seq) {
  const int last = seq.back();
  if (static_cast<int>(seq.size()) == k) return g.has_edge(last, seq.front());
  for (Mask m = g.adj[last] & allowed; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    seq.push_back(w);
    if (extend_cycle(g, allowed & ~bit(w), k, seq)) return true;
    seq.pop_back();
  }
  return false;
}

bool extend_path(const LocalGraph& g, Mask allowed, int t, std::vector<int>& seq) {
  if (static_cast<int>(seq.size()) == t) return true;
  for (Mask m = g.adj[seq.back()] & allowed; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    seq.push_back(w);
    if (extend_path(g, allowed & ~bit(w), t, seq)) return true;
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const LocalGraph& g, int k, const SearchLimits& limits) {
  const Mask core = two_core(g);
  guard(core, limits);
  if (k < 3 || std::popcount(core) < k) return std::nullopt;
  // The least start of any k-cycle is the minimum of that cycle, so later
  // vertices may be restricted to labels above it.
  for (Mask m = core; m; m &= m - 1) {
    const int s = std::countr_zero(m);
    const Mask above = core & ~(bit(s + 1) - 1);
    std::vector<int> seq{s};
    if (extend_cycle(g, above, k, seq)) return seq;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_path(const LocalGraph& g, int t, const SearchLimits& limits) {
  if (t < 1) return std::nullopt;
  const Mask big = big_components(g, t);
  guard(big, limits);
  for (Mask m = big; m; m &= m - 1) {
    const int s = std::countr_zero(m);
    std::vector<int> seq{s};
    if (extend_path(g, big & ~bit(s), t, seq)) return seq;
  }
  return std::nullopt;
}

std::vector<int> blossom_matching(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> match(n, -1), p(n), base(n), q;
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = p[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  };
  auto find_augmenting = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    q.assign(1, root);
    for (std::size_t head = 0; head < q.size(); ++head) {
      const int v = q[head];
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push_back(i);
              }
            }
          }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_augmenting(v);
    while (u != -1) {
      const int pv = p[u];
      const int ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  return match;
}

int matching_size(const LocalGraph& g, Mask alive) {
  std::vector<int> ids;
  std::array<int, kLocalCapacity> local{};
  for (Mask m = alive; m; m &= m - 1) {
    local[std::countr_zero(m)] = static_cast<int>(ids.size());
    ids.push_back(std::countr_zero(m));
  }
  std::vector<std::vector<int>> adj(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (Mask m = g.adj[ids[i]] & alive; m; m &= m - 1) adj[i].push_back(local[std::countr_zero(m)]);
  const auto mate = blossom_matching(adj);
  int matched = 0;
  for (int x : mate) matched += x >= 0;
  return matched / 2;
}

std::optional<std::vector<int>> find_matching_sequence(const LocalGraph& g, int t) {
  Mask avail = g.all();
  if (matching_size(g, avail) < t) return std::nullopt;
  std::vector<int> seq;
  for (int need = t; need > 0; --need) {
    bool placed = false;
    for (Mask ma = avail; ma && !placed; ma &= ma - 1) {
      const int a = std::countr_zero(ma);
      for (Mask mb = g.adj[a] & avail; mb && !placed; mb &= mb - 1) {
        const int b = std::countr_zero(mb);
        const Mask rest = avail & ~bit(a) & ~bit(b);
        if (need == 1 || matching_size(g, rest) >= need - 1) {
          seq.push_back(a);
          seq.push_back(b);
          avail = rest;
          placed = true;
        }
      }
    }
    if (!placed) return std::nullopt;
  }
  return seq;
}

namespace {

struct LocalHostOps {
  const LocalGraph& h;
  int order() const { return h.n; }
  int degree(int v) const { return h.degree(v); }
  bool adjacent(int u, int v) const { return h.has_edge(u, v); }
  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    for (Mask m = h.adj[v]; m; m &= m - 1)
      if (!f(std::countr_zero(m))) return;
  }
};

struct GraphHostOps {
  const Graph& h;
  int order() const { return h.order(); }
  int degree(int v) const { return h.degree(v); }
  bool adjacent(int u, int v) const { return h.has_edge(u, v); }
  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    for (Vertex w : h.neighbors(v))
      if (!f(w)) return;
  }
};

template <class Ops>
class Matcher {
 public:
  Matcher(const Graph& pattern, Ops host, bool lexmin)
      : pat_(pattern), host_(host), k_(pattern.order()), map_(k_, -1), used_(host.order(), 0) {
    order_.resize(k_);
    if (lexmin) {
      std::iota(order_.begin(), order_.end(), 0);
    } else {
      std::vector<char> placed(k_, 0);
      std::vector<int> links(k_, 0);
      for (int i = 0; i < k_; ++i) {
        int best = -1;
        for (int v = 0; v < k_; ++v) {
          if (placed[v]) continue;
          if (best < 0 || links[v] > links[best] ||
              (links[v] == links[best] && pat_.degree(v) > pat_.degree(best))) {
            best = v;
          }
        }
        order_[i] = best;
        placed[best] = 1;
        for (Vertex w : pat_.neighbors(best)) ++links[w];
      }
    }
    std::vector<int> rank(k_);
    for (int i = 0; i < k_; ++i) rank[order_[i]] = i;
    earlier_.resize(k_);
    later_count_.assign(k_, 0);
    for (int i = 0; i < k_; ++i) {
      const int p = order_[i];
      for (Vertex w : pat_.neighbors(p)) {
        if (rank[w] < i) {
          earlier_[i].push_back(w);
        } else {
          ++later_count_[i];
        }
      }
    }
  }

  std::optional<std::vector<int>> run() {
    if (k_ > host_.order()) return std::nullopt;
    if (!degrees_dominated()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool degrees_dominated() const {
    std::vector<int> pd, hd;
    for (int v = 0; v < k_; ++v) pd.push_back(pat_.degree(v));
    for (int v = 0; v < host_.order(); ++v) hd.push_back(host_.degree(v));
    std::sort(pd.rbegin(), pd.rend());
    std::sort(hd.rbegin(), hd.rend());
    for (std::size_t i = 0; i < pd.size(); ++i)
      if (hd[i] < pd[i]) return false;
    return true;
  }

  bool feasible(int i, int h) const {
    const int p = order_[i];
    if (used_[h] || host_.degree(h) < pat_.degree(p)) return false;
    for (Vertex q : earlier_[i])
      if (!host_.adjacent(h, map_[q])) return false;
    if (later_count_[i] > 0) {
      int free_nbrs = 0;
      host_.for_each_neighbor(h, [&](int w) {
        if (!used_[w]) ++free_nbrs;
        return free_nbrs < later_count_[i];
      });
      if (free_nbrs < later_count_[i]) return false;
    }
    return true;
  }

  bool extend(int i) {
    if (i == k_) return true;
    const int p = order_[i];
    bool done = false;
    auto attempt = [&](int h) {
      if (!feasible(i, h)) return true;
      map_[p] = h;
      used_[h] = 1;
      if (extend(i + 1)) {
        done = true;
        return false;
      }
      used_[h] = 0;
      map_[p] = -1;
      return true;
    };
    if (!earlier_[i].empty()) {
      host_.for_each_neighbor(map_[earlier_[i].front()], attempt);
    } else {
      for (int h = 0; h < host_.order(); ++h)
        if (!attempt(h)) break;
    }
    return done;
  }

  const Graph& pat_;
  Ops host_;
  int k_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;
  std::vector<int> later_count_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Graph& pattern, const LocalGraph& host, bool lexmin) {
  return Matcher<LocalHostOps>(pattern, LocalHostOps{host}, lexmin).run();
}

std::optional<std::vector<int>> find_embedding(const Graph& pattern, const Graph& host, bool lexmin) {
  return Matcher<GraphHostOps>(pattern, GraphHostOps{host}, lexmin).run();
}

std::optional<std::vector<int>> find_pattern(const LocalGraph& host, const PatternSpec& p,
                                             const Graph& realized, const SearchLimits& limits) {
  using Kind = PatternSpec::Kind;
  const bool star_like = p.kind == Kind::Star || (p.kind == Kind::Fan && p.b == 2);
  if (star_like) {
    const int t = p.a;
    for (int v = 0; v < host.n; ++v) {
      if (host.degree(v) < t) continue;
      std::vector<int> map{v};
      for (Mask m = host.adj[v]; m && static_cast<int>(map.size()) <= t; m &= m - 1)
        map.push_back(std::countr_zero(m));
      return map;
    }
    return std::nullopt;
  }
  if (p.kind == Kind::Explicit) {
    if (realized.order() > host.n) return std::nullopt;
    return find_embedding(realized, host, true);
  }
  // Cone patterns: K_1 + X occurs iff X lies in some neighborhood graph.
  const int need_degree = realized.degree(0);
  const Graph rest = delete_vertex(realized, 0);
  std::vector<int> host_of;
  for (int v = 0; v < host.n; ++v) {
    if (host.degree(v) < need_degree) continue;
    const LocalGraph nb = local_neighborhood(host, v, host_of);
    auto inner = find_cone_base(nb, p, rest, limits);
    if (!inner) continue;
    std::vector<int> map{v};
    for (int x : *inner) map.push_back(host_of[x]);
    return map;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_cone_base(const LocalGraph& nb, const PatternSpec& p, const Graph& rest,
                                               const SearchLimits& limits) {
  using Kind = PatternSpec::Kind;
  switch (p.kind) {
    case Kind::Wheel: return find_cycle(nb, p.a, limits);
    case Kind::ConePath: return find_path(nb, p.a, limits);
    case Kind::Fan:
      if (p.b == 3) return find_matching_sequence(nb, p.a);
      return find_embedding(rest, nb, true);
    case Kind::ConeGraph: return find_embedding(rest, nb, true);
    default: throw GraphError("not a cone pattern");
  }
}

}  // namespace planar_turan::detail
