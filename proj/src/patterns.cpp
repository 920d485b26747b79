#include "planar_turan/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <string>

#include "local_graph.hpp"
#include "planar_turan/graph_io.hpp"

namespace planar_turan {

using detail::bit;
using detail::LocalGraph;
using detail::Mask;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

PatternSpec PatternSpec::wheel(int k) {
  require(k >= 3, "wheel needs k >= 3");
  return {Kind::Wheel, k, 0, {}};
}

PatternSpec PatternSpec::star(int t) {
  require(t >= 1, "star needs t >= 1");
  return {Kind::Star, t, 0, {}};
}

PatternSpec PatternSpec::fan(int t, int r) {
  require(t >= 2 && r >= 2, "fan needs t >= 2 and r >= 2");
  return {Kind::Fan, t, r, {}};
}

PatternSpec PatternSpec::cone_path(int t) {
  require(t >= 1, "cone path needs t >= 1");
  return {Kind::ConePath, t, 0, {}};
}

PatternSpec PatternSpec::cone_graph(Graph h) {
  require(h.order() >= 1 && is_linear_forest(h), "cone pattern base must be a non-empty linear forest");
  return {Kind::ConeGraph, 0, 0, std::move(h)};
}

PatternSpec PatternSpec::explicit_graph(Graph h) { return {Kind::Explicit, 0, 0, std::move(h)}; }

std::string PatternSpec::to_string() const {
  switch (kind) {
    case Kind::Wheel: return "wheel:" + std::to_string(a);
    case Kind::Star: return "star:" + std::to_string(a);
    case Kind::Fan: return "fan:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::ConePath: return "conepath:" + std::to_string(a);
    case Kind::ConeGraph: return "cone:" + to_graph6(graph);
    case Kind::Explicit: return "g6:" + to_graph6(graph);
  }
  return {};
}

namespace {

int parse_int(std::string_view s, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw PatternParseError("bad integer '" + std::string(s) + "' in pattern '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

PatternSpec parse_pattern(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw PatternParseError("pattern '" + std::string(text) + "' lacks ':' (expected e.g. wheel:5)");
  }
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  try {
    if (head == "wheel") return PatternSpec::wheel(parse_int(arg, text));
    if (head == "star") return PatternSpec::star(parse_int(arg, text));
    if (head == "conepath") return PatternSpec::cone_path(parse_int(arg, text));
    if (head == "fan") {
      const auto comma = arg.find(',');
      if (comma == std::string_view::npos) throw PatternParseError("fan needs T,R");
      return PatternSpec::fan(parse_int(arg.substr(0, comma), text), parse_int(arg.substr(comma + 1), text));
    }
    if (head == "cone") return PatternSpec::cone_graph(from_graph6(arg));
    if (head == "g6") return PatternSpec::explicit_graph(from_graph6(arg));
  } catch (const PatternParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw PatternParseError("pattern '" + std::string(text) + "': " + e.what());
  }
  throw PatternParseError("unknown pattern kind '" + std::string(head) + "'");
}

Graph realize(const PatternSpec& p) {
  using Kind = PatternSpec::Kind;
  switch (p.kind) {
    case Kind::Wheel: return join(complete_graph(1), cycle_graph(p.a));
    case Kind::Star: return star_graph(p.a);
    case Kind::Fan: return join(complete_graph(1), copies(p.a, complete_graph(p.b - 1)));
    case Kind::ConePath: return join(complete_graph(1), path_graph(p.a));
    case Kind::ConeGraph: return join(complete_graph(1), p.graph);
    case Kind::Explicit: return p.graph;
  }
  return {};
}

bool verify_match(const Graph& host, const Graph& pattern, const Match& m) {
  if (static_cast<int>(m.map.size()) != pattern.order()) return false;
  std::vector<char> seen(host.order(), 0);
  for (Vertex x : m.map) {
    if (x < 0 || x >= host.order() || seen[x]) return false;
    seen[x] = 1;
  }
  for (const Edge& e : pattern.edges())
    if (!host.has_edge(m.map[e.u], m.map[e.v])) return false;
  return true;
}

std::optional<Match> contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  std::optional<std::vector<int>> map;
  if (host.order() <= detail::kLocalCapacity) {
    map = detail::find_embedding(pattern, detail::to_local(host), true);
  } else {
    map = detail::find_embedding(pattern, host, true);
  }
  if (!map) return std::nullopt;
  return Match{*map};
}

FreenessResult check_pattern(const Graph& host, const PatternSpec& p, const SearchLimits& limits) {
  const Graph realized = realize(p);
  FreenessResult out;
  if (realized.order() > host.order()) return out;
  std::optional<std::vector<int>> map;
  if (host.order() <= detail::kLocalCapacity) {
    map = detail::find_pattern(detail::to_local(host), p, realized, limits);
  } else if (p.kind == PatternSpec::Kind::Explicit) {
    map = detail::find_embedding(realized, host, true);
  } else if (p.kind == PatternSpec::Kind::Star || (p.kind == PatternSpec::Kind::Fan && p.b == 2)) {
    for (Vertex v = 0; v < host.order() && !map; ++v) {
      if (host.degree(v) < p.a) continue;
      map.emplace(1, v);
      for (int i = 0; i < p.a; ++i) map->push_back(host.neighbors(v)[i]);
    }
  } else {
    const Graph rest = delete_vertex(realized, 0);
    std::vector<int> host_of;
    for (Vertex v = 0; v < host.order() && !map; ++v) {
      if (host.degree(v) < realized.degree(0)) continue;
      const LocalGraph nb = detail::local_neighborhood(host, v, host_of);
      if (auto inner = detail::find_cone_base(nb, p, rest, limits)) {
        map.emplace(1, v);
        for (int x : *inner) map->push_back(host_of[x]);
      }
    }
  }
  if (map) {
    out.free = false;
    out.witness = Match{*map};
  }
  return out;
}

bool is_pattern_free(const Graph& host, const PatternSpec& p, const SearchLimits& limits) {
  return check_pattern(host, p, limits).free;
}

std::vector<Vertex> maximum_matching(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return detail::blossom_matching(adj);
}

int max_matching(const Graph& g) {
  int matched = 0;
  for (Vertex x : maximum_matching(g)) matched += x >= 0;
  return matched / 2;
}

bool has_cycle_of_length(const Graph& g, int k, const SearchLimits& limits) {
  if (k < 3) throw GraphError("cycle length must be at least 3");
  return detail::find_cycle(detail::to_local(g), k, limits).has_value();
}

bool has_path_on(const Graph& g, int t, const SearchLimits& limits) {
  if (t < 1) throw GraphError("path order must be at least 1");
  return detail::find_path(detail::to_local(g), t, limits).has_value();
}

namespace {

bool colorable(const Graph& h, int k) {
  const int n = h.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> go = [&](int i, int used) {
    if (i == n) return true;
    const Vertex v = order[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (Vertex w : h.neighbors(v))
        if (color[w] == c) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (go(i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return go(0, 0);
}

}  // namespace

ChromaticClass chromatic_classify(const Graph& h) {
  if (h.order() > 24) throw GraphError("chromatic classification limited to 24 vertices");
  if (colorable(h, 2)) return ChromaticClass::Bipartite;
  if (colorable(h, 3)) return ChromaticClass::ThreeChromatic;
  if (colorable(h, 4)) return ChromaticClass::FourChromatic;
  return ChromaticClass::AtLeastFive;
}

const char* to_string(ChromaticClass c) {
  switch (c) {
    case ChromaticClass::Bipartite: return "bipartite";
    case ChromaticClass::ThreeChromatic: return "3-chromatic";
    case ChromaticClass::FourChromatic: return "4-chromatic";
    case ChromaticClass::AtLeastFive: return ">=5";
  }
  return "?";
}

namespace {

Mask core_of(const LocalGraph& g, Mask alive) {
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

bool disjoint_cycles(const LocalGraph& g, Mask alive, int k);

// Enumerates induced cycles through v inside alive; for each, recurses on the
// rest. Any family of k disjoint cycles can be taken with induced cycles.
bool through(const LocalGraph& g, Mask alive, int k, int v, std::vector<int>& path, Mask on_path) {
  const int last = path.back();
  for (Mask m = g.adj[last] & alive & ~on_path; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    // Chordless: w may touch the path only at last, and at v to close.
    const Mask touch = g.adj[w] & on_path & ~bit(last);
    if (touch & ~bit(v)) continue;
    if (touch == bit(v)) {
      if (path.size() >= 2 && path[1] < w && disjoint_cycles(g, alive & ~(on_path | bit(w)), k - 1)) return true;
      continue;
    }
    path.push_back(w);
    if (through(g, alive, k, v, path, on_path | bit(w))) return true;
    path.pop_back();
  }
  return false;
}

bool disjoint_cycles(const LocalGraph& g, Mask alive, int k) {
  if (k <= 0) return true;
  alive = core_of(g, alive);
  if (std::popcount(alive) < 3 * k) return false;
  const int v = std::countr_zero(alive);
  std::vector<int> path{v};
  if (through(g, alive, k, v, path, bit(v))) return true;
  return disjoint_cycles(g, alive & ~bit(v), k);
}

}  // namespace

bool has_disjoint_cycles(const Graph& h, int k) {
  const LocalGraph g = detail::to_local(h);
  return disjoint_cycles(g, g.all(), k);
}

bool has_three_disjoint_cycles(const Graph& h) { return has_disjoint_cycles(h, 3); }

bool is_linear_forest(const Graph& h) {
  if (h.order() > 0 && h.max_degree() > 2) return false;
  // A forest has n - c edges.
  std::vector<int> parent(h.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : h.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace planar_turan
