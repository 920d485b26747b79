#include "planar_turan/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>

#include "planar_turan/canonical.hpp"
#include "planar_turan/embedding.hpp"
#include "planar_turan/graph_io.hpp"
#include "planar_turan/patterns.hpp"

namespace planar_turan {

namespace {

void require_range(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

void expect(bool ok, const std::string& family, const std::string& what) {
  if (!ok) throw ConstructionError(family + ": self-check failed: " + what);
}

void check_shape(const Graph& g, const std::string& family, int n, int e) {
  expect(g.order() == n, family, "expected " + std::to_string(n) + " vertices, got " + std::to_string(g.order()));
  expect(g.size() == e, family, "expected " + std::to_string(e) + " edges, got " + std::to_string(g.size()));
  expect(is_planar(g), family, "not planar");
}

void check_free(const Graph& g, const std::string& family, const PatternSpec& p) {
  expect(is_pattern_free(g, p), family, "contains " + p.to_string());
}

void check_max_degree(const Graph& g, const std::string& family, int bound) {
  expect(g.max_degree() <= bound, family, "maximum degree exceeds " + std::to_string(bound));
}

std::vector<Edge> serpentine_chords(int n) {
  std::vector<Edge> chords;
  for (int k = 0; k <= n - 4; ++k) chords.push_back({1 + k / 2, n - 1 - (k + 1) / 2});
  return chords;
}

Edge normalized(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::vector<Edge> cycle_edges(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(normalized(i, (i + 1) % n));
  return es;
}

}  // namespace

Graph serpentine(int n) {
  require_range(n >= 5, "serpentine needs n >= 5");
  auto es = cycle_edges(n);
  for (const Edge& c : serpentine_chords(n)) es.push_back(c);
  Graph g(n, es);
  check_shape(g, "serpentine", n, 2 * n - 3);
  expect(g.max_degree() == 4, "serpentine", "maximum degree is not 4");
  return g;
}

Graph double_serpentine(int n) {
  require_range(n >= 5, "double serpentine needs n >= 5");
  const auto inside = serpentine_chords(n);
  for (int s = 1; s < n; ++s) {
    std::vector<Edge> outside;
    for (const Edge& c : inside) outside.push_back(normalized((c.u + s) % n, (c.v + s) % n));
    bool disjoint = true;
    for (const Edge& c : outside)
      if (std::find(inside.begin(), inside.end(), c) != inside.end()) disjoint = false;
    if (!disjoint) continue;
    auto es = cycle_edges(n);
    es.insert(es.end(), inside.begin(), inside.end());
    es.insert(es.end(), outside.begin(), outside.end());
    Graph g(n, es);
    if (g.max_degree() > 6 || !is_triangulation(g)) continue;
    return g;
  }
  throw ConstructionError("double serpentine: no shift gives a simple triangulation with maximum degree 6");
}

Graph apex_serpentine(int n) {
  require_range(n >= 6, "apex serpentine needs n >= 6");
  Graph g = join(complete_graph(1), serpentine(n - 1));
  expect(is_triangulation(g), "apex serpentine", "not a triangulation");
  return g;
}

Graph two_apex_cycle(int n) {
  require_range(n >= 5, "two-apex cycle needs n >= 5");
  Graph g = join(empty_graph(2), cycle_graph(n - 2));
  expect(is_triangulation(g), "two-apex cycle", "not a triangulation");
  return g;
}

Graph pentagonal_stack(int t) {
  require_range(t >= 2, "pentagonal stack needs t >= 2");
  const int n = 5 * t + 2, v = n - 1;
  auto ring = [](int i, int j) { return 1 + 5 * (i - 1) + ((j - 1) % 5 + 5) % 5; };
  std::vector<Edge> es;
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= 5; ++j) {
      es.push_back(normalized(ring(i, j), ring(i, j + 1)));
      if (i < t) {
        es.push_back(normalized(ring(i, j), ring(i + 1, j)));
        es.push_back(normalized(ring(i, j), ring(i + 1, j + 1)));
      }
    }
  for (int j = 1; j <= 5; ++j) {
    es.push_back({0, ring(1, j)});
    es.push_back(normalized(ring(t, j), v));
  }
  Graph g(n, es);
  check_shape(g, "pentagonal stack", n, 3 * n - 6);
  expect(is_triangulation(g), "pentagonal stack", "not a triangulation");
  check_free(g, "pentagonal stack", PatternSpec::explicit_graph(complete_graph(4)));
  check_free(g, "pentagonal stack", PatternSpec::wheel(4));
  return g;
}

Graph pentagonal_stack_plus(int t, int i) {
  require_range(t >= 2 && i >= 1 && i <= 4, "pentagonal stack plus needs t >= 2 and 1 <= i <= 4");
  const Graph base = pentagonal_stack(t);
  // Every triangle of L_t is a face (all neighbourhoods are induced cycles).
  std::vector<std::array<Vertex, 3>> faces;
  for (Vertex a = 0; a < base.order(); ++a)
    for (Vertex b : base.neighbors(a))
      for (Vertex c : base.neighbors(b))
        if (a < b && b < c && base.has_edge(a, c)) faces.push_back({a, b, c});
  std::sort(faces.begin(), faces.end());
  std::vector<std::size_t> chosen;
  std::vector<char> used(base.order(), 0);
  std::function<bool(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == i) return true;
    for (std::size_t f = from; f < faces.size(); ++f) {
      const auto& tri = faces[f];
      if (used[tri[0]] || used[tri[1]] || used[tri[2]]) continue;
      for (Vertex x : tri) used[x] = 1;
      chosen.push_back(f);
      if (pick(f + 1)) return true;
      chosen.pop_back();
      for (Vertex x : tri) used[x] = 0;
    }
    return false;
  };
  if (!pick(0)) throw ConstructionError("pentagonal stack plus: no pairwise vertex-disjoint faces");
  Graph g = base;
  for (std::size_t f : chosen) g = add_vertex_adjacent_to(g, {faces[f][0], faces[f][1], faces[f][2]});
  const int n = 5 * t + 2 + i;
  check_shape(g, "pentagonal stack plus", n, 3 * n - 6);
  check_free(g, "pentagonal stack plus", PatternSpec::wheel(4));
  return g;
}

Graph wheel_small(int n) {
  require_range(n == 5 || n == 6, "small wheel-free family needs n in {5, 6}");
  Graph g = join(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(n - 4)));
  check_shape(g, "small wheel-free", n, 3 * n - 7);
  check_free(g, "small wheel-free", PatternSpec::wheel(4));
  return g;
}

namespace {

// Vertex numbering for R_p: x_1..x_q, y_1..y_p, then C^3 in cycle order.
struct RingLabels {
  int q, p;
  int x(int i) const { return i - 1; }
  int y(int j) const { return q + j - 1; }
  int b(int j) const { return q + p + 2 * (j - 1); }  // 1 <= j <= p
  int a(int i) const { return q + p + 2 * (i - 1) + 1; }  // 1 <= i <= q
  int order() const { return 2 * q + 2 * p; }
};

std::vector<Edge> ring_edges(const RingLabels& L) {
  const int q = L.q, p = L.p;
  std::vector<Edge> es;
  for (int i = 1; i <= q; ++i) es.push_back(normalized(L.x(i), L.x(i % q + 1)));
  for (int j = 1; j <= p; ++j) es.push_back(normalized(L.y(j), L.y(j % p + 1)));
  const int c3 = q + p, base = q + p;
  for (int k = 0; k < c3; ++k) es.push_back(normalized(base + k, base + (k + 1) % c3));
  for (int i = 1; i <= q; ++i) {
    es.push_back(normalized(L.x(i), L.a(i)));
    es.push_back(normalized(L.x(i), L.b(i)));
    es.push_back(normalized(L.x(i), L.b(i % p + 1)));
  }
  for (int j = 1; j <= p; ++j) {
    es.push_back(normalized(L.y(j), L.b(j)));
    // a_0 wraps to a_q only when p = q; with p = q + 1 neither a_0 nor
    // a_{q+1} exists.
    const int prev = j - 1 >= 1 ? j - 1 : (p == q ? q : 0);
    if (prev >= 1) es.push_back(normalized(L.y(j), L.a(prev)));
    if (j <= q) es.push_back(normalized(L.y(j), L.a(j)));
  }
  return es;
}

Graph checked_ring(const std::string& family, int n, std::vector<Edge> es, int e) {
  Graph g(n, es);
  check_shape(g, family, n, e);
  check_max_degree(g, family, 5);
  check_free(g, family, PatternSpec::star(6));
  return g;
}

}  // namespace

Graph star_ring(int q, int p) {
  require_range(q >= 3 && (p == q || p == q + 1), "star ring needs q >= 3 and p in {q, q + 1}");
  const RingLabels L{q, p};
  return checked_ring("star ring", L.order(), ring_edges(L), p == q ? 10 * q : 10 * q + 3);
}

namespace {

std::vector<Edge> without(std::vector<Edge> es, std::initializer_list<Edge> gone) {
  for (Edge e : gone) {
    e = normalized(e.u, e.v);
    auto it = std::find(es.begin(), es.end(), e);
    if (it == es.end()) throw ConstructionError("recipe deletes a missing edge");
    es.erase(it);
  }
  return es;
}

}  // namespace

Graph star_ring_odd1(int q) {
  require_range(q >= 4, "star ring R^1 needs q >= 4");
  const RingLabels L{q, q};
  const int u = L.order();
  auto es = without(ring_edges(L), {{L.y(2), L.y(3)}, {L.y(1), L.y(q)}});
  for (int w : {L.y(2), L.y(3), L.y(1), L.y(q)}) es.push_back(normalized(u, w));
  return checked_ring("star ring R^1", u + 1, es, 10 * q + 2);
}

Graph star_ring_odd2(int q) {
  require_range(q >= 4, "star ring R^2 needs q >= 4");
  const RingLabels L{q, q};
  const int u = L.order(), v = u + 1;
  auto es = without(ring_edges(L), {{L.y(2), L.y(3)},
                                    {L.y(1), L.y(q)},
                                    {L.x(2), L.x(3)},
                                    {L.x(1), L.x(q)},
                                    {L.b(1), L.a(q)}});
  for (int w : {L.y(2), L.y(3), L.y(1), L.y(q), L.a(q)}) es.push_back(normalized(u, w));
  for (int w : {L.x(2), L.x(3), L.x(1), L.x(q), L.b(1)}) es.push_back(normalized(v, w));
  return checked_ring("star ring R^2", u + 2, es, 10 * q + 5);
}

Graph star_ring_apex(int q) {
  require_range(q >= 3, "star ring apex needs q >= 3");
  const RingLabels L{q, q + 1};
  const int u = L.order();
  auto es = ring_edges(L);
  for (int w : {L.y(1), L.b(1), L.y(q + 1), L.b(q + 1)}) es.push_back(normalized(u, w));
  return checked_ring("star ring apex", u + 1, es, 10 * q + 7);
}

Graph small_star_family(int t, int n) {
  require_range(t >= 3 && t <= 5 && n >= t + 1, "small star family needs t in {3,4,5} and n >= t + 1");
  const std::string family = "small star K_{1," + std::to_string(t) + "}";
  Graph g;
  if (t == 3) {
    g = cycle_graph(n);
  } else if (t == 4) {
    if (n == 5) {
      g = add_vertex_adjacent_to(delete_edge(complete_graph(4), 0, 1), {0, 1});
    } else {
      const int m = n / 2;
      std::vector<Edge> es;
      for (int i = 0; i < m; ++i) {
        es.push_back(normalized(i, (i + 1) % m));
        es.push_back(normalized(m + i, m + (i + 1) % m));
        es.push_back({i, m + i});
      }
      g = Graph(2 * m, es);
      if (n % 2 == 1) g = add_vertex_adjacent_to(delete_edge(g, 0, m), {0, m});
    }
  } else if (n == 6) {
    g = join(empty_graph(2), cycle_graph(4));
  } else if (n == 7) {
    g = add_vertex_adjacent_to(delete_edge(join(empty_graph(2), cycle_graph(4)), 2, 3), {2, 3});
  } else {
    // Cycle u_1..u_m, w_m..w_1 plus the zigzag path w_1, u_2, w_2, ..., u_m.
    const int m = n / 2;
    auto u_ = [](int i) { return i - 1; };
    auto w_ = [m](int i) { return m + i - 1; };
    std::vector<Edge> es;
    for (int i = 1; i < m; ++i) {
      es.push_back(normalized(u_(i), u_(i + 1)));
      es.push_back(normalized(w_(i), w_(i + 1)));
      es.push_back(normalized(w_(i), u_(i + 1)));
    }
    es.push_back(normalized(u_(m), w_(m)));
    es.push_back(normalized(w_(1), u_(1)));
    for (int i = 2; i < m; ++i) es.push_back(normalized(u_(i), w_(i)));
    es.push_back(normalized(w_(1), w_(m)));
    es.push_back(normalized(u_(1), w_(m)));
    if (n % 2 == 0) {
      es.push_back(normalized(u_(1), u_(m)));
      g = Graph(n, es);
    } else {
      const int u = 2 * m;
      es = without(es, {{u_(2), u_(3)}});
      for (int x : {u_(2), u_(3), u_(1), u_(m)}) es.push_back(normalized(u, x));
      g = Graph(n, es);
    }
  }
  // K_{1,5} at n = 7 is the one case below floor((t-1)n/2).
  check_shape(g, family, n, t == 5 && n == 7 ? 13 : (t - 1) * n / 2);
  check_free(g, family, PatternSpec::star(t));
  return g;
}

Graph two_apex_lower(int n) {
  require_range(n >= 5, "two-apex lower family needs n >= 5");
  Graph g = join(complete_graph(2), empty_graph(n - 2));
  check_shape(g, "two-apex lower", n, 2 * n - 3);
  check_free(g, "two-apex lower", PatternSpec::fan(2, 3));
  return g;
}

Graph icosahedron() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(normalized(i, (i + 1) % 5));
    es.push_back(normalized(5 + i, 5 + (i + 1) % 5));
    es.push_back({i, 5 + i});
    es.push_back({i, 5 + (i + 1) % 5});
    es.push_back({i, 10});
    es.push_back({5 + i, 11});
  }
  Graph g(12, es);
  check_shape(g, "icosahedron", 12, 30);
  expect(degree_profile(g) == std::map<int, int>{{5, 12}}, "icosahedron", "not 5-regular");
  return g;
}

Graph icosahedron_pair() {
  const Graph two = copies(2, icosahedron());
  // Face (10, 0, 1) of the first copy against the same face of the second.
  std::array<Vertex, 3> left{10, 0, 1}, right{22, 12, 13};
  std::sort(right.begin(), right.end());
  do {
    Graph g = two;
    for (int k = 0; k < 3; ++k) g = add_edge(g, left[k], right[k]);
    if (!is_planar(g)) continue;
    check_shape(g, "icosahedron pair", 24, 63);
    check_free(g, "icosahedron pair", PatternSpec::fan(3, 3));
    return g;
  } while (std::next_permutation(right.begin(), right.end()));
  throw ConstructionError("icosahedron pair: no face matching keeps the graph planar");
}

// ---- witnesses ---------------------------------------------------------------

namespace {

struct WitnessSpec {
  const char* name;
  int n, e;
  WitnessConstraints constraints;
};

WitnessSpec spec_of(BaseWitness w) {
  WitnessConstraints c;
  switch (w) {
    case BaseWitness::J:
      c.free_of = {PatternSpec::wheel(4)};
      c.degree_counts = {{3, 5}};
      return {"J", 11, 25, c};
    case BaseWitness::F0:
      c.free_of = {PatternSpec::fan(2, 3)};
      return {"F0", 8, 15, c};
    case BaseWitness::Ja:
      c.free_of = {PatternSpec::fan(3, 3)};
      c.max_degree = 5;
      c.degree_counts = {{3, 1}};
      return {"Ja", 7, 15, c};
    case BaseWitness::Jb:
      c.free_of = {PatternSpec::fan(3, 3)};
      c.max_degree = 5;
      return {"Jb", 9, 21, c};
    case BaseWitness::Jc:
      // The derived J'_c is a 12-vertex triangulation with maximum degree 5,
      // so the three non-chord vertices of the 5-face must have degree 4.
      c.max_degree = 5;
      c.degree_counts = {{4, 3}};
      return {"Jc", 11, 26, c};
  }
  throw std::logic_error("unknown witness");
}

std::mutex& witness_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Graph base_witness(BaseWitness w, const OracleOptions& opts) {
  const WitnessSpec spec = spec_of(w);
  const auto path = cache_directory() / "witnesses" / (std::string(spec.name) + ".g6");
  std::lock_guard lock(witness_mutex());
  auto valid = [&](const Graph& g) {
    return g.order() == spec.n && g.size() == spec.e && satisfies(g, spec.constraints, opts.limits);
  };
  if (opts.use_cache) {
    std::ifstream in(path);
    std::string line;
    if (in && std::getline(in, line)) {
      try {
        Graph g = from_graph6(line);
        if (valid(g)) return g;
      } catch (const FormatError&) {
      }
    }
  }
  const auto found = search_witness(spec.n, spec.e, spec.constraints, {}, opts);
  if (found.status != WitnessStatus::Found) {
    throw ConstructionError(std::string("witness ") + spec.name + " not found by search");
  }
  Graph g = canonical_form(*found.graph);
  expect(valid(g), spec.name, "search result fails its constraints");
  if (opts.use_cache) {
    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << to_graph6(g) << '\n';
    }
    std::filesystem::rename(tmp, path);
  }
  return g;
}

namespace {

struct Candidate {
  std::vector<Vertex> tuple;
  Graph result;
};

Graph first_passing(const std::string& family, std::vector<Candidate> cands,
                    const std::function<bool(const Graph&)>& check) {
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
  for (const auto& c : cands)
    if (check(c.result)) return c.result;
  throw ConstructionError(family + ": no vertex tuple satisfies the recipe");
}

std::vector<std::vector<Vertex>> faces_of(const Graph& g) {
  const auto res = planarity(g);
  if (!res.planar()) throw ConstructionError("base witness is not planar");
  return res.embedding->faces();
}

bool same_face(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Tuples (x1, x2, x3, x4) with triangles x1x2x3 and x1x3x4 on both sides of
// the edge x1x3.
std::vector<std::array<Vertex, 4>> diamond_tuples(const Graph& g) {
  std::vector<std::array<Vertex, 4>> out;
  const auto faces = faces_of(g);
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> apex;
    for (const auto& f : faces) {
      if (f.size() != 3) continue;
      if (std::find(f.begin(), f.end(), e.u) == f.end() || std::find(f.begin(), f.end(), e.v) == f.end()) continue;
      for (Vertex x : f)
        if (x != e.u && x != e.v) apex.push_back(x);
    }
    if (apex.size() != 2) continue;
    for (auto [x1, x3] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
      for (int k = 0; k < 2; ++k) out.push_back({x1, apex[k], x3, apex[1 - k]});
  }
  return out;
}

// Tuples (x1..x5): triangle x1x2x3 next to the unique 4-face x1x3x4x5.
std::vector<std::array<Vertex, 5>> pentagon_tuples(const Graph& g) {
  const auto faces = faces_of(g);
  std::vector<std::array<Vertex, 5>> out;
  for (const auto& quad : faces) {
    if (quad.size() != 4) continue;
    for (int i = 0; i < 4; ++i) {
      for (int dir : {1, -1}) {
        const Vertex x1 = quad[i], x3 = quad[(i + dir + 4) % 4];
        const Vertex x4 = quad[(i + 2 * dir + 8) % 4], x5 = quad[(i + 3 * dir + 12) % 4];
        for (const auto& tri : faces) {
          if (tri.size() != 3 || same_face(tri, quad)) continue;
          if (std::find(tri.begin(), tri.end(), x1) == tri.end() || std::find(tri.begin(), tri.end(), x3) == tri.end())
            continue;
          for (Vertex x2 : tri)
            if (x2 != x1 && x2 != x3) out.push_back({x1, x2, x3, x4, x5});
        }
      }
    }
  }
  return out;
}

}  // namespace

Graph derived_witness(DerivedWitness w, const OracleOptions& opts) {
  switch (w) {
    case DerivedWitness::JaPrime: {
      const Graph base = base_witness(BaseWitness::Ja, opts);
      std::vector<Candidate> cands;
      for (auto f : faces_of(base)) {
        if (f.size() != 3) continue;
        std::sort(f.begin(), f.end());
        cands.push_back({f, add_vertex_adjacent_to(base, {f[0], f[1], f[2]})});
      }
      return first_passing("J'_a", cands, [](const Graph& g) {
        return g.order() == 8 && is_triangulation(g) && g.max_degree() <= 5 &&
               is_pattern_free(g, PatternSpec::fan(3, 3));
      });
    }
    case DerivedWitness::JaDouble: {
      const Graph base = base_witness(BaseWitness::Ja, opts);
      std::vector<Vertex> threes;
      for (Vertex v = 0; v < base.order(); ++v)
        if (base.degree(v) == 3) threes.push_back(v);
      expect(threes.size() == 1, "J''_a", "J_a must have exactly one 3-vertex");
      Graph g = delete_vertex(base, threes[0]);
      check_shape(g, "J''_a", 6, 12);
      check_free(g, "J''_a", PatternSpec::star(5));
      return g;
    }
    case DerivedWitness::JaTriple: {
      const Graph base = derived_witness(DerivedWitness::JaDouble, opts);
      std::vector<Candidate> cands;
      for (const Edge& e : base.edges())
        cands.push_back({{e.u, e.v}, add_vertex_adjacent_to(delete_edge(base, e.u, e.v), {e.u, e.v})});
      return first_passing("J'''_a", cands, [](const Graph& g) {
        return g.order() == 7 && g.size() == 13 && is_planar(g) && is_pattern_free(g, PatternSpec::star(5));
      });
    }
    case DerivedWitness::JbPrime: {
      const Graph base = base_witness(BaseWitness::Jb, opts);
      std::vector<Candidate> cands;
      for (auto t : diamond_tuples(base)) {
        cands.push_back({{t.begin(), t.end()},
                         add_vertex_adjacent_to(delete_edge(base, t[0], t[2]), {t[0], t[1], t[2], t[3]})});
      }
      return first_passing("J'_b", cands, [](const Graph& g) {
        return g.order() == 10 && is_triangulation(g) && g.max_degree() <= 5 &&
               is_pattern_free(g, PatternSpec::fan(3, 3));
      });
    }
    case DerivedWitness::JcPrime:
    case DerivedWitness::JcDouble: {
      const Graph base = base_witness(BaseWitness::Jc, opts);
      const bool prime = w == DerivedWitness::JcPrime;
      std::vector<Candidate> cands;
      for (auto t : pentagon_tuples(base)) {
        Graph g = delete_edge(base, t[0], t[2]);
        if (prime) {
          g = add_vertex_adjacent_to(g, {t[0], t[1], t[2], t[3], t[4]});
        } else {
          g = add_vertex_adjacent_to(g, {t[0], t[1], t[2]});
          g = add_vertex_adjacent_to(g, {t[3], t[4], g.order() - 1});
        }
        cands.push_back({{t.begin(), t.end()}, g});
      }
      if (prime) {
        return first_passing("J'_c", cands, [](const Graph& g) {
          return g.order() == 12 && is_triangulation(g) && g.max_degree() <= 5;
        });
      }
      return first_passing("J''_c", cands, [](const Graph& g) {
        return g.order() == 13 && g.size() == 31 && is_planar(g) && g.max_degree() <= 5;
      });
    }
  }
  throw std::logic_error("unknown derived witness");
}

Graph j_n(int n, const OracleOptions& opts) {
  require_range(n >= 7 && n <= 11, "J_n needs 7 <= n <= 11");
  const Graph base = base_witness(BaseWitness::J, opts);
  std::vector<Vertex> threes;
  for (Vertex v = 0; v < base.order(); ++v)
    if (base.degree(v) == 3) threes.push_back(v);
  expect(threes.size() == 5, "J_n", "J must have five 3-vertices");
  threes.resize(11 - n);
  Graph g = delete_vertices(base, threes);
  check_shape(g, "J_n", n, 3 * n - 8);
  check_free(g, "J_n", PatternSpec::wheel(4));
  return g;
}

// ---- catalog -------------------------------------------------------------------

const std::vector<FamilyDescriptor>& family_catalog() {
  static const std::vector<FamilyDescriptor> catalog{
      {"serpentine", {"n"}, "O_n, maximal outerplanar with maximum degree 4"},
      {"double-serpentine", {"n"}, "O*_n, triangulation with maximum degree 6"},
      {"apex-serpentine", {"n"}, "K_1 + O_{n-1}"},
      {"two-apex-cycle", {"n"}, "2K_1 + C_{n-2}"},
      {"pentagonal-stack", {"t"}, "L_t, W_4-free triangulation on 5t+2 vertices"},
      {"pentagonal-stack-plus", {"t", "i"}, "L_t with i added 3-vertices"},
      {"small-wheel-free", {"n"}, "K_2 + (K_2 u K_{n-4}), n in {5,6}"},
      {"star-ring", {"q", "p"}, "R_p, K_{1,6}-free on 2q+2p vertices"},
      {"star-ring-odd1", {"q"}, "R^1 on 4q+1 vertices"},
      {"star-ring-odd2", {"q"}, "R^2 on 4q+2 vertices"},
      {"star-ring-apex", {"q"}, "R_{q+1} plus an apex, 4q+3 vertices"},
      {"cycle-star3", {"n"}, "C_n, K_{1,3}-free"},
      {"prism-star4", {"n"}, "K_{1,4}-free with floor(3n/2) edges"},
      {"matching-cycle-star5", {"n"}, "K_{1,5}-free with 2n edges (n >= 8), 12 at n = 6, 13 at n = 7"},
      {"two-apex-lower", {"n"}, "K_2 + (n-2)K_1"},
      {"icosahedron", {}, "the 5-regular triangulation on 12 vertices"},
      {"icosahedron-pair", {}, "G_0, two icosahedra joined by a face matching"},
      {"witness-j", {}, "J: 11 vertices, 25 edges, W_4-free, five 3-vertices"},
      {"witness-f0", {}, "F_0: 8 vertices, 15 edges, (K_1+2K_2)-free"},
      {"witness-ja", {}, "J_a: triangulation on 7 vertices, maximum degree 5"},
      {"witness-jb", {}, "J_b: triangulation on 9 vertices, maximum degree 5"},
      {"witness-jc", {}, "J_c: 11 vertices, 26 edges, maximum degree 5"},
      {"ja-prime", {}, "J'_a"},
      {"ja-double", {}, "J''_a"},
      {"ja-triple", {}, "J'''_a"},
      {"jb-prime", {}, "J'_b"},
      {"jc-prime", {}, "J'_c"},
      {"jc-double", {}, "J''_c"},
      {"j-n", {"n"}, "J_n, W_4-free with 3n-8 edges, 7 <= n <= 11"},
  };
  return catalog;
}

Graph build_family(std::string_view name, const std::vector<int>& params, const OracleOptions& opts) {
  const auto& catalog = family_catalog();
  auto it = std::find_if(catalog.begin(), catalog.end(), [&](const FamilyDescriptor& d) { return d.name == name; });
  if (it == catalog.end()) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  if (params.size() != it->params.size()) {
    throw std::invalid_argument("family '" + std::string(name) + "' takes " + std::to_string(it->params.size()) +
                                " parameter(s)");
  }
  auto p = [&](std::size_t i) { return params[i]; };
  const std::string n(name);
  if (n == "serpentine") return serpentine(p(0));
  if (n == "double-serpentine") return double_serpentine(p(0));
  if (n == "apex-serpentine") return apex_serpentine(p(0));
  if (n == "two-apex-cycle") return two_apex_cycle(p(0));
  if (n == "pentagonal-stack") return pentagonal_stack(p(0));
  if (n == "pentagonal-stack-plus") return pentagonal_stack_plus(p(0), p(1));
  if (n == "small-wheel-free") return wheel_small(p(0));
  if (n == "star-ring") return star_ring(p(0), p(1));
  if (n == "star-ring-odd1") return star_ring_odd1(p(0));
  if (n == "star-ring-odd2") return star_ring_odd2(p(0));
  if (n == "star-ring-apex") return star_ring_apex(p(0));
  if (n == "cycle-star3") return small_star_family(3, p(0));
  if (n == "prism-star4") return small_star_family(4, p(0));
  if (n == "matching-cycle-star5") return small_star_family(5, p(0));
  if (n == "two-apex-lower") return two_apex_lower(p(0));
  if (n == "icosahedron") return icosahedron();
  if (n == "icosahedron-pair") return icosahedron_pair();
  if (n == "witness-j") return base_witness(BaseWitness::J, opts);
  if (n == "witness-f0") return base_witness(BaseWitness::F0, opts);
  if (n == "witness-ja") return base_witness(BaseWitness::Ja, opts);
  if (n == "witness-jb") return base_witness(BaseWitness::Jb, opts);
  if (n == "witness-jc") return base_witness(BaseWitness::Jc, opts);
  if (n == "ja-prime") return derived_witness(DerivedWitness::JaPrime, opts);
  if (n == "ja-double") return derived_witness(DerivedWitness::JaDouble, opts);
  if (n == "ja-triple") return derived_witness(DerivedWitness::JaTriple, opts);
  if (n == "jb-prime") return derived_witness(DerivedWitness::JbPrime, opts);
  if (n == "jc-prime") return derived_witness(DerivedWitness::JcPrime, opts);
  if (n == "jc-double") return derived_witness(DerivedWitness::JcDouble, opts);
  if (n == "j-n") return j_n(p(0), opts);
  throw std::logic_error("catalog entry without a builder");
}

}  // namespace planar_turan
