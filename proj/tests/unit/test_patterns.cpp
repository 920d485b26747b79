#include <algorithm>
#include <numeric>
#include <functional>
#include <random>

#include "doctest.h"
#include "planar_turan/canonical.hpp"
#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"

using namespace planar_turan;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

// Every injective map in lexicographic order; first hit is the lexmin match.
std::optional<std::vector<Vertex>> brute_force_match(const Graph& host, const Graph& pat) {
  const int k = pat.order(), n = host.order();
  if (k > n) return std::nullopt;
  std::vector<Vertex> map;
  std::vector<char> used(n, 0);
  std::function<bool()> go = [&]() {
    const int i = static_cast<int>(map.size());
    if (i == k) return true;
    for (Vertex h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (Vertex q : pat.neighbors(i))
        if (q < i && !host.has_edge(h, map[q])) ok = false;
      if (!ok) continue;
      map.push_back(h);
      used[h] = 1;
      if (go()) return true;
      used[h] = 0;
      map.pop_back();
    }
    return false;
  };
  if (go()) return map;
  return std::nullopt;
}

int brute_force_matching(const Graph& g) {
  const auto es = g.edges();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << es.size()); ++mask) {
    std::uint32_t seen = 0;
    int count = 0;
    bool ok = true;
    for (std::size_t i = 0; i < es.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const std::uint32_t ends = (1U << es[i].u) | (1U << es[i].v);
      if (seen & ends) ok = false;
      seen |= ends;
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

Graph icosahedron_local() {
  // Antiprism on two pentagons plus two caps.
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({5 + i, 5 + (i + 1) % 5});
    es.push_back({i, 5 + i});
    es.push_back({i, 5 + (i + 1) % 5});
    es.push_back({10, i});
    es.push_back({11, 5 + i});
  }
  return Graph(12, es);
}

}  // namespace

TEST_CASE("pattern grammar") {
  CHECK(parse_pattern("wheel:5").kind == PatternSpec::Kind::Wheel);
  CHECK(parse_pattern("fan:3,3").to_string() == "fan:3,3");
  CHECK(parse_pattern("conepath:4").a == 4);
  CHECK(parse_pattern("g6:C~").graph == complete_graph(4));
  CHECK(parse_pattern("cone:Bg").kind == PatternSpec::Kind::ConeGraph);
  CHECK_THROWS_AS(parse_pattern("wheel:2"), PatternParseError);
  CHECK_THROWS_AS(parse_pattern("wheel"), PatternParseError);
  CHECK_THROWS_AS(parse_pattern("fan:3"), PatternParseError);
  CHECK_THROWS_AS(parse_pattern("bogus:1"), PatternParseError);
  CHECK_THROWS_AS(parse_pattern("cone:Bw"), PatternParseError);  // K_3 is not a linear forest
  for (const char* s : {"wheel:4", "star:6", "fan:2,3", "conepath:5", "g6:Dhc"})
    CHECK(parse_pattern(s).to_string() == s);
}

TEST_CASE("realized patterns") {
  CHECK(realize(PatternSpec::wheel(5)).size() == 10);
  CHECK(realize(PatternSpec::fan(2, 3)).size() == 6);
  CHECK(realize(PatternSpec::fan(3, 3)).order() == 7);
  CHECK(realize(PatternSpec::cone_path(4)).size() == 7);
  CHECK(realize(PatternSpec::star(4)) == star_graph(4));
}

TEST_CASE("subgraph containment") {
  const auto m = contains_subgraph(complete_graph(4), cycle_graph(4));
  REQUIRE(m);
  CHECK(verify_match(complete_graph(4), cycle_graph(4), *m));
  CHECK_FALSE(contains_subgraph(cycle_graph(6), path_graph(7)));
}

TEST_CASE("neighborhood reductions") {
  const Graph ico = icosahedron_local();
  CHECK_FALSE(is_pattern_free(ico, PatternSpec::wheel(5)));
  CHECK(is_pattern_free(ico, PatternSpec::wheel(4)));
  CHECK(is_pattern_free(join(complete_graph(2), empty_graph(14)), PatternSpec::fan(2, 3)));
  CHECK(is_pattern_free(star_graph(6), PatternSpec::star(7)));
  CHECK_FALSE(is_pattern_free(star_graph(6), PatternSpec::star(6)));
  const auto res = check_pattern(ico, PatternSpec::wheel(5));
  REQUIRE(res.witness);
  CHECK(verify_match(ico, realize(PatternSpec::wheel(5)), *res.witness));
}

TEST_CASE("matching") {
  CHECK(max_matching(cycle_graph(5)) == 2);
  CHECK(max_matching(copies(3, complete_graph(2))) == 3);
  const Graph c5k1 = disjoint_union(cycle_graph(5), complete_graph(1));
  CHECK(max_matching(c5k1) == brute_force_matching(c5k1));
  CHECK(max_matching(c5k1) == 2);
  std::mt19937 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 3 + i % 8, 0.3);
    if (g.size() > 20) continue;
    CHECK(max_matching(g) == brute_force_matching(g));
  }
}

TEST_CASE("cycles and paths") {
  CHECK(has_cycle_of_length(complete_graph(4), 4));
  CHECK(has_path_on(star_graph(5), 3));
  CHECK_FALSE(has_path_on(star_graph(5), 4));
  CHECK_FALSE(has_cycle_of_length(cycle_graph(6), 5));
  CHECK(has_cycle_of_length(cycle_graph(6), 6));
  CHECK_THROWS_AS(has_cycle_of_length(complete_graph(17), 3), SearchLimitExceeded);
  // A long path attached to a small core stays under the guard.
  Graph lolli = disjoint_union(complete_graph(4), path_graph(30));
  lolli = add_edge(lolli, 3, 4);
  CHECK(has_cycle_of_length(lolli, 4));
}

TEST_CASE("chromatic buckets") {
  CHECK(chromatic_classify(cycle_graph(5)) == ChromaticClass::ThreeChromatic);
  CHECK(chromatic_classify(complete_graph(4)) == ChromaticClass::FourChromatic);
  CHECK(chromatic_classify(join(empty_graph(2), cycle_graph(4))) == ChromaticClass::ThreeChromatic);
  CHECK(chromatic_classify(cycle_graph(6)) == ChromaticClass::Bipartite);
  CHECK(chromatic_classify(complete_graph(5)) == ChromaticClass::AtLeastFive);
  CHECK(chromatic_classify(icosahedron_local()) == ChromaticClass::FourChromatic);
}

TEST_CASE("disjoint cycles and linear forests") {
  CHECK(has_three_disjoint_cycles(copies(3, cycle_graph(3))));
  CHECK_FALSE(has_three_disjoint_cycles(cycle_graph(9)));
  CHECK_FALSE(has_three_disjoint_cycles(complete_graph(4)));
  CHECK_FALSE(has_three_disjoint_cycles(complete_graph(8)));
  CHECK(has_three_disjoint_cycles(complete_graph(9)));
  CHECK(is_linear_forest(disjoint_union(path_graph(3), path_graph(1))));
  CHECK_FALSE(is_linear_forest(cycle_graph(3)));
  CHECK_FALSE(is_linear_forest(star_graph(3)));
}

TEST_CASE("specialized checkers agree with generic search") {
  std::mt19937 rng(2024);
  const std::vector<PatternSpec> specs{
      PatternSpec::wheel(3),     PatternSpec::wheel(4),     PatternSpec::wheel(5),
      PatternSpec::star(3),      PatternSpec::star(5),      PatternSpec::fan(2, 2),
      PatternSpec::fan(2, 3),    PatternSpec::fan(3, 3),    PatternSpec::fan(2, 4),
      PatternSpec::cone_path(3), PatternSpec::cone_path(5), PatternSpec::cone_graph(disjoint_union(path_graph(2), path_graph(3))),
      PatternSpec::explicit_graph(cycle_graph(5))};
  for (int i = 0; i < 120; ++i) {
    const Graph g = random_graph(rng, 5 + i % 5, 0.3 + 0.05 * (i % 8));
    for (const auto& p : specs) {
      const auto fast = check_pattern(g, p);
      const auto slow = contains_subgraph(g, realize(p));
      const auto brute = brute_force_match(g, realize(p));
      CHECK(fast.free == !slow.has_value());
      CHECK(slow.has_value() == brute.has_value());
      if (slow && brute) CHECK(slow->map == *brute);
      if (fast.witness && slow) CHECK(fast.witness->map == slow->map);
    }
  }
}
