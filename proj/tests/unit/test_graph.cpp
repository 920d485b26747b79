#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "planar_turan/canonical.hpp"
#include "planar_turan/graph.hpp"
#include "planar_turan/graph_io.hpp"

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

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST_CASE("primitive builders") {
  const Graph c5 = cycle_graph(5);
  CHECK(c5.order() == 5);
  CHECK(c5.size() == 5);
  CHECK(c5.min_degree() == 2);
  CHECK(c5.max_degree() == 2);
  CHECK(complete_graph(4).size() == 6);
  CHECK(degree_profile(star_graph(6)) == std::map<int, int>{{1, 6}, {6, 1}});
  CHECK(star_graph(6).degree(0) == 6);
  CHECK_THROWS_AS(cycle_graph(2), GraphError);
  CHECK(path_graph(1).size() == 0);
  CHECK(empty_graph(0).order() == 0);
}

TEST_CASE("graph rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
}

TEST_CASE("join and unions") {
  CHECK(join(empty_graph(2), cycle_graph(4)).size() == 12);
  const Graph w5 = join(complete_graph(1), cycle_graph(5));
  CHECK(w5.order() == 6);
  CHECK(w5.size() == 10);
  CHECK(join(complete_graph(1), copies(2, complete_graph(2))).size() == 6);
  const Graph three_k2 = copies(3, complete_graph(2));
  CHECK(three_k2.order() == 6);
  CHECK(three_k2.size() == 3);
  CHECK(is_isomorphic(disjoint_union(complete_graph(2), complete_graph(2)), copies(2, complete_graph(2))));
  const Graph k2k2k1 = join(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(1)));
  CHECK(k2k2k1.order() == 5);
  CHECK(k2k2k1.size() == 8);

  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(rng, 1 + i % 6, 0.5), h = random_graph(rng, 1 + i % 5, 0.4);
    const Graph j = join(g, h);
    CHECK(j.size() == g.size() + h.size() + g.order() * h.order());
    CHECK(j.order() == g.order() + h.order());
  }
}

TEST_CASE("edits") {
  CHECK(is_isomorphic(delete_vertex(cycle_graph(4), 2), path_graph(3)));
  CHECK(add_vertex_adjacent_to(complete_graph(3), {0, 1, 2}) == complete_graph(4));
  CHECK_THROWS_AS(delete_edge(cycle_graph(4), 0, 2), GraphError);
  CHECK_THROWS_AS(add_edge(cycle_graph(4), 0, 1), GraphError);
  CHECK_THROWS_AS(delete_vertex(cycle_graph(4), 4), GraphError);

  const Graph k4 = complete_graph(4);
  const Graph edited = add_vertex_adjacent_to(delete_edge(k4, 0, 2), {0, 1, 2, 3});
  CHECK(edited.order() == k4.order() + 1);
  CHECK(edited.size() == k4.size() + 3);
  CHECK(k4.size() == 6);

  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(rng, 7, 0.5);
    if (g.size() == 0) continue;
    const Edge e = g.edges()[i % g.size()];
    CHECK(add_edge(delete_edge(g, e.u, e.v), e.u, e.v) == g);
  }
}

TEST_CASE("induced and neighborhood subgraphs") {
  const std::vector<Vertex> s{0, 2, 3};
  CHECK(induced_subgraph(complete_graph(4), s) == complete_graph(3));
  const Graph w5 = join(complete_graph(1), cycle_graph(5));
  CHECK(is_isomorphic(neighborhood_subgraph(w5, 0), cycle_graph(5)));
  CHECK_THROWS_AS(neighborhood_subgraph(w5, 9), GraphError);
}

TEST_CASE("degree profile sums") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_graph(rng, 9, 0.4);
    int count = 0, weighted = 0;
    for (auto [d, c] : degree_profile(g)) {
      count += c;
      weighted += d * c;
    }
    CHECK(count == g.order());
    CHECK(weighted == 2 * g.size());
  }
  CHECK(degree_profile(complete_graph(4)) == std::map<int, int>{{3, 4}});
}

TEST_CASE("graph6 round trip") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(empty_graph(0)) == "?");
  CHECK(from_graph6(">>graph6<<C~\n") == complete_graph(4));
  CHECK_THROWS_AS(from_graph6("C~~"), FormatError);
  std::mt19937 rng(5);
  for (int n : {1, 5, 13, 62, 63, 64, 100}) {
    const Graph g = random_graph(rng, n, 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  std::stringstream ss;
  write_graph6_lines(ss, {cycle_graph(5), complete_graph(3)});
  auto back = read_graph6_lines(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == cycle_graph(5));
  CHECK(to_dot(path_graph(2)).find("0 -- 1") != std::string::npos);
}

TEST_CASE("canonical codes") {
  std::mt19937 rng(99);
  const Graph c7 = cycle_graph(7);
  CHECK(canonical_code(shuffled(c7, rng)) == canonical_code(shuffled(c7, rng)));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), copies(2, complete_graph(3))));
  CHECK(is_isomorphic(complete_graph(4), join(complete_graph(1), cycle_graph(3))));
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(rng, 4 + i % 9, 0.45);
    const auto code = canonical_code(g);
    for (int k = 0; k < 10; ++k) CHECK(canonical_code(shuffled(g, rng)) == code);
    const auto lab = canonical_labeling(g);
    CHECK(to_graph6(relabel(g, lab.perm)) == lab.code.bytes);
  }
}

TEST_CASE("canonical codes separate non-isomorphic graphs") {
  // All graphs on 5 vertices: 34 isomorphism classes.
  std::set<CanonicalCode> codes;
  std::vector<Edge> all;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) all.push_back({u, v});
  for (int mask = 0; mask < (1 << 10); ++mask) {
    std::vector<Edge> es;
    for (int i = 0; i < 10; ++i)
      if (mask >> i & 1) es.push_back(all[i]);
    codes.insert(canonical_code(Graph(5, es)));
  }
  CHECK(codes.size() == 34);
}
