#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planar_turan/graph.hpp"

namespace planar_turan {

/// Symbolic forbidden graph. Cone patterns are K_1 + X with the cone vertex
/// labelled 0 in the realized graph.
struct PatternSpec {
  enum class Kind { Wheel, Star, Fan, ConePath, ConeGraph, Explicit };

  Kind kind = Kind::Explicit;
  int a = 0;    // k for Wheel, t for Star/Fan/ConePath
  int b = 0;    // r for Fan
  Graph graph;  // H for ConeGraph/Explicit

  /// W_k = K_1 + C_k, k >= 3.
  static PatternSpec wheel(int k);
  /// K_{1,t}, t >= 1.
  static PatternSpec star(int t);
  /// (t,r)-fan K_1 + tK_{r-1}, t >= 2, r >= 2.
  static PatternSpec fan(int t, int r);
  /// K_1 + P_t, t >= 1.
  static PatternSpec cone_path(int t);
  /// K_1 + H where H is a linear forest.
  static PatternSpec cone_graph(Graph h);
  static PatternSpec explicit_graph(Graph h);

  /// Mini-grammar form: wheel:K, star:T, fan:T,R, conepath:T, cone:<g6>, g6:<code>.
  std::string to_string() const;
};

class PatternParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

PatternSpec parse_pattern(std::string_view text);

/// The pattern as an explicit graph (wheel hub 0 with rim 1..k in cycle order,
/// fan blades as consecutive blocks, and so on).
Graph realize(const PatternSpec& p);

/// Injective map pattern vertex -> host vertex preserving every pattern edge.
struct Match {
  std::vector<Vertex> map;
  friend bool operator==(const Match&, const Match&) = default;
};

bool verify_match(const Graph& host, const Graph& pattern, const Match& m);

/// Limits on the exponential cycle/path searches.
struct SearchLimits {
  int max_search_vertices = 16;
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subgraph (not induced) containment. When present, the returned map is the
/// lexicographically smallest one.
std::optional<Match> contains_subgraph(const Graph& host, const Graph& pattern);

struct FreenessResult {
  bool free = true;
  std::optional<Match> witness;  // a copy of realize(p) when not free
};

/// Decides P-freeness through the neighborhood reductions (a cone K_1 + X
/// occurs iff X lies in some G[N(v)]). The witness equals the one
/// contains_subgraph(host, realize(p)) would return.
FreenessResult check_pattern(const Graph& host, const PatternSpec& p, const SearchLimits& limits = {});
bool is_pattern_free(const Graph& host, const PatternSpec& p, const SearchLimits& limits = {});

/// Maximum matching (Edmonds' blossom algorithm).
int max_matching(const Graph& g);
/// mate[v] is v's partner or -1.
std::vector<Vertex> maximum_matching(const Graph& g);

bool has_cycle_of_length(const Graph& g, int k, const SearchLimits& limits = {});
bool has_path_on(const Graph& g, int t, const SearchLimits& limits = {});

enum class ChromaticClass { Bipartite, ThreeChromatic, FourChromatic, AtLeastFive };
ChromaticClass chromatic_classify(const Graph& h);
const char* to_string(ChromaticClass c);

bool has_three_disjoint_cycles(const Graph& h);
/// True iff h has k pairwise vertex-disjoint cycles; h must have <= 64 vertices.
bool has_disjoint_cycles(const Graph& h, int k);

/// Disjoint union of paths (isolated vertices count as paths).
bool is_linear_forest(const Graph& h);

}  // namespace planar_turan
