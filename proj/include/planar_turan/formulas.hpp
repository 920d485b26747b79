#pragma once

#include <stdexcept>
#include <string>

#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"
#include "planar_turan/turan_value.hpp"

namespace planar_turan {

/// No closed form covers the requested (pattern, n).
class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed-form ex_P(n, P) for wheels, stars, the fans K_1 + 2K_2 and
/// K_1 + 3K_2, and cones over linear forests on 4..6 vertices (upper bound
/// only; lo is the K_{1,t} value or 2n-4, whichever is larger).
TuranValue formula_value(const PatternSpec& p, int n);

enum class ReferenceGraph { C4, C5, Theta4, Theta5, C6, P9 };

ReferenceGraph parse_reference_graph(const std::string& name);
std::string to_string(ReferenceGraph g);

/// Known upper bounds for small cycles, thetas and P_9. lo = hi only where
/// equality is known at this n; otherwise lo = 0.
TuranValue reference_bounds(ReferenceGraph g, int n);

enum class Prop13Condition { ContainsK4, A, B, C, D, E, F, G, NotCovered };
enum class WitnessFamily { None, TwoApexCycle, ApexSerpentine, DoubleSerpentine };

struct Prop13Verdict {
  Prop13Condition condition = Prop13Condition::NotCovered;
  WitnessFamily witness = WitnessFamily::None;
  int min_n = 0;
  /// Which clause of the condition fired, e.g. "n_5 >= 3".
  std::string detail;

  bool covered() const { return condition != Prop13Condition::NotCovered; }
};

std::string to_string(Prop13Condition c);
std::string to_string(WitnessFamily w);

/// First sufficient condition for ex_P(n, H) = 3n - 6 that H meets at this n.
/// Throws GraphError for non-planar H or n < |H|.
Prop13Verdict prop13_classify(const Graph& h, int n);

/// The verdict's triangulation on n vertices.
Graph witness_graph(WitnessFamily w, int n);

/// Builds the witness at n and checks it is H-free with 3n - 6 edges.
bool verify_verdict(const Prop13Verdict& v, const Graph& h, int n);

std::string to_json(const TuranValue& v);
std::string to_json(const Prop13Verdict& v);

}  // namespace planar_turan
