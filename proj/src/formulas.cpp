#include "planar_turan/formulas.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include "json.hpp"

#include "planar_turan/canonical.hpp"
#include "planar_turan/constructions.hpp"
#include "planar_turan/embedding.hpp"

namespace planar_turan {

namespace {

using Rational = boost::rational<long long>;

long long floor_of(const Rational& r) {
  const long long q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

// Largest integer strictly below r.
long long below(const Rational& r) { return r.denominator() == 1 ? r.numerator() - 1 : floor_of(r); }

TuranValue exact_value(long long v, std::string provenance, std::string expression) {
  TuranValue out;
  out.lo = out.hi = v;
  out.sharp = true;
  out.provenance = std::move(provenance);
  out.expression = std::move(expression);
  return out;
}

[[noreturn]] void below_range(const std::string& what, int n, int min_n) {
  throw FormulaError(what + " is covered only for n >= " + std::to_string(min_n) + " (got n = " + std::to_string(n) +
                     ")");
}

TuranValue wheel_value(int k, int n) {
  if (k < 4) throw FormulaError("no theorem applies to W_" + std::to_string(k));
  if (n < k + 1) below_range("W_" + std::to_string(k), n, k + 1);
  int drop = 0;
  if (k == 4 && n <= 6) drop = 1;
  if (k == 4 && n >= 7 && n <= 11) drop = 2;
  if (k == 5 && n == 7) drop = 1;
  return exact_value(3LL * n - 6 - drop, "theorem:wheel", "3n-" + std::to_string(6 + drop));
}

std::string star_floor_expression(int t) {
  if (t == 3) return "n";
  if (t == 5) return "2n";
  return "floor(" + std::to_string(t - 1) + "n/2)";
}

TuranValue star_value(int t, int n) {
  if (t < 3) throw FormulaError("no theorem applies to K_{1," + std::to_string(t) + "}");
  if (n < t + 1) below_range("K_{1," + std::to_string(t) + "}", n, t + 1);
  auto linear = [&](int drop) { return exact_value(3LL * n - 6 - drop, "theorem:star", "3n-" + std::to_string(6 + drop)); };
  if (t >= 7) return linear(0);
  if (t == 6) {
    if (n <= 10 || n == 12) return linear(0);
    if (n == 11) return linear(1);
    if (n <= 14) return linear(2);
  }
  if (t == 5 && n == 7) return linear(2);
  return exact_value((static_cast<long long>(t) - 1) * n / 2, "theorem:star", star_floor_expression(t));
}

TuranValue fan23_value(int n) {
  if (n < 5) below_range("K_1+2K_2", n, 5);
  const Rational upper = Rational(19 * n, 8) - 4;
  TuranValue out;
  out.provenance = "theorem:fan-2-3";
  out.lo = 2LL * n - 3;
  out.hi = floor_of(upper);
  if (n % 8 == 0) {
    out.lo = out.hi;
    out.sharp = true;
    out.expression = "19n/8-4";
  } else {
    out.expression = "[2n-3, 19n/8-4]";
  }
  // n = 5: 2n - 3 = floor(19n/8 - 4) = 7.
  return out;
}

TuranValue fan33_value(int n) {
  if (n < 7) below_range("K_1+3K_2", n, 7);
  auto linear = [&](int drop) {
    return exact_value(3LL * n - 6 - drop, "theorem:fan-3-3", "3n-" + std::to_string(6 + drop));
  };
  if (n <= 10 || n == 12) return linear(0);
  if (n == 11) return linear(1);
  if (n <= 14) return linear(2);
  TuranValue out;
  out.provenance = "theorem:fan-3-3";
  out.lo = 5LL * n / 2;
  out.hi = below(Rational(17 * n, 6) - 4);
  out.expression = "[floor(5n/2), 17n/6-4)";
  return out;
}

// Upper bound for K_1 + H, H a linear forest on t vertices.
TuranValue cone_value(int t, bool has_edge, int n) {
  if (t < 4 || t > 6) throw FormulaError("cone bound needs a linear forest on 4..6 vertices");
  if (n < t + 1) below_range("K_1+H", n, t + 1);
  const Rational bound = Rational(13LL * (t - 1) * n, 4 * t - 2) - Rational(12 * (t - 1), 2 * t - 1);
  TuranValue out;
  out.provenance = "theorem:cone-linear-forest";
  out.hi = std::min(floor_of(bound), 3LL * n - 6);
  // K_{1,t}-free graphs avoid the cone; so do triangle-free ones once H has an edge.
  out.lo = star_value(t, n).lo;
  if (has_edge) out.lo = std::max(out.lo, 2LL * n - 4);
  out.lo = std::min(out.lo, out.hi);
  out.expression = "<= 13(t-1)n/(4t-2)-12(t-1)/(2t-1), t=" + std::to_string(t);
  return out;
}

}  // namespace

TuranValue formula_value(const PatternSpec& p, int n) {
  using K = PatternSpec::Kind;
  switch (p.kind) {
    case K::Wheel:
      return wheel_value(p.a, n);
    case K::Star:
      return star_value(p.a, n);
    case K::Fan:
      if (p.b == 2) return star_value(p.a, n);
      if (p.a == 2 && p.b == 3) return fan23_value(n);
      if (p.a == 3 && p.b == 3) return fan33_value(n);
      break;
    case K::ConePath:
      return cone_value(p.a, p.a >= 2, n);
    case K::ConeGraph:
      if (is_linear_forest(p.graph)) return cone_value(p.graph.order(), p.graph.size() > 0, n);
      break;
    case K::Explicit:
      break;
  }
  throw FormulaError("no theorem applies to " + p.to_string());
}

ReferenceGraph parse_reference_graph(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "c4") return ReferenceGraph::C4;
  if (s == "c5") return ReferenceGraph::C5;
  if (s == "theta4") return ReferenceGraph::Theta4;
  if (s == "theta5") return ReferenceGraph::Theta5;
  if (s == "c6") return ReferenceGraph::C6;
  if (s == "p9") return ReferenceGraph::P9;
  throw FormulaError("unknown reference graph '" + name + "' (expected c4, c5, theta4, theta5, c6 or p9)");
}

std::string to_string(ReferenceGraph g) {
  switch (g) {
    case ReferenceGraph::C4: return "c4";
    case ReferenceGraph::C5: return "c5";
    case ReferenceGraph::Theta4: return "theta4";
    case ReferenceGraph::Theta5: return "theta5";
    case ReferenceGraph::C6: return "c6";
    case ReferenceGraph::P9: return "p9";
  }
  return "?";
}

TuranValue reference_bounds(ReferenceGraph g, int n) {
  Rational bound;
  bool equal = false;
  std::string expr;
  int min_n = 3;
  switch (g) {
    case ReferenceGraph::C4:
      min_n = 4;
      bound = Rational(15 * (n - 2), 7);
      expr = "15(n-2)/7";
      break;
    case ReferenceGraph::C5:
      min_n = 11;
      bound = Rational(12 * n - 33, 5);
      expr = "(12n-33)/5";
      break;
    case ReferenceGraph::Theta4:
      min_n = 4;
      bound = Rational(12 * (n - 2), 5);
      equal = n % 20 == 12;
      expr = "12(n-2)/5";
      break;
    case ReferenceGraph::Theta5:
      min_n = 5;
      bound = Rational(5 * (n - 2), 2);
      equal = n % 120 == 50;
      expr = "5(n-2)/2";
      break;
    case ReferenceGraph::C6:
      min_n = 6;
      bound = Rational(18 * (n - 2), 7);
      expr = "18(n-2)/7";
      break;
    case ReferenceGraph::P9:
      bound = std::max(Rational(9 * n, 4), Rational(5 * n - 8, 2));
      expr = "max(9n/4, (5n-8)/2)";
      break;
  }
  if (n < min_n) below_range(to_string(g), n, min_n);
  TuranValue out;
  out.provenance = "reference:" + to_string(g);
  out.hi = std::min(floor_of(bound), 3LL * n - 6);
  out.lo = equal ? out.hi : 0;
  out.sharp = equal;
  out.expression = expr;
  return out;
}

// ---- sufficient conditions for 3n - 6 -----------------------------------------

std::string to_string(Prop13Condition c) {
  switch (c) {
    case Prop13Condition::ContainsK4: return "contains-K4";
    case Prop13Condition::A: return "a";
    case Prop13Condition::B: return "b";
    case Prop13Condition::C: return "c";
    case Prop13Condition::D: return "d";
    case Prop13Condition::E: return "e";
    case Prop13Condition::F: return "f";
    case Prop13Condition::G: return "g";
    case Prop13Condition::NotCovered: return "not covered";
  }
  return "?";
}

std::string to_string(WitnessFamily w) {
  switch (w) {
    case WitnessFamily::None: return "none";
    case WitnessFamily::TwoApexCycle: return "TwoApexCycle";
    case WitnessFamily::ApexSerpentine: return "ApexSerpentine";
    case WitnessFamily::DoubleSerpentine: return "DoubleSerpentine";
  }
  return "?";
}

namespace {

int family_min_n(WitnessFamily w) { return w == WitnessFamily::ApexSerpentine ? 6 : 5; }

Prop13Verdict verdict(Prop13Condition c, WitnessFamily w, int min_n, std::string detail) {
  return {c, w, std::max(min_n, family_min_n(w)), std::move(detail)};
}

}  // namespace

Prop13Verdict prop13_classify(const Graph& h, int n) {
  const int order = h.order();
  if (order == 0) throw GraphError("H must have at least one vertex");
  if (n < order) throw GraphError("n must be at least |H|");
  if (!is_planar(h)) throw GraphError("H is not planar");

  using C = Prop13Condition;
  using W = WitnessFamily;
  std::vector<Prop13Verdict> out;
  auto accept = [&](const Prop13Verdict& v) { return n >= v.min_n; };

  if (contains_subgraph(h, complete_graph(4))) {
    auto v = verdict(C::ContainsK4, W::TwoApexCycle, std::max(order, 6), "K_4 subgraph");
    return accept(v) ? v : Prop13Verdict{};
  }

  const auto profile = degree_profile(h);
  auto count = [&](int d) {
    auto it = profile.find(d);
    return it == profile.end() ? 0 : it->second;
  };
  const int max_deg = h.max_degree(), min_deg = h.min_degree();

  if (chromatic_classify(h) == ChromaticClass::FourChromatic) {
    auto v = verdict(C::A, W::TwoApexCycle, order + 2, "chi(H) = 4");
    if (accept(v)) return v;
  }
  if (max_deg >= 7) return verdict(C::B, W::DoubleSerpentine, order, "Delta(H) >= 7");
  if (max_deg == 6) {
    if (count(6) + count(5) >= 2) {
      // A non-adjacent pair (6-vertex, >=5-vertex) rules out K_1 + O_{n-1};
      // otherwise 2K_1 + C_{n-2} has no adjacent pair of such vertices.
      bool non_adjacent = false;
      for (Vertex x = 0; x < order; ++x)
        for (Vertex y = 0; y < order; ++y)
          if (x != y && h.degree(x) == 6 && h.degree(y) >= 5 && !h.has_edge(x, y)) non_adjacent = true;
      return non_adjacent ? verdict(C::C, W::ApexSerpentine, order, "n_6 + n_5 >= 2, xy not an edge")
                          : verdict(C::C, W::TwoApexCycle, order, "n_6 + n_5 >= 2, xy an edge");
    }
    if (count(4) >= 5) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < order; ++v)
        if (h.degree(v) == 6 || h.degree(v) == 4) s.push_back(v);
      const bool special =
          count(4) == 5 && is_isomorphic(induced_subgraph(h, s), join(empty_graph(2), path_graph(4)));
      return special ? verdict(C::C, W::DoubleSerpentine, order, "n_6 = 1, n_4 = 5, H[S] = 2K_1+P_4")
                     : verdict(C::C, W::TwoApexCycle, order, "n_6 = 1, n_4 >= 5");
    }
  }
  if (max_deg == 5) {
    if (count(5) >= 3) return verdict(C::D, W::TwoApexCycle, order, "n_5 >= 3");
    if (count(5) == 2) {
      std::vector<Vertex> fives;
      for (Vertex v = 0; v < order; ++v)
        if (h.degree(v) == 5) fives.push_back(v);
      if (h.has_edge(fives[0], fives[1])) return verdict(C::D, W::TwoApexCycle, order, "two adjacent 5-vertices");
    }
  }
  if (max_deg == 4 && count(4) >= 7) return verdict(C::E, W::TwoApexCycle, order, "n_4 >= 7");
  if (max_deg == 3 && min_deg == 3 && order >= 9) return verdict(C::F, W::TwoApexCycle, order, "3-regular, |H| >= 9");
  if (has_three_disjoint_cycles(h)) return verdict(C::F, W::TwoApexCycle, order, "three disjoint cycles");
  if (max_deg >= 4 && max_deg <= 6 && count(max_deg) == 1) {
    Vertex u = 0;
    while (h.degree(u) != max_deg) ++u;
    const Graph nb = neighborhood_subgraph(h, u);
    if (nb.order() > 0 && nb.max_degree() >= 3) {
      return verdict(C::F, W::TwoApexCycle, order, "unique max-degree vertex u with Delta(H[N(u)]) >= 3");
    }
  }
  // A single vertex is excluded: K_1 + O_{n-1} is not K_1-free.
  int low = 0;
  for (Vertex v = 0; v < order; ++v) low += h.degree(v) <= 3;
  if (order >= 2 && (min_deg >= 4 || low == 1)) {
    auto v = verdict(C::G, W::ApexSerpentine, order, min_deg >= 4 ? "delta(H) >= 4" : "one vertex of degree <= 3");
    if (accept(v)) return v;
  }
  return {};
}

Graph witness_graph(WitnessFamily w, int n) {
  switch (w) {
    case WitnessFamily::TwoApexCycle: return two_apex_cycle(n);
    case WitnessFamily::ApexSerpentine: return apex_serpentine(n);
    case WitnessFamily::DoubleSerpentine: return double_serpentine(n);
    case WitnessFamily::None: break;
  }
  throw std::invalid_argument("verdict has no witness family");
}

bool verify_verdict(const Prop13Verdict& v, const Graph& h, int n) {
  if (!v.covered()) throw std::invalid_argument("cannot verify a 'not covered' verdict");
  if (n < v.min_n) throw std::invalid_argument("n is below the verdict's minimum " + std::to_string(v.min_n));
  const Graph g = witness_graph(v.witness, n);
  return g.size() == 3 * n - 6 && is_triangulation(g) && !contains_subgraph(g, h);
}

std::string to_json(const TuranValue& v) {
  nlohmann::ordered_json j;
  j["lo"] = v.lo;
  j["hi"] = v.hi;
  j["exact"] = v.exact();
  j["sharp"] = v.sharp;
  j["provenance"] = v.provenance;
  j["expression"] = v.expression;
  return j.dump();
}

std::string to_json(const Prop13Verdict& v) {
  nlohmann::ordered_json j;
  j["condition"] = to_string(v.condition);
  j["witness"] = to_string(v.witness);
  j["min_n"] = v.min_n;
  j["detail"] = v.detail;
  return j.dump();
}

}  // namespace planar_turan
