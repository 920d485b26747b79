#include "planar_turan/verify.hpp"

#include <algorithm>
#include <functional>

#include "planar_turan/constructions.hpp"
#include "planar_turan/embedding.hpp"
#include "planar_turan/formulas.hpp"

namespace planar_turan {

namespace {

std::string show(const TuranValue& v) {
  if (v.exact()) return std::to_string(v.lo);
  return "[" + std::to_string(v.lo) + ", " + std::to_string(v.hi) + "]";
}

class Slice {
 public:
  Slice(int max_n, const OracleOptions& opts) : max_n_(max_n), opts_(opts) {}

  void add(std::string name, bool pass, std::string detail) {
    rows_.push_back({std::move(name), pass, std::move(detail)});
  }

  // Oracle value against the closed form: equal when the form is exact,
  // inside the interval otherwise.
  void oracle_vs_formula(const PatternSpec& p, int n) {
    const auto exact = exact_planar_turan(n, p, {}, opts_);
    const auto f = formula_value(p, n);
    const long long v = exact.value.lo;
    const bool ok = exact.value.exact() && (f.exact() ? v == f.lo : f.lo <= v && v <= f.hi);
    add(p.to_string() + " n=" + std::to_string(n), ok, "oracle " + show(exact.value) + ", formula " + show(f));
  }

  // A construction attaining (or bounding) the formula's lower end.
  void witness(const std::string& name, const std::function<Graph()>& build, const PatternSpec& p,
               std::optional<long long> edges) {
    try {
      const Graph g = build();
      const bool free = is_pattern_free(g, p, opts_.limits);
      const bool size_ok = !edges || g.size() == *edges;
      add(name, free && size_ok && is_planar(g),
          "n=" + std::to_string(g.order()) + " e=" + std::to_string(g.size()) + (free ? " free" : " contains pattern"));
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }

  void profile_absent(int n, const std::map<int, int>& profile, const std::string& label) {
    const auto r = exists_planar_with_degree_profile(n, profile, {}, opts_);
    add("no planar graph " + label + " on " + std::to_string(n) + " vertices", r.status == WitnessStatus::None,
        r.status == WitnessStatus::None ? "verified none" : "witness found");
  }

  int max_n() const { return max_n_; }
  const OracleOptions& opts() const { return opts_; }
  std::vector<CheckRow> rows() && { return std::move(rows_); }

 private:
  int max_n_;
  OracleOptions opts_;
  std::vector<CheckRow> rows_;
};

void wheels(Slice& s) {
  for (int k = 4; k <= 6; ++k)
    for (int n = k + 1; n <= s.max_n(); ++n) s.oracle_vs_formula(PatternSpec::wheel(k), n);
  const auto w4 = PatternSpec::wheel(4);
  for (int n = 5; n <= std::min(6, s.max_n()); ++n)
    s.witness("K_2+(K_2 u K_" + std::to_string(n - 4) + ")", [n] { return wheel_small(n); }, w4, 3 * n - 7);
  for (int n = 7; n <= std::min(11, s.max_n()); ++n)
    s.witness("J_" + std::to_string(n), [&, n] { return j_n(n, s.opts()); }, w4, 3 * n - 8);
  for (int t = 2; t <= 3; ++t) {
    s.witness("L_" + std::to_string(t), [t] { return pentagonal_stack(t); }, w4, 3 * (5 * t + 2) - 6);
  }
}

void fan23(Slice& s) {
  const auto p = PatternSpec::fan(2, 3);
  for (int n = 5; n <= s.max_n(); ++n) s.oracle_vs_formula(p, n);
  for (int n = 5; n <= std::max(9, s.max_n()); ++n)
    s.witness("K_2+" + std::to_string(n - 2) + "K_1", [n] { return two_apex_lower(n); }, p, 2 * n - 3);
  s.witness("F_0", [&] { return base_witness(BaseWitness::F0, s.opts()); }, p, formula_value(p, 8).lo);
}

void stars(Slice& s) {
  for (int t = 3; t <= 6; ++t)
    for (int n = t + 1; n <= s.max_n(); ++n) s.oracle_vs_formula(PatternSpec::star(t), n);
  for (int t = 3; t <= 5; ++t)
    for (int n = t + 1; n <= 20; ++n)
      s.witness("K_{1," + std::to_string(t) + "}-free family n=" + std::to_string(n),
                [t, n] { return small_star_family(t, n); }, PatternSpec::star(t),
                formula_value(PatternSpec::star(t), n).lo);
  const auto k16 = PatternSpec::star(6);
  auto value = [&](int n) { return formula_value(k16, n).lo; };
  const auto& o = s.opts();
  s.witness("J_a", [&] { return base_witness(BaseWitness::Ja, o); }, k16, value(7));
  s.witness("J'_a", [&] { return derived_witness(DerivedWitness::JaPrime, o); }, k16, value(8));
  s.witness("J_b", [&] { return base_witness(BaseWitness::Jb, o); }, k16, value(9));
  s.witness("J'_b", [&] { return derived_witness(DerivedWitness::JbPrime, o); }, k16, value(10));
  s.witness("J_c", [&] { return base_witness(BaseWitness::Jc, o); }, k16, value(11));
  s.witness("J'_c", [&] { return derived_witness(DerivedWitness::JcPrime, o); }, k16, value(12));
  s.witness("J''_c", [&] { return derived_witness(DerivedWitness::JcDouble, o); }, k16, value(13));
  s.witness("J''_a", [&] { return derived_witness(DerivedWitness::JaDouble, o); }, PatternSpec::star(5),
            formula_value(PatternSpec::star(5), 6).lo);
  s.witness("J'''_a", [&] { return derived_witness(DerivedWitness::JaTriple, o); }, PatternSpec::star(5),
            formula_value(PatternSpec::star(5), 7).lo);
  for (int q = 4; q <= 5; ++q) {
    s.witness("R_" + std::to_string(q) + " (q=" + std::to_string(q) + ")", [q] { return star_ring(q, q); }, k16,
              value(4 * q));
    s.witness("R^1 (q=" + std::to_string(q) + ")", [q] { return star_ring_odd1(q); }, k16, value(4 * q + 1));
    s.witness("R^2 (q=" + std::to_string(q) + ")", [q] { return star_ring_odd2(q); }, k16, value(4 * q + 2));
    s.witness("R_{q+1}+u (q=" + std::to_string(q) + ")", [q] { return star_ring_apex(q); }, k16, value(4 * q + 3));
  }
}

void fan33(Slice& s) {
  const auto p = PatternSpec::fan(3, 3);
  for (int n = 7; n <= s.max_n(); ++n) s.oracle_vs_formula(p, n);
  const auto& o = s.opts();
  s.witness("J_a", [&] { return base_witness(BaseWitness::Ja, o); }, p, formula_value(p, 7).lo);
  s.witness("J'_a", [&] { return derived_witness(DerivedWitness::JaPrime, o); }, p, formula_value(p, 8).lo);
  s.witness("J_b", [&] { return base_witness(BaseWitness::Jb, o); }, p, formula_value(p, 9).lo);
  s.witness("J'_b", [&] { return derived_witness(DerivedWitness::JbPrime, o); }, p, formula_value(p, 10).lo);
  s.witness("J_c", [&] { return base_witness(BaseWitness::Jc, o); }, p, formula_value(p, 11).lo);
  s.witness("icosahedron", [] { return icosahedron(); }, p, formula_value(p, 12).lo);
  const auto at24 = formula_value(p, 24);
  s.witness("G_0", [] { return icosahedron_pair(); }, p, 63);
  s.add("G_0 within the n=24 interval", at24.lo <= 63 && 63 <= at24.hi, "formula " + show(at24));
}

void lemma(Slice& s) {
  if (s.max_n() >= 7) s.profile_absent(7, {{4, 7}}, "4-regular");
  if (s.max_n() >= 11) s.profile_absent(11, {{4, 1}, {5, 10}}, "{4:1, 5:10}");
  if (s.max_n() >= 12) {
    const auto r = exists_planar_with_degree_profile(12, {{5, 12}}, {}, s.opts());
    s.add("5-regular planar graph on 12 vertices", r.status == WitnessStatus::Found,
          r.graph ? (is_triangulation(*r.graph) ? "found a triangulation" : "found") : "none");
  }
  if (s.opts().allow_expensive) {
    if (s.max_n() >= 13) s.profile_absent(13, {{4, 1}, {5, 12}}, "{4:1, 5:12}");
    if (s.max_n() >= 14) s.profile_absent(14, {{5, 14}}, "5-regular");
  }
}

void cones(Slice& s) {
  for (int t = 4; t <= 6; ++t)
    for (int n = t + 1; n <= s.max_n(); ++n) s.oracle_vs_formula(PatternSpec::cone_path(t), n);
}

}  // namespace

const std::vector<TheoremSlice>& theorem_slices() {
  static const std::vector<TheoremSlice> slices{
      {"1.4", 11, "wheels W_4, W_5, W_6"},
      {"1.5", 8, "the fan K_1+2K_2"},
      {"1.6", 9, "stars K_{1,t}, t = 3..6"},
      {"1.7", 10, "the fan K_1+3K_2"},
      {"2.1", 11, "degree profiles without planar realisations"},
      {"7.1", 9, "cones over paths, t = 4..6"},
  };
  return slices;
}

std::vector<CheckRow> verify_theorem(const std::string& id, int max_n, const OracleOptions& opts) {
  Slice s(max_n, opts);
  if (id == "1.4") {
    wheels(s);
  } else if (id == "1.5") {
    fan23(s);
  } else if (id == "1.6") {
    stars(s);
  } else if (id == "1.7") {
    fan33(s);
  } else if (id == "2.1") {
    lemma(s);
  } else if (id == "7.1") {
    cones(s);
  } else {
    throw std::invalid_argument("unknown theorem id '" + id + "' (expected 1.4, 1.5, 1.6, 1.7, 2.1 or 7.1)");
  }
  return std::move(s).rows();
}

}  // namespace planar_turan
