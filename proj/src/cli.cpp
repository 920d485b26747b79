#include "planar_turan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planar_turan/constructions.hpp"
#include "planar_turan/formulas.hpp"
#include "planar_turan/graph_io.hpp"
#include "planar_turan/oracle.hpp"
#include "planar_turan/verify.hpp"

namespace planar_turan {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kPatternHelp =
    "Patterns: wheel:K (K_1+C_K), star:T (K_{1,T}), fan:T,R (K_1+T K_{R-1}),\n"
    "          conepath:T (K_1+P_T), cone:<g6> (K_1+H), g6:<code> (explicit graph).\n"
    "Exit codes: 0 success/true, 1 property fails or none, 2 usage error, 3 budget exhausted.\n"
    "The census cache lives in $PLANAR_TURAN_CACHE (default ./.planar-turan-cache).";

struct Globals {
  bool json = false;
  int threads = 1;
  bool expensive = false;
};

OracleOptions oracle_options(const Globals& g) {
  OracleOptions o;
  o.threads = g.threads;
  o.allow_expensive = g.expensive;
  return o;
}

std::string show_value(const TuranValue& v) {
  if (v.exact()) return std::to_string(v.lo);
  return "[" + std::to_string(v.lo) + ", " + std::to_string(v.hi) + "]";
}

Json value_json(const TuranValue& v) { return Json::parse(to_json(v)); }

Json match_json(const Match& m) { return Json(m.map); }

std::string match_text(const Match& m) {
  std::ostringstream s;
  for (std::size_t i = 0; i < m.map.size(); ++i) s << (i ? " " : "") << i << "->" << m.map[i];
  return s.str();
}

// ---- subcommands ---------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::vector<int> params;
  std::string format = "g6";
  bool list = false;
};

int do_construct(const ConstructArgs& a, const Globals& g, std::ostream& out) {
  if (a.list) {
    if (g.json) {
      Json arr = Json::array();
      for (const auto& d : family_catalog()) arr.push_back({{"name", d.name}, {"params", d.params}, {"summary", d.summary}});
      out << arr.dump() << '\n';
      return kExitOk;
    }
    for (const auto& d : family_catalog()) {
      std::string params;
      for (const auto& p : d.params) params += (params.empty() ? "" : ",") + p;
      out << std::left << std::setw(22) << d.name << std::setw(6) << params << d.summary << '\n';
    }
    return kExitOk;
  }
  if (a.family.empty()) throw CLI::RequiredError("--family");
  const Graph graph = build_family(a.family, a.params, oracle_options(g));
  const std::string text = a.format == "dot" ? to_dot(graph, a.family) : to_graph6(graph);
  if (g.json) {
    out << Json{{"family", a.family},   {"params", a.params},   {"order", graph.order()},
                {"size", graph.size()}, {"format", a.format},   {"graph", text}}
               .dump()
        << '\n';
  } else {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
  return kExitOk;
}

int do_check(const std::string& pattern, const std::string& g6, const Globals& g, std::ostream& out) {
  const PatternSpec p = parse_pattern(pattern);
  const Graph host = from_graph6(g6);
  const auto r = check_pattern(host, p);
  if (g.json) {
    out << Json{{"pattern", p.to_string()},
                {"order", host.order()},
                {"size", host.size()},
                {"free", r.free},
                {"match", r.witness ? match_json(*r.witness) : Json(nullptr)}}
               .dump()
        << '\n';
  } else {
    out << (r.free ? "free" : "not-free") << '\n';
    if (r.witness) out << "match: " << match_text(*r.witness) << '\n';
  }
  return r.free ? kExitOk : kExitFails;
}

int do_enumerate(int n, const std::string& path, bool count_only, const Globals& g, std::ostream& out) {
  const auto census = enumerate_triangulations(n, oracle_options(g));
  if (!path.empty()) {
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot write " + path);
    write_graph6_lines(file, census.graphs);
  }
  const bool list = path.empty() && !count_only;
  if (g.json) {
    Json j{{"n", n}, {"count", census.size()}};
    if (!path.empty()) j["file"] = path;
    if (list) {
      Json arr = Json::array();
      for (const auto& t : census.graphs) arr.push_back(to_graph6(t));
      j["graph6"] = arr;
    }
    out << j.dump() << '\n';
  } else if (list) {
    write_graph6_lines(out, census.graphs);
  } else {
    out << census.size() << " triangulations on " << n << " vertices\n";
  }
  return kExitOk;
}

struct ExactArgs {
  int n = 0;
  std::string pattern;
  std::optional<int> budget;
  std::optional<int> time_limit_ms;
  bool witness = false;
};

int do_exact(const ExactArgs& a, const Globals& g, std::ostream& out) {
  const PatternSpec p = parse_pattern(a.pattern);
  SearchBudget budget;
  budget.max_deletions = a.budget;
  if (a.time_limit_ms) budget.time_limit = std::chrono::milliseconds(*a.time_limit_ms);
  const auto r = exact_planar_turan(a.n, p, budget, oracle_options(g));
  if (g.json) {
    Json j{{"n", a.n}, {"pattern", p.to_string()}, {"value", value_json(r.value)}};
    j["witness"] = r.witness ? Json(to_graph6(*r.witness)) : Json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << show_value(r.value);
    if (r.budget_exhausted) out << " (" << r.value.provenance << ")";
    out << '\n';
    if (a.witness && r.witness) out << "witness: " << to_graph6(*r.witness) << '\n';
  }
  return r.budget_exhausted ? kExitBudget : kExitOk;
}

int do_formula(const std::string& pattern, const std::string& reference, int n, const Globals& g,
               std::ostream& out) {
  if (pattern.empty() == reference.empty()) throw CLI::ValidationError("exactly one of --pattern and --reference");
  TuranValue v;
  std::string subject;
  try {
    if (!pattern.empty()) {
      const PatternSpec p = parse_pattern(pattern);
      subject = p.to_string();
      v = formula_value(p, n);
    } else {
      const ReferenceGraph r = parse_reference_graph(reference);
      subject = to_string(r);
      v = reference_bounds(r, n);
    }
  } catch (const PatternParseError&) {
    throw;
  } catch (const FormulaError& e) {
    if (!reference.empty() && subject.empty()) throw;
    if (g.json) {
      out << Json{{"subject", subject}, {"n", n}, {"value", nullptr}, {"reason", e.what()}}.dump() << '\n';
    } else {
      out << "no theorem applies: " << e.what() << '\n';
    }
    return kExitFails;
  }
  if (g.json) {
    out << Json{{"subject", subject}, {"n", n}, {"value", value_json(v)}}.dump() << '\n';
  } else if (v.exact()) {
    out << v.lo << " (=" << v.expression << ")\n";
  } else {
    out << show_value(v) << " (" << v.expression << ")\n";
  }
  return kExitOk;
}

int do_classify(const std::string& g6, int n, bool verify, const Globals& g, std::ostream& out) {
  const Graph h = from_graph6(g6);
  const auto v = prop13_classify(h, n);
  std::optional<bool> verified;
  if (verify && v.covered()) verified = verify_verdict(v, h, n);
  if (g.json) {
    Json j = Json::parse(to_json(v));
    j["n"] = n;
    j["verified"] = verified ? Json(*verified) : Json(nullptr);
    out << j.dump() << '\n';
  } else if (!v.covered()) {
    out << "not covered\n";
  } else {
    out << "condition " << to_string(v.condition) << " (" << v.detail << "); witness " << to_string(v.witness)
        << "; min n " << v.min_n << '\n';
    if (verified) out << "verified: " << (*verified ? "yes" : "no") << '\n';
  }
  if (!v.covered()) return kExitFails;
  return verified.value_or(true) ? kExitOk : kExitFails;
}

int do_verify(const std::string& id, std::optional<int> max_n, const Globals& g, std::ostream& out) {
  const auto& slices = theorem_slices();
  auto it = std::find_if(slices.begin(), slices.end(), [&](const TheoremSlice& s) { return s.id == id; });
  if (it == slices.end()) throw CLI::ValidationError("--id", "unknown theorem id " + id);
  const int limit = max_n.value_or(it->default_max_n);
  const auto rows = verify_theorem(id, limit, oracle_options(g));
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
  const bool all = passed == static_cast<long>(rows.size());
  if (g.json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << Json{{"id", id}, {"max_n", limit}, {"checks", arr}, {"passed", all}}.dump() << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    for (const auto& r : rows)
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2) << r.name
          << r.detail << '\n';
    out << id << ": " << passed << "/" << rows.size() << " checks passed\n";
  }
  return all ? kExitOk : kExitFails;
}

int report(const Globals& g, std::ostream& out, std::ostream& err, const char* kind, const std::string& message,
           int code) {
  if (g.json) {
    out << Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << '\n';
  } else {
    err << "error: " << message << '\n';
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar Turan numbers: extremal constructions, pattern checks, an exhaustive oracle and closed forms.",
               "planar-turan"};
  app.footer(kPatternHelp);
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--threads", g.threads, "Worker threads for the oracle")->check(CLI::PositiveNumber);
  app.add_flag("--expensive", g.expensive, "Allow the n = 13, 14 censuses");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a graph family and print it");
  construct->add_option("--family", ca.family, "Family id (see --list)");
  construct->add_option("--params", ca.params, "Integer parameters, e.g. --params 4,5")->delimiter(',');
  construct->add_option("--out", ca.format, "Output format")->check(CLI::IsMember({"g6", "dot"}));
  construct->add_flag("--list", ca.list, "List family ids");

  std::string pattern, graph6, reference, out_path;
  int n = 0;
  bool count_only = false, verify = false;
  auto* check = app.add_subcommand("check", "Decide whether a graph is free of a pattern");
  check->add_option("--pattern", pattern, "Pattern spec")->required();
  check->add_option("--graph", graph6, "Host graph in graph6")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Write the triangulation census on n vertices");
  enumerate->add_option("--n", n, "Number of vertices")->required();
  enumerate->add_option("--out", out_path, "Write graph6 lines to this file");
  enumerate->add_flag("--count", count_only, "Print only the count");

  ExactArgs ea;
  auto* exact = app.add_subcommand("exact", "Exact ex_P(n, P) by census and deletion search");
  exact->add_option("--n", ea.n, "Number of vertices")->required();
  exact->add_option("--pattern", ea.pattern, "Pattern spec")->required();
  exact->add_option("--budget", ea.budget, "Maximum number of deleted edges")->check(CLI::NonNegativeNumber);
  exact->add_option("--time-limit", ea.time_limit_ms, "Time limit in milliseconds")->check(CLI::PositiveNumber);
  exact->add_flag("--witness", ea.witness, "Also print an extremal graph");

  auto* formula = app.add_subcommand("formula", "Closed-form value or bound");
  formula->add_option("--pattern", pattern, "Pattern spec");
  formula->add_option("--reference", reference, "Reference graph: c4, c5, theta4, theta5, c6, p9");
  formula->add_option("--n", n, "Number of vertices")->required();

  auto* classify = app.add_subcommand("classify", "Sufficient condition for ex_P(n, H) = 3n-6");
  classify->add_option("--graph", graph6, "H in graph6")->required();
  classify->add_option("--n", n, "Number of vertices")->required();
  classify->add_flag("--verify", verify, "Check the witness triangulation is H-free");

  std::string id;
  std::optional<int> max_n;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "Run the checks for one theorem");
  verify_cmd->add_option("--id", id, "1.4, 1.5, 1.6, 1.7, 2.1 or 7.1")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest n for oracle comparisons");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report(g, out, err, "usage", e.what(), kExitUsage);
  }

  try {
    if (construct->parsed()) return do_construct(ca, g, out);
    if (check->parsed()) return do_check(pattern, graph6, g, out);
    if (enumerate->parsed()) return do_enumerate(n, out_path, count_only, g, out);
    if (exact->parsed()) return do_exact(ea, g, out);
    if (formula->parsed()) return do_formula(pattern, reference, n, g, out);
    if (classify->parsed()) return do_classify(graph6, n, verify, g, out);
    if (verify_cmd->parsed()) return do_verify(id, max_n, g, out);
  } catch (const CLI::Error& e) {
    return report(g, out, err, "usage", e.what(), kExitUsage);
  } catch (const BudgetExhausted& e) {
    return report(g, out, err, "budget", e.what(), kExitBudget);
  } catch (const FormatError& e) {
    return report(g, out, err, "usage", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return report(g, out, err, "usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return report(g, out, err, "failure", e.what(), kExitFails);
  }
  return kExitUsage;
}

}  // namespace planar_turan
