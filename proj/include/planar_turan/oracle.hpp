#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar_turan/canonical.hpp"
#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"
#include "planar_turan/turan_value.hpp"

namespace planar_turan {

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a time budget runs out before an enumeration completes.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  /// Largest deletion depth explored; unset means 3n - 6.
  std::optional<int> max_deletions;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct OracleOptions {
  int threads = 1;
  /// Needed for n = 13 and n = 14.
  bool allow_expensive = false;
  /// Read and write the census cache.
  bool use_cache = true;
  SearchLimits limits;
  /// Wall-clock cap on census generation; BudgetExhausted when exceeded.
  std::optional<std::chrono::milliseconds> census_time_limit;
};

/// Cache root: $PLANAR_TURAN_CACHE or ./.planar-turan-cache.
std::filesystem::path cache_directory();

/// All triangulations on n vertices up to isomorphism, sorted by code. Each
/// representative is stored in canonical form.
struct TriangulationCensus {
  int n = 0;
  std::vector<CanonicalCode> codes;
  std::vector<Graph> graphs;

  std::size_t size() const { return graphs.size(); }
};

inline constexpr int kCensusMin = 4;
inline constexpr int kCensusMax = 14;
inline constexpr int kCensusCheap = 12;

/// Vertex splitting from the census at n - 1, deduplicated by a code of the
/// plane map (triangulations have a unique embedding up to reflection).
TriangulationCensus enumerate_triangulations(int n, const OracleOptions& opts = {});

/// Independent generator: breadth-first search over diagonal flips starting
/// from 2K_1 + C_{n-2}, deduplicated by canonical_code. n <= 10.
std::vector<CanonicalCode> triangulations_by_flips(int n);

/// Independent generator: every edge set of size 3n - 6 on n vertices with
/// minimum degree >= 3 that is planar. n <= 8.
std::vector<CanonicalCode> triangulations_by_filter(int n);

/// Exact value by iterative deepening on the number of deleted edges over the
/// census. Interval with provenance "budget-exhausted" when the budget ends.
struct ExactResult {
  TuranValue value;
  /// An extremal P-free graph when the value is exact.
  std::optional<Graph> witness;
  /// Deletions from a triangulation realising the witness.
  int deletions = 0;
  bool budget_exhausted = false;
};

ExactResult exact_planar_turan(int n, const PatternSpec& p, const SearchBudget& budget = {},
                               const OracleOptions& opts = {});

struct WitnessConstraints {
  std::vector<PatternSpec> free_of;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  /// degree -> required number of vertices of that degree.
  std::map<int, int> degree_counts;
  /// When set, the whole degree profile must match.
  std::optional<std::map<int, int>> exact_profile;
};

bool satisfies(const Graph& g, const WitnessConstraints& c, const SearchLimits& limits = {});

enum class WitnessStatus { Found, None, BudgetExhausted };

struct WitnessResult {
  WitnessStatus status = WitnessStatus::None;
  std::optional<Graph> graph;
};

/// First graph (in census order) obtained from a triangulation on n vertices
/// by deleting 3n - 6 - e edges that meets the constraints.
WitnessResult search_witness(int n, int e, const WitnessConstraints& c, const SearchBudget& budget = {},
                             const OracleOptions& opts = {});

/// Planar graph with exactly the given degree profile, or a verified none.
WitnessResult exists_planar_with_degree_profile(int n, const std::map<int, int>& profile,
                                                const SearchBudget& budget = {}, const OracleOptions& opts = {});

}  // namespace planar_turan
