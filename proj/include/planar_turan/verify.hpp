#pragma once

#include <string>
#include <vector>

#include "planar_turan/oracle.hpp"

namespace planar_turan {

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Theorem ids accepted by verify_theorem, with the default --max-n.
struct TheoremSlice {
  std::string id;
  int default_max_n;
  std::string summary;
};

const std::vector<TheoremSlice>& theorem_slices();

/// Compares oracle values, closed forms and constructions for one theorem
/// up to max_n. Throws std::invalid_argument for an unknown id.
std::vector<CheckRow> verify_theorem(const std::string& id, int max_n, const OracleOptions& opts = {});

}  // namespace planar_turan
