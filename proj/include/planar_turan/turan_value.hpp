#pragma once

#include <string>

namespace planar_turan {

/// ex_P(n, H) as an exact value or a bracketing interval.
struct TuranValue {
  long long lo = 0;
  long long hi = 0;
  /// Equality in the governing bound is attained.
  bool sharp = false;
  /// Where the value comes from, e.g. "theorem:wheel" or "oracle".
  std::string provenance;
  /// Closed form in n when one applies, e.g. "3n-8".
  std::string expression;

  bool exact() const { return lo == hi; }
  friend bool operator==(const TuranValue&, const TuranValue&) = default;
};

}  // namespace planar_turan
