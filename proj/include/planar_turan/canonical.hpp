#pragma once

#include <compare>
#include <string>
#include <vector>

#include "planar_turan/graph.hpp"

namespace planar_turan {

/// Label-invariant certificate: the graph6 string of the canonical form.
struct CanonicalCode {
  std::string bytes;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalLabeling {
  /// perm[v] is the canonical label of vertex v.
  std::vector<Vertex> perm;
  CanonicalCode code;
};

/// Individualization-refinement search for the lexicographically least
/// graph6 body over all labelings compatible with the equitable partition
/// tree. Automorphisms found at leaves prune sibling subtrees.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace planar_turan
