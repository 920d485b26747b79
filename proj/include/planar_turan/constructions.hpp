#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planar_turan/graph.hpp"
#include "planar_turan/oracle.hpp"

namespace planar_turan {

/// A family failed its own planarity, size or freeness check. Always a bug
/// in the construction, never a soft condition.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// O_n: cycle 0..n-1 plus the zigzag chords (1,n-1), (1,n-2), (2,n-2), ...
Graph serpentine(int n);
/// O*_n: O_n glued to a rotated copy of itself along the outer cycle.
Graph double_serpentine(int n);
/// K_1 + O_{n-1}, n >= 6.
Graph apex_serpentine(int n);
/// 2K_1 + C_{n-2}, n >= 5.
Graph two_apex_cycle(int n);

/// L_t on 5t + 2 vertices: u = 0, ring i vertex j at 1 + 5(i-1) + (j-1),
/// v = 5t + 1.
Graph pentagonal_stack(int t);
/// L_t with i degree-3 vertices added in pairwise vertex-disjoint faces
/// (the lexicographically first such choice of faces).
Graph pentagonal_stack_plus(int t, int i);
/// K_2 + (K_2 u K_{n-4}), n in {5, 6}.
Graph wheel_small(int n);

/// R_p on 2q + 2p vertices, p in {q, q + 1}.
Graph star_ring(int q, int p);
/// R^1 on 4q + 1 vertices, q >= 4.
Graph star_ring_odd1(int q);
/// R^2 on 4q + 2 vertices, q >= 4.
Graph star_ring_odd2(int q);
/// R_{q+1} plus a vertex on y_1, b_1, y_{q+1}, b_{q+1}; 4q + 3 vertices.
Graph star_ring_apex(int q);
/// K_{1,t}-free planar graphs with floor((t-1)n/2) edges, t in {3, 4, 5};
/// 13 edges for t = 5, n = 7.
Graph small_star_family(int t, int n);

/// K_2 + (n-2)K_1.
Graph two_apex_lower(int n);
Graph icosahedron();
/// G_0: two icosahedra joined by a matching between a face of each.
Graph icosahedron_pair();

/// Figure-only graphs reconstructed by search_witness from their stated
/// properties, in canonical form and cached under the cache directory.
enum class BaseWitness {
  J,   // 11 vertices, 25 edges, W_4-free, five 3-vertices
  F0,  // 8 vertices, 15 edges, (K_1 + 2K_2)-free
  Ja,  // triangulation on 7 vertices, max degree 5, one 3-vertex
  Jb,  // triangulation on 9 vertices, max degree 5
  Jc,  // 11 vertices, 26 edges, max degree 5
};

Graph base_witness(BaseWitness w, const OracleOptions& opts = {});

/// Textual edits applied to the base witnesses.
enum class DerivedWitness {
  JaPrime,   // J_a plus a vertex in a face
  JaDouble,  // J_a minus its 3-vertex
  JaTriple,  // J''_a with edge x1x2 replaced by a path through a new vertex
  JbPrime,   // J_b minus x1x3 plus a vertex on x1..x4
  JcPrime,   // J_c minus x1x3 plus a vertex on x1..x5
  JcDouble,  // J_c minus x1x3 plus adjacent y1 on x1,x2,x3 and y2 on x4,x5
};

Graph derived_witness(DerivedWitness w, const OracleOptions& opts = {});

/// J minus 11 - n of its 3-vertices, 7 <= n <= 11.
Graph j_n(int n, const OracleOptions& opts = {});

/// Family names accepted by build_family together with their parameters.
struct FamilyDescriptor {
  std::string name;
  std::vector<std::string> params;
  std::string summary;
};

const std::vector<FamilyDescriptor>& family_catalog();

/// Builds a family by name; throws std::invalid_argument for unknown names
/// or a wrong number of parameters.
Graph build_family(std::string_view name, const std::vector<int>& params, const OracleOptions& opts = {});

}  // namespace planar_turan
