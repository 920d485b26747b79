#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar_turan/graph.hpp"

namespace planar_turan {

/// Raised by face operations on graphs with more than one component; face
/// counts are only defined here for connected graphs.
class DisconnectedGraph : public std::domain_error {
 public:
  DisconnectedGraph() : std::domain_error("graph is disconnected; faces undefined") {}
};

/// face order -> number of faces of that order (f_i).
using FaceVector = std::map<int, int>;

/// A rotation system: for every vertex, the cyclic order of its neighbors.
/// Faces are traced by leaving v along the successor of the edge we
/// arrived on.
class PlaneEmbedding {
 public:
  /// Validates that each rotation is a permutation of the vertex's
  /// neighbors and, for connected graphs, that Euler's formula holds.
  PlaneEmbedding(Graph g, std::vector<std::vector<Vertex>> rotation);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(v); }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

  /// Index of the face designated as outer; advisory only.
  std::optional<int> outer_face() const { return outer_face_; }
  void set_outer_face(std::optional<int> f) { outer_face_ = f; }

  /// Face boundary walks as vertex sequences (the i-th vertex is the tail
  /// of the i-th dart). A graph with no edges has a single empty walk.
  std::vector<std::vector<Vertex>> faces() const;
  int face_count() const;

  /// Successor of u in the rotation at v.
  Vertex next_around(Vertex v, Vertex u) const;

 private:
  std::vector<std::vector<Vertex>> trace() const;

  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::optional<int> outer_face_;
};

/// Either an embedding of g or the verdict that none exists.
struct PlanarityResult {
  std::optional<PlaneEmbedding> embedding;
  bool planar() const { return embedding.has_value(); }
};

PlanarityResult planarity(const Graph& g);
bool is_planar(const Graph& g);

FaceVector face_vector(const PlaneEmbedding& e);

/// Planar, connected, n >= 3 and e = 3n - 6.
bool is_triangulation(const Graph& g);

/// Number of distinct faces of order 3 whose boundary contains v.
int incident_triangle_count(const PlaneEmbedding& e, Vertex v);

/// "v: a b c" per line, neighbors in rotation order.
std::string to_text(const PlaneEmbedding& e);
PlaneEmbedding embedding_from_text(const std::string& text);

}  // namespace planar_turan
