#ifndef TPERFECT_PLANAR_HPP
#define TPERFECT_PLANAR_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "tperfect/graph.hpp"

namespace tperfect {

/// Combinatorial embedding: for each vertex, its neighbours in cyclic order.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;
};

/// Boundary walk of a face, as the sequence of vertices visited.
using Face = std::vector<Vertex>;

/// Traces faces with the rule: after arriving at v along u->v, leave along
/// v->w where w follows u in v's cyclic order. Isolated vertices contribute
/// no walk. Faces are rotated to start at their smallest vertex and sorted.
std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rotation);

/// Each order[v] is a permutation of N(v) and every connected component
/// satisfies V - E + F = 2 (an isolated vertex counts as one face).
bool is_valid_planar_rotation(const Graph& g, const RotationSystem& rotation);

/// Planar embedding, or nullopt for non-planar graphs.
std::optional<RotationSystem> embed_planar(const Graph& g);

inline bool is_planar(const Graph& g) { return embed_planar(g).has_value(); }

struct TriangulationCertificate {
  Graph graph;
  RotationSystem rotation;
  std::vector<Face> faces;
};

/// Certificate iff G is simple, connected, planar, has at least 3 vertices
/// and exactly 3n - 6 edges. K3 is admitted with its two faces.
std::optional<TriangulationCertificate> is_plane_triangulation(const Graph& g);

/// Least triangle (sorted) whose deletion disconnects the triangulation.
std::optional<VertexSet> find_separating_triangle(const TriangulationCertificate& t);

/// Least odd hole whose deletion disconnects the triangulation.
std::optional<Cycle> find_separating_odd_hole(const TriangulationCertificate& t);

/// {"n": .., "faces": [[...], ...]}
nlohmann::json faces_to_json(const TriangulationCertificate& t);

}  // namespace tperfect

#endif  // TPERFECT_PLANAR_HPP
