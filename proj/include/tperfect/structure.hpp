#ifndef TPERFECT_STRUCTURE_HPP
#define TPERFECT_STRUCTURE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "tperfect/graph.hpp"
#include "tperfect/planar.hpp"
#include "tperfect/polytope.hpp"

namespace tperfect {

class NotPlanar : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotTriangulation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DetectorSizeExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A hub with at least three neighbours on an induced odd cycle (the rim)
/// of G - hub, such that at least three segments are odd. A segment is the
/// rim path between two consecutive hub neighbours.
///
/// spokes are the rim positions adjacent to the hub, ascending.
/// segment_lengths[i] is the rim distance from spokes[i] to spokes[i+1]
/// (the last one wraps around to spokes[0]).
///
/// Equivalently, the graph is an odd wheel whose rim edges were subdivided
/// with an odd number (>= 3) of edges subdivided an even number of times.
struct LooseOddWheelCertificate {
  Vertex hub = -1;
  Cycle rim;
  std::vector<int> spokes;
  std::vector<int> segment_lengths;

  std::size_t odd_segment_count() const;
  friend bool operator==(const LooseOddWheelCertificate&, const LooseOddWheelCertificate&) = default;
};

/// Builds the spokes and segments for (hub, rim) and returns the
/// certificate if it verifies.
std::optional<LooseOddWheelCertificate> loose_odd_wheel_certificate(const Graph& g, Vertex hub,
                                                                    const Cycle& rim);

bool verify_loose_odd_wheel(const Graph& g, const LooseOddWheelCertificate& cert);

struct DetectorOptions {
  int max_vertices = 64;
};

/// Least certificate under (hub, rim length, canonical rim sequence).
/// Throws DetectorSizeExceeded above options.max_vertices.
std::optional<LooseOddWheelCertificate> find_induced_loose_odd_wheel(const Graph& g,
                                                                     const DetectorOptions& options = {});

/// Odd wheels only: the hub sees every rim vertex.
std::optional<LooseOddWheelCertificate> find_induced_odd_wheel(const Graph& g,
                                                               const DetectorOptions& options = {});

struct Contraction {
  Graph graph;
  std::vector<Vertex> old_to_new;  // N[v] all map to the merged vertex
};

/// Contracts every edge at v. The merged vertex takes the slot of the
/// smallest member of N[v]; other vertices keep their relative order.
/// Throws std::invalid_argument when N(v) contains an edge.
Contraction t_contract(const Graph& g, Vertex v);

/// t-contracts the non-spoke rim vertices of a loose odd wheel until every
/// even segment is a single vertex and every odd one a single edge. The
/// result is the odd wheel with k + 1 vertices, k the number of odd
/// segments. W must consist of exactly hub and rim.
Graph reduce_loose_odd_wheel(const Graph& w, const LooseOddWheelCertificate& cert);

/// For planar graphs: perfect iff no odd hole, since the only planar odd
/// antihole is C5. Throws NotPlanar.
bool is_perfect_planar(const Graph& g);

/// No induced loose odd wheel. Throws NotTriangulation for other graphs.
bool is_t_perfect_structural(const TriangulationCertificate& t);
bool is_t_perfect_structural(const Graph& g);

enum class HRoute {
  perfection,     // h-perfect iff perfect
  clique_cutset,  // split along separating triangles of K4s, K4-free pieces
                  // decided by the loose odd wheel detector
};

bool is_h_perfect_triangulation(const TriangulationCertificate& t,
                                HRoute route = HRoute::perfection);
bool is_h_perfect_triangulation(const Graph& g, HRoute route = HRoute::perfection);

struct CutsetSplit {
  InducedSubgraph first;   // K plus the component holding the least vertex outside K
  InducedSubgraph second;  // K plus all other components
};

/// Throws std::invalid_argument when K is not a clique or does not separate.
CutsetSplit clique_cutset_split(const Graph& g, std::span<const Vertex> clique);

struct HPlanarOptions {
  int max_vertices = 12;
  OracleOptions oracle;
};

/// h-perfect iff every K4-free induced subgraph is t-perfect, checked by
/// enumerating all vertex subsets against the t-oracle.
/// Throws NotPlanar, or OracleSizeExceeded above options.max_vertices.
bool is_h_perfect_planar(const Graph& g, const HPlanarOptions& options = {});

nlohmann::json to_json(const LooseOddWheelCertificate& cert);
LooseOddWheelCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace tperfect

#endif  // TPERFECT_STRUCTURE_HPP
