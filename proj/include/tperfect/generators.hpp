#ifndef TPERFECT_GENERATORS_HPP
#define TPERFECT_GENERATORS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tperfect/graph.hpp"

namespace tperfect {

using Seed = std::uint64_t;

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Rim 0..k-1 plus hub k. Any k >= 3.
Graph wheel(int k);

/// Throws std::invalid_argument unless k is odd and >= 3.
Graph odd_wheel(int k);

/// Cycle on 2*rungs vertices plus the chords i ~ i + rungs.
Graph moebius_ladder(int rungs);

/// 10-cycle plus the chords i ~ i + 2.
Graph c10_squared();

/// Vertex numbering of figure1_graph().
namespace figure1 {
inline constexpr Vertex v0 = 0, v1 = 1, v2 = 2, v3 = 3, v4 = 4;
inline constexpr Vertex A = 5, B = 6, C = 7;
inline constexpr Vertex a = 8, b = 9, c = 10;
}  // namespace figure1

/// The 11-vertex t-imperfect triangulation without induced odd wheels:
/// path v0..v4 closed by v0v4, triangles {A,B,C} and {a,b,c} with
/// A~v1,v2  B~v2,v3  C~v0,v1,v3,v4 and the same for a, b, c.
Graph figure1_graph();

/// K_{2,2,2}; antipodal pairs (0,1), (2,3), (4,5).
Graph octahedron();

/// Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
Graph icosahedron();

/// Triangle {0,1,2} plus apexes 3 and 4 joined to all of it.
Graph bipyramid();

/// Apollonian growth from K4: each new vertex goes into a uniformly chosen
/// face and is joined to its three corners. Throws for n < 4.
Graph stacked_triangulation(int n, Seed seed);

enum class FlipPolicy {
  uniform,      // every simple flip is applied
  min_degree_4, // additionally rejected when u or v would drop to degree 3
};

/// stacked_triangulation(n, seed) followed by `flips` flip attempts on
/// uniformly chosen edges. An attempt on uv with incident faces uvx, uvy
/// replaces uv by xy unless xy is already an edge (or the policy rejects it).
Graph random_plane_triangulation(int n, int flips, Seed seed,
                                 FlipPolicy policy = FlipPolicy::uniform);

/// A random triangulation (3n flip attempts) with each edge then dropped
/// with probability 1/3. For n < 4, a random subgraph of K_n.
Graph random_planar_graph(int n, Seed seed);

struct LooseWheelGraph {
  Graph graph;
  Vertex hub;
  Cycle rim;
};

/// Hub 0 and rim 1..L, L = sum of the segment lengths; the hub is adjacent
/// to the first vertex of each segment. Needs at least three segments, all
/// of positive length.
LooseWheelGraph loose_wheel(std::span<const int> segment_lengths);

/// A loose odd wheel with 3..7 spokes, an odd number (>= 3) of odd
/// segments, segment lengths in 1..4 and at most max_vertices vertices.
LooseWheelGraph random_loose_odd_wheel(Seed seed, int max_vertices);

/// k4, c5, w5, w7, moebius4, c10sq, octahedron, icosahedron, bipyramid,
/// figure1, plus the patterns kN, cN, pN, wN, moebiusN.
Graph named_graph(std::string_view name);

std::vector<std::string> named_triangulations();

}  // namespace tperfect

#endif  // TPERFECT_GENERATORS_HPP
