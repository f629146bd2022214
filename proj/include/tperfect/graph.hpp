#ifndef TPERFECT_GRAPH_HPP
#define TPERFECT_GRAPH_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tperfect/rational.hpp"

namespace tperfect {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A set of vertices of some host graph, kept sorted and duplicate-free by
/// every function in this library that returns one.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on the vertices 0..n-1.
///
/// Immutable once constructed. Adjacency queries are O(1) through a dense
/// matrix; neighbour lists are sorted ascending.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, parallel edges, or vertices
  /// outside 0..n-1.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<Vertex>& neighbours(Vertex v) const { return neighbours_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbours_[v].size()); }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<unsigned char> adjacency_;
  std::vector<std::vector<Vertex>> neighbours_;
};

/// Cyclic vertex sequence. The closing edge runs from the last vertex back
/// to the first.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  bool odd() const { return vertices.size() % 2 == 1; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() <=> b.vertices.size();
    return a.vertices <=> b.vertices;
  }
};

/// Rotates and reflects a cycle so that it starts at its smallest vertex and
/// continues towards the smaller of that vertex's two cycle neighbours.
Cycle canonical_cycle(Cycle c);

/// G[S] with index maps in both directions.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new index -> host index
  std::vector<Vertex> from_original;  // host index -> new index, -1 when dropped
};

/// Throws std::out_of_range for a vertex outside the host graph. Duplicates
/// in S are ignored; the new indices follow ascending host order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// G - S.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> s);

/// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff deleting S leaves at least two components.
bool is_separating(const Graph& g, std::span<const Vertex> s);

/// True iff the sequence is a cycle of G without chords. Sequences shorter
/// than three, repeated vertices, and out-of-range vertices give false.
bool is_induced_cycle(const Graph& g, const Cycle& c);

/// Every induced cycle of length >= min_length, each once in canonical form,
/// sorted by (length, sequence). With odd_only, even cycles are skipped.
std::vector<Cycle> enumerate_induced_cycles(const Graph& g, int min_length = 3,
                                            bool odd_only = false);

/// Triangles included.
std::vector<Cycle> enumerate_induced_odd_cycles(const Graph& g);

/// The least odd hole (induced odd cycle of length >= 5) by (length,
/// sequence), if any.
std::optional<Cycle> find_odd_hole(const Graph& g);

/// Inclusion-maximal cliques, each sorted, the list sorted lexicographically.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> s);
bool is_stable(const Graph& g, std::span<const Vertex> s);

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);
inline bool contains_k4(const Graph& g) { return find_k4(g).has_value(); }

struct WeightedStableSet {
  Rational weight;
  VertexSet vertices;
};

/// Maximum-weight stable set under exact rational weights. Vertices with
/// non-positive weight are never chosen. Exhaustive below 20 vertices,
/// branch-and-bound with a greedy clique-cover bound above that.
/// Throws std::invalid_argument when the weight vector has the wrong size.
WeightedStableSet max_stable_set_weight(const Graph& g, std::span<const Rational> weights);

/// Isomorphism by degree-refined backtracking; returns the map g -> h.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace tperfect

#endif  // TPERFECT_GRAPH_HPP
