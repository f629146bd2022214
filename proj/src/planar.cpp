#include "tperfect/planar.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace tperfect {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

Face rotate_to_min(Face f) {
  std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  return f;
}

}  // namespace

std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rotation) {
  const int n = g.vertex_count();
  // position[v][w] = index of w in v's rotation
  std::vector<std::map<Vertex, int>> position(n);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rotation.order[v].size()); ++i)
      position[v][rotation.order[v][i]] = i;

  std::map<Edge, bool> used;
  std::vector<Face> faces;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : rotation.order[u]) {
      if (used[{u, v}]) continue;
      Face face;
      Vertex a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        const auto& ring = rotation.order[b];
        const int next = (position[b].at(a) + 1) % static_cast<int>(ring.size());
        a = std::exchange(b, ring[next]);
      }
      faces.push_back(rotate_to_min(std::move(face)));
    }
  std::sort(faces.begin(), faces.end());
  return faces;
}

bool is_valid_planar_rotation(const Graph& g, const RotationSystem& rotation) {
  const int n = g.vertex_count();
  if (static_cast<int>(rotation.order.size()) != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = rotation.order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbours(v)) return false;
  }
  const auto faces = trace_faces(g, rotation);
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) continue;  // 1 - 0 + 1 = 2
    long edges = 0;
    for (Vertex v : comp) edges += g.degree(v);
    edges /= 2;
    long face_count = 0;
    for (const auto& f : faces)
      if (std::binary_search(comp.begin(), comp.end(), f.front())) ++face_count;
    if (static_cast<long>(comp.size()) - edges + face_count != 2) return false;
  }
  return true;
}

std::optional<RotationSystem> embed_planar(const Graph& g) {
  const int n = g.vertex_count();
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next++);

  std::vector<std::vector<BoostEdge>> embedding(n);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data());
  if (!planar) return std::nullopt;

  RotationSystem rotation;
  rotation.order.resize(n);
  for (Vertex v = 0; v < n; ++v)
    for (const auto& e : embedding[v]) {
      const auto s = static_cast<Vertex>(boost::source(e, bg));
      const auto t = static_cast<Vertex>(boost::target(e, bg));
      rotation.order[v].push_back(s == v ? t : s);
    }
  if (!is_valid_planar_rotation(g, rotation))
    throw std::logic_error("planarity test returned an embedding that fails the Euler check");
  return rotation;
}

std::optional<TriangulationCertificate> is_plane_triangulation(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != 3 * n - 6 || !is_connected(g)) return std::nullopt;
  auto rotation = embed_planar(g);
  if (!rotation) return std::nullopt;
  TriangulationCertificate cert{g, std::move(*rotation), {}};
  cert.faces = trace_faces(g, cert.rotation);
  for (const auto& f : cert.faces)
    if (f.size() != 3)
      throw std::logic_error("simple planar graph with 3n-6 edges has a non-triangular face");
  return cert;
}

std::optional<VertexSet> find_separating_triangle(const TriangulationCertificate& t) {
  const Graph& g = t.graph;
  for (const auto& c : enumerate_induced_cycles(g, 3, true)) {
    if (c.length() != 3) break;
    if (is_separating(g, c.vertices)) {
      VertexSet tri = c.vertices;
      std::sort(tri.begin(), tri.end());
      return tri;
    }
  }
  return std::nullopt;
}

std::optional<Cycle> find_separating_odd_hole(const TriangulationCertificate& t) {
  for (const auto& c : enumerate_induced_cycles(t.graph, 5, true))
    if (is_separating(t.graph, c.vertices)) return c;
  return std::nullopt;
}

nlohmann::json faces_to_json(const TriangulationCertificate& t) {
  return {{"n", t.graph.vertex_count()}, {"faces", t.faces}};
}

}  // namespace tperfect
