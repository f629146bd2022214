#include "tperfect/structure.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace tperfect {

std::size_t LooseOddWheelCertificate::odd_segment_count() const {
  return static_cast<std::size_t>(
      std::count_if(segment_lengths.begin(), segment_lengths.end(), [](int s) { return s % 2 == 1; }));
}

namespace {

void compute_spokes(const Graph& g, Vertex hub, const Cycle& rim, std::vector<int>& spokes,
                    std::vector<int>& segments) {
  spokes.clear();
  segments.clear();
  const int len = static_cast<int>(rim.length());
  for (int i = 0; i < len; ++i)
    if (g.adjacent(hub, rim.vertices[i])) spokes.push_back(i);
  for (std::size_t i = 0; i < spokes.size(); ++i) {
    const int from = spokes[i];
    const int to = i + 1 < spokes.size() ? spokes[i + 1] : spokes.front() + len;
    segments.push_back(to - from);
  }
}

void check_size(const Graph& g, const DetectorOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw DetectorSizeExceeded("detector bound is " + std::to_string(options.max_vertices) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
}

}  // namespace

bool verify_loose_odd_wheel(const Graph& g, const LooseOddWheelCertificate& cert) {
  if (!g.contains(cert.hub)) return false;
  const auto& rim = cert.rim.vertices;
  if (std::find(rim.begin(), rim.end(), cert.hub) != rim.end()) return false;
  if (!is_induced_cycle(g, cert.rim) || !cert.rim.odd()) return false;
  std::vector<int> spokes, segments;
  compute_spokes(g, cert.hub, cert.rim, spokes, segments);
  if (spokes.size() < 3 || spokes != cert.spokes || segments != cert.segment_lengths) return false;
  const auto odd = cert.odd_segment_count();
  return odd >= 3 && odd % 2 == 1;
}

std::optional<LooseOddWheelCertificate> loose_odd_wheel_certificate(const Graph& g, Vertex hub,
                                                                    const Cycle& rim) {
  LooseOddWheelCertificate cert{hub, rim, {}, {}};
  if (!g.contains(hub)) return std::nullopt;
  compute_spokes(g, hub, rim, cert.spokes, cert.segment_lengths);
  if (!verify_loose_odd_wheel(g, cert)) return std::nullopt;
  return cert;
}

std::optional<LooseOddWheelCertificate> find_induced_loose_odd_wheel(const Graph& g,
                                                                     const DetectorOptions& options) {
  check_size(g, options);
  // Induced cycles of G - h are exactly the induced cycles of G avoiding h.
  const auto cycles = enumerate_induced_odd_cycles(g);
  for (Vertex hub = 0; hub < g.vertex_count(); ++hub) {
    if (g.degree(hub) < 3) continue;
    for (const auto& rim : cycles) {
      if (std::find(rim.vertices.begin(), rim.vertices.end(), hub) != rim.vertices.end()) continue;
      if (auto cert = loose_odd_wheel_certificate(g, hub, rim)) return cert;
    }
  }
  return std::nullopt;
}

std::optional<LooseOddWheelCertificate> find_induced_odd_wheel(const Graph& g,
                                                               const DetectorOptions& options) {
  check_size(g, options);
  const auto cycles = enumerate_induced_odd_cycles(g);
  for (Vertex hub = 0; hub < g.vertex_count(); ++hub) {
    for (const auto& rim : cycles) {
      const bool spans = std::all_of(rim.vertices.begin(), rim.vertices.end(),
                                     [&](Vertex v) { return g.adjacent(hub, v); });
      if (!spans) continue;
      if (auto cert = loose_odd_wheel_certificate(g, hub, rim)) return cert;
    }
  }
  return std::nullopt;
}

Contraction t_contract(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
  const auto& nbrs = g.neighbours(v);
  if (!is_stable(g, nbrs))
    throw std::invalid_argument("t-contraction at " + std::to_string(v) +
                                " needs a stable neighbourhood");
  const int n = g.vertex_count();
  std::vector<char> merged(n, 0);
  merged[v] = 1;
  for (Vertex w : nbrs) merged[w] = 1;

  Contraction out;
  out.old_to_new.assign(n, -1);
  Vertex next = 0;
  Vertex merged_index = -1;
  for (Vertex u = 0; u < n; ++u) {
    if (merged[u]) {
      if (merged_index < 0) merged_index = next++;
      out.old_to_new[u] = merged_index;
    } else {
      out.old_to_new[u] = next++;
    }
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    Vertex x = out.old_to_new[a], y = out.old_to_new[b];
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    edges.emplace_back(x, y);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph(next, edges);
  return out;
}

Graph reduce_loose_odd_wheel(const Graph& w, const LooseOddWheelCertificate& cert) {
  if (!verify_loose_odd_wheel(w, cert))
    throw std::invalid_argument("certificate does not describe a loose odd wheel of this graph");
  if (static_cast<std::size_t>(w.vertex_count()) != cert.rim.length() + 1)
    throw std::invalid_argument("graph must consist of exactly the hub and the rim");

  Graph g = w;
  Vertex hub = cert.hub;
  for (;;) {
    // Any non-hub vertex missing the hub is an inner segment vertex whose two
    // rim neighbours are non-adjacent; contracting it shortens a segment by 2.
    Vertex inner = -1;
    for (Vertex u = 0; u < g.vertex_count() && inner < 0; ++u)
      if (u != hub && !g.adjacent(u, hub)) inner = u;
    if (inner < 0) break;
    auto c = t_contract(g, inner);
    hub = c.old_to_new[hub];
    g = std::move(c.graph);
  }
  return g;
}

bool is_perfect_planar(const Graph& g) {
  if (!is_planar(g)) throw NotPlanar("graph is not planar");
  return !find_odd_hole(g).has_value();
}

bool is_t_perfect_structural(const TriangulationCertificate& t) {
  return !find_induced_loose_odd_wheel(t.graph).has_value();
}

bool is_t_perfect_structural(const Graph& g) {
  auto t = is_plane_triangulation(g);
  if (!t) throw NotTriangulation("graph is not a plane triangulation");
  return is_t_perfect_structural(*t);
}

CutsetSplit clique_cutset_split(const Graph& g, std::span<const Vertex> clique) {
  if (!is_clique(g, clique)) throw std::invalid_argument("cutset is not a clique");
  auto rest = delete_vertices(g, clique);
  auto comps = components(rest.graph);
  if (comps.size() < 2) throw std::invalid_argument("clique does not separate the graph");
  VertexSet first(clique.begin(), clique.end());
  VertexSet second = first;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) (i == 0 ? first : second).push_back(rest.to_original[v]);
  return {induced_subgraph(g, first), induced_subgraph(g, second)};
}

namespace {

bool h_perfect_by_cutset(const Graph& g) {
  auto k4 = find_k4(g);
  if (!k4) return !find_induced_loose_odd_wheel(g).has_value();
  if (g.vertex_count() == 4) return true;
  const auto& q = *k4;
  for (int skip = 0; skip < 4; ++skip) {
    VertexSet triangle;
    for (int i = 0; i < 4; ++i)
      if (i != skip) triangle.push_back(q[i]);
    if (!is_separating(g, triangle)) continue;
    auto split = clique_cutset_split(g, triangle);
    return h_perfect_by_cutset(split.first.graph) && h_perfect_by_cutset(split.second.graph);
  }
  throw std::logic_error("K4 in a triangulation larger than K4 has no separating triangle");
}

}  // namespace

bool is_h_perfect_triangulation(const TriangulationCertificate& t, HRoute route) {
  if (route == HRoute::perfection) return !find_odd_hole(t.graph).has_value();
  return h_perfect_by_cutset(t.graph);
}

bool is_h_perfect_triangulation(const Graph& g, HRoute route) {
  auto t = is_plane_triangulation(g);
  if (!t) throw NotTriangulation("graph is not a plane triangulation");
  return is_h_perfect_triangulation(*t, route);
}

bool is_h_perfect_planar(const Graph& g, const HPlanarOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw OracleSizeExceeded("subset enumeration bound is " + std::to_string(options.max_vertices) +
                             " vertices, graph has " + std::to_string(g.vertex_count()));
  if (!is_planar(g)) throw NotPlanar("graph is not planar");
  const int n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) s.push_back(v);
    const auto sub = induced_subgraph(g, s);
    if (contains_k4(sub.graph)) continue;
    if (!is_t_perfect_oracle(sub.graph, options.oracle)) return false;
  }
  return true;
}

nlohmann::json to_json(const LooseOddWheelCertificate& cert) {
  return {{"hub", cert.hub},
          {"rim", cert.rim.vertices},
          {"spokes", cert.spokes},
          {"segment_lengths", cert.segment_lengths}};
}

LooseOddWheelCertificate certificate_from_json(const nlohmann::json& j) {
  LooseOddWheelCertificate cert;
  cert.hub = j.at("hub").get<Vertex>();
  cert.rim.vertices = j.at("rim").get<std::vector<Vertex>>();
  cert.spokes = j.at("spokes").get<std::vector<int>>();
  cert.segment_lengths = j.at("segment_lengths").get<std::vector<int>>();
  return cert;
}

}  // namespace tperfect
