#include "tperfect/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

#include "tperfect/planar.hpp"
#include "tperfect/rng.hpp"

namespace tperfect {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph wheel(int k) {
  if (k < 3) throw std::invalid_argument("wheel rim needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, (i + 1) % k);
    edges.emplace_back(i, k);
  }
  return Graph(k + 1, edges);
}

Graph odd_wheel(int k) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("odd wheel rim must be odd and at least 3, got " + std::to_string(k));
  return wheel(k);
}

Graph moebius_ladder(int rungs) {
  if (rungs < 3) throw std::invalid_argument("Moebius ladder needs at least 3 rungs");
  const int n = 2 * rungs;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < rungs; ++i) edges.emplace_back(i, i + rungs);
  return Graph(n, edges);
}

Graph c10_squared() {
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, (i + 2) % 10);
  }
  return Graph(10, edges);
}

Graph figure1_graph() {
  using namespace figure1;
  std::vector<Edge> edges = {{v0, v1}, {v1, v2}, {v2, v3}, {v3, v4}, {v0, v4}};
  for (auto [x, y, z] : {std::array<Vertex, 3>{A, B, C}, std::array<Vertex, 3>{a, b, c}}) {
    edges.insert(edges.end(), {{x, y}, {y, z}, {x, z}});
    edges.insert(edges.end(), {{x, v1}, {x, v2}, {y, v2}, {y, v3}});
    edges.insert(edges.end(), {{z, v0}, {z, v1}, {z, v3}, {z, v4}});
  }
  return Graph(11, edges);
}

Graph octahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != (i ^ 1)) edges.emplace_back(i, j);
  return Graph(6, edges);
}

Graph icosahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i, up_next = 1 + (i + 1) % 5;
    const int low = 6 + i, low_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(11, low);
    edges.emplace_back(low, low_next);
    edges.emplace_back(up, low);
    edges.emplace_back(up_next, low);
  }
  return Graph(12, edges);
}

Graph bipyramid() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

namespace {

Graph stacked(int n, Rng& rng) {
  if (n < 4) throw std::invalid_argument("stacked triangulation needs n >= 4");
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (Vertex w = 4; w < n; ++w) {
    const auto f = rng.below(faces.size());
    const auto [a, b, c] = faces[f];
    edges.insert(edges.end(), {{a, w}, {b, w}, {c, w}});
    faces[f] = {a, b, w};
    faces.push_back({a, c, w});
    faces.push_back({b, c, w});
  }
  return Graph(n, edges);
}

void flip_attempts(Graph& g, int flips, Rng& rng, FlipPolicy policy) {
  for (int attempt = 0; attempt < flips; ++attempt) {
    auto cert = is_plane_triangulation(g);
    if (!cert) throw std::logic_error("flip sequence left the class of plane triangulations");
    auto edges = g.edges();
    const auto [u, v] = edges[rng.below(edges.size())];
    std::vector<Vertex> apexes;
    for (const auto& f : cert->faces) {
      const bool has_u = std::find(f.begin(), f.end(), u) != f.end();
      const bool has_v = std::find(f.begin(), f.end(), v) != f.end();
      if (!has_u || !has_v) continue;
      for (Vertex x : f)
        if (x != u && x != v) apexes.push_back(x);
    }
    if (apexes.size() != 2 || apexes[0] == apexes[1] || g.adjacent(apexes[0], apexes[1])) continue;
    if (policy == FlipPolicy::min_degree_4 && (g.degree(u) <= 4 || g.degree(v) <= 4)) continue;
    std::erase(edges, Edge{u, v});
    edges.emplace_back(std::min(apexes[0], apexes[1]), std::max(apexes[0], apexes[1]));
    g = Graph(g.vertex_count(), edges);
  }
}

}  // namespace

Graph stacked_triangulation(int n, Seed seed) {
  Rng rng(seed);
  return stacked(n, rng);
}

Graph random_plane_triangulation(int n, int flips, Seed seed, FlipPolicy policy) {
  Rng rng(seed);
  Graph g = stacked(n, rng);
  flip_attempts(g, flips, rng, policy);
  return g;
}

Graph random_planar_graph(int n, Seed seed) {
  Rng rng(seed);
  Graph base;
  if (n >= 4) {
    base = stacked(n, rng);
    flip_attempts(base, 3 * n, rng, FlipPolicy::uniform);
  } else {
    base = complete_graph(n);
  }
  std::vector<Edge> kept;
  for (auto e : base.edges())
    if (rng.below(3) != 0) kept.push_back(e);
  return Graph(n, kept);
}

LooseWheelGraph loose_wheel(std::span<const int> segment_lengths) {
  if (segment_lengths.size() < 3) throw std::invalid_argument("loose wheel needs three segments");
  int rim_length = 0;
  for (int len : segment_lengths) {
    if (len < 1) throw std::invalid_argument("segment lengths must be positive");
    rim_length += len;
  }
  std::vector<Edge> edges;
  LooseWheelGraph out;
  out.hub = 0;
  for (int i = 0; i < rim_length; ++i) {
    out.rim.vertices.push_back(1 + i);
    edges.emplace_back(1 + i, 1 + (i + 1) % rim_length);
  }
  int position = 0;
  for (int len : segment_lengths) {
    edges.emplace_back(0, 1 + position);
    position += len;
  }
  out.graph = Graph(rim_length + 1, edges);
  return out;
}

LooseWheelGraph random_loose_odd_wheel(Seed seed, int max_vertices) {
  if (max_vertices < 4) throw std::invalid_argument("a loose odd wheel needs 4 vertices");
  Rng rng(seed);
  for (;;) {
    const int spokes = static_cast<int>(rng.between(3, 7));
    std::vector<int> lengths(spokes);
    int total = 0, odd = 0;
    for (auto& len : lengths) {
      len = static_cast<int>(rng.between(1, 4));
      total += len;
      odd += len % 2;
    }
    if (odd >= 3 && odd % 2 == 1 && total + 1 <= max_vertices) return loose_wheel(lengths);
  }
}

namespace {

bool parse_suffix(std::string_view name, std::string_view prefix, int& value) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return false;
  auto digits = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "bipyramid") return bipyramid();
  if (name == "figure1") return figure1_graph();
  if (name == "c10sq" || name == "c10_squared") return c10_squared();
  int k = 0;
  if (parse_suffix(name, "moebius", k)) return moebius_ladder(k);
  if (parse_suffix(name, "k", k)) return complete_graph(k);
  if (parse_suffix(name, "c", k)) return cycle_graph(k);
  if (parse_suffix(name, "p", k)) return path_graph(k);
  if (parse_suffix(name, "w", k)) return wheel(k);
  throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

std::vector<std::string> named_triangulations() {
  return {"k3", "k4", "bipyramid", "octahedron", "icosahedron", "figure1"};
}

}  // namespace tperfect
