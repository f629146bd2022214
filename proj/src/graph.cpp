#include "tperfect/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace tperfect {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbours_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v))
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") outside 0.." + std::to_string(n - 1));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw std::invalid_argument("parallel edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    adjacency_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adjacency_[static_cast<std::size_t>(v) * n_ + u] = 1;
    neighbours_[u].push_back(v);
    neighbours_[v].push_back(u);
    ++m_;
  }
  for (auto& list : neighbours_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbours_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Cycle canonical_cycle(Cycle c) {
  auto& vs = c.vertices;
  if (vs.empty()) return c;
  auto first = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), first, vs.end());
  if (vs.size() > 2 && vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  return c;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const int n = g.vertex_count();
  InducedSubgraph out;
  out.from_original.assign(n, -1);
  std::vector<char> keep(n, 0);
  for (Vertex v : s) {
    if (!g.contains(v))
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(n));
    keep[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    out.from_original[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (keep[u] && keep[v]) edges.emplace_back(out.from_original[u], out.from_original[v]);
  out.graph = Graph(static_cast<int>(out.to_original.size()), edges);
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    drop[v] = 1;
  }
  VertexSet rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) rest.push_back(v);
  return induced_subgraph(g, rest);
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbours(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_separating(const Graph& g, std::span<const Vertex> s) {
  return components(delete_vertices(g, s).graph).size() >= 2;
}

bool is_induced_cycle(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  const std::size_t len = vs.size();
  if (len < 3) return false;
  for (Vertex v : vs)
    if (!g.contains(v)) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      if (vs[i] == vs[j]) return false;
      const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
    }
  return true;
}

std::vector<Cycle> enumerate_induced_cycles(const Graph& g, int min_length, bool odd_only) {
  const int n = g.vertex_count();
  std::vector<Cycle> out;
  std::vector<Vertex> path;
  std::vector<int> blocked(n, 0);  // count of path vertices (other than the tail) adjacent

  // Extends an induced path start = path[0] < every other path vertex. A
  // candidate must be adjacent to the tail and to no inner path vertex; if it
  // touches the start the cycle closes and the path stops growing.
  std::function<void()> extend = [&]() {
    const Vertex start = path.front();
    const Vertex tail = path.back();
    for (Vertex q : g.neighbours(tail)) {
      if (q <= start) continue;
      if (std::find(path.begin(), path.end(), q) != path.end()) continue;
      // blocked[q] counts adjacencies to path[1..size-2]
      if (blocked[q] > 0) continue;
      if (path.size() >= 2 && g.adjacent(q, start)) {
        if (q < path[1]) continue;  // the reversed traversal reports it
        const int len = static_cast<int>(path.size()) + 1;
        if (len >= min_length && (!odd_only || len % 2 == 1)) {
          Cycle c{path};
          c.vertices.push_back(q);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (path.size() == 1 && !g.adjacent(q, start)) continue;
      // tail becomes an inner vertex once q is appended
      if (path.size() >= 2)
        for (Vertex w : g.neighbours(tail)) ++blocked[w];
      path.push_back(q);
      extend();
      path.pop_back();
      if (path.size() >= 2)
        for (Vertex w : g.neighbours(tail)) --blocked[w];
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    extend();
  }
  for (auto& c : out) c = canonical_cycle(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> enumerate_induced_odd_cycles(const Graph& g) {
  return enumerate_induced_cycles(g, 3, true);
}

std::optional<Cycle> find_odd_hole(const Graph& g) {
  auto holes = enumerate_induced_cycles(g, 5, true);
  if (holes.empty()) return std::nullopt;
  return holes.front();
}

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet r;
  // Bron-Kerbosch with Tomita pivoting.
  std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) {
        VertexSet clique = r;
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
      }
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    for (const VertexSet* pool : {&p, &x})
      for (Vertex u : *pool) {
        int count = 0;
        for (Vertex v : p) count += g.adjacent(u, v);
        if (count > best) {
          best = count;
          pivot = u;
        }
      }
    VertexSet candidates;
    for (Vertex v : p)
      if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (Vertex v : candidates) {
      VertexSet np, nx;
      for (Vertex w : p)
        if (g.adjacent(v, w)) np.push_back(w);
      for (Vertex w : x)
        if (g.adjacent(v, w)) nx.push_back(w);
      r.push_back(v);
      expand(std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  VertexSet all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_stable(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
  for (auto [a, b] : g.edges())
    for (Vertex c : g.neighbours(b)) {
      if (c <= b || !g.adjacent(a, c)) continue;
      for (Vertex d : g.neighbours(c))
        if (d > c && g.adjacent(a, d) && g.adjacent(b, d)) return std::array<Vertex, 4>{a, b, c, d};
    }
  return std::nullopt;
}

namespace {

constexpr int kExhaustiveLimit = 20;

WeightedStableSet exhaustive_stable_set(const Graph& g, std::span<const Rational> w) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbours(v)) nbr[v] |= 1u << u;
  std::uint32_t positive = 0;
  for (Vertex v = 0; v < n; ++v)
    if (w[v] > 0) positive |= 1u << v;

  WeightedStableSet best{Rational(0), {}};
  std::uint32_t best_mask = 0;
  Rational current = 0;
  std::uint32_t chosen = 0;
  // Every stable subset of the positive vertices is visited once.
  std::function<void(std::uint32_t)> visit = [&](std::uint32_t candidates) {
    if (candidates == 0) {
      if (current > best.weight) {
        best.weight = current;
        best_mask = chosen;
      }
      return;
    }
    const int v = __builtin_ctz(candidates);
    const std::uint32_t rest = candidates & ~(1u << v);
    chosen |= 1u << v;
    current += w[v];
    visit(rest & ~nbr[v]);
    current -= w[v];
    chosen &= ~(1u << v);
    visit(rest);
  };
  visit(positive);
  for (Vertex v = 0; v < n; ++v)
    if (best_mask & (1u << v)) best.vertices.push_back(v);
  return best;
}

WeightedStableSet branch_and_bound_stable_set(const Graph& g, std::span<const Rational> w) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if (w[v] > 0) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return w[a] > w[b]; });

  WeightedStableSet best{Rational(0), {}};
  VertexSet chosen;
  Rational current = 0;

  // Greedy clique cover of the candidates; a stable set takes at most one
  // vertex from each clique.
  auto bound = [&](const std::vector<Vertex>& candidates) {
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Rational> heaviest;
    for (Vertex v : candidates) {
      bool placed = false;
      for (std::size_t i = 0; i < cliques.size() && !placed; ++i) {
        if (std::all_of(cliques[i].begin(), cliques[i].end(),
                        [&](Vertex u) { return g.adjacent(u, v); })) {
          cliques[i].push_back(v);
          if (w[v] > heaviest[i]) heaviest[i] = w[v];
          placed = true;
        }
      }
      if (!placed) {
        cliques.push_back({v});
        heaviest.push_back(w[v]);
      }
    }
    Rational total = 0;
    for (const auto& h : heaviest) total += h;
    return total;
  };

  std::function<void(std::vector<Vertex>)> search = [&](std::vector<Vertex> candidates) {
    if (current > best.weight) {
      best.weight = current;
      best.vertices = chosen;
    }
    if (candidates.empty() || current + bound(candidates) <= best.weight) return;
    const Vertex v = candidates.front();
    std::vector<Vertex> with;
    for (std::size_t i = 1; i < candidates.size(); ++i)
      if (!g.adjacent(v, candidates[i])) with.push_back(candidates[i]);
    chosen.push_back(v);
    current += w[v];
    search(std::move(with));
    current -= w[v];
    chosen.pop_back();
    candidates.erase(candidates.begin());
    search(std::move(candidates));
  };
  search(order);
  std::sort(best.vertices.begin(), best.vertices.end());
  return best;
}

}  // namespace

WeightedStableSet max_stable_set_weight(const Graph& g, std::span<const Rational> weights) {
  if (static_cast<int>(weights.size()) != g.vertex_count())
    throw std::invalid_argument("weight vector has " + std::to_string(weights.size()) +
                                " entries for a graph of order " +
                                std::to_string(g.vertex_count()));
  if (g.vertex_count() < kExhaustiveLimit) return exhaustive_stable_set(g, weights);
  return branch_and_bound_stable_set(g, weights);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto degrees = [](const Graph& x) {
    std::vector<int> d(x.vertex_count());
    for (Vertex v = 0; v < x.vertex_count(); ++v) d[v] = x.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return std::nullopt;

  // Map g's vertices in BFS-ish order of decreasing degree so adjacency
  // constraints bite early.
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int depth) {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex image = 0; image < n; ++image) {
      if (used[image] || h.degree(image) != g.degree(v)) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const Vertex u = order[k];
        ok = g.adjacent(u, v) == h.adjacent(map[u], image);
      }
      if (!ok) continue;
      map[v] = image;
      used[image] = 1;
      if (place(depth + 1)) return true;
      used[image] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

}  // namespace tperfect
