#include <gtest/gtest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "tperfect/generators.hpp"
#include "tperfect/planar.hpp"
#include "tperfect/polytope.hpp"
#include "tperfect/rng.hpp"
#include "tperfect/structure.hpp"

using namespace tperfect;
using namespace tperfect::testing;

namespace {

bool is_regular(const Graph& g, int d) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

/// Every cycle of length >= 4 has a chord iff a perfect elimination order exists.
bool is_chordal(const Graph& g) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int round = 0; round < g.vertex_count(); ++round) {
    bool removed = false;
    for (Vertex v = 0; v < g.vertex_count() && !removed; ++v) {
      if (gone[v]) continue;
      VertexSet live;
      for (Vertex w : g.neighbours(v))
        if (!gone[w]) live.push_back(w);
      if (is_clique(g, live)) {
        gone[v] = 1;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

}  // namespace

TEST(Rng, MatchesDocumentedRecurrence) {
  // golden values from an independent implementation of the documented steps
  Rng one(1);
  EXPECT_EQ(one.next(), 0x4b46a55df3611b9bULL);
  EXPECT_EQ(one.next(), 0xd7e1f1410e763ef4ULL);
  EXPECT_EQ(one.next(), 0x5f14ec66975f9b06ULL);
  Rng zero(0);
  EXPECT_EQ(zero.next(), 0x7bbcb40d550682d0ULL);
  EXPECT_EQ(zero.next(), 0xde7fe413d00cc9fdULL);
  Rng r(42);
  std::vector<std::uint64_t> draws;
  for (int i = 0; i < 10; ++i) draws.push_back(r.below(10));
  EXPECT_EQ(draws, (std::vector<std::uint64_t>{2, 3, 9, 3, 2, 3, 1, 9, 7, 3}));
}

TEST(Rng, BetweenStaysInRange) {
  Rng r(7);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) {
    const long x = r.between(-2, 2);
    ASSERT_GE(x, -2);
    ASSERT_LE(x, 2);
    ++hits[x + 2];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(OddWheel, Examples) {
  EXPECT_EQ(odd_wheel(3), complete_graph(4));
  EXPECT_EQ(odd_wheel(5).vertex_count(), 6);
  EXPECT_EQ(odd_wheel(5).edge_count(), 10);
  EXPECT_EQ(odd_wheel(7).vertex_count(), 8);
  EXPECT_EQ(odd_wheel(7).edge_count(), 14);
  EXPECT_EQ(odd_wheel(7).degree(7), 7);
  EXPECT_THROW(odd_wheel(4), std::invalid_argument);
  EXPECT_THROW(odd_wheel(1), std::invalid_argument);
}

TEST(MoebiusAndC10, Examples) {
  const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_TRUE(brute_isomorphic(moebius_ladder(3), k33));
  const Graph m4 = moebius_ladder(4);
  EXPECT_EQ(m4.vertex_count(), 8);
  EXPECT_EQ(m4.edge_count(), 12);
  EXPECT_TRUE(is_regular(m4, 3));
  EXPECT_THROW(moebius_ladder(2), std::invalid_argument);
  const Graph c10 = c10_squared();
  EXPECT_EQ(c10.vertex_count(), 10);
  EXPECT_EQ(c10.edge_count(), 20);
  EXPECT_TRUE(is_regular(c10, 4));
  for (int v = 0; v < 10; ++v)
    for (int d : {1, 2}) EXPECT_TRUE(c10.adjacent(v, (v + d) % 10));
}

TEST(MoebiusAndC10, MinimallyTImperfect) {
  for (const Graph& g : {moebius_ladder(4), c10_squared(), odd_wheel(5), odd_wheel(7)}) {
    EXPECT_FALSE(is_t_perfect_oracle(g));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      EXPECT_TRUE(is_t_perfect_oracle(delete_vertices(g, std::vector<Vertex>{v}).graph));
  }
}

TEST(Figure1, Shape) {
  using namespace figure1;
  const Graph g = figure1_graph();
  EXPECT_EQ(g.vertex_count(), 11);
  EXPECT_EQ(g.edge_count(), 27);
  EXPECT_TRUE(is_plane_triangulation(g));
  EXPECT_EQ(g.degree(C), 6);
  EXPECT_EQ(g.degree(c), 6);
  EXPECT_TRUE(g.adjacent(v0, v4));
  EXPECT_EQ(g.neighbours(A), (std::vector<Vertex>{v1, v2, B, C}));
  EXPECT_EQ(g.neighbours(b), (std::vector<Vertex>{v2, v3, a, c}));
}

TEST(Solids, Counts) {
  EXPECT_EQ(octahedron().vertex_count(), 6);
  EXPECT_EQ(octahedron().edge_count(), 12);
  EXPECT_TRUE(is_regular(octahedron(), 4));
  EXPECT_EQ(icosahedron().vertex_count(), 12);
  EXPECT_EQ(icosahedron().edge_count(), 30);
  EXPECT_TRUE(is_regular(icosahedron(), 5));
  EXPECT_EQ(bipyramid().vertex_count(), 5);
  EXPECT_EQ(bipyramid().edge_count(), 9);
  for (const Graph& g : {octahedron(), icosahedron(), bipyramid()}) EXPECT_TRUE(is_plane_triangulation(g));
}

TEST(Stacked, Examples) {
  EXPECT_EQ(stacked_triangulation(4, 1), complete_graph(4));
  EXPECT_TRUE(brute_isomorphic(stacked_triangulation(5, 9), bipyramid()));
  EXPECT_THROW(stacked_triangulation(3, 1), std::invalid_argument);
  for (int seed = 0; seed < 50; ++seed) {
    const int n = 4 + seed % 12;
    const Graph g = stacked_triangulation(n, seed);
    EXPECT_TRUE(is_plane_triangulation(g));
    EXPECT_TRUE(is_chordal(g));
    EXPECT_TRUE(is_perfect_planar(g));
    EXPECT_FALSE(find_odd_hole(g));
  }
}

TEST(RandomTriangulation, Examples) {
  for (int seed = 0; seed < 10; ++seed)
    EXPECT_EQ(random_plane_triangulation(9, 0, seed), stacked_triangulation(9, seed));
  EXPECT_EQ(random_plane_triangulation(9, 50, 7), random_plane_triangulation(9, 50, 7));
  EXPECT_EQ(random_plane_triangulation(9, 50, 7, FlipPolicy::min_degree_4),
            random_plane_triangulation(9, 50, 7, FlipPolicy::min_degree_4));
}

TEST(RandomTriangulation, OutputsAreTriangulations) {
  int changed = 0;
  for (int seed = 0; seed < 80; ++seed) {
    const int n = 4 + seed % 12;
    for (auto policy : {FlipPolicy::uniform, FlipPolicy::min_degree_4}) {
      const Graph g = random_plane_triangulation(n, 4 * n, seed, policy);
      EXPECT_EQ(g.edge_count(), 3 * n - 6);
      EXPECT_TRUE(is_plane_triangulation(g));
      changed += !(g == stacked_triangulation(n, seed));
    }
  }
  EXPECT_GT(changed, 100);
}

TEST(RandomTriangulation, MinDegreePolicyNeverCreatesDegreeThree) {
  for (int seed = 0; seed < 60; ++seed) {
    const int n = 7 + seed % 6;
    const Graph base = stacked_triangulation(n, seed);
    const Graph g = random_plane_triangulation(n, 6 * n, seed, FlipPolicy::min_degree_4);
    int base3 = 0, out3 = 0;
    for (Vertex v = 0; v < n; ++v) {
      base3 += base.degree(v) == 3;
      out3 += g.degree(v) == 3;
    }
    EXPECT_LE(out3, base3);
  }
}

TEST(RandomPlanar, PlanarAndDeterministic) {
  for (int seed = 0; seed < 60; ++seed) {
    const int n = 1 + seed % 10;
    const Graph g = random_planar_graph(n, seed);
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_TRUE(is_planar(g));
    EXPECT_EQ(g, random_planar_graph(n, seed));
  }
}

TEST(LooseWheel, Construction) {
  const auto w = loose_wheel(std::vector<int>{1, 2, 1, 1});
  EXPECT_EQ(w.graph.vertex_count(), 6);
  EXPECT_EQ(w.hub, 0);
  EXPECT_EQ(w.graph.neighbours(0), (std::vector<Vertex>{1, 2, 4, 5}));
  EXPECT_THROW(loose_wheel(std::vector<int>{1, 1}), std::invalid_argument);
  EXPECT_THROW(loose_wheel(std::vector<int>{1, 0, 2}), std::invalid_argument);
  for (int seed = 0; seed < 100; ++seed) {
    const auto r = random_loose_odd_wheel(seed, 13);
    EXPECT_LE(r.graph.vertex_count(), 13);
    const auto cert = loose_odd_wheel_certificate(r.graph, r.hub, r.rim);
    ASSERT_TRUE(cert);
    EXPECT_GE(cert->odd_segment_count(), 3u);
  }
  EXPECT_THROW(random_loose_odd_wheel(1, 3), std::invalid_argument);
}

TEST(Named, Lookup) {
  EXPECT_EQ(named_graph("k4"), complete_graph(4));
  EXPECT_EQ(named_graph("c5"), cycle_graph(5));
  EXPECT_EQ(named_graph("w5"), wheel(5));
  EXPECT_EQ(named_graph("p3"), path_graph(3));
  EXPECT_EQ(named_graph("moebius4"), moebius_ladder(4));
  EXPECT_EQ(named_graph("c10sq"), c10_squared());
  EXPECT_EQ(named_graph("figure1"), figure1_graph());
  EXPECT_THROW(named_graph("k"), std::invalid_argument);
  EXPECT_THROW(named_graph("petersen"), std::invalid_argument);
  for (const auto& name : named_triangulations()) EXPECT_TRUE(is_plane_triangulation(named_graph(name)));
}
