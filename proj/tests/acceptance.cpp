// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/graph_enum.hpp"
#include "support/oracles.hpp"
#include "tperfect/classify.hpp"
#include "tperfect/corpus.hpp"
#include "tperfect/generators.hpp"
#include "tperfect/planar.hpp"
#include "tperfect/polytope.hpp"
#include "tperfect/rng.hpp"
#include "tperfect/structure.hpp"

using namespace tperfect;
using namespace tperfect::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

int failed = 0;

void run(int id, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d: %s (%.1f s) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  for (const auto& f : o.failures) std::printf("  %s\n", f.c_str());
  std::fflush(stdout);
  failed += !o.pass;
}

std::vector<Graph> acceptance_corpus() {
  auto graphs = generate_corpus(CorpusSpec{CorpusKind::mixed, 5, 12, 500, -1, 1});
  for (const auto& name : named_triangulations()) graphs.push_back(named_graph(name));
  return graphs;
}

const std::vector<Graph>& corpus() {
  static const auto graphs = acceptance_corpus();
  return graphs;
}

const std::vector<TriangulationRecord>& corpus_records() {
  static const auto records = [] {
    set_thread_count(0);
    return verify_corpus(corpus(), VerifyOptions{}, Execution::parallel);
  }();
  return records;
}

Outcome golden_table() {
  Outcome o;
  auto expect = [&](const std::string& name, const Graph& g, int perfect, int h, int t) {
    // -1: not part of the table
    if (perfect >= 0) o.require(is_perfect_oracle(g) == bool(perfect), name + " perfect");
    if (h >= 0) o.require(is_h_perfect_oracle(g) == bool(h), name + " h-perfect");
    if (t >= 0) o.require(is_t_perfect_oracle(g) == bool(t), name + " t-perfect");
  };
  expect("K4", complete_graph(4), 1, 1, 0);
  expect("C5", cycle_graph(5), 0, -1, 1);
  expect("W5", odd_wheel(5), -1, -1, 0);
  expect("W7", odd_wheel(7), -1, -1, 0);
  expect("moebius_ladder(4)", moebius_ladder(4), -1, -1, 0);
  expect("c10_squared", c10_squared(), -1, -1, 0);
  expect("octahedron", octahedron(), 1, 1, 1);
  expect("icosahedron", icosahedron(), 0, 0, 0);

  const Graph fig = figure1_graph();
  o.require(is_plane_triangulation(fig).has_value(), "figure1 is a plane triangulation");
  o.require(fig.edge_count() == 27, "figure1 has 27 edges");
  expect("figure1", fig, -1, -1, 0);
  o.require(!is_t_perfect_structural(fig), "figure1 structural t-perfect");
  o.require(!find_induced_odd_wheel(fig).has_value(), "figure1 has no induced odd wheel");
  const auto found = find_induced_loose_odd_wheel(fig);
  o.require(found && verify_loose_odd_wheel(fig, *found), "figure1 detector certificate");
  using namespace figure1;
  const LooseOddWheelCertificate red{C, Cycle{{v0, v1, v2, v3, v4}}, {0, 1, 3, 4}, {1, 2, 1, 1}};
  o.require(verify_loose_odd_wheel(fig, red), "figure1 red loose odd wheel");
  o.detail = "10 graphs";
  return o;
}

Outcome minimality() {
  Outcome o;
  int deletions = 0;
  const std::vector<std::pair<std::string, Graph>> graphs = {
      {"W5", odd_wheel(5)}, {"W7", odd_wheel(7)}, {"moebius_ladder(4)", moebius_ladder(4)},
      {"c10_squared", c10_squared()}};
  for (const auto& [name, g] : graphs) {
    o.require(!is_t_perfect_oracle(g), name + " is t-perfect");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      ++deletions;
      o.require(is_t_perfect_oracle(delete_vertices(g, std::vector<Vertex>{v}).graph),
                name + " minus " + std::to_string(v) + " is t-imperfect");
    }
  }
  o.detail = std::to_string(deletions) + " deletions";
  return o;
}

Outcome t_equivalence() {
  Outcome o;
  const auto& records = corpus_records();
  std::size_t t_perfect = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    t_perfect += r.t_polyhedral;
    const std::string at = "graph " + std::to_string(i) + " " + r.graph6;
    o.require(r.t_polyhedral == r.no_loose_odd_wheel, at + ": (i) != (ii)");
    o.require(r.no_loose_odd_wheel == r.perfect_and_k4_free, at + ": (ii) != (iii)");
    o.require(r.t_polyhedral == r.perfect_and_k4_free, at + ": (i) != (iii)");
  }
  o.detail = std::to_string(records.size()) + " triangulations, " + std::to_string(t_perfect) +
             " t-perfect";
  return o;
}

Outcome h_equivalence() {
  Outcome o;
  const auto& records = corpus_records();
  std::size_t with_k4 = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::string at = "graph " + std::to_string(i) + " " + r.graph6;
    o.require(r.h_polyhedral == r.perfect, at + ": h-perfect oracle != perfection");
    if (r.contains_k4) {
      ++with_k4;
      o.require(r.h_cutset_route.has_value() && *r.h_cutset_route == r.perfect,
                at + ": clique cutset route != direct route");
    }
  }
  o.detail = std::to_string(with_k4) + " K4-containing instances";
  return o;
}

Outcome odd_hole_certificates() {
  Outcome o;
  std::size_t holes = 0, by_wheel = 0, by_triangle = 0;
  const auto& graphs = corpus();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    if (!find_odd_hole(g)) continue;
    ++holes;
    const auto wheel = find_induced_loose_odd_wheel(g);
    const bool wheel_ok = wheel && verify_loose_odd_wheel(g, *wheel);
    const auto tri = find_separating_triangle(*is_plane_triangulation(g));
    const bool tri_ok = tri && is_clique(g, *tri) && is_separating(g, *tri);
    by_wheel += wheel_ok;
    by_triangle += tri_ok;
    o.require(wheel_ok || tri_ok, "graph " + std::to_string(i) + ": no certificate");
  }
  o.detail = std::to_string(holes) + " with odd holes, " + std::to_string(by_wheel) + " loose odd wheels, " +
             std::to_string(by_triangle) + " separating triangles";
  return o;
}

Outcome separating_odd_holes() {
  Outcome o;
  std::size_t without = 0;
  const auto& graphs = corpus();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    if (find_separating_odd_hole(*is_plane_triangulation(g))) continue;
    ++without;
    o.require(is_perfect_oracle(g), "graph " + std::to_string(i) + " is imperfect");
  }
  o.detail = std::to_string(without) + " without a separating odd hole";
  return o;
}

Outcome contractions() {
  Outcome o;
  for (Seed seed = 0; seed < 25; ++seed) {
    const auto w = random_loose_odd_wheel(seed, 13);
    const auto cert = loose_odd_wheel_certificate(w.graph, w.hub, w.rim);
    if (!cert) {
      o.require(false, "seed " + std::to_string(seed) + ": no certificate");
      continue;
    }
    const int k = static_cast<int>(cert->odd_segment_count());
    const Graph reduced = reduce_loose_odd_wheel(w.graph, *cert);
    o.require(find_isomorphism(reduced, odd_wheel(k)).has_value(),
              "seed " + std::to_string(seed) + ": not an odd wheel");
  }

  Rng rng(2024);
  int instances = 0, antecedents = 0;
  for (Seed seed = 0; instances < 100; ++seed) {
    const int n = static_cast<int>(rng.between(4, 10));
    const Graph g = random_graph(n, static_cast<int>(rng.between(20, 50)), seed);
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) > 0 && is_stable(g, g.neighbours(v))) candidates.push_back(v);
    if (candidates.empty()) continue;
    const Vertex v = candidates[rng.below(candidates.size())];
    ++instances;
    if (!is_t_perfect_oracle(g)) continue;
    ++antecedents;
    o.require(is_t_perfect_oracle(t_contract(g, v).graph),
              "seed " + std::to_string(seed) + " vertex " + std::to_string(v));
  }
  o.detail = "25 reductions, 100 contractions, " + std::to_string(antecedents) + " t-perfect antecedents";
  return o;
}

Outcome h_planar() {
  Outcome o;
  int h_perfect = 0;
  Rng rng(8);
  for (Seed seed = 0; seed < 100; ++seed) {
    // alternate edge-deleted planar graphs with full triangulations, which
    // carry most of the h-imperfect instances
    const int n = static_cast<int>(rng.between(seed % 2 ? 5 : 1, 9));
    const Graph g = seed % 2 ? random_plane_triangulation(n, static_cast<int>(rng.below(8 * n + 1)), seed,
                                                          rng.below(2) ? FlipPolicy::min_degree_4
                                                                       : FlipPolicy::uniform)
                             : random_planar_graph(n, seed);
    const bool oracle = is_h_perfect_oracle(g);
    h_perfect += oracle;
    o.require(oracle == is_h_perfect_planar(g), "seed " + std::to_string(seed));
  }
  o.detail = "100 planar graphs, " + std::to_string(h_perfect) + " h-perfect";
  return o;
}

Outcome polytope_engine() {
  Outcome o;
  int systems = 0;
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : all_graphs(n))
      for (auto f : {Flavor::perfect, Flavor::h, Flavor::t}) {
        const auto system = build_system(g, f);
        ++systems;
        o.require(enumerate_vertices(system).points == naive_vertices(system),
                  std::string(to_string(f)) + " system differs on n=" + std::to_string(n));
      }

  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) graphs.push_back(g);
  for (const char* name : {"k4", "c5", "w5", "p3", "moebius4", "c10sq", "figure1"})
    graphs.push_back(named_graph(name));
  for (const auto& name : named_triangulations()) graphs.push_back(named_graph(name));
  int checked = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (auto f : {Flavor::perfect, Flavor::h, Flavor::t}) {
      if (!polytope_oracle(graphs[i], f).integral) continue;
      ++checked;
      o.require(lp_cross_check(graphs[i], f, 50, i).ok,
                "gap on graph " + std::to_string(i) + " " + std::string(to_string(f)));
    }
  o.detail = std::to_string(systems) + " systems enumerated, " + std::to_string(checked) +
             " integral systems cross-checked";
  return o;
}

}  // namespace

int main() {
  run(1, golden_table);
  run(2, minimality);
  run(3, t_equivalence);
  run(4, h_equivalence);
  run(5, odd_hole_certificates);
  run(6, separating_odd_holes);
  run(7, contractions);
  run(8, h_planar);
  run(9, polytope_engine);
  std::printf("%s: %d of 9 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
