#include "tperfect/corpus.hpp"

#include <exception>
#include <ostream>

#include <omp.h>

#include "tperfect/graph_io.hpp"
#include "tperfect/planar.hpp"
#include "tperfect/rng.hpp"

namespace tperfect {

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

CorpusKind parse_corpus_kind(std::string_view name) {
  if (name == "random") return CorpusKind::random;
  if (name == "stacked") return CorpusKind::stacked;
  if (name == "mindeg4" || name == "min_degree_4") return CorpusKind::min_degree_4;
  if (name == "mixed") return CorpusKind::mixed;
  throw std::invalid_argument("unknown corpus kind '" + std::string(name) + "'");
}

std::string_view to_string(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::random: return "random";
    case CorpusKind::stacked: return "stacked";
    case CorpusKind::min_degree_4: return "mindeg4";
    case CorpusKind::mixed: return "mixed";
  }
  return "?";
}

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
  if (spec.n_min < 4 || spec.n_max < spec.n_min)
    throw std::invalid_argument("corpus needs 4 <= n_min <= n_max");
  Rng master(spec.seed);
  std::vector<Graph> out;
  out.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) {
    const int n = static_cast<int>(master.between(spec.n_min, spec.n_max));
    const int flips = spec.flips >= 0 ? spec.flips : static_cast<int>(master.between(0, 8L * n));
    CorpusKind kind = spec.kind;
    if (kind == CorpusKind::mixed)
      kind = master.below(2) == 0 ? CorpusKind::random : CorpusKind::min_degree_4;
    const Seed seed = master.next();
    switch (kind) {
      case CorpusKind::stacked:
        out.push_back(stacked_triangulation(n, seed));
        break;
      case CorpusKind::min_degree_4:
        out.push_back(random_plane_triangulation(n, flips, seed, FlipPolicy::min_degree_4));
        break;
      default:
        out.push_back(random_plane_triangulation(n, flips, seed));
    }
  }
  return out;
}

nlohmann::ordered_json manifest(const CorpusSpec& spec, std::size_t emitted) {
  nlohmann::ordered_json j;
  j["generator"] = to_string(spec.kind);
  j["seed"] = spec.seed;
  j["n_min"] = spec.n_min;
  j["n_max"] = spec.n_max;
  j["count"] = spec.count;
  j["flips"] = spec.flips;
  if (spec.flips < 0) j["flips_rule"] = "uniform in 0..8n per graph";
  j["rng"] = "xorshift64* seeded by splitmix64";
  j["emitted"] = emitted;
  return j;
}

namespace {

/// Runs body(i) for i in [0, count), serially or over an OpenMP team, and
/// rethrows the first exception by index.
template <typename Body>
void for_each_index(std::size_t count, Execution mode, Body body) {
  std::vector<std::exception_ptr> errors(count);
  const long total = static_cast<long>(count);
  if (mode == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < total; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < total; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<ClassificationReport> classify_corpus(std::span<const Graph> graphs,
                                                  const CheckOptions& options, Execution mode,
                                                  const Oracles& oracles) {
  std::vector<ClassificationReport> out(graphs.size());
  for_each_index(graphs.size(), mode,
                 [&](std::size_t i) { out[i] = classify(graphs[i], options, oracles); });
  return out;
}

int write_reports(std::span<const ClassificationReport> reports, std::ostream& out,
                  std::ostream& err) {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto j = to_json(reports[i]);
    out << j.dump() << '\n';
    if (!reports[i].mismatches.empty()) {
      nlohmann::ordered_json diag;
      diag["error"] = "route mismatch";
      diag["index"] = i;
      diag["properties"] = reports[i].mismatches;
      diag["report"] = j;
      err << diag.dump() << '\n';
      return 2;
    }
  }
  return 0;
}

TriangulationRecord verify_triangulation(const Graph& g, const VerifyOptions& options,
                                   const Oracles& oracles) {
  auto t = is_plane_triangulation(g);
  if (!t) throw NotTriangulation("corpus graph is not a plane triangulation");
  TriangulationRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.vertex_count();

  const auto low = find_induced_loose_odd_wheel(g);
  const auto hole = find_odd_hole(g);
  r.has_odd_hole = hole.has_value();
  r.perfect = !r.has_odd_hole;
  r.contains_k4 = contains_k4(g);
  r.t_polyhedral = oracles.polytope(g, Flavor::t, options.oracle).integral;
  r.no_loose_odd_wheel = !low.has_value();
  r.perfect_and_k4_free = r.perfect && !r.contains_k4;
  r.h_polyhedral = oracles.polytope(g, Flavor::h, options.oracle).integral;
  if (r.contains_k4) r.h_cutset_route = is_h_perfect_triangulation(*t, HRoute::clique_cutset);
  r.has_separating_triangle = find_separating_triangle(*t).has_value();
  r.has_separating_odd_hole = find_separating_odd_hole(*t).has_value();

  auto& v = r.violations;
  if (low && !verify_loose_odd_wheel(g, *low)) v.emplace_back("loose odd wheel certificate fails verification");
  if (r.t_polyhedral != r.no_loose_odd_wheel) v.emplace_back("t-perfection: polytope (i) != loose odd wheel (ii)");
  if (r.no_loose_odd_wheel != r.perfect_and_k4_free) v.emplace_back("t-perfection: loose odd wheel (ii) != perfect and K4-free (iii)");
  if (r.t_polyhedral != r.perfect_and_k4_free) v.emplace_back("t-perfection: polytope (i) != perfect and K4-free (iii)");
  if (r.h_polyhedral != r.perfect) v.emplace_back("h-perfection: polytope != perfection");
  if (r.h_cutset_route && *r.h_cutset_route != r.perfect)
    v.emplace_back("h-perfection: clique cutset route != perfection route");
  if (r.has_odd_hole && !low && !r.has_separating_triangle)
    v.emplace_back("odd hole without loose odd wheel or separating triangle");
  if (!r.has_separating_odd_hole && !r.perfect)
    v.emplace_back("no separating odd hole but imperfect");
  return r;
}

std::vector<TriangulationRecord> verify_corpus(std::span<const Graph> graphs,
                                         const VerifyOptions& options, Execution mode,
                                         const Oracles& oracles) {
  std::vector<TriangulationRecord> out(graphs.size());
  for_each_index(graphs.size(), mode, [&](std::size_t i) {
    out[i] = verify_triangulation(graphs[i], options, oracles);
  });
  return out;
}

VerifySummary summarize(std::span<const TriangulationRecord> records) {
  VerifySummary s;
  s.graphs = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    s.t_perfect += r.t_polyhedral;
    s.perfect += r.perfect;
    s.h_perfect += r.h_polyhedral;
    s.with_k4 += r.contains_k4;
    s.with_odd_hole += r.has_odd_hole;
    s.with_separating_triangle += r.has_separating_triangle;
    s.with_separating_odd_hole += r.has_separating_odd_hole;
    if (!r.violations.empty()) {
      s.violations += r.violations.size();
      s.violating.push_back(i);
    }
  }
  return s;
}

nlohmann::ordered_json to_json(const VerifySummary& s) {
  nlohmann::ordered_json j;
  j["graphs"] = s.graphs;
  j["t_perfect"] = s.t_perfect;
  j["perfect"] = s.perfect;
  j["h_perfect"] = s.h_perfect;
  j["with_k4"] = s.with_k4;
  j["with_odd_hole"] = s.with_odd_hole;
  j["with_separating_triangle"] = s.with_separating_triangle;
  j["with_separating_odd_hole"] = s.with_separating_odd_hole;
  j["violations"] = s.violations;
  j["violating_indices"] = s.violating;
  return j;
}

nlohmann::ordered_json to_json(const TriangulationRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["t_perfect_polyhedral"] = r.t_polyhedral;
  j["no_loose_odd_wheel"] = r.no_loose_odd_wheel;
  j["perfect_and_k4_free"] = r.perfect_and_k4_free;
  j["perfect"] = r.perfect;
  j["h_perfect_polyhedral"] = r.h_polyhedral;
  if (r.h_cutset_route) j["h_perfect_cutset_route"] = *r.h_cutset_route;
  j["has_odd_hole"] = r.has_odd_hole;
  j["has_separating_triangle"] = r.has_separating_triangle;
  j["has_separating_odd_hole"] = r.has_separating_odd_hole;
  j["violations"] = r.violations;
  return j;
}

}  // namespace tperfect
