#ifndef TPERFECT_CORPUS_HPP
#define TPERFECT_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tperfect/classify.hpp"
#include "tperfect/generators.hpp"

namespace tperfect {

/// Per-graph work fans out over OpenMP threads in `parallel` mode; `serial`
/// is the reference loop. Results are indexed by input position either way.
enum class Execution { serial, parallel };

/// Caps the OpenMP team size; values <= 0 leave the runtime default.
void set_thread_count(int threads);

/// random: uniform flips; stacked: no flips; min_degree_4: flips under
/// FlipPolicy::min_degree_4; mixed: each graph picks random or min_degree_4.
enum class CorpusKind { random, stacked, min_degree_4, mixed };

CorpusKind parse_corpus_kind(std::string_view name);
std::string_view to_string(CorpusKind kind);

struct CorpusSpec {
  CorpusKind kind = CorpusKind::mixed;
  int n_min = 5;
  int n_max = 12;
  int count = 500;
  int flips = -1;  // -1: each graph draws its own count from 0..8n
  Seed seed = 1;
};

/// Graph i draws n uniformly from [n_min, n_max], its flip count (when
/// flips < 0), its policy (mixed only) and its own seed from one master
/// Rng(spec.seed), in that order.
std::vector<Graph> generate_corpus(const CorpusSpec& spec);

nlohmann::ordered_json manifest(const CorpusSpec& spec, std::size_t emitted);

std::vector<ClassificationReport> classify_corpus(std::span<const Graph> graphs,
                                                  const CheckOptions& options, Execution mode,
                                                  const Oracles& oracles = {});

/// Writes one JSON report per line, in input order, stopping after the first
/// report with a route mismatch. Returns 0, or 2 after a mismatch (with a
/// diagnostic object on `err`).
int write_reports(std::span<const ClassificationReport> reports, std::ostream& out,
                  std::ostream& err);

/// Every implication checked on one plane triangulation.
struct TriangulationRecord {
  std::string graph6;
  int n = 0;
  bool t_polyhedral = false;         // (i)
  bool no_loose_odd_wheel = false;   // (ii)
  bool perfect_and_k4_free = false;  // (iii)
  bool perfect = false;
  bool contains_k4 = false;
  bool h_polyhedral = false;
  std::optional<bool> h_cutset_route;  // K4-containing instances only
  bool has_odd_hole = false;
  bool has_separating_triangle = false;
  bool has_separating_odd_hole = false;
  std::vector<std::string> violations;
};

struct VerifyOptions {
  OracleOptions oracle;
};

/// Throws NotTriangulation for other graphs.
TriangulationRecord verify_triangulation(const Graph& g, const VerifyOptions& options,
                                   const Oracles& oracles = {});

std::vector<TriangulationRecord> verify_corpus(std::span<const Graph> graphs,
                                         const VerifyOptions& options, Execution mode,
                                         const Oracles& oracles = {});

struct VerifySummary {
  std::size_t graphs = 0;
  std::size_t t_perfect = 0;
  std::size_t perfect = 0;
  std::size_t h_perfect = 0;
  std::size_t with_k4 = 0;
  std::size_t with_odd_hole = 0;
  std::size_t with_separating_triangle = 0;
  std::size_t with_separating_odd_hole = 0;
  std::size_t violations = 0;
  std::vector<std::size_t> violating;  // corpus indices
};

VerifySummary summarize(std::span<const TriangulationRecord> records);
nlohmann::ordered_json to_json(const VerifySummary& summary);
nlohmann::ordered_json to_json(const TriangulationRecord& record);

}  // namespace tperfect

#endif  // TPERFECT_CORPUS_HPP
