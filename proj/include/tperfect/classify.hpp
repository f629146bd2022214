#ifndef TPERFECT_CLASSIFY_HPP
#define TPERFECT_CLASSIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tperfect/graph.hpp"
#include "tperfect/polytope.hpp"
#include "tperfect/structure.hpp"

namespace tperfect {

/// true, false, or skipped with a reason.
struct TriState {
  std::optional<bool> value;
  std::string reason;

  static TriState of(bool v) { return {v, {}}; }
  static TriState skipped(std::string why) { return {std::nullopt, std::move(why)}; }
  bool ran() const { return value.has_value(); }
};

struct ClassificationReport {
  std::string hash;  // FNV-1a 64 of the graph6 string, hex
  std::string graph6;
  int n = 0;
  int m = 0;
  bool is_triangulation = false;

  TriState perfect_structural;
  TriState perfect_polyhedral;
  TriState t_perfect_structural;
  TriState t_perfect_polyhedral;
  TriState h_perfect_structural;  // triangulations: h-perfect iff perfect
  TriState h_perfect_polyhedral;

  std::optional<LooseOddWheelCertificate> loose_odd_wheel;
  std::optional<Cycle> odd_hole;
  std::optional<Flavor> fractional_flavor;
  std::optional<Point> fractional_vertex;

  /// Properties whose two routes both ran and disagree.
  std::vector<std::string> mismatches;
};

struct CheckOptions {
  bool perfect = true;
  bool h = true;
  bool t = true;
  int max_oracle_n = 14;
  bool certificates = true;
};

/// The polytope route is injectable so tests can corrupt it and watch the
/// mismatch path fire.
struct Oracles {
  std::function<OracleResult(const Graph&, Flavor, const OracleOptions&)> polytope =
      [](const Graph& g, Flavor f, const OracleOptions& o) { return polytope_oracle(g, f, o); };
};

std::string graph_hash(const Graph& g);

ClassificationReport classify(const Graph& g, const CheckOptions& options,
                              const Oracles& oracles = {});

nlohmann::ordered_json to_json(const ClassificationReport& report);

}  // namespace tperfect

#endif  // TPERFECT_CLASSIFY_HPP
