#include "tperfect/classify.hpp"

#include <cstdio>

#include "tperfect/graph_io.hpp"
#include "tperfect/planar.hpp"

namespace tperfect {

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_graph6(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

void compare(ClassificationReport& r, const char* property, const TriState& a, const TriState& b) {
  if (a.ran() && b.ran() && *a.value != *b.value) r.mismatches.emplace_back(property);
}

}  // namespace

ClassificationReport classify(const Graph& g, const CheckOptions& options, const Oracles& oracles) {
  ClassificationReport r;
  r.graph6 = to_graph6(g);
  r.hash = graph_hash(g);
  r.n = g.vertex_count();
  r.m = g.edge_count();

  const auto triangulation = is_plane_triangulation(g);
  r.is_triangulation = triangulation.has_value();
  const bool planar = r.is_triangulation || is_planar(g);
  const DetectorOptions detector;
  const bool detector_fits = r.n <= detector.max_vertices;
  const bool oracle_fits = r.n <= options.max_oracle_n;
  const OracleOptions oracle_options{options.max_oracle_n};
  const std::string too_big_for_oracle =
      "more than " + std::to_string(options.max_oracle_n) + " vertices for the polytope oracle";

  auto polyhedral = [&](Flavor flavor) {
    if (!oracle_fits) return TriState::skipped(too_big_for_oracle);
    auto result = oracles.polytope(g, flavor, oracle_options);
    if (!result.integral && !r.fractional_vertex) {
      r.fractional_flavor = flavor;
      r.fractional_vertex = result.witness;
    }
    return TriState::of(result.integral);
  };

  std::optional<bool> has_odd_hole;
  auto odd_hole_free = [&]() {
    if (!has_odd_hole) {
      auto hole = find_odd_hole(g);
      has_odd_hole = hole.has_value();
      if (options.certificates) r.odd_hole = hole;
    }
    return !*has_odd_hole;
  };

  if (options.perfect) {
    r.perfect_structural = planar ? TriState::of(odd_hole_free())
                                  : TriState::skipped("not planar");
    r.perfect_polyhedral = polyhedral(Flavor::perfect);
  }
  if (options.t) {
    if (!r.is_triangulation)
      r.t_perfect_structural = TriState::skipped("not a plane triangulation");
    else if (!detector_fits)
      r.t_perfect_structural = TriState::skipped("too large for the loose odd wheel detector");
    else
      r.t_perfect_structural = TriState::of(is_t_perfect_structural(*triangulation));
    r.t_perfect_polyhedral = polyhedral(Flavor::t);
  }
  if (options.h) {
    r.h_perfect_structural = r.is_triangulation ? TriState::of(odd_hole_free())
                                                : TriState::skipped("not a plane triangulation");
    r.h_perfect_polyhedral = polyhedral(Flavor::h);
  }
  if (options.certificates) {
    if (detector_fits) r.loose_odd_wheel = find_induced_loose_odd_wheel(g, detector);
    odd_hole_free();
  }

  compare(r, "perfect", r.perfect_structural, r.perfect_polyhedral);
  compare(r, "t_perfect", r.t_perfect_structural, r.t_perfect_polyhedral);
  compare(r, "h_perfect", r.h_perfect_structural, r.h_perfect_polyhedral);
  return r;
}

namespace {

nlohmann::ordered_json tri_json(const TriState& t) {
  if (t.ran()) return *t.value;
  if (t.reason.empty()) return nullptr;
  return {{"skipped", t.reason}};
}

}  // namespace

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = {{"hash", r.hash}, {"graph6", r.graph6}, {"n", r.n}, {"m", r.m}};
  j["is_triangulation"] = r.is_triangulation;
  j["perfect"] = {{"structural", tri_json(r.perfect_structural)},
                  {"polyhedral", tri_json(r.perfect_polyhedral)}};
  j["t_perfect"] = {{"structural", tri_json(r.t_perfect_structural)},
                    {"polyhedral", tri_json(r.t_perfect_polyhedral)}};
  j["h_perfect"] = {{"structural", tri_json(r.h_perfect_structural)},
                    {"polyhedral", tri_json(r.h_perfect_polyhedral)}};
  nlohmann::ordered_json certs = nlohmann::ordered_json::object();
  if (r.loose_odd_wheel) {
    const auto c = to_json(*r.loose_odd_wheel);
    certs["loose_odd_wheel"] = nlohmann::ordered_json::parse(c.dump());
  }
  if (r.odd_hole) certs["odd_hole"] = r.odd_hole->vertices;
  if (r.fractional_vertex) {
    certs["fractional_vertex"] = {{"flavor", std::string(to_string(*r.fractional_flavor))},
                                  {"point", nlohmann::ordered_json::parse(
                                                to_json(*r.fractional_vertex).dump())}};
  }
  j["certificates"] = std::move(certs);
  j["mismatches"] = r.mismatches;
  return j;
}

}  // namespace tperfect
