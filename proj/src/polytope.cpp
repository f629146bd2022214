#include "tperfect/polytope.hpp"

#include <algorithm>
#include <string>

#include "linear_algebra.hpp"
#include "tperfect/rng.hpp"

namespace tperfect {

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::perfect: return "perfect";
    case Flavor::h: return "h";
    case Flavor::t: return "t";
  }
  return "?";
}

std::string_view to_string(RowKind k) {
  switch (k) {
    case RowKind::nonnegativity: return "nonnegativity";
    case RowKind::edge: return "edge";
    case RowKind::clique: return "clique";
    case RowKind::odd_cycle: return "odd_cycle";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  if (name == "perfect" || name == "p") return Flavor::perfect;
  if (name == "h") return Flavor::h;
  if (name == "t") return Flavor::t;
  throw std::invalid_argument("unknown flavor '" + std::string(name) + "'");
}

namespace {

Row indicator_row(int n, std::span<const Vertex> support, Rational rhs, RowKind kind) {
  Row row{std::vector<Rational>(n, Rational(0)), std::move(rhs), kind};
  for (Vertex v : support) row.coefficients[v] = 1;
  return row;
}

}  // namespace

LinearSystem build_system(const Graph& g, Flavor flavor) {
  const int n = g.vertex_count();
  LinearSystem system{n, {}};
  for (Vertex v = 0; v < n; ++v) {
    Row row{std::vector<Rational>(n, Rational(0)), Rational(0), RowKind::nonnegativity};
    row.coefficients[v] = -1;
    system.rows.push_back(std::move(row));
  }
  if (flavor == Flavor::t) {
    for (auto [u, v] : g.edges()) {
      const Vertex pair[] = {u, v};
      system.rows.push_back(indicator_row(n, pair, Rational(1), RowKind::edge));
    }
    // Edge rows leave isolated vertices unbounded; their singleton cliques
    // cap them at 1.
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == 0) {
        const Vertex single[] = {v};
        system.rows.push_back(indicator_row(n, single, Rational(1), RowKind::clique));
      }
  } else {
    for (const auto& k : enumerate_maximal_cliques(g))
      system.rows.push_back(indicator_row(n, k, Rational(1), RowKind::clique));
  }
  if (flavor != Flavor::perfect)
    for (const auto& c : enumerate_induced_odd_cycles(g))
      system.rows.push_back(indicator_row(
          n, c.vertices, Rational(static_cast<long>((c.length() - 1) / 2)), RowKind::odd_cycle));
  return system;
}

LinearSystem remove_redundant_rows(const LinearSystem& system) {
  std::vector<Row> rows = system.rows;
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.coefficients < b.coefficients;
  });
  const std::size_t count = rows.size();
  std::vector<char> dropped(count, 0);
  auto dominated_by = [](const Row& weak, const Row& strong) {
    if (strong.rhs > weak.rhs) return false;
    for (std::size_t j = 0; j < weak.coefficients.size(); ++j)
      if (weak.coefficients[j] > strong.coefficients[j]) return false;
    return true;
  };
  for (std::size_t i = 0; i < count; ++i) {
    if (rows[i].kind == RowKind::nonnegativity) continue;
    for (std::size_t j = 0; j < count && !dropped[i]; ++j) {
      if (i == j || dropped[j] || rows[j].kind == RowKind::nonnegativity) continue;
      if (!dominated_by(rows[i], rows[j])) continue;
      // Mutual domination means equal rows: keep the earlier one.
      if (dominated_by(rows[j], rows[i]) && j > i) continue;
      dropped[i] = 1;
    }
  }
  LinearSystem out{system.dimension, {}};
  for (std::size_t i = 0; i < count; ++i)
    if (!dropped[i]) out.rows.push_back(std::move(rows[i]));
  return out;
}

namespace {

Rational row_value(const Row& row, const Point& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (row.coefficients[j] != 0) s += row.coefficients[j] * x[j];
  return s;
}

}  // namespace

bool satisfies(const LinearSystem& system, const Point& x) {
  if (static_cast<int>(x.size()) != system.dimension) return false;
  return std::all_of(system.rows.begin(), system.rows.end(),
                     [&](const Row& row) { return row_value(row, x) <= row.rhs; });
}

int tight_rank(const LinearSystem& system, const Point& x) {
  std::vector<std::vector<Integer>> tight;
  for (const auto& row : system.rows)
    if (row_value(row, x) == row.rhs) tight.push_back(detail::to_integer_row(row).coefficients);
  if (system.dimension == 0) return 0;
  return detail::integer_rank(std::move(tight));
}

IntegralityVerdict is_integral(const VertexList& vertices) {
  for (const auto& p : vertices.points)
    if (!std::all_of(p.begin(), p.end(), [](const Rational& r) { return is_integer(r); }))
      return {false, p};
  return {true, std::nullopt};
}

OracleResult polytope_oracle(const Graph& g, Flavor flavor, const OracleOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw OracleSizeExceeded("polytope oracle bound is " + std::to_string(options.max_vertices) +
                             " vertices, graph has " + std::to_string(g.vertex_count()));
  const auto system = build_system(g, flavor);
  const auto vertices = enumerate_vertices(system);
  auto verdict = is_integral(vertices);
  return {verdict.integral, std::move(verdict.witness), system.rows.size(), vertices.points.size()};
}

CrossCheckResult lp_compare(const Graph& g, const VertexList& vertices,
                            const std::vector<long>& objective) {
  const int n = g.vertex_count();
  std::vector<Rational> weights(n);
  for (int v = 0; v < n; ++v) weights[v] = objective[v];
  CrossCheckResult result;
  bool first = true;
  for (const auto& p : vertices.points) {
    Rational value = 0;
    for (int v = 0; v < n; ++v) value += weights[v] * p[v];
    if (first || value > result.lp_max) result.lp_max = value;
    first = false;
  }
  result.stable_max = max_stable_set_weight(g, weights).weight;
  result.ok = result.lp_max == result.stable_max;
  if (!result.ok) result.witness_objective = objective;
  return result;
}

CrossCheckResult lp_cross_check(const Graph& g, Flavor flavor, int trials, std::uint64_t seed,
                                const OracleOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw OracleSizeExceeded("polytope oracle bound is " + std::to_string(options.max_vertices) +
                             " vertices, graph has " + std::to_string(g.vertex_count()));
  const auto vertices = enumerate_vertices(build_system(g, flavor));
  Rng rng(seed);
  CrossCheckResult last;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<long> objective(g.vertex_count());
    for (auto& c : objective) c = rng.between(-2, 3);
    last = lp_compare(g, vertices, objective);
    if (!last.ok) return last;
  }
  return last;
}

nlohmann::json to_json(const Rational& r) {
  auto [num, den] = to_string_pair(r);
  return nlohmann::json::array({num, den});
}

nlohmann::json to_json(const Point& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : p) out.push_back(to_json(r));
  return out;
}

nlohmann::json to_json(const LinearSystem& system) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : system.rows)
    rows.push_back({{"kind", to_string(row.kind)},
                    {"coefficients", to_json(row.coefficients)},
                    {"rhs", to_json(row.rhs)}});
  return {{"dimension", system.dimension}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const VertexList& vertices) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : vertices.points) points.push_back(to_json(p));
  return {{"dimension", vertices.dimension}, {"vertices", std::move(points)}};
}

}  // namespace tperfect
