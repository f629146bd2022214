#ifndef TPERFECT_POLYTOPE_HPP
#define TPERFECT_POLYTOPE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tperfect/graph.hpp"
#include "tperfect/rational.hpp"

namespace tperfect {

// Relaxations of the stable set polytope over R^V:
//   nonnegativity  x_v >= 0                       (stored as -x_v <= 0)
//   edge           x_u + x_v <= 1                 for uv in E
//   clique         sum_{v in K} x_v <= 1          for maximal cliques K
//   odd cycle      sum_{v in C} x_v <= (|C|-1)/2  for induced odd cycles C
//
// perfect = nonnegativity + clique
// h       = nonnegativity + clique + odd cycle
// t       = nonnegativity + edge + odd cycle (plus x_v <= 1 for isolated v)
enum class Flavor { perfect, h, t };
enum class RowKind { nonnegativity, edge, clique, odd_cycle };

std::string_view to_string(Flavor f);
std::string_view to_string(RowKind k);
Flavor parse_flavor(std::string_view name);

using Point = std::vector<Rational>;

/// coefficients . x <= rhs
struct Row {
  std::vector<Rational> coefficients;
  Rational rhs;
  RowKind kind;
};

struct LinearSystem {
  int dimension = 0;
  std::vector<Row> rows;
};

struct VertexList {
  int dimension = 0;
  std::vector<Point> points;  // sorted lexicographically
};

class UnboundedSystem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class OracleSizeExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

LinearSystem build_system(const Graph& g, Flavor flavor);

/// Drops every non-nonnegativity row a.x <= b for which another kept row
/// a'.x <= b' has a <= a' componentwise and b' <= b (so the dropped row is
/// the kept row plus nonnegative multiples of x >= 0), then orders the rest
/// by kind and lexicographic coefficients. The polytope is unchanged.
LinearSystem remove_redundant_rows(const LinearSystem& system);

/// Exact vertex enumeration by incremental double description over the
/// homogenized cone {(x, t) : a.x <= b t, t >= 0}, starting from the
/// nonnegative orthant. Requires x_v >= 0 for every coordinate.
/// Each reported point is checked feasible with n independent tight rows.
/// Throws UnboundedSystem when the polytope has a recession direction.
VertexList enumerate_vertices(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const Point& x);

/// Rank of the rows tight at x.
int tight_rank(const LinearSystem& system, const Point& x);

struct IntegralityVerdict {
  bool integral = true;
  std::optional<Point> witness;  // first fractional vertex
};

IntegralityVerdict is_integral(const VertexList& vertices);

struct OracleOptions {
  int max_vertices = 14;
};

struct OracleResult {
  bool integral = true;
  std::optional<Point> witness;
  std::size_t row_count = 0;
  std::size_t vertex_count = 0;
};

/// Integrality of the flavor's polytope. Throws OracleSizeExceeded above
/// the configured bound.
OracleResult polytope_oracle(const Graph& g, Flavor flavor, const OracleOptions& options = {});

inline bool is_perfect_oracle(const Graph& g, const OracleOptions& o = {}) {
  return polytope_oracle(g, Flavor::perfect, o).integral;
}
inline bool is_h_perfect_oracle(const Graph& g, const OracleOptions& o = {}) {
  return polytope_oracle(g, Flavor::h, o).integral;
}
inline bool is_t_perfect_oracle(const Graph& g, const OracleOptions& o = {}) {
  return polytope_oracle(g, Flavor::t, o).integral;
}

struct CrossCheckResult {
  bool ok = true;
  std::optional<std::vector<long>> witness_objective;
  Rational lp_max;
  Rational stable_max;
};

/// For `trials` seeded objectives c in {-2..3}^n, compares max c.x over the
/// enumerated vertices with the maximum-weight stable set. A gap means the
/// polytope is not integral (or the vertex enumeration is wrong).
CrossCheckResult lp_cross_check(const Graph& g, Flavor flavor, int trials, std::uint64_t seed,
                                const OracleOptions& options = {});

/// Same comparison for one explicit objective.
CrossCheckResult lp_compare(const Graph& g, const VertexList& vertices,
                            const std::vector<long>& objective);

nlohmann::json to_json(const Rational& r);  // ["num", "den"]
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const LinearSystem& system);
nlohmann::json to_json(const VertexList& vertices);

}  // namespace tperfect

#endif  // TPERFECT_POLYTOPE_HPP
