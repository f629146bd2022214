#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "linear_algebra.hpp"
#include "tperfect/polytope.hpp"

namespace tperfect {

namespace detail {

int integer_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  Integer previous_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    // Bareiss step keeps entries integral and bounded by minors.
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        rows[r][c] = rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c];
        mpz_divexact(rows[r][c].get_mpz_t(), rows[r][c].get_mpz_t(), previous_pivot.get_mpz_t());
      }
      rows[r][col] = 0;
    }
    previous_pivot = rows[rank][col];
    ++rank;
  }
  return rank;
}

IntegerRow to_integer_row(const Row& row) {
  Integer scale = row.rhs.get_den();
  for (const auto& a : row.coefficients) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.get_den_mpz_t());
  IntegerRow out;
  out.coefficients.reserve(row.coefficients.size());
  for (const auto& a : row.coefficients) out.coefficients.push_back(Integer(a * scale));
  out.rhs = Integer(row.rhs * scale);
  return out;
}

}  // namespace detail

namespace {

/// Set of constraint indices at which a ray is tight.
class Bits {
public:
  explicit Bits(std::size_t capacity = 0) : words_((capacity + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  Bits operator&(const Bits& other) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }
  bool subset_of(const Bits& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  std::vector<Integer> coords;  // (x_0 .. x_{n-1}, t)
  Bits tight;
};

void normalize(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& a : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g > 1)
    for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

/// x_v >= 0 as a row: a single negative coefficient at v and rhs 0.
int nonnegativity_coordinate(const detail::IntegerRow& row) {
  if (row.rhs != 0) return -1;
  int coord = -1;
  for (std::size_t i = 0; i < row.coefficients.size(); ++i) {
    if (row.coefficients[i] == 0) continue;
    if (coord != -1 || row.coefficients[i] > 0) return -1;
    coord = static_cast<int>(i);
  }
  return coord;
}

}  // namespace

VertexList enumerate_vertices(const LinearSystem& system) {
  const int n = system.dimension;
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  for (const auto& row : system.rows)
    if (static_cast<int>(row.coefficients.size()) != n)
      throw std::invalid_argument("row width does not match system dimension");

  const LinearSystem pruned = remove_redundant_rows(system);

  // Homogenized constraints h . (x, t) <= 0 with h = (a, -b).
  std::vector<bool> has_nonnegativity(n, false);
  std::vector<std::vector<Integer>> pending;
  for (const auto& row : pruned.rows) {
    auto ir = detail::to_integer_row(row);
    if (int v = nonnegativity_coordinate(ir); v >= 0) {
      has_nonnegativity[v] = true;
      continue;
    }
    auto h = std::move(ir.coefficients);
    h.push_back(-ir.rhs);
    pending.push_back(std::move(h));
  }
  for (int v = 0; v < n; ++v)
    if (!has_nonnegativity[v])
      throw std::invalid_argument("double description needs x_" + std::to_string(v) + " >= 0");

  // Constraint indices: 0..n-1 are x_v >= 0, n is t >= 0, then pending rows.
  const std::size_t capacity = d + pending.size();
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < d; ++i) {
    Ray r{std::vector<Integer>(d, 0), Bits(capacity)};
    r.coords[i] = 1;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) r.tight.set(j);
    rays.push_back(std::move(r));
  }

  for (std::size_t k = 0; k < pending.size(); ++k) {
    const auto& h = pending[k];
    const std::size_t index = d + k;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> positive, negative;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (h[j] != 0 && rays[i].coords[j] != 0) s += h[j] * rays[i].coords[j];
      if (s > 0) positive.push_back(i);
      else if (s < 0) negative.push_back(i);
      value[i] = std::move(s);
    }

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] > 0) continue;
      Ray r = rays[i];
      if (value[i] == 0) r.tight.set(index);
      next.push_back(std::move(r));
    }
    if (positive.empty()) {
      rays = std::move(next);
      continue;
    }

    // Adjacent (positive, negative) pairs span a new extreme ray on the
    // hyperplane. Adjacency is combinatorial: the common tight set has
    // at least d-2 members and no third ray is tight on all of it.
    for (std::size_t p : positive)
      for (std::size_t q : negative) {
        Bits common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.subset_of(rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        Ray fresh{std::vector<Integer>(d), std::move(common)};
        const Integer wp = -value[q];
        const Integer& wq = value[p];
        for (std::size_t j = 0; j < d; ++j)
          fresh.coords[j] = wp * rays[p].coords[j] + wq * rays[q].coords[j];
        normalize(fresh.coords);
        fresh.tight.set(index);
        next.push_back(std::move(fresh));
      }
    rays = std::move(next);
  }

  VertexList out;
  out.dimension = n;
  bool recession = false;
  for (const auto& r : rays) {
    if (r.coords[n] == 0) {
      recession = true;
      continue;
    }
    Point x(n);
    for (int j = 0; j < n; ++j) {
      x[j] = Rational(r.coords[j], r.coords[n]);
      x[j].canonicalize();
    }
    out.points.push_back(std::move(x));
  }
  if (recession && !out.points.empty())
    throw UnboundedSystem("polyhedron has a recession direction; it is not a polytope");
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());

  for (const auto& x : out.points)
    if (!satisfies(system, x) || tight_rank(system, x) != n)
      throw std::logic_error("double description produced a point that is not a vertex");
  return out;
}

}  // namespace tperfect
