#ifndef TPERFECT_SRC_LINEAR_ALGEBRA_HPP
#define TPERFECT_SRC_LINEAR_ALGEBRA_HPP

#include <vector>

#include "tperfect/polytope.hpp"

namespace tperfect::detail {

/// Fraction-free Gaussian elimination; the argument is consumed.
int integer_rank(std::vector<std::vector<Integer>> rows);

/// Row scaled by the lcm of its denominators into integers: (a, b).
struct IntegerRow {
  std::vector<Integer> coefficients;
  Integer rhs;
};
IntegerRow to_integer_row(const Row& row);

}  // namespace tperfect::detail

#endif  // TPERFECT_SRC_LINEAR_ALGEBRA_HPP
