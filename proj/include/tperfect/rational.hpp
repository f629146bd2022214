#ifndef TPERFECT_RATIONAL_HPP
#define TPERFECT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

namespace tperfect {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" decimal strings.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Numerator and denominator as decimal strings.
std::pair<std::string, std::string> to_string_pair(const Rational& r);

}  // namespace tperfect

#endif  // TPERFECT_RATIONAL_HPP
