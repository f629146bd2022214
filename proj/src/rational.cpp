#include "tperfect/rational.hpp"

#include <stdexcept>

namespace tperfect {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::pair<std::string, std::string> to_string_pair(const Rational& r) {
  return {r.get_num().get_str(10), r.get_den().get_str(10)};
}

}  // namespace tperfect
