#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace redinv {

/// Arbitrary-precision integer used everywhere in the library.
/// Expression templates are disabled so `auto` and generic code behave.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Division rounding toward negative infinity (cpp_int truncates).
inline Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Least nonnegative residue of a modulo |m| (m != 0).
inline Integer floorMod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline std::string toString(const Integer& a) { return a.str(); }

inline Integer parseInteger(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9')
      throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
  return Integer(std::string(text));
}

}  // namespace redinv
