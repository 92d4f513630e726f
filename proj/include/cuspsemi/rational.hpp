#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace cuspsemi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt floor(const Rational& q) {
  const BigInt& n = numerator(q);
  const BigInt& d = denominator(q);  // always positive
  BigInt r = n / d;
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// -1, 0 or 1.
inline int sign(const Rational& q) { return q.sign(); }

}  // namespace cuspsemi
