#pragma once

// Exact integer and rational scalars used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <algorithm>
#include <limits>

#include "toricmon/errors.hpp"

namespace toricmon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational &q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational &q) {
  return boost::multiprecision::denominator(q);
}

/// The reduced fraction num/den; den != 0.
inline Rational ratio(const Integer &num, const Integer &den) {
  if (den == 0)
    throw invalid_argument("zero denominator");
  Rational q(num);
  q /= Rational(den);
  return q;
}

inline Integer abs(const Integer &v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(const Integer &a, const Integer &b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

inline int sign(const Integer &v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }
inline int sign(const Rational &v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

/// Floor of p/q for q != 0.
inline Integer floor_div(const Integer &p, const Integer &q) {
  Integer quot = p / q; // truncates toward zero
  if ((p % q != 0) && ((p < 0) != (q < 0)))
    --quot;
  return quot;
}

/// Ceiling of p/q for q != 0.
inline Integer ceil_div(const Integer &p, const Integer &q) {
  return -floor_div(-p, q);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (unsigned long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r = 1;
  for (unsigned long i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline bool is_integral(const Rational &q) { return denominator(q) == 1; }

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string to_string(const Rational &q) {
  if (is_integral(q))
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer &v) { return v.str(); }

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty())
    throw invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size())
    throw invalid_argument("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw invalid_argument("malformed integer literal '" + s + "'");
  if (s[0] == '+')
    s.erase(0, 1);
  return Integer(s);
}

/// Accepts "p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0)
    throw invalid_argument("zero denominator in '" + std::string(text) + "'");
  return ratio(num, den);
}

/// Exact power with a (possibly negative) integer exponent.
inline Rational pow(const Rational &base, const Integer &exponent) {
  if (exponent < 0) {
    if (base == 0)
      throw pole_error("zero raised to a negative power");
    return Rational(1) / pow(base, Integer(-exponent));
  }
  Rational result = 1, b = base;
  Integer e = exponent;
  while (e > 0) {
    if ((e & 1) != 0)
      result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

/// Narrowing to a machine integer for loop bounds and exponents of small size.
inline long to_long(const Integer &v) {
  if (v > std::numeric_limits<long>::max() ||
      v < std::numeric_limits<long>::min())
    throw unsupported_input("integer " + v.str() + " exceeds machine range");
  return v.convert_to<long>();
}

} // namespace toricmon
