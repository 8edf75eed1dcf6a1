#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sunisb/errors.hpp"

namespace sunisb {

using Integer = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  // the two-argument constructor rejects negative denominators
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline Rational make_rational(long long num, long long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// "p/q" or "p" for integers.
inline std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Integer parse_integer(const std::string& s) {
  if (s.empty()) throw parse_error("empty integer string");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw parse_error("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw parse_error("malformed integer '" + s + "'");
  const Integer magnitude(s.substr(start));
  return s[0] == '-' ? Integer(-magnitude) : magnitude;
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + s + "'");
  return make_rational(parse_integer(s.substr(0, slash)), den);
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace sunisb
