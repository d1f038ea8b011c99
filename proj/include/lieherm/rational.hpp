#ifndef LIEHERM_RATIONAL_HPP
#define LIEHERM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "lieherm/errors.hpp"

namespace lieherm {

/// Exact rational scalar. Arbitrary precision, always held in lowest terms
/// with positive denominator. No floating point exists anywhere downstream.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rational& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace detail {
inline bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
} // namespace detail

/// Parses "p", "-p/q" or "p/q". The denominator must be a positive integer;
/// the result is canonicalized to lowest terms.
inline Rational rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!detail::is_integer_token(s))
      throw ParseError("bad rational literal: '" + s + "'");
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!detail::is_integer_token(num) || !detail::is_integer_token(den))
    throw ParseError("bad rational literal: '" + s + "'");
  const Integer d(den);
  if (d <= 0)
    throw ParseError("rational denominator must be positive: '" + s + "'");
  return Rational(Integer(num), d);
}

} // namespace lieherm

#endif
