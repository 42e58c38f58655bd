#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphon {

using Rational = boost::multiprecision::cpp_rational;

// Every finite double is a dyadic rational; this conversion is lossless.
Rational exact_from_double(double value);

// Accepts decimal ("0.25", "-1e-3") and fraction ("1/3") notation. Decimal
// literals are read exactly, so "0.1" becomes 1/10 rather than the double
// nearest to it.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);

inline double to_double(double value) { return value; }
inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

template <class T>
T from_double(double value);

template <>
inline double from_double<double>(double value) {
  return value;
}

template <>
inline Rational from_double<Rational>(double value) {
  return exact_from_double(value);
}

template <class T>
T abs_value(const T& value) {
  return value < T(0) ? T(-value) : value;
}

// 2^e as an exact value of type T (negative exponents allowed).
template <class T>
T pow2(int exponent);

template <>
inline double pow2<double>(int exponent) {
  return std::ldexp(1.0, exponent);
}

template <>
inline Rational pow2<Rational>(int exponent) {
  using boost::multiprecision::cpp_int;
  cpp_int one = 1;
  if (exponent >= 0) return Rational(cpp_int(one << exponent));
  return Rational(one, cpp_int(one << -exponent));
}

}  // namespace graphon
