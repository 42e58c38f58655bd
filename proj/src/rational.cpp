#include "graphon/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

#include "graphon/errors.hpp"

namespace graphon {

using boost::multiprecision::cpp_int;

Rational exact_from_double(double value) {
  if (!std::isfinite(value))
    throw DomainError("cannot convert non-finite value to a rational");
  if (value == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an integer for every double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  return Rational(cpp_int(scaled)) * pow2<Rational>(exponent - 53);
}

namespace {

cpp_int parse_integer(std::string_view digits) {
  cpp_int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ValidationError("invalid digit in number '" + std::string(digits) +
                            "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty()) throw ValidationError("empty exponent");
    exponent = parse_integer(exp_text).convert_to<long>();
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    exponent -= static_cast<long>(text.size() - dot - 1);
  } else {
    digits = std::string(text);
  }
  if (digits.empty()) throw ValidationError("empty number");
  Rational value(parse_integer(digits));
  cpp_int ten_power = 1;
  for (long i = 0; i < std::labs(exponent); ++i) ten_power *= 10;
  value = exponent >= 0 ? value * Rational(ten_power) : value / Rational(ten_power);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ValidationError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(text.substr(0, slash));
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace graphon
