#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

// Exact rational scalars. Everything downstream (normal forms, Gaussian
// elimination, witness checks) relies on arithmetic being exact; there is no
// floating point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "-? digits (/ digits)?". The denominator must be positive.
inline Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) fail(ErrorKind::SyntaxError, "expected digits in rational '" + text + "'");
  Integer num(text.substr(digits_start, pos - digits_start));
  Integer den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') fail(ErrorKind::SyntaxError, "unexpected character in rational '" + text + "'");
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size())
      fail(ErrorKind::SyntaxError, "malformed denominator in rational '" + text + "'");
    den = Integer(text.substr(den_start));
    if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator in rational '" + text + "'");
  }
  Rational value(num, den);
  if (negative) value = -value;
  return value;
}

}  // namespace lpa
