#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "lieps/error.hpp"

namespace lieps {

// mpq_class keeps every value canonical (lowest terms, positive denominator)
// after each arithmetic operation.
using Rational = mpq_class;

inline std::string to_string(const Rational &q) { return q.get_str(); }

/// Parses `[+-]digits[/digits]`. The denominator must be positive.
inline Rational parse_rational(std::string_view s) {
  auto fail = [&] { throw Error(ErrorKind::Parse, "invalid rational '" + std::string(s) + "'"); };
  std::size_t i = 0;
  std::string num;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') num.push_back('-');
    ++i;
  }
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num.push_back(s[i++]);
  if (i == start) fail();
  std::string den = "1";
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    std::size_t dstart = i;
    den.clear();
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den.push_back(s[i++]);
    if (i == dstart || i != s.size()) fail();
    if (den.find_first_not_of('0') == std::string::npos)
      throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(s) + "'");
  }
  Rational q(mpz_class(num, 10), mpz_class(den, 10));
  q.canonicalize();
  return q;
}

} // namespace lieps
