#pragma once

// Text form of bivectors on g/h, written against the complement labels:
//   "(e1-e2)^e3", "e1^e2 + 1/2*u1^w", "-2 (u1+v1)^w"
// or as ∧² coordinates in lexicographic pair order: "[1, 0, -1/2]".

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lieps/poisson.hpp"

namespace lieps {

namespace detail {

class BivectorParser {
public:
  BivectorParser(std::string_view text, const std::vector<std::string> &labels) : s_(text), labels_(labels) {}

  Vec parse() {
    const std::size_t m = labels_.size();
    skip();
    if (peek() == '[') return coordinate_list();
    Vec acc = zero_vec(wedge2_dim(m));
    bool first = true;
    while (true) {
      skip();
      if (at_end()) {
        if (first) fail("empty bivector");
        break;
      }
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      Rational c = sign * coefficient();
      skip();
      if (c == 0 && at_end_or_sign()) continue; // a bare "0"
      const Vec x = factor();
      skip();
      if (peek() != '^') fail("expected '^'");
      ++pos_;
      const Vec y = factor();
      acc = acc + c * wedge(x, y);
    }
    return acc;
  }

private:
  std::string_view s_;
  const std::vector<std::string> &labels_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw Error(ErrorKind::Parse, "bivector at position " + std::to_string(pos_) + ": " + msg);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end_or_sign() const { return at_end() || peek() == '+' || peek() == '-'; }

  /// Optional rational coefficient with optional '*'; defaults to 1.
  Rational coefficient() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return 1;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    Rational c = parse_rational(s_.substr(start, pos_ - start));
    skip();
    if (peek() == '*') ++pos_;
    return c;
  }

  Vec label_vector() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected a basis label");
    const std::string name(s_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name) return unit_vec(labels_.size(), i);
    pos_ = start;
    fail("unknown label '" + name + "'");
  }

  /// label | '(' [sign] [coef] label {('+'|'-') [coef] label} ')'
  Vec factor() {
    skip();
    if (peek() != '(') return label_vector();
    ++pos_;
    Vec acc = zero_vec(labels_.size());
    bool first = true;
    while (true) {
      skip();
      if (peek() == ')') {
        if (first) fail("empty parentheses");
        ++pos_;
        return acc;
      }
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+', '-' or ')'");
      }
      first = false;
      skip();
      Rational c = sign * coefficient();
      skip();
      acc = acc + c * label_vector();
    }
  }

  Vec coordinate_list() {
    ++pos_;
    Vec out;
    while (true) {
      skip();
      const std::size_t start = pos_;
      while (!at_end() && peek() != ',' && peek() != ']' && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected a rational");
      out.push_back(parse_rational(s_.substr(start, pos_ - start)));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    skip();
    if (!at_end()) fail("trailing characters");
    if (out.size() != wedge2_dim(labels_.size()))
      fail("expected " + std::to_string(wedge2_dim(labels_.size())) + " coordinates");
    return out;
  }
};

} // namespace detail

inline Bivector parse_bivector(std::string_view text, const std::vector<std::string> &labels) {
  return Bivector::from_wedge2(detail::BivectorParser(text, labels).parse(), labels.size());
}

/// "e1^e2 - 1/2*e1^e3"; "0" for the zero bivector.
inline std::string format_bivector(const Vec &coords, const std::vector<std::string> &labels) {
  const std::size_t m = labels.size();
  std::string out;
  for (const auto &[i, j] : wedge2_pairs(m)) {
    const Rational &c = coords[wedge2_index(m, i, j)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += labels[i] + "^" + labels[j];
  }
  return out.empty() ? "0" : out;
}

inline std::string format_bivector(const Bivector &r, const std::vector<std::string> &labels) {
  return format_bivector(r.coords(), labels);
}

/// "2*e1 - e4"
inline std::string format_vector(const Vec &v, const std::vector<std::string> &labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational a = abs(v[i]);
    if (out.empty())
      out += sgn(v[i]) < 0 ? "-" : "";
    else
      out += sgn(v[i]) < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

} // namespace lieps
