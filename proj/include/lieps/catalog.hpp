#pragma once

// Builtin examples and the JSON algebra document.
//
// Document layout:
//   { "name": str, "dim": n, "basis": [labels],
//     "brackets": [ {"i": 0, "j": 2, "coeffs": {"0": "1"}} ],     // i < j
//     "subalgebra": [[...]], "complement": [[...]], "complement_labels": [...],
//     "ad_generators": [ [[...], ...] ] }
// Rationals are written as strings "p" or "p/q"; integers are also accepted on input.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieps/isotropy.hpp"

namespace lieps {

struct AlgebraDocument {
  std::string name;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::vector<Vec> subalgebra;
  std::optional<std::vector<Vec>> complement;
  std::optional<std::vector<std::string>> complement_labels;
  std::vector<Mat> ad_generators;

  std::size_t dim() const noexcept { return basis.size(); }
  LieAlgebra algebra() const { return LieAlgebra::from_brackets(basis, brackets); }
  HomogeneousSpace space() const {
    return make_space(algebra(), subalgebra, ad_generators, complement, complement_labels);
  }
};

inline bool operator==(const BracketEntry &a, const BracketEntry &b) {
  return a.i == b.i && a.j == b.j && a.coeffs == b.coeffs;
}

inline bool operator==(const AlgebraDocument &a, const AlgebraDocument &b) {
  return a.name == b.name && a.basis == b.basis && a.brackets == b.brackets && a.subalgebra == b.subalgebra &&
         a.complement == b.complement && a.complement_labels == b.complement_labels &&
         a.ad_generators == b.ad_generators;
}

/// Canonical document for a space: brackets listed sparsely in (i, j, k) order.
inline AlgebraDocument make_document(std::string name, const LieAlgebra &L, std::vector<Vec> subalgebra = {},
                                     std::optional<std::vector<Vec>> complement = std::nullopt,
                                     std::optional<std::vector<std::string>> complement_labels = std::nullopt,
                                     std::vector<Mat> generators = {}) {
  AlgebraDocument d;
  d.name = std::move(name);
  d.basis = L.labels();
  d.brackets = L.brackets();
  d.subalgebra = std::move(subalgebra);
  d.complement = std::move(complement);
  d.complement_labels = std::move(complement_labels);
  d.ad_generators = std::move(generators);
  return d;
}

// ---------------------------------------------------------------------------
// JSON

using json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string &path, const std::string &msg) {
  throw Error(ErrorKind::Parse, "at " + path + ": " + msg);
}

inline Rational rational_from_json(const json &j, const std::string &path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error &e) {
      parse_fail(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()), 10);
  parse_fail(path, "expected a rational string");
}

inline std::size_t index_from_json(const json &j, const std::string &path, std::size_t bound) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_fail(path, "expected a non-negative integer");
  const auto v = j.get<unsigned long long>();
  if (v >= bound) parse_fail(path, "index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

inline std::size_t index_from_key(const std::string &key, const std::string &path, std::size_t bound) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(path, "coefficient key '" + key + "' is not an index");
  const auto v = std::stoull(key);
  if (v >= bound) parse_fail(path, "index " + key + " out of range");
  return static_cast<std::size_t>(v);
}

inline Vec vector_from_json(const json &j, const std::string &path, std::size_t n) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  if (j.size() != n) parse_fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::vector<Vec> vectors_from_json(const json &j, const std::string &path, std::size_t n) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vector_from_json(j[i], path + "[" + std::to_string(i) + "]", n));
  return out;
}

inline std::vector<std::string> labels_from_json(const json &j, const std::string &path) {
  if (!j.is_array()) parse_fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) parse_fail(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

inline json vec_to_json(const Vec &v) {
  json a = json::array();
  for (const auto &x : v) a.push_back(to_string(x));
  return a;
}

inline json mat_to_json(const Mat &m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
  return a;
}

} // namespace detail

inline json to_json(const AlgebraDocument &d) {
  json j;
  j["name"] = d.name;
  j["dim"] = d.dim();
  j["basis"] = d.basis;
  json br = json::array();
  for (const auto &b : d.brackets) {
    json e;
    e["i"] = b.i;
    e["j"] = b.j;
    json c = json::object();
    for (const auto &[k, v] : b.coeffs) c[std::to_string(k)] = to_string(v);
    e["coeffs"] = c;
    br.push_back(e);
  }
  j["brackets"] = br;
  json sub = json::array();
  for (const auto &v : d.subalgebra) sub.push_back(detail::vec_to_json(v));
  j["subalgebra"] = sub;
  if (d.complement) {
    json c = json::array();
    for (const auto &v : *d.complement) c.push_back(detail::vec_to_json(v));
    j["complement"] = c;
  }
  if (d.complement_labels) j["complement_labels"] = *d.complement_labels;
  json gens = json::array();
  for (const auto &A : d.ad_generators) gens.push_back(detail::mat_to_json(A));
  j["ad_generators"] = gens;
  return j;
}

inline AlgebraDocument from_json(const json &j) {
  using detail::parse_fail;
  if (!j.is_object()) parse_fail("$", "expected an object");
  AlgebraDocument d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_fail("name", "expected a string");
    d.name = j["name"].get<std::string>();
  }
  if (!j.contains("basis")) parse_fail("basis", "missing field");
  d.basis = detail::labels_from_json(j["basis"], "basis");
  const std::size_t n = d.basis.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (d.basis[a] == d.basis[b]) parse_fail("basis[" + std::to_string(b) + "]", "duplicate label '" + d.basis[b] + "'");
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() != static_cast<long long>(n))
      parse_fail("dim", "does not match the number of basis labels");
  }
  if (j.contains("brackets")) {
    const json &br = j["brackets"];
    if (!br.is_array()) parse_fail("brackets", "expected an array");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t t = 0; t < br.size(); ++t) {
      const std::string path = "brackets[" + std::to_string(t) + "]";
      const json &e = br[t];
      if (!e.is_object()) parse_fail(path, "expected an object");
      if (!e.contains("i")) parse_fail(path + ".i", "missing field");
      if (!e.contains("j")) parse_fail(path + ".j", "missing field");
      BracketEntry be;
      be.i = detail::index_from_json(e["i"], path + ".i", n);
      be.j = detail::index_from_json(e["j"], path + ".j", n);
      if (be.i >= be.j) parse_fail(path, "entries must have i < j");
      if (seen.count({be.i, be.j})) parse_fail(path, "duplicate entry for this pair");
      seen[{be.i, be.j}] = t;
      if (!e.contains("coeffs") || !e["coeffs"].is_object()) parse_fail(path + ".coeffs", "expected an object");
      std::map<std::size_t, Rational> coeffs;
      for (const auto &[key, val] : e["coeffs"].items()) {
        const std::string cpath = path + ".coeffs." + key;
        const std::size_t k = detail::index_from_key(key, cpath, n);
        Rational v = detail::rational_from_json(val, cpath);
        if (sgn(v) != 0) coeffs[k] = v;
      }
      for (const auto &[k, v] : coeffs) be.coeffs.emplace_back(k, v);
      if (!be.coeffs.empty()) d.brackets.push_back(std::move(be));
    }
    std::sort(d.brackets.begin(), d.brackets.end(),
              [](const BracketEntry &a, const BracketEntry &b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  }
  if (j.contains("subalgebra")) d.subalgebra = detail::vectors_from_json(j["subalgebra"], "subalgebra", n);
  if (j.contains("complement")) d.complement = detail::vectors_from_json(j["complement"], "complement", n);
  if (j.contains("complement_labels"))
    d.complement_labels = detail::labels_from_json(j["complement_labels"], "complement_labels");
  if (j.contains("ad_generators")) {
    const json &g = j["ad_generators"];
    if (!g.is_array()) parse_fail("ad_generators", "expected an array");
    for (std::size_t t = 0; t < g.size(); ++t) {
      const std::string path = "ad_generators[" + std::to_string(t) + "]";
      auto rows = detail::vectors_from_json(g[t], path, n);
      if (rows.size() != n) parse_fail(path, "expected " + std::to_string(n) + " rows");
      d.ad_generators.push_back(Mat::from_rows(rows, n));
    }
  }
  return d;
}

/// Parses document text; syntax errors report line and column.
inline AlgebraDocument parse_document(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
  return from_json(j);
}

inline std::string emit_document(const AlgebraDocument &d) { return to_json(d).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Builtins

/// Ad_g X = g X g^{-1} expressed in the coordinates of `basis`.
inline Mat conjugation_matrix(const std::vector<Mat> &basis, const Mat &g) {
  const std::size_t n = basis.size();
  const auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorKind::InvalidParams, "group element is not invertible");
  Mat columns(basis[0].rows() * basis[0].cols(), n);
  for (std::size_t i = 0; i < n; ++i) columns.set_col(i, flatten(basis[i]));
  Mat A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    A.set_col(i, solve_or_throw(columns, flatten(g * basis[i] * *ginv), "conjugate leaves the span"));
  return A;
}

inline AlgebraDocument builtin_abelian(std::size_t n) {
  return make_document("abelian(" + std::to_string(n) + ")", LieAlgebra::abelian(n));
}

/// h_{2n+1} as (n+2)x(n+2) upper triangular matrices, with the lattice generators
/// γ(e_i,0,0), γ(0,e_i,0) and γ(0,0,1).
inline AlgebraDocument builtin_heisenberg(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidParams, "heisenberg needs n >= 1");
  const std::size_t N = n + 2;
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(elementary(N, 0, 1 + i));
    labels.push_back("u" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(elementary(N, 1 + i, N - 1));
    labels.push_back("v" + std::to_string(i + 1));
  }
  basis.push_back(elementary(N, 0, N - 1));
  labels.push_back("w");
  const LieAlgebra L = matrix_lie_algebra(labels, basis);
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(conjugation_matrix(basis, Mat::identity(N) + elementary(N, 0, 1 + i)));
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(conjugation_matrix(basis, Mat::identity(N) + elementary(N, 1 + i, N - 1)));
  gens.push_back(conjugation_matrix(basis, Mat::identity(N) + elementary(N, 0, N - 1)));
  return make_document("heisenberg(" + std::to_string(n) + ")", L, {}, std::nullopt, std::nullopt, std::move(gens));
}

/// The Poincaré algebra of the Lorentz plane with the lattice generator γ (translation by 1).
inline AlgebraDocument builtin_iso11() {
  Mat e1(3, 3), e2(3, 3), e3(3, 3);
  e1(0, 2) = 1;
  e1(1, 2) = -1;
  e2(0, 2) = 1;
  e2(1, 2) = 1;
  e3(0, 1) = 1;
  e3(1, 0) = 1;
  const std::vector<Mat> basis{e1, e2, e3};
  const LieAlgebra L = matrix_lie_algebra({"e1", "e2", "e3"}, basis);
  Mat gamma = Mat::identity(3);
  gamma(0, 2) = 1;
  return make_document("iso11", L, {}, std::nullopt, std::nullopt, {conjugation_matrix(basis, gamma)});
}

/// gl_n with basis: symmetric units S_ij (i <= j, lexicographic), then skew units F_ij (i < j).
/// h = so_n, so the greedy complement is sym_n.
inline AlgebraDocument builtin_gl_sym(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "gl_sym needs n >= 2");
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      basis.push_back(i == j ? elementary(n, i, i) : elementary(n, i, j) + elementary(n, j, i));
      labels.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t sym = basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(elementary(n, i, j) - elementary(n, j, i));
      labels.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const LieAlgebra L = matrix_lie_algebra(labels, basis);
  std::vector<Vec> h;
  for (std::size_t t = sym; t < basis.size(); ++t) h.push_back(unit_vec(basis.size(), t));
  return make_document("gl_sym(" + std::to_string(n) + ")", L, std::move(h));
}

/// so_4 with basis e1=F13, e2=F23, e3=F14, e4=F24, F12, F34 and h = span{F12, F34}.
inline AlgebraDocument builtin_so4_grassmann() {
  auto F = [](std::size_t i, std::size_t j) { return elementary(4, i - 1, j - 1) - elementary(4, j - 1, i - 1); };
  const std::vector<Mat> basis{F(1, 3), F(2, 3), F(1, 4), F(2, 4), F(1, 2), F(3, 4)};
  const LieAlgebra L = matrix_lie_algebra({"e1", "e2", "e3", "e4", "F12", "F34"}, basis);
  return make_document("so4_grassmann", L, {unit_vec(6, 4), unit_vec(6, 5)});
}

/// g ⊕ g with the diagonal as isotropy and the anti-diagonal {(x, -x)} as complement.
inline AlgebraDocument builtin_double(const AlgebraDocument &base) {
  const LieAlgebra g = base.algebra();
  const std::size_t n = g.dim();
  std::vector<std::string> labels;
  for (const auto &l : g.labels()) labels.push_back(l + "_L");
  for (const auto &l : g.labels()) labels.push_back(l + "_R");
  std::vector<BracketEntry> br;
  for (const auto &b : g.brackets()) br.push_back(b);
  for (const auto &b : g.brackets()) {
    BracketEntry e{b.i + n, b.j + n, {}};
    for (const auto &[k, v] : b.coeffs) e.coeffs.emplace_back(k + n, v);
    br.push_back(std::move(e));
  }
  const LieAlgebra L = LieAlgebra::from_brackets(labels, br);
  std::vector<Vec> h, m;
  std::vector<std::string> mlabels;
  for (std::size_t i = 0; i < n; ++i) {
    Vec d = zero_vec(2 * n), a = zero_vec(2 * n);
    d[i] = d[i + n] = 1;
    a[i] = 1;
    a[i + n] = -1;
    h.push_back(d);
    m.push_back(a);
    mlabels.push_back("m_" + g.labels()[i]);
  }
  return make_document("double(" + base.name + ")", L, std::move(h), std::move(m), std::move(mlabels));
}

struct BuiltinParams {
  std::size_t n = 1;
  std::string of = "heisenberg"; ///< base for double
};

inline AlgebraDocument builtin(const std::string &name, const BuiltinParams &p = {}) {
  if (name == "abelian") return builtin_abelian(p.n);
  if (name == "heisenberg") return builtin_heisenberg(p.n);
  if (name == "iso11") return builtin_iso11();
  if (name == "gl_sym") return builtin_gl_sym(p.n);
  if (name == "so4_grassmann") return builtin_so4_grassmann();
  if (name == "double") {
    if (p.of == "double") throw Error(ErrorKind::InvalidParams, "double of double is not offered");
    return builtin_double(builtin(p.of, p));
  }
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin '" + name + "'");
}

inline std::vector<std::string> builtin_names() {
  return {"abelian", "heisenberg", "iso11", "gl_sym", "so4_grassmann", "double"};
}

} // namespace lieps
