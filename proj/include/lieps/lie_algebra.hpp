#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieps/linalg.hpp"

namespace lieps {

/// One nonzero bracket [e_i, e_j] = sum_k coeffs[k] e_k, given for i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, Rational>> coeffs;
};

/// A finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// The constructor does not enforce the axioms; call validate() for that.
class LieAlgebra {
public:
  LieAlgebra() = default;

  LieAlgebra(std::vector<std::string> labels, std::vector<Rational> constants)
      : labels_(std::move(labels)), c_(std::move(constants)) {
    const std::size_t n = labels_.size();
    if (c_.size() != n * n * n) throw Error(ErrorKind::DimensionMismatch, "structure constants must have n^3 entries");
  }

  /// Builds from sparse brackets on pairs i < j; antisymmetry is filled in.
  static LieAlgebra from_brackets(std::vector<std::string> labels, const std::vector<BracketEntry> &brackets) {
    const std::size_t n = labels.size();
    std::vector<Rational> c(n * n * n, Rational(0));
    for (const auto &b : brackets) {
      if (b.i >= n || b.j >= n) throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
      if (b.i >= b.j) throw Error(ErrorKind::InvalidParams, "bracket entries must have i < j");
      for (const auto &[k, v] : b.coeffs) {
        if (k >= n) throw Error(ErrorKind::DimensionMismatch, "bracket coefficient index out of range");
        c[(b.i * n + b.j) * n + k] += v;
        c[(b.j * n + b.i) * n + k] -= v;
      }
    }
    return LieAlgebra(std::move(labels), std::move(c));
  }

  static LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(std::move(labels), std::vector<Rational>(n * n * n, Rational(0)));
  }

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  const Rational &c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  const std::vector<Rational> &constants() const noexcept { return c_; }

  /// Sparse i < j listing, the inverse of from_brackets for antisymmetric tables.
  std::vector<BracketEntry> brackets() const {
    std::vector<BracketEntry> out;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        BracketEntry e{i, j, {}};
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(c(i, j, k)) != 0) e.coeffs.emplace_back(k, c(i, j, k));
        if (!e.coeffs.empty()) out.push_back(std::move(e));
      }
    return out;
  }

  Vec bracket(const Vec &x, const Vec &y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket: vector length");
    Vec z = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(y[j]) == 0) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(c(i, j, k)) != 0) z[k] += xy * c(i, j, k);
      }
    }
    return z;
  }

  /// Matrix of ad_x, so ad_matrix(x) * y == bracket(x, y).
  Mat ad_matrix(const Vec &x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "ad_matrix: vector length");
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) += x[i] * c(i, j, k);
    }
    return m;
  }

  /// ad*_x zeta := zeta o ad_x, i.e. <ad*_x zeta, y> = <zeta, [x, y]>.
  ///
  /// This is the sign under which the bracket on annihilator covectors
  /// reproduces the cyclic Schouten expression; see poisson.hpp.
  Vec ad_star(const Vec &x, const Vec &zeta) const { return ad_matrix(x).transpose() * zeta; }

  std::size_t index_of(const std::string &label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw Error(ErrorKind::Parse, "unknown basis label '" + label + "'");
  }

  friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) {
    return a.labels_ == b.labels_ && a.c_ == b.c_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

struct Violation {
  enum class Kind { Antisymmetry, Jacobi } kind;
  std::size_t i, j, k;
  /// Offending output component (antisymmetry: the k-index; Jacobi: the
  /// coordinate of the nonzero cyclic sum).
  std::size_t component;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Lists every antisymmetry violation and every basis triple i < j < k whose
/// Jacobi sum is nonzero.
inline ValidationReport validate(const LieAlgebra &L) {
  ValidationReport rep;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (L.c(i, j, k) != -L.c(j, i, k)) rep.violations.push_back({Violation::Kind::Antisymmetry, i, j, k, k});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec s = L.bracket(ei, L.bracket(ej, ek)) + L.bracket(ej, L.bracket(ek, ei)) +
                L.bracket(ek, L.bracket(ei, ej));
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(s[l]) != 0) {
            rep.violations.push_back({Violation::Kind::Jacobi, i, j, k, l});
            break;
          }
      }
  return rep;
}

inline Vec bracket(const LieAlgebra &L, const Vec &x, const Vec &y) { return L.bracket(x, y); }
inline Mat ad_matrix(const LieAlgebra &L, const Vec &x) { return L.ad_matrix(x); }

/// Matrix commutator.
inline Mat commutator(const Mat &a, const Mat &b) { return a * b - b * a; }

inline Vec flatten(const Mat &m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

/// Structure constants of the matrix Lie algebra spanned by `basis`
/// (commutator bracket). The span must be closed and the matrices independent.
inline LieAlgebra matrix_lie_algebra(std::vector<std::string> labels, const std::vector<Mat> &basis) {
  const std::size_t n = basis.size();
  if (labels.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix_lie_algebra: label count");
  if (n == 0) return LieAlgebra(std::move(labels), {});
  const std::size_t flat = basis[0].rows() * basis[0].cols();
  Mat columns(flat, n);
  for (std::size_t i = 0; i < n; ++i) columns.set_col(i, flatten(basis[i]));
  if (rank(columns) != n) throw Error(ErrorKind::InvalidParams, "matrix_lie_algebra: basis matrices are dependent");
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto coords = solve(columns, flatten(commutator(basis[i], basis[j])));
      if (!coords) throw Error(ErrorKind::NotClosed, "matrix_lie_algebra: span is not closed under commutators");
      for (std::size_t k = 0; k < n; ++k) {
        c[(i * n + j) * n + k] = (*coords)[k];
        c[(j * n + i) * n + k] = -(*coords)[k];
      }
    }
  return LieAlgebra(std::move(labels), std::move(c));
}

/// Elementary matrix E_ij (0-based) of size n.
inline Mat elementary(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

} // namespace lieps
