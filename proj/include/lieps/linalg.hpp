#pragma once

// Exact dense linear algebra over the rationals.
//
// Everything here is deterministic: elimination always takes the leftmost
// pivot column and the first row with a nonzero entry in it, so identical
// inputs give identical outputs. Subspaces are stored by their reduced row
// echelon basis, which makes equality a syntactic comparison.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "lieps/error.hpp"
#include "lieps/rational.hpp"

namespace lieps {

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &x) { return sgn(x) == 0; });
}

inline Rational dot(const Vec &a, const Vec &b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec operator+(const Vec &a, const Vec &b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec &a, const Vec &b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(const Rational &c, const Vec &a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec operator-(const Vec &a) { return Rational(-1) * a; }

/// Row-major dense rational matrix.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_rows(const std::vector<Vec> &rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Mat from_cols(const std::vector<Vec> &cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  Vec col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<Vec> row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  void set_row(std::size_t i, const Vec &v) {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "set_row: length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
  }

  void set_col(std::size_t j, const Vec &v) {
    if (v.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational &x) { return sgn(x) == 0; });
  }

  bool is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  /// Appends the rows of `below` (same column count).
  Mat stacked(const Mat &below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (below.cols_ != cols_) throw Error(ErrorKind::DimensionMismatch, "stack: column mismatch");
    Mat m(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
    return m;
  }

  friend bool operator==(const Mat &a, const Mat &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Mat operator*(const Mat &a, const Mat &b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational &aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec operator*(const Mat &a, const Vec &x) {
    if (a.cols_ != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    Vec y = zero_vec(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend Mat operator+(const Mat &a, const Mat &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix add");
    Mat c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Mat operator-(const Mat &a, const Mat &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sub");
    Mat c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend Mat operator*(const Rational &s, const Mat &a) {
    Mat c = a;
    for (auto &x : c.data_) x *= s;
    return c;
  }

  friend std::ostream &operator<<(std::ostream &os, const Mat &m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j).get_str();
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form.
inline RrefResult rref(Mat m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat &m) { return rref(m).pivots.size(); }

/// A linear subspace of Q^n represented by its canonical RREF basis.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `generators`.
  static Subspace span(const Mat &generators) {
    Subspace s(generators.cols());
    auto [red, piv] = rref(generators);
    Mat b(piv.size(), generators.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) b.set_row(i, red.row(i));
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace span(const std::vector<Vec> &generators, std::size_t ambient) {
    return span(Mat::from_rows(generators, ambient));
  }

  static Subspace full(std::size_t n) { return span(Mat::identity(n)); }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat &basis() const noexcept { return basis_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec &v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "contains: ambient mismatch");
    if (::lieps::is_zero(v)) return true;
    Mat one(1, ambient_);
    one.set_row(0, v);
    return rank(basis_.stacked(one)) == dim();
  }

  bool contains(const Subspace &other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  /// Coordinates of `v` in the stored RREF basis, if `v` lies in the span.
  std::optional<Vec> coordinates(const Vec &v) const;

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_ = 0;
  Mat basis_;
};

/// Null space {x : m x = 0}.
inline Subspace kernel(const Mat &m) {
  auto [red, piv] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return Subspace(n);
  return Subspace::span(gens, n);
}

/// One particular solution of m x = b with every free variable set to zero,
/// or nullopt when b is outside the column space.
inline std::optional<Vec> solve(const Mat &m, const Vec &b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [red, piv] = rref(std::move(aug));
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, m.cols());
  return x;
}

/// Like solve(), but a missing solution is an error.
inline Vec solve_or_throw(const Mat &m, const Vec &b, const char *what) {
  auto x = solve(m, b);
  if (!x) throw Error(ErrorKind::NoSolution, what);
  return *x;
}

inline std::optional<Mat> inverse(const Mat &m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse: not square");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [red, piv] = rref(std::move(aug));
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

inline std::optional<Vec> Subspace::coordinates(const Vec &v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "coordinates: ambient mismatch");
  return solve(basis_.transpose(), v);
}

inline Subspace sum(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "sum: ambient mismatch");
  if (a.dim() + b.dim() == 0) return Subspace(a.ambient_dim());
  return Subspace::span(a.basis().stacked(b.basis()));
}

/// Annihilator in the dual coordinates: {y : <y, v> = 0 for all v in s}.
inline Subspace annihilator(const Subspace &s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return kernel(s.basis());
}

inline Subspace intersect(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "intersect: ambient mismatch");
  // a ∩ b = ann(ann a + ann b)
  Subspace both = sum(annihilator(a), annihilator(b));
  return annihilator(both);
}

inline bool contains(const Subspace &s, const Vec &v) { return s.contains(v); }

/// Column space of m as a subspace of Q^rows.
inline Subspace column_space(const Mat &m) {
  if (m.cols() == 0) return Subspace(m.rows());
  return Subspace::span(m.transpose());
}

/// Greedy completion: standard basis indices, scanned in increasing order,
/// that extend `s` to the whole ambient space.
inline std::vector<std::size_t> greedy_complement_indices(const Subspace &s) {
  std::vector<std::size_t> out;
  Mat acc = s.basis();
  std::size_t r = s.dim();
  for (std::size_t i = 0; i < s.ambient_dim() && r < s.ambient_dim(); ++i) {
    Mat one(1, s.ambient_dim());
    one(0, i) = 1;
    Mat trial = acc.stacked(one);
    if (rank(trial) > r) {
      acc = std::move(trial);
      ++r;
      out.push_back(i);
    }
  }
  return out;
}

} // namespace lieps
