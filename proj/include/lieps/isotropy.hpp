#pragma once

// The quotient model g/h of a Lie algebra by an isotropy subalgebra.
//
// Quotient coordinates are taken with respect to a complement m of h in g:
// q : g -> g/h reads off the m-coordinates in the basis (h-basis, m-basis),
// and s : g/h -> g embeds the complement. Unless a complement is declared,
// it is built greedily from standard basis vectors in increasing index order.
// Covectors on g/h are identified with the annihilator h° through q^T.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieps/lie_algebra.hpp"

namespace lieps {

struct IsotropyModel {
  Subspace h;                             ///< RREF basis of h inside g.
  Mat complement;                         ///< (n-k) x n, rows span m.
  std::vector<std::string> complement_labels;
  std::vector<std::size_t> complement_indices; ///< set when m is spanned by standard vectors
  Mat q;                                  ///< (n-k) x n projection g -> g/h.
  Mat s;                                  ///< n x (n-k) section g/h -> g.
  Subspace annihilator;                   ///< h° in g*, equals the row space of q.
  std::vector<Mat> generators;            ///< Ad-matrices of discrete isotropy generators on g.

  std::size_t ambient_dim() const noexcept { return h.ambient_dim(); }
  std::size_t h_dim() const noexcept { return h.dim(); }
  std::size_t quotient_dim() const noexcept { return q.rows(); }

  Vec project(const Vec &x) const { return q * x; }
  Vec lift(const Vec &v) const { return s * v; }
  /// The h° element corresponding to a quotient covector.
  Vec to_annihilator(const Vec &alpha) const { return q.transpose() * alpha; }
  /// Inverse of to_annihilator (restriction to the complement).
  Vec from_annihilator(const Vec &eta) const { return s.transpose() * eta; }
};

/// A Lie algebra together with an isotropy model for it.
struct HomogeneousSpace {
  LieAlgebra g;
  IsotropyModel iso;

  std::size_t dim() const noexcept { return g.dim(); }
  std::size_t quotient_dim() const noexcept { return iso.quotient_dim(); }
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> closure_witness(const LieAlgebra &L, const Subspace &h) {
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b)
      if (!h.contains(L.bracket(h.vector(a), h.vector(b)))) return std::make_pair(a, b);
  return std::nullopt;
}

inline bool is_automorphism(const LieAlgebra &L, const Mat &A) {
  const std::size_t n = L.dim();
  if (A.rows() != n || A.cols() != n || !inverse(A)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = A * L.bracket(unit_vec(n, i), unit_vec(n, j));
      const Vec rhs = L.bracket(A.col(i), A.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

} // namespace detail

/// Builds the isotropy model for h = span(h_vectors).
///
/// `complement` (rows) may declare m explicitly; otherwise the greedy
/// standard-basis complement is used.
inline IsotropyModel make_isotropy(const LieAlgebra &L, const std::vector<Vec> &h_vectors,
                                   std::vector<Mat> generators = {},
                                   std::optional<std::vector<Vec>> complement = std::nullopt,
                                   std::optional<std::vector<std::string>> complement_labels = std::nullopt) {
  const std::size_t n = L.dim();
  IsotropyModel iso;
  iso.h = h_vectors.empty() ? Subspace(n) : Subspace::span(h_vectors, n);
  if (auto w = detail::closure_witness(L, iso.h))
    throw Error(ErrorKind::NotASubalgebra, "bracket of h basis vectors " + std::to_string(w->first) + " and " +
                                               std::to_string(w->second) + " leaves h");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (!detail::is_automorphism(L, generators[g]))
      throw Error(ErrorKind::NotAnAutomorphism, "generator " + std::to_string(g) + " is not a Lie algebra automorphism");
    for (std::size_t a = 0; a < iso.h.dim(); ++a)
      if (!iso.h.contains(generators[g] * iso.h.vector(a)))
        throw Error(ErrorKind::GeneratorMovesH, "generator " + std::to_string(g) + " does not preserve h");
  }
  iso.generators = std::move(generators);

  const std::size_t k = iso.h.dim();
  std::vector<Vec> m_rows;
  if (complement) {
    m_rows = *complement;
    for (const auto &v : m_rows)
      if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "complement vector length");
    if (m_rows.size() != n - k)
      throw Error(ErrorKind::InvalidComplement, "complement must have dimension " + std::to_string(n - k));
  } else {
    iso.complement_indices = greedy_complement_indices(iso.h);
    for (auto i : iso.complement_indices) m_rows.push_back(unit_vec(n, i));
  }
  iso.complement = m_rows.empty() ? Mat(0, n) : Mat::from_rows(m_rows, n);

  // Columns: h basis then m basis. q is the m-block of the inverse.
  Mat basis(n, n);
  for (std::size_t a = 0; a < k; ++a) basis.set_col(a, iso.h.vector(a));
  for (std::size_t b = 0; b < n - k; ++b) basis.set_col(k + b, m_rows[b]);
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorKind::InvalidComplement, "declared complement is not complementary to h");
  iso.q = Mat(n - k, n);
  for (std::size_t b = 0; b < n - k; ++b)
    for (std::size_t j = 0; j < n; ++j) iso.q(b, j) = (*inv)(k + b, j);
  iso.s = iso.complement.transpose();
  iso.annihilator = iso.q.rows() == 0 ? Subspace(n) : Subspace::span(iso.q);

  if (complement_labels) {
    if (complement_labels->size() != n - k) throw Error(ErrorKind::DimensionMismatch, "complement label count");
    iso.complement_labels = *complement_labels;
  } else {
    for (std::size_t b = 0; b < n - k; ++b) {
      std::optional<std::size_t> unit;
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(m_rows[b][j]) != 0) {
          ++nonzero;
          unit = j;
        }
      if (nonzero == 1 && m_rows[b][*unit] == 1)
        iso.complement_labels.push_back(L.labels()[*unit]);
      else
        iso.complement_labels.push_back("m" + std::to_string(b + 1));
    }
  }
  return iso;
}

inline HomogeneousSpace make_space(LieAlgebra g, const std::vector<Vec> &h_vectors, std::vector<Mat> generators = {},
                                   std::optional<std::vector<Vec>> complement = std::nullopt,
                                   std::optional<std::vector<std::string>> complement_labels = std::nullopt) {
  IsotropyModel iso = make_isotropy(g, h_vectors, std::move(generators), std::move(complement),
                                    std::move(complement_labels));
  return {std::move(g), std::move(iso)};
}

/// Matrix of x + h -> [u, x] + h on quotient coordinates, for u in h.
inline Mat induced_ad_bar(const LieAlgebra &L, const IsotropyModel &iso, const Vec &u) {
  if (!iso.h.contains(u)) throw Error(ErrorKind::NotInH, "induced_ad_bar: element is not in h");
  return iso.q * L.ad_matrix(u) * iso.s;
}

/// Induced action of a discrete generator on quotient coordinates.
inline Mat induced_generator(const IsotropyModel &iso, const Mat &A) { return iso.q * A * iso.s; }

/// Induced infinitesimal operators, one per h basis vector.
inline std::vector<Mat> induced_h_operators(const LieAlgebra &L, const IsotropyModel &iso) {
  std::vector<Mat> ops;
  for (std::size_t a = 0; a < iso.h.dim(); ++a) ops.push_back(induced_ad_bar(L, iso, iso.h.vector(a)));
  return ops;
}

inline std::vector<Mat> induced_generators(const IsotropyModel &iso) {
  std::vector<Mat> out;
  for (const auto &A : iso.generators) out.push_back(induced_generator(iso, A));
  return out;
}

// ---------------------------------------------------------------------------
// Second exterior power. Coordinates of sum c_ij e_i ^ e_j are indexed by
// pairs i < j in lexicographic order.

inline std::size_t wedge2_dim(std::size_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; }

inline std::vector<std::pair<std::size_t, std::size_t>> wedge2_pairs(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.emplace_back(i, j);
  return out;
}

inline std::size_t wedge2_index(std::size_t m, std::size_t i, std::size_t j) {
  // number of pairs before row i, plus offset within row
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

/// Adds coefficient `c` of e_a ^ e_b (any order) into ∧² coordinates.
inline void wedge2_accumulate(Vec &coords, std::size_t m, std::size_t a, std::size_t b, const Rational &c) {
  if (a == b || sgn(c) == 0) return;
  if (a < b)
    coords[wedge2_index(m, a, b)] += c;
  else
    coords[wedge2_index(m, b, a)] -= c;
}

/// x ^ y in ∧² coordinates.
inline Vec wedge(const Vec &x, const Vec &y) {
  const std::size_t m = x.size();
  Vec out = zero_vec(wedge2_dim(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out[wedge2_index(m, i, j)] = x[i] * y[j] - x[j] * y[i];
  return out;
}

/// Matrix of ∧²A: x ^ y -> Ax ^ Ay.
inline Mat wedge2_action(const Mat &A) {
  const std::size_t m = A.rows();
  if (A.cols() != m) throw Error(ErrorKind::DimensionMismatch, "wedge2_action: square matrix required");
  const auto pairs = wedge2_pairs(m);
  Mat W(pairs.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const auto [i, j] = pairs[col];
    W.set_col(col, wedge(A.col(i), A.col(j)));
  }
  return W;
}

/// Matrix of the derivation x ^ y -> Dx ^ y + x ^ Dy.
inline Mat wedge2_derivation(const Mat &D) {
  const std::size_t m = D.rows();
  if (D.cols() != m) throw Error(ErrorKind::DimensionMismatch, "wedge2_derivation: square matrix required");
  const auto pairs = wedge2_pairs(m);
  Mat W(pairs.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const auto [i, j] = pairs[col];
    Vec c = zero_vec(pairs.size());
    for (std::size_t k = 0; k < m; ++k) {
      wedge2_accumulate(c, m, k, j, D(k, i));
      wedge2_accumulate(c, m, i, k, D(k, j));
    }
    W.set_col(col, c);
  }
  return W;
}

/// Sharp matrix R (alpha -> R alpha) of a bivector given in ∧² coordinates.
///
/// For x ^ y the convention is <beta, (x^y)_# alpha> = alpha(x) beta(y) - alpha(y) beta(x),
/// i.e. R = y x^T - x y^T.
inline Mat sharp_from_wedge2(const Vec &coords, std::size_t m) {
  if (coords.size() != wedge2_dim(m)) throw Error(ErrorKind::DimensionMismatch, "wedge2 coordinate length");
  Mat R(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational &c = coords[wedge2_index(m, i, j)];
      R(j, i) = c;
      R(i, j) = -c;
    }
  return R;
}

inline Vec wedge2_from_sharp(const Mat &R) {
  const std::size_t m = R.rows();
  Vec c = zero_vec(wedge2_dim(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) c[wedge2_index(m, i, j)] = R(j, i);
  return c;
}

} // namespace lieps
