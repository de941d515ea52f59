#pragma once

// Bivectors on g/h, their lifts to g, the bracket on h° and the trilinear
// obstruction whose vanishing certifies an invariant Poisson structure.
//
// Sign conventions used throughout the library:
//   r_#: <beta, r_# alpha> = r(alpha, beta) = beta^T R alpha
//   ad*_x zeta = zeta o ad_x
//   [eta, xi]_r = ad*_{xi#} eta - ad*_{eta#} xi
//   [[r,r]](eta, xi, eps) = <eps, r#[eta,xi]_r - [eta#, xi#]>
// With these signs [[r,r]] equals the cyclic expression evaluated by
// schouten_oracle() for every lift.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieps/invariants.hpp"

namespace lieps {

/// A bivector on g/h, stored as the skew matrix R of r_# in quotient coordinates.
struct Bivector {
  Mat mat;

  Bivector() = default;
  explicit Bivector(Mat R) : mat(std::move(R)) {
    if (mat.rows() != mat.cols() || !mat.is_skew()) throw Error(ErrorKind::NotSkew, "bivector matrix must be skew");
  }
  static Bivector zero(std::size_t m) { return Bivector(Mat(m, m)); }
  static Bivector from_wedge2(const Vec &coords, std::size_t m) { return Bivector(sharp_from_wedge2(coords, m)); }

  std::size_t dim() const noexcept { return mat.rows(); }
  Vec coords() const { return wedge2_from_sharp(mat); }
  Vec sharp(const Vec &alpha) const { return mat * alpha; }
  /// r(alpha, beta)
  Rational operator()(const Vec &alpha, const Vec &beta) const { return dot(beta, mat * alpha); }

  friend bool operator==(const Bivector &a, const Bivector &b) { return a.mat == b.mat; }
};

/// A bivector on g projecting to a given bivector on g/h.
struct Lift {
  Mat mat; ///< n x n skew
};

/// Values of [[r,r]] on triples of the quotient dual basis (h° basis qᵀe_a).
struct YBTensor {
  std::size_t m = 0;
  std::vector<Rational> values;

  explicit YBTensor(std::size_t m_ = 0) : m(m_), values(m_ * m_ * m_, Rational(0)) {}
  Rational &at(std::size_t a, std::size_t b, std::size_t c) { return values[(a * m + b) * m + c]; }
  const Rational &at(std::size_t a, std::size_t b, std::size_t c) const { return values[(a * m + b) * m + c]; }

  bool is_zero() const {
    for (const auto &v : values)
      if (sgn(v) != 0) return false;
    return true;
  }

  struct Entry {
    std::size_t a, b, c;
    Rational value;
  };
  /// Nonzero entries with a < b < c (the rest follow by antisymmetry).
  std::vector<Entry> nonzero() const {
    std::vector<Entry> out;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c)
          if (sgn(at(a, b, c)) != 0) out.push_back({a, b, c, at(a, b, c)});
    return out;
  }

  bool is_antisymmetric() const {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          const Rational &v = at(a, b, c);
          if (at(b, a, c) != -v || at(a, c, b) != -v || at(c, b, a) != -v) return false;
        }
    return true;
  }

  friend bool operator==(const YBTensor &x, const YBTensor &y) { return x.m == y.m && x.values == y.values; }
};

inline void check_bivector(const IsotropyModel &iso, const Bivector &r) {
  if (r.dim() != iso.quotient_dim()) throw Error(ErrorKind::DimensionMismatch, "bivector size differs from dim g/h");
}

/// rt = s R s^T.
inline Lift canonical_lift(const IsotropyModel &iso, const Bivector &r) {
  check_bivector(iso, r);
  return {iso.s * r.mat * iso.s.transpose()};
}

inline bool is_lift_of(const IsotropyModel &iso, const Lift &lift, const Bivector &r) {
  return lift.mat.is_skew() && iso.q * lift.mat * iso.q.transpose() == r.mat;
}

/// eta^{~#} in g, with <xi, eta#> = rt(eta, xi).
inline Vec sharp(const Lift &lift, const Vec &eta) { return lift.mat * eta; }

inline void check_annihilator(const IsotropyModel &iso, const Vec &eta, const char *what) {
  if (!iso.annihilator.contains(eta)) throw Error(ErrorKind::NotInAnnihilator, std::string(what) + " does not vanish on h");
}

/// [eta, xi]_rt for eta, xi in h°.
inline Vec hcirc_bracket(const LieAlgebra &L, const IsotropyModel &iso, const Lift &lift, const Vec &eta,
                         const Vec &xi) {
  check_annihilator(iso, eta, "first argument");
  check_annihilator(iso, xi, "second argument");
  return L.ad_star(sharp(lift, xi), eta) - L.ad_star(sharp(lift, eta), xi);
}

/// [alpha, beta]_r in quotient covector coordinates.
inline Vec r_bracket(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r, const Vec &alpha,
                     const Vec &beta) {
  const Lift lift = canonical_lift(iso, r);
  return iso.from_annihilator(hcirc_bracket(L, iso, lift, iso.to_annihilator(alpha), iso.to_annihilator(beta)));
}

inline YBTensor yang_baxter_tensor(const LieAlgebra &L, const IsotropyModel &iso, const Lift &lift) {
  const std::size_t m = iso.quotient_dim();
  YBTensor t(m);
  std::vector<Vec> eta, sh;
  for (std::size_t a = 0; a < m; ++a) {
    eta.push_back(iso.to_annihilator(unit_vec(m, a)));
    sh.push_back(sharp(lift, eta.back()));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec br = hcirc_bracket(L, iso, lift, eta[a], eta[b]);
      const Vec diff = sharp(lift, br) - L.bracket(sh[a], sh[b]);
      for (std::size_t c = 0; c < m; ++c) t.at(a, b, c) = dot(eta[c], diff);
    }
  return t;
}

inline YBTensor yang_baxter_tensor(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  return yang_baxter_tensor(L, iso, canonical_lift(iso, r));
}

/// -<eta,[xi#,eps#]> - <xi,[eps#,eta#]> - <eps,[eta#,xi#]> on the same triples.
inline YBTensor schouten_oracle(const LieAlgebra &L, const IsotropyModel &iso, const Lift &lift) {
  const std::size_t m = iso.quotient_dim();
  YBTensor t(m);
  std::vector<Vec> eta, sh;
  for (std::size_t a = 0; a < m; ++a) {
    eta.push_back(iso.to_annihilator(unit_vec(m, a)));
    sh.push_back(lift.mat * eta.back());
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        t.at(a, b, c) = -dot(eta[a], L.bracket(sh[b], sh[c])) - dot(eta[b], L.bracket(sh[c], sh[a])) -
                        dot(eta[c], L.bracket(sh[a], sh[b]));
  return t;
}

/// Infinitesimal and discrete invariance of r.
inline bool is_invariant(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  check_bivector(iso, r);
  for (const auto &D : induced_h_operators(L, iso))
    if (!(D * r.mat + r.mat * D.transpose()).is_zero()) return false;
  for (const auto &A : induced_generators(iso))
    if (!(A * r.mat * A.transpose() == r.mat)) return false;
  return true;
}

inline bool is_r_matrix(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  return yang_baxter_tensor(L, iso, r).is_zero();
}

/// The weaker check: [[r,r]] restricted to triples from (h°)^H.
inline bool is_r_matrix_on_fixed(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  const Subspace fixed = invariant_covectors(L, iso);
  const YBTensor t = yang_baxter_tensor(L, iso, r);
  const std::size_t m = iso.quotient_dim();
  for (std::size_t a = 0; a < fixed.dim(); ++a)
    for (std::size_t b = 0; b < fixed.dim(); ++b)
      for (std::size_t c = 0; c < fixed.dim(); ++c) {
        const Vec x = fixed.vector(a), y = fixed.vector(b), z = fixed.vector(c);
        Rational v = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (sgn(x[i]) == 0) continue;
          for (std::size_t j = 0; j < m; ++j) {
            if (sgn(y[j]) == 0) continue;
            for (std::size_t k = 0; k < m; ++k)
              if (sgn(z[k]) != 0) v += x[i] * y[j] * z[k] * t.at(i, j, k);
          }
        }
        if (sgn(v) != 0) return false;
      }
  return true;
}

/// [·,·]_r on (h°)^H together with the checks that it is a Lie algebra and
/// that r_# intertwines it with the bracket of g/h on (g/h)^H.
struct FixedSpaceAlgebra {
  Subspace fixed;      ///< (h°)^H in quotient covector coordinates
  LieAlgebra algebra;  ///< structure constants on the RREF basis of `fixed`
  Subspace fixed_vectors; ///< (g/h)^H
};

inline FixedSpaceAlgebra fixed_space_lie_algebra(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  if (!is_r_matrix(L, iso, r)) throw Error(ErrorKind::NotAnRMatrix, "fixed_space_lie_algebra requires an r-matrix");
  FixedSpaceAlgebra out;
  out.fixed = invariant_covectors(L, iso);
  out.fixed_vectors = invariant_vectors(L, iso);
  const std::size_t d = out.fixed.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("f" + std::to_string(i + 1));
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec alpha = out.fixed.vector(i), beta = out.fixed.vector(j);
      const Vec br = r_bracket(L, iso, r, alpha, beta);
      auto coords = out.fixed.coordinates(br);
      if (!coords) throw Error(ErrorKind::ClosureFailure, "[·,·]_r leaves the fixed covectors");
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < d; ++k)
        if (sgn((*coords)[k]) != 0) e.coeffs.emplace_back(k, (*coords)[k]);
      entries.push_back(std::move(e));

      // r_# [alpha, beta]_r = [r_# alpha, r_# beta] + h
      const Vec x = r.sharp(alpha), y = r.sharp(beta);
      if (!out.fixed_vectors.contains(x) || !out.fixed_vectors.contains(y))
        throw Error(ErrorKind::MorphismFailure, "r_# does not map fixed covectors to fixed vectors");
      if (r.sharp(br) != iso.project(L.bracket(iso.lift(x), iso.lift(y))))
        throw Error(ErrorKind::MorphismFailure, "r_# does not intertwine the brackets");
    }
  out.algebra = LieAlgebra::from_brackets(labels, entries);
  if (!validate(out.algebra).ok()) throw Error(ErrorKind::JacobiFailure, "[·,·]_r violates Jacobi on the fixed covectors");
  return out;
}

/// Invariant basis bivectors and their pairwise sums, each tagged with r-matrix status.
struct ScanRow {
  std::string candidate;
  Bivector r;
  bool r_matrix;
};

inline std::vector<ScanRow> scan_invariant_space(const LieAlgebra &L, const IsotropyModel &iso,
                                                 const InvariantBivectorSpace &space) {
  std::vector<ScanRow> out;
  const std::size_t m = iso.quotient_dim();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    Bivector r = Bivector::from_wedge2(space.basis.vector(i), m);
    out.push_back({"b" + std::to_string(i + 1), r, is_r_matrix(L, iso, r)});
  }
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = i + 1; j < space.dim(); ++j) {
      Bivector r = Bivector::from_wedge2(space.basis.vector(i) + space.basis.vector(j), m);
      out.push_back({"b" + std::to_string(i + 1) + "+b" + std::to_string(j + 1), r, is_r_matrix(L, iso, r)});
    }
  return out;
}

} // namespace lieps
