#pragma once

// Leaf data of an r-matrix: the subalgebra a_r = q^{-1}(Im r_#) with the
// 2-cocycle omega_r, and the reverse construction from a pair (a, omega).

#include <cstddef>
#include <string>
#include <vector>

#include "lieps/poisson.hpp"

namespace lieps {

/// a_r with basis {h RREF basis} followed by {s(v) : v in the RREF basis of Im R}.
struct LeafData {
  Subspace a;                 ///< a_r as a subspace of g
  std::vector<Vec> basis;     ///< presented basis (h part first)
  std::size_t h_dim = 0;
  Mat omega;                  ///< omega_r on `basis`
  Subspace radical;           ///< Rad(omega_r) as a subspace of g
};

namespace detail {

inline void require_r_matrix(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  if (!is_r_matrix(L, iso, r)) throw Error(ErrorKind::NotAnRMatrix, "bivector is not an r-matrix");
}

/// Image of r_# in quotient coordinates.
inline Subspace image(const Bivector &r) { return column_space(r.mat); }

inline bool closed(const LieAlgebra &L, const std::vector<Vec> &basis, const Subspace &span) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!span.contains(L.bracket(basis[i], basis[j]))) return false;
  return true;
}

/// Radical of a skew form `omega` given on `basis`, as a subspace of the ambient space.
inline Subspace form_radical(const std::vector<Vec> &basis, const Mat &omega, std::size_t ambient) {
  const Subspace ker = kernel(omega);
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec v = zero_vec(ambient);
    const Vec c = ker.vector(i);
    for (std::size_t j = 0; j < basis.size(); ++j) v = v + c[j] * basis[j];
    vs.push_back(v);
  }
  return vs.empty() ? Subspace(ambient) : Subspace::span(vs, ambient);
}

} // namespace detail

/// a_r = h + s(Im R), checked to be a subalgebra.
inline Subspace leaf_algebra(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  detail::require_r_matrix(L, iso, r);
  const Subspace im = detail::image(r);
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < iso.h_dim(); ++a) gens.push_back(iso.h.vector(a));
  for (std::size_t i = 0; i < im.dim(); ++i) gens.push_back(iso.lift(im.vector(i)));
  const std::size_t n = L.dim();
  Subspace a = gens.empty() ? Subspace(n) : Subspace::span(gens, n);
  if (!detail::closed(L, gens, a)) throw Error(ErrorKind::ClosureFailure, "a_r is not bracket-closed");
  return a;
}

/// omega_r(x, y) for x, y in a_r: with R xi = q(y), the value is xi^T q(x).
inline Rational leaf_form(const IsotropyModel &iso, const Bivector &r, const Vec &x, const Vec &y) {
  const Vec xi = solve_or_throw(r.mat, iso.project(y), "element outside a_r");
  return dot(xi, iso.project(x));
}

inline LeafData leaf_cocycle(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  LeafData out;
  out.a = leaf_algebra(L, iso, r);
  const std::size_t n = L.dim();
  const Subspace im = detail::image(r);
  for (std::size_t a = 0; a < iso.h_dim(); ++a) out.basis.push_back(iso.h.vector(a));
  out.h_dim = iso.h_dim();
  for (std::size_t i = 0; i < im.dim(); ++i) out.basis.push_back(iso.lift(im.vector(i)));

  const std::size_t d = out.basis.size();
  const Subspace ker = kernel(r.mat);
  std::vector<Vec> sol;
  for (const auto &x : out.basis) sol.push_back(solve_or_throw(r.mat, iso.project(x), "element outside a_r"));
  out.omega = Mat(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      out.omega(i, j) = dot(sol[j], iso.project(out.basis[i]));
      // the value must not depend on the chosen preimage
      for (std::size_t t = 0; t < ker.dim(); ++t)
        if (dot(sol[j] + ker.vector(t), iso.project(out.basis[i])) != out.omega(i, j))
          throw Error(ErrorKind::CocycleFailure, "omega_r depends on the chosen preimage");
    }
  if (!out.omega.is_skew()) throw Error(ErrorKind::CocycleFailure, "omega_r is not skew");

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Vec &x = out.basis[i], &y = out.basis[j], &z = out.basis[k];
        const Rational c = leaf_form(iso, r, L.bracket(x, y), z) + leaf_form(iso, r, L.bracket(y, z), x) +
                           leaf_form(iso, r, L.bracket(z, x), y);
        if (sgn(c) != 0) throw Error(ErrorKind::CocycleFailure, "omega_r fails the cocycle identity");
      }
  out.radical = detail::form_radical(out.basis, out.omega, n);
  if (!(out.radical == iso.h)) throw Error(ErrorKind::RadicalMismatch, "Rad(omega_r) differs from h");
  return out;
}

/// omega_r([u,x], y) + omega_r(x, [u,y]) = 0 for u in h, x, y in the leaf basis.
inline bool leaf_form_is_invariant(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r,
                                   const LeafData &leaf) {
  for (std::size_t a = 0; a < iso.h_dim(); ++a) {
    const Vec u = iso.h.vector(a);
    for (const auto &x : leaf.basis)
      for (const auto &y : leaf.basis)
        if (sgn(leaf_form(iso, r, L.bracket(u, x), y) + leaf_form(iso, r, x, L.bracket(u, y))) != 0) return false;
  }
  return true;
}

/// Builds r from a subalgebra a ⊇ h and a 2-cocycle omega on `a_basis` with Rad(omega) = h.
///
/// r_# = B Ω̄^{-1} B^T where B holds the images in g/h of basis vectors of
/// a/h and Ω̄ is omega on their preimages.
inline Bivector reconstruct_r(const LieAlgebra &L, const IsotropyModel &iso, const std::vector<Vec> &a_basis,
                              const Mat &omega) {
  const std::size_t n = L.dim();
  const std::size_t d = a_basis.size();
  if (omega.rows() != d || omega.cols() != d) throw Error(ErrorKind::DimensionMismatch, "omega size differs from basis");
  if (!omega.is_skew()) throw Error(ErrorKind::NotSkew, "omega must be skew");
  for (const auto &v : a_basis)
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "basis vector length");
  const Subspace a = d == 0 ? Subspace(n) : Subspace::span(a_basis, n);
  if (a.dim() != d) throw Error(ErrorKind::InvalidParams, "basis of a is linearly dependent");
  if (!detail::closed(L, a_basis, a)) throw Error(ErrorKind::NotClosed, "a is not a subalgebra");
  if (!a.contains(iso.h)) throw Error(ErrorKind::RadicalMismatch, "a does not contain h");

  const Mat coord_mat = d == 0 ? Mat(n, 0) : Mat::from_cols(a_basis, n);
  auto coords = [&](const Vec &x) { return solve_or_throw(coord_mat, x, "element outside a"); };
  auto form = [&](const Vec &x, const Vec &y) { return dot(coords(x), omega * coords(y)); };

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Vec &x = a_basis[i], &y = a_basis[j], &z = a_basis[k];
        if (sgn(form(L.bracket(x, y), z) + form(L.bracket(y, z), x) + form(L.bracket(z, x), y)) != 0)
          throw Error(ErrorKind::NotACocycle, "omega fails the cocycle identity");
      }
  if (!(detail::form_radical(a_basis, omega, n) == iso.h))
    throw Error(ErrorKind::RadicalMismatch, "Rad(omega) differs from h");

  for (std::size_t t = 0; t < iso.h_dim(); ++t) {
    const Vec u = iso.h.vector(t);
    for (const auto &x : a_basis)
      for (const auto &y : a_basis)
        if (sgn(form(L.bracket(u, x), y) + form(x, L.bracket(u, y))) != 0)
          throw Error(ErrorKind::NotInvariant, "omega is not h-invariant");
  }
  for (const auto &A : iso.generators)
    for (const auto &x : a_basis) {
      if (!a.contains(A * x)) throw Error(ErrorKind::NotInvariant, "a generator does not preserve a");
      for (const auto &y : a_basis)
        if (form(A * x, A * y) != form(x, y)) throw Error(ErrorKind::NotInvariant, "omega is not generator-invariant");
    }

  // preimages of a basis of a/h: greedy over the given basis
  const std::size_t m = iso.quotient_dim();
  std::vector<Vec> pre, img;
  for (const auto &x : a_basis) {
    Vec qx = iso.project(x);
    std::vector<Vec> trial = img;
    trial.push_back(qx);
    if (rank(Mat::from_rows(trial, m)) > img.size()) {
      img.push_back(qx);
      pre.push_back(x);
    }
  }
  const std::size_t p = img.size();
  if (p == 0) return Bivector::zero(m);
  Mat bar(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) bar(i, j) = form(pre[i], pre[j]);
  auto inv = inverse(bar);
  if (!inv) throw Error(ErrorKind::RadicalMismatch, "omega descends to a degenerate form on a/h");
  const Mat B = Mat::from_cols(img, m);
  return Bivector(B * (*inv) * B.transpose());
}

inline Bivector reconstruct_r(const LieAlgebra &L, const IsotropyModel &iso, const LeafData &leaf) {
  return reconstruct_r(L, iso, leaf.basis, leaf.omega);
}

struct LeafDecomposition {
  Subspace h_part;
  Subspace im_part;   ///< s(Im r_#) inside the complement, as a subspace of g
  bool reductive = false; ///< [h, Im] ⊆ Im
  bool symmetric = false; ///< additionally [Im, Im] ⊆ h
};

inline LeafDecomposition leaf_decomposition(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  detail::require_r_matrix(L, iso, r);
  const std::size_t n = L.dim();
  const Subspace im = detail::image(r);
  std::vector<Vec> im_vecs;
  for (std::size_t i = 0; i < im.dim(); ++i) im_vecs.push_back(iso.lift(im.vector(i)));
  LeafDecomposition out;
  out.h_part = iso.h;
  out.im_part = im_vecs.empty() ? Subspace(n) : Subspace::span(im_vecs, n);
  out.reductive = true;
  for (std::size_t a = 0; a < iso.h_dim() && out.reductive; ++a)
    for (std::size_t i = 0; i < out.im_part.dim(); ++i)
      if (!out.im_part.contains(L.bracket(iso.h.vector(a), out.im_part.vector(i)))) {
        out.reductive = false;
        break;
      }
  out.symmetric = out.reductive;
  for (std::size_t i = 0; i < out.im_part.dim() && out.symmetric; ++i)
    for (std::size_t j = i + 1; j < out.im_part.dim(); ++j)
      if (!iso.h.contains(L.bracket(out.im_part.vector(i), out.im_part.vector(j)))) {
        out.symmetric = false;
        break;
      }
  return out;
}

} // namespace lieps
