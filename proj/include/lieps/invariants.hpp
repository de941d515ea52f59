#pragma once

// Fixed-point subspaces of the isotropy action on g/h, on (g/h)* and on ∧²(g/h).

#include <cstddef>
#include <vector>

#include "lieps/isotropy.hpp"

namespace lieps {

struct InvariantBivectorSpace {
  Subspace basis;          ///< in ∧² coordinates of g/h
  bool infinitesimal = false; ///< h-derivations imposed
  bool discrete = false;      ///< generator fixed-point conditions imposed
  std::size_t quotient_dim = 0;

  std::size_t dim() const noexcept { return basis.dim(); }
  /// Sharp matrix of the i-th basis bivector.
  Mat sharp(std::size_t i) const { return sharp_from_wedge2(basis.vector(i), quotient_dim); }
};

namespace detail {

inline Mat stack_all(const std::vector<Mat> &blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto &b : blocks) rows += b.rows();
  Mat out(rows, cols);
  std::size_t r = 0;
  for (const auto &b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "constraint block width");
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
  }
  return out;
}

inline void check_square(const std::vector<Mat> &ops, std::size_t m) {
  for (const auto &A : ops)
    if (A.rows() != m || A.cols() != m) throw Error(ErrorKind::DimensionMismatch, "operator must be square of matching size");
}

} // namespace detail

/// Invariant bivectors: the common kernel of the derivations D R + R D^T for
/// the induced h operators and of ∧²Ā - id for the induced generators.
inline InvariantBivectorSpace invariant_bivectors(const LieAlgebra &L, const IsotropyModel &iso,
                                                  bool use_infinitesimal = true, bool use_discrete = true) {
  const std::size_t m = iso.quotient_dim();
  const std::size_t w = wedge2_dim(m);
  std::vector<Mat> blocks;
  InvariantBivectorSpace out;
  out.quotient_dim = m;
  if (use_infinitesimal && iso.h_dim() > 0) {
    out.infinitesimal = true;
    for (const auto &D : induced_h_operators(L, iso)) blocks.push_back(wedge2_derivation(D));
  }
  if (use_discrete && !iso.generators.empty()) {
    out.discrete = true;
    for (const auto &A : induced_generators(iso)) blocks.push_back(wedge2_action(A) - Mat::identity(w));
  }
  out.basis = kernel(detail::stack_all(blocks, w));
  return out;
}

inline InvariantBivectorSpace invariant_bivectors(const HomogeneousSpace &M, bool use_infinitesimal = true,
                                                  bool use_discrete = true) {
  return invariant_bivectors(M.g, M.iso, use_infinitesimal, use_discrete);
}

/// Common kernel of the infinitesimal operators and of A - id for the discrete ones.
inline Subspace fixed_vectors(std::size_t m, const std::vector<Mat> &infinitesimal,
                              const std::vector<Mat> &discrete = {}) {
  detail::check_square(infinitesimal, m);
  detail::check_square(discrete, m);
  std::vector<Mat> blocks = infinitesimal;
  for (const auto &A : discrete) blocks.push_back(A - Mat::identity(m));
  return kernel(detail::stack_all(blocks, m));
}

/// Fixed covectors for the dual action: infinitesimal -D^T, discrete (A^{-1})^T.
/// A covector is fixed by (A^{-1})^T exactly when it is fixed by A^T.
inline Subspace fixed_covectors(std::size_t m, const std::vector<Mat> &infinitesimal,
                                const std::vector<Mat> &discrete = {}) {
  detail::check_square(infinitesimal, m);
  detail::check_square(discrete, m);
  std::vector<Mat> blocks;
  for (const auto &D : infinitesimal) blocks.push_back(Rational(-1) * D.transpose());
  for (const auto &A : discrete) blocks.push_back(A.transpose() - Mat::identity(m));
  return kernel(detail::stack_all(blocks, m));
}

/// (g/h)^H in quotient coordinates.
inline Subspace invariant_vectors(const LieAlgebra &L, const IsotropyModel &iso) {
  return fixed_vectors(iso.quotient_dim(), induced_h_operators(L, iso), induced_generators(iso));
}

/// (h°)^H in quotient covector coordinates.
inline Subspace invariant_covectors(const LieAlgebra &L, const IsotropyModel &iso) {
  return fixed_covectors(iso.quotient_dim(), induced_h_operators(L, iso), induced_generators(iso));
}

} // namespace lieps
