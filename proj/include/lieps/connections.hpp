#pragma once

// Invariant contravariant connections on a reductive pair g = h ⊕ m.
//
// m is the complement carried by the IsotropyModel, so m and m* use quotient
// coordinates; alpha in m* extends by zero on h to q^T alpha. A connection is
// a bilinear map b: m* x m* -> m*.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieps/foliation.hpp"

namespace lieps {

inline bool check_reductive(const LieAlgebra &L, const IsotropyModel &iso) {
  const Subspace m = iso.complement.rows() == 0 ? Subspace(L.dim()) : Subspace::span(iso.complement);
  for (std::size_t a = 0; a < iso.h_dim(); ++a)
    for (std::size_t j = 0; j < iso.complement.rows(); ++j)
      if (!m.contains(L.bracket(iso.h.vector(a), iso.complement.row(j)))) return false;
  return true;
}

inline bool is_symmetric(const LieAlgebra &L, const IsotropyModel &iso) {
  if (!check_reductive(L, iso)) return false;
  for (std::size_t i = 0; i < iso.complement.rows(); ++i)
    for (std::size_t j = i + 1; j < iso.complement.rows(); ++j)
      if (!iso.h.contains(L.bracket(iso.complement.row(i), iso.complement.row(j)))) return false;
  return true;
}

inline void require_reductive(const LieAlgebra &L, const IsotropyModel &iso) {
  if (!check_reductive(L, iso)) throw Error(ErrorKind::NotReductive, "[h, m] is not contained in m");
}

/// [u, v]_m in quotient coordinates.
inline Vec m_bracket(const LieAlgebra &L, const IsotropyModel &iso, const Vec &u, const Vec &v) {
  return iso.project(L.bracket(iso.lift(u), iso.lift(v)));
}

/// [u, v]_h as an element of g.
inline Vec h_bracket(const LieAlgebra &L, const IsotropyModel &iso, const Vec &u, const Vec &v) {
  const Vec w = L.bracket(iso.lift(u), iso.lift(v));
  return w - iso.lift(iso.project(w));
}

/// [alpha, beta]_r = (ad*_{beta#} alpha~ - ad*_{alpha#} beta~)|_m.
inline Vec mstar_bracket(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r, const Vec &alpha,
                         const Vec &beta) {
  require_reductive(L, iso);
  check_bivector(iso, r);
  const Vec at = iso.to_annihilator(alpha), bt = iso.to_annihilator(beta);
  const Vec ash = iso.lift(r.sharp(alpha)), bsh = iso.lift(r.sharp(beta));
  const Vec full = L.ad_star(bsh, at) - L.ad_star(ash, bt);
  return iso.s.transpose() * full;
}

/// [alpha, beta]_r^# = [alpha#, beta#]_m on all basis pairs.
inline bool check_reductive_r_matrix(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  require_reductive(L, iso);
  const std::size_t m = iso.quotient_dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec ea = unit_vec(m, a), eb = unit_vec(m, b);
      if (r.sharp(mstar_bracket(L, iso, r, ea, eb)) != m_bracket(L, iso, r.sharp(ea), r.sharp(eb))) return false;
    }
  return true;
}

/// Matrix of l_{alpha#}: u -> [alpha#, u]_m.
inline Mat l_operator(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r, const Vec &alpha) {
  return iso.q * L.ad_matrix(iso.lift(r.sharp(alpha))) * iso.s;
}

/// b as a dense array: entry (a, b) is b(e_a*, e_b*).
struct ConnectionMap {
  std::size_t m = 0;
  std::vector<Vec> entries;

  explicit ConnectionMap(std::size_t m_ = 0) : m(m_), entries(m_ * m_, zero_vec(m_)) {}

  Vec &at(std::size_t a, std::size_t b) { return entries[a * m + b]; }
  const Vec &at(std::size_t a, std::size_t b) const { return entries[a * m + b]; }

  Vec operator()(const Vec &eta, const Vec &xi) const {
    Vec out = zero_vec(m);
    for (std::size_t a = 0; a < m; ++a) {
      if (sgn(eta[a]) == 0) continue;
      for (std::size_t b = 0; b < m; ++b)
        if (sgn(xi[b]) != 0) out = out + (eta[a] * xi[b]) * at(a, b);
    }
    return out;
  }

  /// Matrix of b_eta = b(eta, ·).
  Mat op(const Vec &eta) const {
    Mat B(m, m);
    for (std::size_t j = 0; j < m; ++j) B.set_col(j, (*this)(eta, unit_vec(m, j)));
    return B;
  }

  bool is_zero() const {
    for (const auto &v : entries)
      if (!::lieps::is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const ConnectionMap &x, const ConnectionMap &y) {
    return x.m == y.m && x.entries == y.entries;
  }
};

enum class ConnectionKind { Canonical, Natural, LeftSymmetric, Fedosov };

inline std::string_view to_string(ConnectionKind k) {
  switch (k) {
  case ConnectionKind::Canonical: return "canonical";
  case ConnectionKind::Natural: return "natural";
  case ConnectionKind::LeftSymmetric: return "left_symmetric";
  case ConnectionKind::Fedosov: return "fedosov";
  }
  return "unknown";
}

inline ConnectionKind parse_connection_kind(std::string_view s) {
  if (s == "canonical") return ConnectionKind::Canonical;
  if (s == "natural") return ConnectionKind::Natural;
  if (s == "left_symmetric") return ConnectionKind::LeftSymmetric;
  if (s == "fedosov") return ConnectionKind::Fedosov;
  throw Error(ErrorKind::InvalidParams, "unknown connection kind '" + std::string(s) + "'");
}

/// canonical: 0; natural: ½[η,ξ]_r; left_symmetric: −ξ∘l_{η#}; fedosov: ⅓([η,ξ]_r − ξ∘l_{η#}).
inline ConnectionMap build_connection(ConnectionKind kind, const LieAlgebra &L, const IsotropyModel &iso,
                                      const Bivector &r) {
  require_reductive(L, iso);
  check_bivector(iso, r);
  const std::size_t m = iso.quotient_dim();
  ConnectionMap b(m);
  if (kind == ConnectionKind::Canonical) return b;
  for (std::size_t a = 0; a < m; ++a) {
    const Vec ea = unit_vec(m, a);
    const Mat la = l_operator(L, iso, r, ea).transpose();
    for (std::size_t c = 0; c < m; ++c) {
      const Vec ec = unit_vec(m, c);
      const Vec br = mstar_bracket(L, iso, r, ea, ec);
      const Vec ls = la * ec; // ξ∘l_{η#}
      switch (kind) {
      case ConnectionKind::Natural: b.at(a, c) = Rational(1, 2) * br; break;
      case ConnectionKind::LeftSymmetric: b.at(a, c) = -ls; break;
      case ConnectionKind::Fedosov: b.at(a, c) = Rational(1, 3) * (br - ls); break;
      case ConnectionKind::Canonical: break;
      }
    }
  }
  return b;
}

/// T(η,ξ) = b(η,ξ) − b(ξ,η) − [η,ξ]_r
inline Vec torsion(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r, const ConnectionMap &b,
                   const Vec &eta, const Vec &xi) {
  return b(eta, xi) - b(xi, eta) - mstar_bracket(L, iso, r, eta, xi);
}

/// R(η,ξ) = [b_η, b_ξ] − b_{[η,ξ]_r}, as a matrix on m*.
inline Mat curvature(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r, const ConnectionMap &b,
                     const Vec &eta, const Vec &xi) {
  const Mat be = b.op(eta), bx = b.op(xi);
  return commutator(be, bx) - b.op(mstar_bracket(L, iso, r, eta, xi));
}

inline bool torsion_free(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r, const ConnectionMap &b) {
  const std::size_t m = iso.quotient_dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c)
      if (!is_zero(torsion(L, iso, r, b, unit_vec(m, a), unit_vec(m, c)))) return false;
  return true;
}

inline bool curvature_free(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r, const ConnectionMap &b) {
  const std::size_t m = iso.quotient_dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c)
      if (!curvature(L, iso, r, b, unit_vec(m, a), unit_vec(m, c)).is_zero()) return false;
  return true;
}

struct CompatResult {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness; ///< first violating (η, ξ, ε) basis triple
};

/// r(b(η,ξ),ε) + r(ξ,b(η,ε)) = 0 on all basis triples.
inline CompatResult poisson_compat(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r,
                                   const ConnectionMap &b) {
  require_reductive(L, iso);
  const std::size_t m = iso.quotient_dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t e = 0; e < m; ++e) {
        const Vec eta = unit_vec(m, a), xi = unit_vec(m, c), eps = unit_vec(m, e);
        if (sgn(r(b(eta, xi), eps) + r(xi, b(eta, eps))) != 0) return {false, std::array<std::size_t, 3>{a, c, e}};
      }
  return {};
}

/// Infinitesimal form b(D*η, ξ) + b(η, D*ξ) = D* b(η, ξ) with D* = −D^T for the
/// induced h operators, and b(Ā^T η, Ā^T ξ) = Ā^T b(η, ξ) for the generators.
inline bool ad_invariance_check(const LieAlgebra &L, const IsotropyModel &iso, const ConnectionMap &b) {
  require_reductive(L, iso);
  const std::size_t m = iso.quotient_dim();
  for (const auto &D : induced_h_operators(L, iso)) {
    const Mat Ds = Rational(-1) * D.transpose();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c) {
        const Vec eta = unit_vec(m, a), xi = unit_vec(m, c);
        if (b(Ds * eta, xi) + b(eta, Ds * xi) != Ds * b(eta, xi)) return false;
      }
  }
  for (const auto &A : induced_generators(iso)) {
    const Mat At = A.transpose();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c) {
        const Vec eta = unit_vec(m, a), xi = unit_vec(m, c);
        if (b(At * eta, At * xi) != At * b(eta, xi)) return false;
      }
  }
  return true;
}

/// η∘l_{ξ#} − ξ∘l_{η#} = [η,ξ]_r on all basis pairs.
inline bool l_operator_identity(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  require_reductive(L, iso);
  const std::size_t m = iso.quotient_dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) {
      const Vec eta = unit_vec(m, a), xi = unit_vec(m, c);
      const Vec lhs = l_operator(L, iso, r, xi).transpose() * eta - l_operator(L, iso, r, eta).transpose() * xi;
      if (lhs != mstar_bracket(L, iso, r, eta, xi)) return false;
    }
  return true;
}

/// [D*η, ξ]_r + [η, D*ξ]_r = D*[η,ξ]_r for the induced h operators.
inline bool bracket_is_equivariant(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  require_reductive(L, iso);
  const std::size_t m = iso.quotient_dim();
  for (const auto &D : induced_h_operators(L, iso)) {
    const Mat Ds = Rational(-1) * D.transpose();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c) {
        const Vec eta = unit_vec(m, a), xi = unit_vec(m, c);
        if (mstar_bracket(L, iso, r, Ds * eta, xi) + mstar_bracket(L, iso, r, eta, Ds * xi) !=
            Ds * mstar_bracket(L, iso, r, eta, xi))
          return false;
      }
  }
  return true;
}

/// Left symmetry of η·ξ = −ξ∘l_{η#} and η·ξ − ξ·η = [η,ξ]_r on a basis of (m*)^H.
inline bool left_symmetric_on_fixed(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  const ConnectionMap b = build_connection(ConnectionKind::LeftSymmetric, L, iso, r);
  const Subspace fixed = invariant_covectors(L, iso);
  for (std::size_t i = 0; i < fixed.dim(); ++i)
    for (std::size_t j = 0; j < fixed.dim(); ++j) {
      const Vec x = fixed.vector(i), y = fixed.vector(j);
      if (b(x, y) - b(y, x) != mstar_bracket(L, iso, r, x, y)) return false;
      for (std::size_t k = 0; k < fixed.dim(); ++k) {
        const Vec z = fixed.vector(k);
        if (b(b(x, y), z) - b(x, b(y, z)) != b(b(y, x), z) - b(y, b(x, z))) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// F-connections and Nomizu maps.

/// mu[j] is the matrix of μ_{e_j}: m -> m.
struct NomizuMap {
  std::size_t m = 0;
  std::vector<Mat> mu;

  explicit NomizuMap(std::size_t m_ = 0) : m(m_), mu(m_, Mat(m_, m_)) {}

  Mat at(const Vec &u) const {
    Mat out(m, m);
    for (std::size_t j = 0; j < m; ++j)
      if (sgn(u[j]) != 0) out = out + u[j] * mu[j];
    return out;
  }
  Vec operator()(const Vec &u, const Vec &v) const { return at(u) * v; }

  bool is_zero() const {
    for (const auto &M : mu)
      if (!M.is_zero()) return false;
    return true;
  }
};

/// b_κ = 0 for every κ in ker r_#.
inline bool is_f_connection(const ConnectionMap &b, const Bivector &r) {
  const Subspace ker = kernel(r.mat);
  for (std::size_t i = 0; i < ker.dim(); ++i)
    if (!b.op(ker.vector(i)).is_zero()) return false;
  return true;
}

namespace detail {

/// Greedy standard-basis complement of Im r_# in m, or the caller's vectors.
inline std::vector<Vec> image_complement(const Bivector &r, const std::optional<std::vector<Vec>> &given) {
  const std::size_t m = r.dim();
  const Subspace im = column_space(r.mat);
  if (given) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < im.dim(); ++i) all.push_back(im.vector(i));
    for (const auto &v : *given) all.push_back(v);
    if (given->size() != m - im.dim() || rank(Mat::from_rows(all, m)) != m)
      throw Error(ErrorKind::InvalidComplement, "vectors are not complementary to Im r_#");
    return *given;
  }
  std::vector<Vec> out;
  for (auto i : greedy_complement_indices(im)) out.push_back(unit_vec(m, i));
  return out;
}

} // namespace detail

/// μ_u = (b_η)^T when u = r_# η, and μ = 0 on the complement V of Im r_#.
inline NomizuMap f_connection_to_nomizu(const ConnectionMap &b, const Bivector &r,
                                        const std::optional<std::vector<Vec>> &complement = std::nullopt) {
  if (!is_f_connection(b, r)) throw Error(ErrorKind::NotAnFConnection, "b_eta is nonzero for some eta with eta# = 0");
  const std::size_t m = r.dim();
  const Subspace im = column_space(r.mat);
  const std::vector<Vec> V = detail::image_complement(r, complement);
  // basis P = [Im basis | V] with the value of μ on each column
  std::vector<Vec> cols;
  std::vector<Mat> vals;
  for (std::size_t i = 0; i < im.dim(); ++i) {
    const Vec u = im.vector(i);
    const Vec eta = solve_or_throw(r.mat, u, "image vector");
    cols.push_back(u);
    vals.push_back(b.op(eta).transpose());
  }
  for (const auto &v : V) {
    cols.push_back(v);
    vals.push_back(Mat(m, m));
  }
  NomizuMap out(m);
  if (m == 0) return out;
  const Mat Pinv = *inverse(Mat::from_cols(cols, m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(Pinv(i, j)) != 0) out.mu[j] = out.mu[j] + Pinv(i, j) * vals[i];
  return out;
}

/// b(η,ξ) = (ψ_{η#})^T ξ.
inline ConnectionMap nomizu_to_contravariant(const NomizuMap &psi, const Bivector &r) {
  const std::size_t m = r.dim();
  ConnectionMap b(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Mat Mt = psi.at(r.sharp(unit_vec(m, a))).transpose();
    for (std::size_t c = 0; c < m; ++c) b.at(a, c) = Mt * unit_vec(m, c);
  }
  return b;
}

/// [D, μ_u] = μ_{Du} for the induced h operators.
inline bool nomizu_is_invariant(const LieAlgebra &L, const IsotropyModel &iso, const NomizuMap &psi) {
  const std::size_t m = iso.quotient_dim();
  for (const auto &D : induced_h_operators(L, iso))
    for (std::size_t j = 0; j < m; ++j)
      if (!(commutator(D, psi.mu[j]) == psi.at(D * unit_vec(m, j)))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Induced connection on the leaf direction Im r_#.

struct LeafConnection {
  std::vector<Vec> basis;       ///< RREF basis of Im r_# in quotient coordinates
  std::vector<Vec> complement;  ///< V, used for the projection u -> u_r
  std::vector<Vec> br;          ///< br[i*p + j] = coordinates of b^r(u_i, u_j) in `basis`
  bool torsion_free = false;
  bool symplectic = false;      ///< omega_r(b^r(u,v),w) + omega_r(v,b^r(u,w)) = 0
  bool base_flat = false;       ///< curvature of b vanishes
  bool flat = false;            ///< curvature of b^r vanishes
  bool h_criterion = false;     ///< [[u,v]_h, w] = 0 on all basis triples

  std::size_t dim() const noexcept { return basis.size(); }
};

/// η_v with <η_v, u> = omega_r(v, u_r), in quotient covector coordinates.
inline Vec leaf_covector(const IsotropyModel &iso, const Bivector &r, const Vec &v, const std::vector<Vec> &im_basis,
                         const std::vector<Vec> &V) {
  const std::size_t m = r.dim();
  std::vector<Vec> cols = im_basis;
  cols.insert(cols.end(), V.begin(), V.end());
  const Mat Pinv = *inverse(Mat::from_cols(cols, m));
  Vec eta = zero_vec(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Vec c = Pinv * unit_vec(m, j);
    Vec ur = zero_vec(m);
    for (std::size_t i = 0; i < im_basis.size(); ++i) ur = ur + c[i] * im_basis[i];
    eta[j] = leaf_form(iso, r, iso.lift(v), iso.lift(ur));
  }
  return eta;
}

inline LeafConnection induced_leaf_connection(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r,
                                              const ConnectionMap &b,
                                              const std::optional<std::vector<Vec>> &complement = std::nullopt) {
  detail::require_r_matrix(L, iso, r);
  require_reductive(L, iso);
  const std::size_t m = iso.quotient_dim();
  const Subspace im = column_space(r.mat);
  LeafConnection out;
  for (std::size_t i = 0; i < im.dim(); ++i) out.basis.push_back(im.vector(i));
  out.complement = detail::image_complement(r, complement);
  const std::size_t p = out.basis.size();
  const Mat Bm = p == 0 ? Mat(m, 0) : Mat::from_cols(out.basis, m);
  auto coords = [&](const Vec &u) { return solve_or_throw(Bm, u, "vector outside Im r_#"); };
  auto from_coords = [&](const Vec &c) { return Bm * c; };

  std::vector<Vec> eta;
  for (const auto &u : out.basis) eta.push_back(leaf_covector(iso, r, u, out.basis, out.complement));
  out.br.assign(p * p, zero_vec(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) out.br[i * p + j] = coords(r.sharp(b(eta[i], eta[j])));

  auto brv = [&](const Vec &x, const Vec &y) { // x, y in basis coordinates
    Vec acc = zero_vec(p);
    for (std::size_t i = 0; i < p; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (sgn(y[j]) != 0) acc = acc + (x[i] * y[j]) * out.br[i * p + j];
    }
    return acc;
  };
  auto omega = [&](const Vec &x, const Vec &y) {
    return leaf_form(iso, r, iso.lift(from_coords(x)), iso.lift(from_coords(y)));
  };

  out.torsion_free = out.symplectic = out.flat = out.h_criterion = true;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const Vec ui = unit_vec(p, i), uj = unit_vec(p, j);
      const Vec bm = coords(m_bracket(L, iso, out.basis[i], out.basis[j]));
      if (brv(ui, uj) - brv(uj, ui) != bm) out.torsion_free = false;
      const Vec bh = h_bracket(L, iso, out.basis[i], out.basis[j]);
      for (std::size_t k = 0; k < p; ++k) {
        const Vec uk = unit_vec(p, k);
        if (sgn(omega(brv(ui, uj), uk) + omega(uj, brv(ui, uk))) != 0) out.symplectic = false;
        const Vec hw = L.bracket(bh, iso.lift(out.basis[k]));
        if (!is_zero(hw)) out.h_criterion = false;
        const Vec curv = brv(ui, brv(uj, uk)) - brv(uj, brv(ui, uk)) - brv(bm, uk) - coords(iso.project(hw));
        if (!is_zero(curv)) out.flat = false;
      }
    }
  out.base_flat = curvature_free(L, iso, r, b);
  return out;
}

// ---------------------------------------------------------------------------
// The pair (W, omega) attached to an r-matrix on a reductive pair.

struct WOmegaPair {
  std::vector<Vec> basis; ///< RREF basis of W = Im r_# in quotient coordinates
  Mat omega;              ///< omega_r restricted to W
  bool closed = false;    ///< [W, W]_m ⊆ W
  bool cocycle = false;   ///< ω([x,y]_m, z) + ω([z,x]_m, y) + ω([y,z]_m, x) = 0
};

inline WOmegaPair w_omega_pair(const LieAlgebra &L, const IsotropyModel &iso, const Bivector &r) {
  require_reductive(L, iso);
  detail::require_r_matrix(L, iso, r);
  const Subspace W = column_space(r.mat);
  WOmegaPair out;
  for (std::size_t i = 0; i < W.dim(); ++i) out.basis.push_back(W.vector(i));
  const std::size_t p = out.basis.size();
  auto omega = [&](const Vec &x, const Vec &y) { return leaf_form(iso, r, iso.lift(x), iso.lift(y)); };
  out.omega = Mat(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) out.omega(i, j) = omega(out.basis[i], out.basis[j]);
  out.closed = true;
  for (std::size_t i = 0; i < p && out.closed; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (!W.contains(m_bracket(L, iso, out.basis[i], out.basis[j]))) {
        out.closed = false;
        break;
      }
  if (!out.closed) return out;
  out.cocycle = true;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      for (std::size_t k = j + 1; k < p; ++k) {
        const Vec &x = out.basis[i], &y = out.basis[j], &z = out.basis[k];
        if (sgn(omega(m_bracket(L, iso, x, y), z) + omega(m_bracket(L, iso, z, x), y) +
                omega(m_bracket(L, iso, y, z), x)) != 0)
          out.cocycle = false;
      }
  return out;
}

} // namespace lieps
