#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lieps/bivector_syntax.hpp"
#include "lieps/catalog.hpp"
#include "lieps/connections.hpp"

namespace lieps::testing {

inline Vec V(std::initializer_list<Rational> xs) { return Vec(xs); }

inline Bivector biv(const HomogeneousSpace &M, const std::string &text) {
  return parse_bivector(text, M.iso.complement_labels);
}

inline HomogeneousSpace space_of(const std::string &name, std::size_t n = 1, const std::string &of = "heisenberg") {
  BuiltinParams p;
  p.n = n;
  p.of = of;
  return builtin(name, p).space();
}

/// A named space with the r-matrices it is tested against.
struct CatalogCase {
  std::string name;
  HomogeneousSpace space;
  std::vector<std::string> r_matrices;
};

inline std::vector<CatalogCase> catalog_cases() {
  std::vector<CatalogCase> out;
  out.push_back({"abelian(3)", space_of("abelian", 3), {"e1^e2", "e1^e2 + 2*e2^e3"}});
  out.push_back({"heisenberg(1)", space_of("heisenberg", 1), {"u1^w", "v1^w", "u1^w + v1^w"}});
  out.push_back({"heisenberg(2)", space_of("heisenberg", 2), {"u1^w", "(u1 + 2 v2)^w", "(u1+u2+v1-v2)^w"}});
  out.push_back({"iso11", space_of("iso11"), {"e1^e2", "-3*e1^e2"}});
  out.push_back({"gl_sym(2)", space_of("gl_sym", 2), {"(S11-S22)^S12"}});
  out.push_back({"so4_grassmann",
                 space_of("so4_grassmann"),
                 {"(e1-e4)^(e2+e3)", "e1^e2 + e3^e4", "e1^e3 + e2^e4", "2 e1^e2 + 2 e3^e4 + e1^e3 + e2^e4"}});
  out.push_back({"double(heisenberg(1))", space_of("double", 1, "heisenberg"), {"m_u1^m_w", "(m_u1 - m_v1)^m_w"}});
  out.push_back({"double(iso11)", space_of("double", 1, "iso11"), {}});
  return out;
}

// ---------------------------------------------------------------------------
// Test-only oracle: the cyclic expression evaluated by raw index loops over
// the structure constants, independent of the library's bracket helpers.
//
// With P = lift matrix (eta# = P eta), the value on (e_a*, e_b*, e_c*) of h°
// basis covectors Q_a = q^T e_a is
//   -Σ Q_a[k] c(i,j,k) (P Q_b)[i] (P Q_c)[j] - (cyclic).
inline std::vector<Rational> oracle_cyclic(const LieAlgebra &L, const Mat &q, const Mat &P) {
  const std::size_t n = L.dim(), m = q.rows();
  std::vector<std::vector<Rational>> Q(m, std::vector<Rational>(n)), S(m, std::vector<Rational>(n, Rational(0)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < n; ++k) Q[a][k] = q(a, k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) S[a][i] += P(i, k) * Q[a][k];
  auto pair = [&](std::size_t a, std::size_t b, std::size_t c) {
    Rational v = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) v += Q[a][k] * L.c(i, j, k) * S[b][i] * S[c][j];
    return v;
  };
  std::vector<Rational> out(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) out[(a * m + b) * m + c] = -pair(a, b, c) - pair(b, c, a) - pair(c, a, b);
  return out;
}

// ---------------------------------------------------------------------------
// Randomized instances.

struct RandomInstance {
  std::string base;
  LieAlgebra g;
  IsotropyModel iso;
  Bivector r;
};

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Rational rational() {
    const long num = integer(-5, 5), den = integer(1, 3);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto &x : v) x = rational();
    return v;
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

private:
  std::mt19937_64 gen_;
};

/// Structure constants of L in the basis given by the columns of P.
inline LieAlgebra change_basis(const LieAlgebra &L, const Mat &P) {
  const std::size_t n = L.dim();
  const Mat Pinv = *inverse(P);
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec z = Pinv * L.bracket(P.col(i), P.col(j));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = z[k];
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return LieAlgebra(labels, c);
}

struct BaseCase {
  std::string name;
  LieAlgebra g;
  std::vector<std::vector<Vec>> subalgebras;
};

inline std::vector<BaseCase> random_bases() {
  std::vector<BaseCase> out;
  auto add = [&](std::string name, LieAlgebra g, std::vector<std::vector<Vec>> subs) {
    out.push_back({std::move(name), std::move(g), std::move(subs)});
  };
  add("abelian(3)", LieAlgebra::abelian(3), {});
  add("abelian(4)", LieAlgebra::abelian(4), {});
  add("heisenberg(1)", builtin_heisenberg(1).algebra(), {{unit_vec(3, 2)}, {unit_vec(3, 0)}});
  add("heisenberg(2)", builtin_heisenberg(2).algebra(), {{unit_vec(5, 4)}, {unit_vec(5, 0), unit_vec(5, 4)}});
  add("iso11", builtin_iso11().algebra(), {{unit_vec(3, 2)}, {unit_vec(3, 0), unit_vec(3, 1)}});
  {
    Mat H(2, 2), E(2, 2), F(2, 2);
    H(0, 0) = 1;
    H(1, 1) = -1;
    E(0, 1) = 1;
    F(1, 0) = 1;
    add("sl2", matrix_lie_algebra({"H", "E", "F"}, {H, E, F}), {{unit_vec(3, 0)}, {unit_vec(3, 0), unit_vec(3, 1)}});
  }
  {
    auto F = [](std::size_t i, std::size_t j) { return elementary(3, i, j) - elementary(3, j, i); };
    add("so3", matrix_lie_algebra({"F12", "F13", "F23"}, {F(0, 1), F(0, 2), F(1, 2)}), {{unit_vec(3, 0)}});
  }
  add("gl_sym(2)", builtin_gl_sym(2).algebra(), {{unit_vec(4, 3)}, {unit_vec(4, 0), unit_vec(4, 2)}});
  add("so4", builtin_so4_grassmann().algebra(), {{unit_vec(6, 4), unit_vec(6, 5)}, {unit_vec(6, 4)}});
  {
    // aff(1) x aff(1): [a, b] = b, [c, d] = d
    add("aff1xaff1",
        LieAlgebra::from_brackets({"a", "b", "c", "d"}, {{0, 1, {{1, Rational(1)}}}, {2, 3, {{3, Rational(1)}}}}),
        {{unit_vec(4, 1)}, {unit_vec(4, 0), unit_vec(4, 2)}});
  }
  {
    // heisenberg(1) x R with an outer derivation: [t, u] = u, [t, v] = -v
    add("osc",
        LieAlgebra::from_brackets({"u", "v", "w", "t"},
                                  {{0, 1, {{2, Rational(1)}}}, {0, 3, {{0, Rational(-1)}}}, {1, 3, {{1, Rational(1)}}}}),
        {{unit_vec(4, 3)}, {unit_vec(4, 2)}, {unit_vec(4, 2), unit_vec(4, 3)}});
  }
  return out;
}

/// Collects `count` instances whose invariant bivector space is nonzero.
inline std::vector<RandomInstance> random_instances(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  const auto bases = random_bases();
  std::vector<RandomInstance> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 50 * count) throw std::runtime_error("random_instances: too many rejected attempts");
    const BaseCase &base = bases[rng.index(bases.size())];
    const std::size_t n = base.g.dim();
    Mat P(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) P(i, j) = Rational(rng.integer(-2, 2));
    } while (rank(P) < n);
    const LieAlgebra g = change_basis(base.g, P);
    const Mat Pinv = *inverse(P);
    std::vector<Vec> h;
    const long mode = rng.integer(0, 2);
    if (mode == 1) {
      h.push_back(rng.vec(n));
      if (is_zero(h[0])) h.clear();
    } else if (mode == 2 && !base.subalgebras.empty()) {
      for (const auto &v : base.subalgebras[rng.index(base.subalgebras.size())]) h.push_back(Pinv * v);
    }
    IsotropyModel iso = make_isotropy(g, h);
    const auto space = invariant_bivectors(g, iso);
    if (space.dim() == 0) continue;
    Vec coords = zero_vec(space.basis.ambient_dim());
    while (is_zero(coords))
      for (std::size_t i = 0; i < space.dim(); ++i) coords = coords + Rational(rng.integer(-3, 3)) * space.basis.vector(i);
    out.push_back({base.name, g, std::move(iso), Bivector::from_wedge2(coords, space.quotient_dim)});
  }
  return out;
}

/// rt + Σ_a (h_a ∧ x_a) with random x_a.
inline Lift perturbed_lift(const IsotropyModel &iso, const Lift &lift, Rng &rng) {
  Mat out = lift.mat;
  const std::size_t n = iso.ambient_dim();
  for (std::size_t a = 0; a < iso.h_dim(); ++a) {
    const Vec x = iso.h.vector(a), y = rng.vec(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += y[i] * x[j] - x[i] * y[j];
  }
  return {out};
}

} // namespace lieps::testing
