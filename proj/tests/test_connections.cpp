#include <gtest/gtest.h>

#include "support.hpp"

using namespace lieps;
using lieps::testing::biv;
using lieps::testing::Rng;
using lieps::testing::space_of;
using lieps::testing::V;

namespace {

ConnectionMap random_connection(std::size_t m, Rng &rng) {
  ConnectionMap b(m);
  for (auto &v : b.entries) v = rng.vec(m);
  return b;
}

constexpr ConnectionKind kAllKinds[] = {ConnectionKind::Canonical, ConnectionKind::Natural,
                                        ConnectionKind::LeftSymmetric, ConnectionKind::Fedosov};

} // namespace

TEST(Reductive, Flags) {
  const auto gl = space_of("gl_sym", 2);
  EXPECT_TRUE(check_reductive(gl.g, gl.iso));
  EXPECT_TRUE(is_symmetric(gl.g, gl.iso));
  const auto so = space_of("so4_grassmann");
  EXPECT_TRUE(is_symmetric(so.g, so.iso));

  // oscillator with h = span{t}: m = span{u, v, w} is stable but [u, v] = w
  const auto osc = lieps::testing::random_bases()[10];
  ASSERT_EQ(osc.name, "osc");
  const auto iso = make_isotropy(osc.g, {V({0, 0, 0, 1})});
  EXPECT_TRUE(check_reductive(osc.g, iso));
  EXPECT_FALSE(is_symmetric(osc.g, iso));

  // sl2 with h = span{H, E}: no ad(h)-stable complement along F
  const auto sl2 = lieps::testing::random_bases()[5];
  ASSERT_EQ(sl2.name, "sl2");
  const auto borel = make_isotropy(sl2.g, {V({1, 0, 0}), V({0, 1, 0})});
  EXPECT_FALSE(check_reductive(sl2.g, borel));
  try {
    build_connection(ConnectionKind::Natural, sl2.g, borel, Bivector::zero(1));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotReductive);
  }
}

TEST(MStarBracket, AgreesWithQuotientBracket) {
  for (const auto &c : lieps::testing::catalog_cases()) {
    const auto &M = c.space;
    if (!check_reductive(M.g, M.iso)) continue;
    for (const auto &t : c.r_matrices) {
      const Bivector r = biv(M, t);
      const std::size_t m = M.iso.quotient_dim();
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          EXPECT_EQ(mstar_bracket(M.g, M.iso, r, unit_vec(m, a), unit_vec(m, b)),
                    r_bracket(M.g, M.iso, r, unit_vec(m, a), unit_vec(m, b)))
              << c.name << " " << t;
      EXPECT_TRUE(check_reductive_r_matrix(M.g, M.iso, r));
    }
  }
  const auto P = space_of("iso11");
  EXPECT_FALSE(check_reductive_r_matrix(P.g, P.iso, biv(P, "(e1-e2)^e3")));
}

TEST(Builders, IdentitiesOnCatalog) {
  for (const auto &c : lieps::testing::catalog_cases()) {
    const auto &M = c.space;
    if (!check_reductive(M.g, M.iso)) continue;
    for (const auto &t : c.r_matrices) {
      const Bivector r = biv(M, t);
      const auto natural = build_connection(ConnectionKind::Natural, M.g, M.iso, r);
      const auto fedosov = build_connection(ConnectionKind::Fedosov, M.g, M.iso, r);
      const auto canonical = build_connection(ConnectionKind::Canonical, M.g, M.iso, r);
      EXPECT_TRUE(torsion_free(M.g, M.iso, r, natural)) << c.name << " " << t;
      EXPECT_TRUE(torsion_free(M.g, M.iso, r, fedosov)) << c.name << " " << t;
      EXPECT_TRUE(poisson_compat(M.g, M.iso, r, fedosov).ok) << c.name << " " << t;
      EXPECT_TRUE(curvature_free(M.g, M.iso, r, canonical));
      EXPECT_TRUE(l_operator_identity(M.g, M.iso, r)) << c.name << " " << t;
      EXPECT_TRUE(bracket_is_equivariant(M.g, M.iso, r)) << c.name << " " << t;
      for (auto k : kAllKinds) EXPECT_TRUE(ad_invariance_check(M.g, M.iso, build_connection(k, M.g, M.iso, r)));
    }
  }
}

TEST(Builders, CanonicalTorsionIsMinusBracket) {
  const auto M = space_of("heisenberg", 1);
  const Bivector r = biv(M, "u1^w");
  const auto b = build_connection(ConnectionKind::Canonical, M.g, M.iso, r);
  EXPECT_TRUE(b.is_zero());
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c)
      EXPECT_EQ(torsion(M.g, M.iso, r, b, unit_vec(3, a), unit_vec(3, c)),
                Rational(-1) * mstar_bracket(M.g, M.iso, r, unit_vec(3, a), unit_vec(3, c)));
}

TEST(Builders, KindNames) {
  for (auto k : kAllKinds) EXPECT_EQ(parse_connection_kind(to_string(k)), k);
  EXPECT_THROW(parse_connection_kind("levi-civita"), Error);
}

TEST(Compat, RandomConnectionFailsWithWitness) {
  const auto M = space_of("gl_sym", 2);
  const Bivector r = biv(M, "(S11-S22)^S12");
  Rng rng(5);
  const auto b = random_connection(3, rng);
  const auto res = poisson_compat(M.g, M.iso, r, b);
  ASSERT_FALSE(res.ok);
  ASSERT_TRUE(res.witness.has_value());
  const auto [a, c, e] = *res.witness;
  const Vec eta = unit_vec(3, a), xi = unit_vec(3, c), eps = unit_vec(3, e);
  EXPECT_NE(r(b(eta, xi), eps) + r(xi, b(eta, eps)), 0);
}

TEST(AdInvariance, RandomConnectionOnGrassmannianFails) {
  const auto M = space_of("so4_grassmann");
  Rng rng(17);
  EXPECT_FALSE(ad_invariance_check(M.g, M.iso, random_connection(4, rng)));
}

TEST(LeftSymmetric, OnFixedCovectors) {
  for (const auto &c : lieps::testing::catalog_cases()) {
    const auto &M = c.space;
    if (!check_reductive(M.g, M.iso)) continue;
    for (const auto &t : c.r_matrices) EXPECT_TRUE(left_symmetric_on_fixed(M.g, M.iso, biv(M, t))) << c.name << " " << t;
  }
}

TEST(Nomizu, RoundTrip) {
  Rng rng(3);
  for (const auto &c : lieps::testing::catalog_cases()) {
    const auto &M = c.space;
    for (const auto &t : c.r_matrices) {
      const Bivector r = biv(M, t);
      const std::size_t m = r.dim();
      NomizuMap psi(m);
      for (auto &A : psi.mu)
        for (std::size_t i = 0; i < m; ++i) A.set_col(i, rng.vec(m));
      const ConnectionMap b = nomizu_to_contravariant(psi, r);
      ASSERT_TRUE(is_f_connection(b, r));
      const NomizuMap back = f_connection_to_nomizu(b, r);
      EXPECT_EQ(nomizu_to_contravariant(back, r), b) << c.name << " " << t;
      const Subspace im = column_space(r.mat);
      for (std::size_t i = 0; i < im.dim(); ++i) EXPECT_EQ(back.at(im.vector(i)), psi.at(im.vector(i)));
    }
  }
}

TEST(Nomizu, RejectsNonFConnection) {
  const auto M = space_of("heisenberg", 1);
  const Bivector r = biv(M, "u1^w");
  Rng rng(8);
  const auto b = random_connection(3, rng);
  EXPECT_FALSE(is_f_connection(b, r));
  try {
    f_connection_to_nomizu(b, r);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnFConnection);
  }
  EXPECT_TRUE(is_f_connection(build_connection(ConnectionKind::Canonical, M.g, M.iso, r), r));
}

TEST(Nomizu, ZeroMapIsInvariant) {
  const auto M = space_of("so4_grassmann");
  EXPECT_TRUE(nomizu_is_invariant(M.g, M.iso, NomizuMap(4)));
  NomizuMap psi(4);
  psi.mu[0](0, 1) = 1;
  EXPECT_FALSE(nomizu_is_invariant(M.g, M.iso, psi));
}

TEST(LeafConnection, GrassmannianFedosov) {
  const auto M = space_of("so4_grassmann");
  const Bivector r = biv(M, "(e1-e4)^(e2+e3)");
  const auto b = build_connection(ConnectionKind::Fedosov, M.g, M.iso, r);
  const auto lc = induced_leaf_connection(M.g, M.iso, r, b);
  const auto other = induced_leaf_connection(M.g, M.iso, r, b, std::vector<Vec>{V({1, 0, 0, 1}), V({0, 1, -1, 0})});
  EXPECT_EQ(lc.br, other.br);
  EXPECT_EQ(lc.dim(), 2u);
  EXPECT_TRUE(lc.torsion_free);
  EXPECT_TRUE(lc.symplectic);
  EXPECT_TRUE(lc.base_flat);
  EXPECT_EQ(lc.flat, lc.h_criterion);
  EXPECT_THROW(induced_leaf_connection(M.g, M.iso, r, b, std::vector<Vec>{V({1, 0, 0, -1}), V({0, 1, 0, 0})}), Error);
}

TEST(LeafConnection, CatalogFedosov) {
  for (const auto &c : lieps::testing::catalog_cases()) {
    const auto &M = c.space;
    if (!check_reductive(M.g, M.iso)) continue;
    for (const auto &t : c.r_matrices) {
      const Bivector r = biv(M, t);
      const auto lc = induced_leaf_connection(M.g, M.iso, r, build_connection(ConnectionKind::Fedosov, M.g, M.iso, r));
      EXPECT_TRUE(lc.torsion_free) << c.name << " " << t;
      EXPECT_TRUE(lc.symplectic) << c.name << " " << t;
      if (lc.base_flat) {
        EXPECT_EQ(lc.flat, lc.h_criterion) << c.name << " " << t;
      }
    }
  }
}

TEST(WOmega, SymmetricPairsSatisfyCocycle) {
  for (const auto &c : lieps::testing::catalog_cases()) {
    const auto &M = c.space;
    if (!is_symmetric(M.g, M.iso)) continue;
    for (const auto &t : c.r_matrices) {
      const auto p = w_omega_pair(M.g, M.iso, biv(M, t));
      EXPECT_TRUE(p.omega.is_skew());
      EXPECT_TRUE(p.cocycle) << c.name << " " << t;
    }
  }
}

TEST(Torsion, AntisymmetricForArbitraryB) {
  const auto M = space_of("so4_grassmann");
  const Bivector r = biv(M, "e1^e2 + e3^e4");
  Rng rng(21);
  const auto b = random_connection(4, rng);
  for (int t = 0; t < 10; ++t) {
    const Vec eta = rng.vec(4), xi = rng.vec(4);
    EXPECT_EQ(torsion(M.g, M.iso, r, b, eta, xi), Rational(-1) * torsion(M.g, M.iso, r, b, xi, eta));
  }
}
