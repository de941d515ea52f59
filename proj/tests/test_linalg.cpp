#include <gtest/gtest.h>

#include "support.hpp"

using namespace lieps;
using lieps::testing::Rng;
using lieps::testing::V;

namespace {

Mat random_mat(Rng &rng, std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational();
  return m;
}

/// Rank-deficient on purpose: the last rows are combinations of the first.
Mat random_low_rank(Rng &rng, std::size_t r, std::size_t c, std::size_t k) {
  Mat a = random_mat(rng, r, k), b = random_mat(rng, k, c);
  return a * b;
}

} // namespace


TEST(Rational, GrammarAndLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(to_string(parse_rational("010")), "10");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  for (const char *bad : {"", "-", "1/", "/2", "1/0", "1/-2", "1.5", "a", "1/2/3", " 1"})
    EXPECT_THROW(parse_rational(bad), Error) << bad;
}

TEST(Rational, ArithmeticStaysReduced) {
  Rational a(1, 6), b(1, 3);
  Rational s = a + b;
  EXPECT_EQ(s.get_num(), 1);
  EXPECT_EQ(s.get_den(), 2);
  Rational p = Rational(2, 3) * Rational(3, 1);
  EXPECT_EQ(to_string(p), "2");
}

TEST(Rref, IdentityAndRankOne) {
  auto [r, piv] = rref(Mat::identity(3));
  EXPECT_EQ(r, Mat::identity(3));
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1, 2}));

  auto [r2, piv2] = rref(Mat::from_rows({V({2, 4}), V({1, 2})}, 2));
  EXPECT_EQ(r2, Mat::from_rows({V({1, 2}), V({0, 0})}, 2));
  EXPECT_EQ(piv2, (std::vector<std::size_t>{0}));
}

TEST(Rref, IdempotentOnRandomMatrices) {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Mat m = t % 2 ? random_mat(rng, 10, 10) : random_low_rank(rng, 10, 10, 4);
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.pivots, twice.pivots);
  }
}

TEST(Rref, IsDeterministic) {
  Rng a(5), b(5);
  const Mat x = random_low_rank(a, 7, 9, 3), y = random_low_rank(b, 7, 9, 3);
  EXPECT_EQ(rref(x).reduced, rref(y).reduced);
}

TEST(Kernel, TrivialCases) {
  EXPECT_EQ(kernel(Mat(2, 3)).dim(), 3u);
  EXPECT_EQ(kernel(Mat::identity(4)).dim(), 0u);
}

TEST(Kernel, VectorsAnnihilateAndRankNullity) {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 2 + rng.index(6), c = 2 + rng.index(8);
    const Mat m = random_low_rank(rng, r, c, 1 + rng.index(3));
    const Subspace k = kernel(m);
    EXPECT_EQ(k.dim() + rank(m), c);
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(m * k.vector(i)));
  }
}

TEST(Solve, FreeVariablesAreZero) {
  EXPECT_EQ(*solve(Mat::identity(3), V({1, 2, 3})), V({1, 2, 3}));
  EXPECT_EQ(*solve(Mat::from_rows({V({1, 1})}, 2), V({2})), V({2, 0}));
  EXPECT_FALSE(solve(Mat::from_rows({V({1, 1}), V({2, 2})}, 2), V({1, 3})).has_value());
  EXPECT_THROW(solve_or_throw(Mat::from_rows({V({0})}, 1), V({1}), "x"), Error);
}

TEST(Subspace, CanonicalEquality) {
  const Subspace a = Subspace::span({V({1, 2, 3}), V({0, 1, 1})}, 3);
  const Subspace b = Subspace::span({V({1, 3, 4}), V({2, 4, 6}), V({1, 1, 2})}, 3);
  EXPECT_EQ(a, b);
  const Mat &B = a.basis();
  EXPECT_EQ(B, Mat::from_rows({V({1, 0, 1}), V({0, 1, 1})}, 3));
}

TEST(Subspace, SumAndIntersect) {
  const Subspace e1 = Subspace::span({V({1, 0})}, 2), e2 = Subspace::span({V({0, 1})}, 2);
  EXPECT_EQ(intersect(e1, e2).dim(), 0u);
  EXPECT_EQ(sum(e1, e2), Subspace::full(2));
  const Subspace big = Subspace::span({V({1, 0, 0}), V({0, 1, 0})}, 3), small = Subspace::span({V({1, 1, 0})}, 3);
  EXPECT_EQ(intersect(small, big), small);
  EXPECT_TRUE(contains(big, V({3, -1, 0})));
  EXPECT_FALSE(contains(big, V({0, 0, 1})));
  EXPECT_THROW(sum(e1, big), Error);
}

TEST(Subspace, DimensionFormulaOnRandomPairs) {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng.index(5);
    const Subspace a = Subspace::span(random_low_rank(rng, 1 + rng.index(n), n, 1 + rng.index(n)));
    const Subspace b = Subspace::span(random_low_rank(rng, 1 + rng.index(n), n, 1 + rng.index(n)));
    const Subspace i = intersect(a, b);
    EXPECT_EQ(a.dim() + b.dim(), sum(a, b).dim() + i.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
  }
}

TEST(Inverse, RoundTrip) {
  Rng rng(3);
  const Mat m = random_mat(rng, 5, 5);
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Mat::identity(5));
  EXPECT_FALSE(inverse(Mat::from_rows({V({1, 2}), V({2, 4})}, 2)).has_value());
}

TEST(GreedyComplement, PicksLowestIndices) {
  const Subspace s = Subspace::span({V({1, 1, 0, 0})}, 4);
  EXPECT_EQ(greedy_complement_indices(s), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(greedy_complement_indices(Subspace(3)), (std::vector<std::size_t>{0, 1, 2}));
}
