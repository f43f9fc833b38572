#include <gtest/gtest.h>

#include <random>

#include "hypercross/error.hpp"
#include "hypercross/lp.hpp"
#include "hypercross/matrix.hpp"
#include "oracles.hpp"

namespace hypercross {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational r = Rational::parse("-6/4");
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational::parse("10/5").str(), "2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("1/-2"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_EQ(parse_rational_list("1,3/2,-4").size(), 3u);
}

TEST(Rational, AdditionIsExactlyInvertible) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = oracle::random_rational(rng, 1000);
    const Rational b = oracle::random_rational(rng, 1000);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Det, SmallCases) {
  EXPECT_EQ(det(Matrix::identity(3)), Rational(1));
  EXPECT_EQ(det(Matrix{{1, 1}, {2, 4}}), Rational(2));
  EXPECT_THROW(det(Matrix(2, 3)), Error);
}

TEST(Det, LiftedVandermondeMatchesProductFormula) {
  // d = 3: rows t, t^2, t^3, 1 over four distinct parameters.
  const RationalVector ts{Rational(-2), Rational(1, 2), Rational(3), Rational(7, 3)};
  Matrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    m(0, j) = ts[j];
    m(1, j) = ts[j] * ts[j];
    m(2, j) = ts[j] * ts[j] * ts[j];
    m(3, j) = 1;
  }
  const Rational expected = oracle::lifted_vandermonde(ts);
  EXPECT_FALSE(expected.is_zero());
  EXPECT_EQ(det(m), expected);
}

TEST(Det, ProductRuleOnRandomMatrices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Matrix a = oracle::random_matrix(rng, n, n);
    const Matrix b = oracle::random_matrix(rng, n, n);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(NullSpace, HandElimination) {
  const auto basis = null_space_basis(Matrix{{1, 0, 1}, {0, 1, 1}});
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (RationalVector{-1, -1, 1}));
}

TEST(NullSpace, FullRankSquareIsEmpty) {
  EXPECT_TRUE(null_space_basis(Matrix{{1, 2}, {3, 4}}).empty());
}

TEST(NullSpace, RandomMatricesGiveIndependentKernelVectors) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = rows + trial % 3;
    Matrix m = oracle::random_matrix(rng, rows, cols);
    if (trial % 5 == 0 && rows > 1) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2;  // force rank loss
    }
    const auto basis = null_space_basis(m);
    EXPECT_EQ(basis.size(), cols - rank(m));
    for (const auto& v : basis)
      for (const auto& x : m * v) EXPECT_TRUE(x.is_zero());
    if (!basis.empty()) EXPECT_EQ(rank(Matrix::from_columns(basis)), basis.size());
    EXPECT_EQ(null_space_basis(m), basis);  // deterministic
  }
}

TEST(Lp, SymmetricSlack) {
  // maximize t: l1 + l2 = 1, l1 - l2 = 0, l_i = t + s_i.
  // Variables: t, s1, s2.
  LpProblem lp{Matrix{{2, 1, 1}, {0, 1, -1}}, {1, 0}, 0};
  const LpResult r = lp_max_slack(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.optimum, Rational(1, 2));
}

TEST(Lp, Infeasible) {
  LpProblem lp{Matrix{{1}, {1}}, {1, 0}, 0};
  EXPECT_EQ(lp_max_slack(lp).status, LpStatus::kInfeasible);
}

TEST(Lp, Unbounded) {
  LpProblem lp{Matrix{{1, -1}}, {0}, 0};
  EXPECT_EQ(lp_max_slack(lp).status, LpStatus::kUnbounded);
}

TEST(Lp, MalformedShapes) {
  EXPECT_THROW(lp_max_slack(LpProblem{Matrix(1, 0), {0}, 0}), Error);
  EXPECT_THROW(lp_max_slack(LpProblem{Matrix(2, 2), {0}, 0}), Error);
  EXPECT_THROW(lp_max_slack(LpProblem{Matrix(1, 2), {0}, 5}), Error);
}

TEST(Lp, RedundantAndDegenerateRows) {
  // x0 + x1 = 1 stated twice plus a zero row; maximize x1.
  LpProblem lp{Matrix{{1, 1}, {1, 1}, {0, 0}}, {1, 1, 0}, 1};
  const LpResult r = lp_max_slack(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.optimum, Rational(1));
}

TEST(Lp, WitnessAttainsOptimumOnRandomPolytopes) {
  std::mt19937_64 rng(23);
  int optimal = 0;
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = rows + 2;
    // Feasible by construction (rhs = A x0, x0 >= 0) and bounded by a
    // final row fixing the coordinate sum.
    Matrix a = oracle::random_matrix(rng, rows + 1, cols);
    RationalVector x0(cols);
    for (auto& x : x0) x = oracle::random_rational(rng);
    for (std::size_t c = 0; c < cols; ++c) {
      if (x0[c].sign() < 0) x0[c] = -x0[c];
      a(rows, c) = 1;
    }
    LpProblem lp{a, a * x0, static_cast<std::size_t>(trial) % cols};
    const LpResult r = lp_max_slack(lp);
    const LpResult again = lp_max_slack(lp);
    EXPECT_EQ(r.status, again.status);
    if (r.status != LpStatus::kOptimal) continue;
    ++optimal;
    EXPECT_EQ(r.witness, again.witness);
    EXPECT_EQ(r.witness[lp.objective], r.optimum);
    EXPECT_GE(r.optimum, x0[lp.objective]);  // x0 is feasible
    for (const auto& x : r.witness) EXPECT_GE(x.sign(), 0);
    EXPECT_EQ(lp.constraints * r.witness, lp.rhs);
    nontrivial += r.witness != x0;
  }
  EXPECT_EQ(optimal, 60);
  EXPECT_GT(nontrivial, 0);
}

}  // namespace
}  // namespace hypercross
