#include <gtest/gtest.h>

#include "picardlab/arith.hpp"
#include "picardlab/polynomial.hpp"

using namespace picardlab;

TEST(Arith, PerfectSquares) {
  EXPECT_TRUE(is_perfect_square(0));
  EXPECT_TRUE(is_perfect_square(64));
  EXPECT_FALSE(is_perfect_square(63));
  EXPECT_FALSE(is_perfect_square(-4));
}

TEST(Arith, Rendering) {
  EXPECT_EQ(to_string(Rational(16, 11)), "16/11");
  EXPECT_EQ(to_string(Rational(8, 2)), "4");
  EXPECT_EQ(to_string(Integer(-7)), "-7");
  EXPECT_EQ(to_decimal(Rational(6, 79), 6), "0.075949");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 2), "-0.33");
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(to_int64(Integer("100000000000000000000")), std::overflow_error);
}

using P2 = Polynomial<2>;

TEST(Polynomial, ExpandsSquareOfBinomial) {
  const P2 x = P2::variable(0), y = P2::variable(1);
  const P2 s = (x + y).pow(2);
  EXPECT_EQ(s, x * x + Rational(2) * x * y + y * y);
  EXPECT_EQ(s.total_degree(), 2);
  EXPECT_TRUE(s.is_homogeneous());
  EXPECT_EQ(s.to_string({"x", "y"}), "x^2 + 2*x*y + y^2");
}

TEST(Polynomial, TruncatedMultiplyDropsHighTerms) {
  const P2 x = P2::variable(0), y = P2::variable(1);
  const P2 f = P2::constant(1) + x + y * y;
  const P2 g = P2::multiply(f, f, 2);
  EXPECT_EQ(g, P2::constant(1) + Rational(2) * x + x * x + Rational(2) * y * y);
}

TEST(Polynomial, ComposeAndDerivative) {
  const P2 x = P2::variable(0), y = P2::variable(1);
  const P2 f = x * x * y - y;
  const P2 g = f.compose<2>({x + y, y});
  EXPECT_EQ(g, (x + y) * (x + y) * y - y);
  EXPECT_EQ(f.derivative(0), Rational(2) * x * y);
  EXPECT_EQ(f.evaluate({Rational(2), Rational(3)}), Rational(9));
  EXPECT_EQ(f.order(), 1);
  EXPECT_TRUE(P2().is_zero());
  EXPECT_EQ(P2().total_degree(), -1);
}

TEST(Univariate, GcdAndSquarefree) {
  // (t-1)^2 (t+2) = t^3 - 3t + 2
  const UnivariatePolynomial f({Rational(2), Rational(-3), Rational(0), Rational(1)});
  EXPECT_EQ(f.squarefree_part().degree(), 2);
  const UnivariatePolynomial g = UnivariatePolynomial::gcd(f, f.derivative());
  EXPECT_EQ(g, UnivariatePolynomial({Rational(-1), Rational(1)}));
  const auto [q, r] = UnivariatePolynomial::divmod(f, g);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q.evaluate(1), Rational(0));
}
