#include "motconf/series.hpp"

#include <gtest/gtest.h>

#include "motconf/measure.hpp"

using namespace motconf;

namespace {

using QSeries = TruncatedSeries<Rational>;

QSeries from_terms(SeriesLayout layout,
                   std::initializer_list<std::pair<Monomial, Rational>> terms) {
  QSeries f(layout);
  for (const auto& [m, c] : terms) f.set_coefficient(m, c);
  return f;
}

Monomial t(int exp = 1) { return Monomial::variable(1, exp); }
Monomial t2(int exp = 1) { return Monomial::variable(2, exp); }

TEST(Series, AddCancellation) {
  SeriesLayout layout(1, 4);
  auto a = from_terms(layout, {{{}, 1}, {t(), 1}});
  auto b = from_terms(layout, {{{}, 1}, {t(), -1}});
  EXPECT_EQ(a + b, from_terms(layout, {{{}, 2}}));
}

TEST(Series, AddIdentityOverMotives) {
  SeriesLayout layout(1, 3);
  TruncatedSeries<CountScalar> f(layout);
  f.set_coefficient(Monomial::one(), CountScalar(1));
  f.set_coefficient(t(), CountScalar::lefschetz());
  TruncatedSeries<CountScalar> zero(layout);
  EXPECT_EQ(f + zero, f);
}

TEST(Series, AddTruncatesToMinOrder) {
  auto a = from_terms(SeriesLayout(1, 4), {{{}, 1}, {t(), 1}, {t(2), 1}});
  auto b = from_terms(SeriesLayout(1, 2), {{t(2), 1}});
  auto sum = a + b;
  EXPECT_EQ(sum.layout().truncation, 2);
  EXPECT_EQ(sum, from_terms(SeriesLayout(1, 2), {{{}, 1}, {t(), 1}, {t(2), 2}}));
}

TEST(Series, MulGeometricInverse) {
  SeriesLayout layout(1, 3);
  auto a = from_terms(layout, {{{}, 1}, {t(), -1}});
  auto b = from_terms(layout, {{{}, 1}, {t(), 1}, {t(2), 1}, {t(3), 1}});
  EXPECT_EQ(a * b, QSeries::one(layout));
}

TEST(Series, MulTwoVariables) {
  SeriesLayout layout(2, 4);
  auto a = from_terms(layout, {{{}, 1}, {t(), 1}});
  auto b = from_terms(layout, {{{}, 1}, {t2(), 1}});
  EXPECT_EQ(a * b,
            from_terms(layout, {{{}, 1}, {t(), 1}, {t2(), 1}, {t() * t2(), 1}}));
}

TEST(Series, MulSquareWithMotiveCoeff) {
  SeriesLayout layout(1, 4);
  TruncatedSeries<CountScalar> f(layout);
  f.set_coefficient(Monomial::one(), CountScalar(1));
  f.set_coefficient(t(), CountScalar::lefschetz());
  auto sq = f * f;
  EXPECT_EQ(sq.coefficient(t()), CountScalar::lefschetz() * Rational(2));
  EXPECT_EQ(sq.coefficient(t(2)), CountScalar::lefschetz_pow(2));
}

TEST(Series, IncompatibleLayoutsThrow) {
  auto a = QSeries::one(SeriesLayout(1, 3));
  auto b = QSeries::one(SeriesLayout(2, 3));
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(Series, Log1pOfGeometricSeries) {
  SeriesLayout layout(1, 3);
  auto geom = one_minus_monomial_pow(layout, t(), Rational(-1));  // 1/(1-t)
  auto lg = log1p(geom);
  EXPECT_EQ(lg.coefficient(t()), Rational(1));
  EXPECT_EQ(lg.coefficient(t(2)), make_rational(1, 2));
  EXPECT_EQ(lg.coefficient(t(3)), make_rational(1, 3));
}

TEST(Series, Log1pOfOneIsZero) {
  auto one = QSeries::one(SeriesLayout(1, 5));
  EXPECT_TRUE(log1p(one).is_zero_series());
}

TEST(Series, Log1pHomomorphism) {
  SeriesLayout layout(2, 4);
  auto f = from_terms(layout, {{{}, 1}, {t(), 1}});
  auto g = from_terms(layout, {{{}, 1}, {t2(), 1}});
  EXPECT_EQ(log1p(f * g), log1p(f) + log1p(g));
}

TEST(Series, Log1pRequiresUnitConstantTerm) {
  auto f = from_terms(SeriesLayout(1, 3), {{{}, 2}});
  EXPECT_THROW(log1p(f), std::domain_error);
}

TEST(Series, NaivePowBinomialCoefficients) {
  // (1/(1-t))^n has coefficients binom(n+k-1, k)
  SeriesLayout layout(1, 5);
  auto geom = one_minus_monomial_pow(layout, t(), Rational(-1));
  auto cube = naive_pow(geom, Rational(3));
  for (int k = 0; k <= 5; ++k)
    EXPECT_EQ(cube.coefficient(t(k)), binomial(Rational(3 + k - 1), k));
}

TEST(Series, NaivePowZeroExponent) {
  auto f = from_terms(SeriesLayout(1, 4), {{{}, 1}, {t(), 5}});
  EXPECT_TRUE(is_one_series(naive_pow(f, Rational(0))));
}

TEST(Series, NaivePowSquareRoot) {
  auto f = from_terms(SeriesLayout(1, 2), {{{}, 1}, {t(), 1}});
  auto root = naive_pow(f, make_rational(1, 2));
  EXPECT_EQ(root.coefficient(t()), make_rational(1, 2));
  EXPECT_EQ(root.coefficient(t(2)), make_rational(-1, 8));
  EXPECT_EQ(root * root, f);
}

TEST(Series, SubstitutePowers) {
  SeriesLayout layout(2, 4);
  auto f = from_terms(layout, {{{}, 1}, {t(), 1}, {t2(), 1}});
  auto sub = substitute_powers(f, 2);
  EXPECT_EQ(sub, from_terms(layout, {{{}, 1}, {t(2), 1}, {t2(2), 1}}));
  EXPECT_EQ(substitute_powers(f, 1), f);
}

TEST(Series, SubstitutePowersMotiveCoefficient) {
  SeriesLayout layout(1, 4);
  TruncatedSeries<CountScalar> f(layout);
  f.set_coefficient(Monomial::one(), CountScalar(1));
  f.set_coefficient(t(), CountScalar::lefschetz());
  auto sub = substitute_powers(f, 3);
  EXPECT_EQ(sub.coefficient(t(3)), CountScalar::lefschetz());
  EXPECT_EQ(sub.coefficient(t(1)), CountScalar(0));
}

TEST(Series, EulerFactorizeGeometric) {
  SeriesLayout layout(1, 5);
  auto geom = one_minus_monomial_pow(layout, t(), Rational(-1));
  auto factors = euler_factorize(geom);
  ASSERT_EQ(factors.size(), 1u);
  EXPECT_EQ(factors[0].first, t());
  EXPECT_EQ(factors[0].second, Rational(1));
}

TEST(Series, EulerFactorizeOnePlusT) {
  // 1+t = (1-t)^{-1} (1-t^2)^{+1} ... i.e. exponents a_t = 1, a_{t^2} = -1
  auto f = from_terms(SeriesLayout(1, 6), {{{}, 1}, {t(), 1}});
  auto factors = euler_factorize(f);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], (std::pair<Monomial, Rational>{t(), 1}));
  EXPECT_EQ(factors[1], (std::pair<Monomial, Rational>{t(2), -1}));
}

TEST(Series, EulerFactorizeRoundTripTwoVars) {
  SeriesLayout layout(2, 3);
  auto f = from_terms(layout, {{{}, 1}, {t(), 1}, {t2(), 1}});
  auto factors = euler_factorize(f);
  EXPECT_EQ(euler_expand<Rational>(layout, factors), f);
}

TEST(Series, ExtractCoefficient) {
  SeriesLayout layout(1, 4);
  auto geom = one_minus_monomial_pow(layout, t(), Rational(-1));
  EXPECT_EQ(geom.coefficient(t(2)), Rational(1));

  SeriesLayout layout2(2, 4);
  auto f = from_terms(layout2, {{{}, 1}, {t(), 1}});
  auto g = from_terms(layout2, {{{}, 1}, {t2(), 1}});
  EXPECT_EQ((f * g).coefficient(t() * t2()), Rational(1));

  auto h = from_terms(layout2, {{{}, 1}, {t(), 1}, {t2(), 1}});
  EXPECT_EQ(pow_int(h, 3).coefficient(t(2) * t2()), Rational(3));
}

TEST(Series, ExtractBeyondTruncationThrows) {
  auto f = QSeries::one(SeriesLayout(1, 3));
  EXPECT_THROW(f.coefficient(t(4)), std::domain_error);
}

TEST(Series, DegreeOverflowSilentlyTruncates) {
  SeriesLayout layout(1, 2);
  auto f = from_terms(layout, {{{}, 1}, {t(2), 1}});
  auto sq = f * f;  // t^4 term dropped
  EXPECT_EQ(sq, from_terms(layout, {{{}, 1}, {t(2), 2}}));
}

TEST(Series, WeightedVariables) {
  // s has weight 1, u has weight 3; truncation counts weights
  SeriesLayout layout({1, 3}, 6);
  auto f = from_terms(layout, {{{}, 1}, {t(), 1}, {t2(), 1}});
  auto cube = pow_int(f, 3);
  EXPECT_EQ(cube.coefficient(t() * t2()), Rational(6));  // weight 4 kept
  EXPECT_EQ(cube.coefficient(t(2) * t2()), Rational(3)); // weight 5 kept
  auto sq = pow_int(f, 2);
  EXPECT_EQ(sq.coefficient(t2(2)), Rational(1));  // weight 6 kept
  EXPECT_THROW(cube.coefficient(t() * t2(2)), std::domain_error);  // weight 7
}

TEST(Series, DeterministicStringRendering) {
  SeriesLayout layout(2, 3);
  auto f = from_terms(layout, {{{}, 1}, {t2(), 1}, {t(), 1}, {t() * t2(), -1}});
  EXPECT_EQ(f.str(), "(1) + (1)*t1 + (1)*t2 + (-1)*t1*t2");
}

}  // namespace
