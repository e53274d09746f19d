#include "motconf/prelambda.hpp"

#include <gtest/gtest.h>

#include "motconf/fforacle.hpp"
#include "motconf/variety.hpp"

using namespace motconf;

namespace {

Monomial t(int e = 1) { return Monomial::variable(1, e); }

CountScalar q_pow(int k) { return CountScalar::lefschetz_pow(k); }

// Independent oracle for sigma coefficients: #Sym^n Y(F_q) is the number of
// effective zero-cycles of degree n, i.e. multisets of closed points with
// degree sum n, counted from the brute-force census.
Integer sym_census(const ClosedPointTable& table, int n) {
  std::function<Integer(int, int)> rec = [&](int k, int remaining) -> Integer {
    if (remaining == 0) return 1;
    if (k > table.depth) return 0;
    Integer acc = 0;
    for (int j = 0; j * k <= remaining; ++j) {
      // multisets of j closed points of degree k: binom(M_k + j - 1, j)
      Integer ways = binomial_int(table.at(k) + j - 1, static_cast<unsigned>(j));
      acc += ways * rec(k + 1, remaining - j * k);
    }
    return acc;
  };
  return rec(1, n);
}

TEST(Sigma, OfLefschetz) {
  auto s = sigma_series(CountScalar::lefschetz(), 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(s.coefficient(t(k)), q_pow(k));
  // oracle: Sym^n A^1 = monic degree-n polynomials, q^n points
  for (long q : {2L, 3L}) {
    auto table = closed_point_census(VarietySpec::affine(1), q, 3);
    for (int n = 0; n <= 3; ++n)
      EXPECT_EQ(s.coefficient(t(n)).evaluate(Rational(q)), Rational(sym_census(table, n)));
  }
}

TEST(Sigma, OfOneIsGeometricSeries) {
  auto s = sigma_series(CountScalar(1), 5);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(s.coefficient(t(k)), CountScalar(1));
}

TEST(Sigma, OfProjectiveLine) {
  auto cls = variety_class<CountMeasure>(VarietySpec::projective(1));
  auto s = sigma_series(cls, 2);
  EXPECT_EQ(s.coefficient(t(0)), CountScalar(1));
  EXPECT_EQ(s.coefficient(t(1)), cls);
  EXPECT_EQ(s.coefficient(t(2)), CountScalar(1) + q_pow(1) + q_pow(2));
  // oracle: #Sym^2 P^1(F_q) = #P^2(F_q)
  for (long q : {2L, 3L, 5L}) {
    auto table = closed_point_census(VarietySpec::projective(1), q, 2);
    EXPECT_EQ(s.coefficient(t(2)).evaluate(Rational(q)),
              Rational(sym_census(table, 2)));
    EXPECT_EQ(sym_census(table, 2),
              count_points(VarietySpec::projective(2), FiniteField::of_order(q)));
  }
}

TEST(Sigma, NegativeMultiplicityIsInverseSeries) {
  auto plus = sigma_series(q_pow(1), 4);
  auto minus = sigma_series(-q_pow(1), 4);
  EXPECT_TRUE(is_one_series(plus * minus));
}

TEST(Sigma, RationalMultiplicityFallsBackToNaivePow) {
  CountScalar half = CountScalar(1) * make_rational(1, 2);
  auto s = sigma_series(half, 3);
  SeriesLayout layout(1, 3);
  auto geom = one_minus_monomial_pow(layout, t(), CountScalar(-1));
  EXPECT_EQ(s, naive_pow(geom, half));
}

TEST(Adams, ExponentScaling) {
  EXPECT_EQ(adams(2, q_pow(1)), q_pow(2));
  EXPECT_EQ(adams(5, CountScalar(1)), CountScalar(1));
  auto p1 = CountScalar(1) + q_pow(1);  // class of P^1
  EXPECT_EQ(adams(3, p1), CountScalar(1) + q_pow(3));
  // consistency with sigma through the powersum link at order 3
  auto lg = log1p(sigma_series(p1, 3));
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(lg.coefficient(t(k)) * Rational(k), adams(k, p1));
}

TEST(Pairing, CompleteIsSigma) {
  auto sigma = sigma_series(q_pow(1), 4);
  EXPECT_EQ(pair_symfunc(complete_h(2, 4), q_pow(1)), q_pow(2));
  for (int k = 0; k <= 4; ++k)
    EXPECT_EQ(pair_symfunc(complete_h(k, 4), q_pow(1)), sigma.coefficient(t(k)));
}

TEST(Pairing, MobiusFixedPoint) {
  auto r = CountScalar(1) + q_pow(2) * make_rational(3, 1);
  EXPECT_EQ(pair_symfunc(mobius_power_sum(1, 4), r), r);
}

TEST(Pairing, ConfClassOfOrderedPairs) {
  // (c_ab, q) = q^2 - q; ordered distinct pairs on A^1 over F_2: 2
  auto value = pair_symfunc(conf_symfunc(GeneralizedPartition({1, 1}), 4), q_pow(1));
  EXPECT_EQ(value, q_pow(2) - q_pow(1));
  EXPECT_EQ(value.evaluate(Rational(2)), Rational(2));
}

TEST(ClosedPointClass, Examples) {
  auto any = CountScalar(1) + q_pow(3);
  EXPECT_EQ(closed_point_class(1, any), any);  // M_1 = id

  // M_2(A^1) = (q^2-q)/2; degree-2 closed points of A^1 over F_2: 1
  auto m2_a1 = closed_point_class(2, q_pow(1));
  EXPECT_EQ(m2_a1, (q_pow(2) - q_pow(1)) * make_rational(1, 2));
  EXPECT_EQ(m2_a1.evaluate(Rational(2)),
            Rational(closed_point_census(VarietySpec::affine(1), 2, 2).at(2)));

  // M_2(P^1) = (q^2-q)/2; oracle (#P^1(F_4)-#P^1(F_2))/2 = 1
  auto m2_p1 = closed_point_class(2, CountScalar(1) + q_pow(1));
  EXPECT_EQ(m2_p1, (q_pow(2) - q_pow(1)) * make_rational(1, 2));
  EXPECT_EQ(m2_p1.evaluate(Rational(2)),
            Rational(closed_point_census(VarietySpec::projective(1), 2, 2).at(2)));
}

TEST(Valuation, Examples) {
  CountMotive x(q_pow(1), CountScalar(1) + q_pow(1));  // q/(1+q)
  EXPECT_EQ(x.linv_valuation(), std::optional<long>(0));

  CountMotive y(CountScalar(1), q_pow(2));  // 1/q^2
  EXPECT_EQ(y.linv_valuation(), std::optional<long>(2));

  CountMotive zero;
  EXPECT_EQ(zero.linv_valuation(), std::nullopt);

  CountMotive neg(q_pow(2));  // q^2 has valuation -2
  EXPECT_EQ(neg.linv_valuation(), std::optional<long>(-2));
}

TEST(Expansion, GeometricExample) {
  CountMotive x(q_pow(1), CountScalar(1) + q_pow(1));  // q/(1+q) = 1 - w + w^2 ...
  auto e = x.linv_expansion(4);
  EXPECT_EQ(e.lead, 0);
  ASSERT_EQ(e.coeffs.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(e.coeffs[i], Rational(i % 2 == 0 ? 1 : -1));
}

TEST(Expansion, ConstantOne) {
  CountMotive one(CountScalar(1));
  auto e = one.linv_expansion(3);
  EXPECT_EQ(e.lead, 0);
  EXPECT_EQ(e.coeffs[0], Rational(1));
  EXPECT_EQ(e.coeffs[1], Rational(0));
}

TEST(Expansion, ResummationConsistency) {
  // x = ((q^2-q)/2) / (1+q^2): the partial sum re-summed against x leaves a
  // remainder of strictly larger valuation
  CountMotive x((q_pow(2) - q_pow(1)) * make_rational(1, 2),
                CountScalar(1) + q_pow(2));
  int n = 6;
  auto e = x.linv_expansion(n);
  CountMotive partial;
  for (int i = 0; i < n; ++i) {
    long exp = e.lead + i;
    CountMotive term(CountScalar(1) * e.coeffs[i], q_pow(static_cast<int>(exp)));
    if (exp < 0) term = CountMotive(q_pow(static_cast<int>(-exp)) * e.coeffs[i]);
    partial = partial + term;
  }
  auto gap = (x - partial).linv_valuation();
  ASSERT_TRUE(gap.has_value());
  EXPECT_GT(*gap, e.lead + n - 1);
}

TEST(Hodge, TateSpecialization) {
  auto p1 = variety_class<HodgeMeasure>(VarietySpec::projective(1));
  EXPECT_EQ(p1.specialize_to_count(),
            variety_class<CountMeasure>(VarietySpec::projective(1)));
  // non-Tate values refuse to specialize
  HodgeScalar offdiag = HodgeScalar::monomial({2, 0});
  EXPECT_THROW(offdiag.specialize_to_count(), std::domain_error);
}

TEST(Hodge, SigmaMatchesCountUnderSpecialization) {
  for (const auto& spec : {VarietySpec::affine(1), VarietySpec::projective(1)}) {
    auto hs = sigma_series(variety_class<HodgeMeasure>(spec), 4);
    auto cs = sigma_series(variety_class<CountMeasure>(spec), 4);
    for (int k = 0; k <= 4; ++k)
      EXPECT_EQ(hs.coefficient(t(k)).specialize_to_count(), cs.coefficient(t(k)));
  }
}

TEST(RationalMotive, CrossMultiplicationEquality) {
  CountMotive a(q_pow(1), CountScalar(1) + q_pow(1));
  CountMotive b(q_pow(2) - q_pow(1),
                (CountScalar(1) + q_pow(1)) * (q_pow(1) - CountScalar(1)));
  EXPECT_EQ(a, b);  // (q^2-q)/((1+q)(q-1)) reduces to q/(1+q)
  EXPECT_THROW(CountMotive(q_pow(1), CountScalar(0)), std::domain_error);
}

}  // namespace
