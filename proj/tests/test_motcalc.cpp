#include "motconf/motcalc.hpp"

#include <gtest/gtest.h>

#include "motconf/fforacle.hpp"
#include "motconf/polyparse.hpp"

using namespace motconf;

namespace {

Monomial t(int e = 1) { return Monomial::variable(1, e); }
CountScalar q_pow(int k) { return CountScalar::lefschetz_pow(k); }

VarietyClass<CountMeasure> Y(const char* token) {
  return VarietyClass<CountMeasure>::from_spec(VarietySpec::parse_builtin(token));
}

TEST(KapranovZeta, Examples) {
  auto a1 = kapranov_zeta(Y("affine_space:1"), 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(a1.coefficient(t(k)), q_pow(k));

  auto pt = kapranov_zeta(Y("point"), 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(pt.coefficient(t(k)), CountScalar(1));

  auto a1h = kapranov_zeta(
      VarietyClass<HodgeMeasure>::from_spec(VarietySpec::affine(1)), 3);
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(a1h.coefficient(t(k)), HodgeScalar::lefschetz_pow(k));
}

TEST(PowStructure, GeometricSeriesIsDefiningCase) {
  SeriesLayout layout(1, 5);
  auto geom = one_minus_monomial_pow(layout, t(), Rational(-1));
  auto y = Y("affine_space:1");
  EXPECT_EQ(pow_structure(geom, y.cls, PowMode::euler_product),
            kapranov_zeta(y, 5));
  EXPECT_EQ(pow_structure(geom, y.cls, PowMode::lemma_substitution),
            kapranov_zeta(y, 5));
}

TEST(PowStructure, PowerByOneIsIdentity) {
  SeriesLayout layout(2, 4);
  TruncatedSeries<Rational> f(layout);
  f.set_coefficient(Monomial::one(), 1);
  f.set_coefficient(Monomial::variable(1), 3);
  f.set_coefficient(Monomial::variable(2, 2), -2);
  auto lifted = map_coefficients<CountScalar>(
      f, [](const Rational& c) { return CountScalar(c); });
  EXPECT_EQ(pow_structure(f, CountScalar(1), PowMode::euler_product), lifted);
}

TEST(PowStructure, RejectsNonIntegerInput) {
  SeriesLayout layout(1, 3);
  TruncatedSeries<Rational> f(layout);
  f.set_coefficient(Monomial::one(), 1);
  f.set_coefficient(t(), make_rational(1, 2));
  EXPECT_THROW(pow_structure(f, CountScalar(1), PowMode::lemma_substitution),
               std::domain_error);
}

TEST(ConfClass, SquarefreeCounts) {
  auto y = Y("affine_space:1");
  // [Conf^2 A^1] = q^2 - q; squarefree monic quadratics: F_2 -> 2, F_3 -> 6
  auto c2 = conf_class(y, 2);
  EXPECT_EQ(c2, q_pow(2) - q_pow(1));
  EXPECT_EQ(c2.evaluate(Rational(2)), Rational(2));
  EXPECT_EQ(c2.evaluate(Rational(3)), Rational(6));
  EXPECT_EQ(conf_class(y, 0), CountScalar(1));
  // closed form for A^1: conf_class(n) = q^n - q^{n-1}
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(conf_class(y, n), q_pow(n) - q_pow(n - 1));
}

TEST(ConfClass, ProjectiveLineAtTwo) {
  auto c2 = conf_class(Y("projective_space:1"), 2);
  EXPECT_EQ(c2.evaluate(Rational(2)), Rational(4));
}

TEST(ConfClass, MatchesZetaRatio) {
  for (const char* token : {"affine_space:1", "projective_space:1", "torus:1"}) {
    auto y = Y(token);
    auto series = conf_series(y, 6);
    auto zeta = kapranov_zeta(y, 6);
    auto ratio = zeta * inverse(substitute_powers(zeta, 2));
    EXPECT_EQ(series, ratio) << token;
    auto euler_route = pow_structure(
        [&] {
          SeriesLayout layout(1, 6);
          TruncatedSeries<Rational> f(layout);
          f.set_coefficient(Monomial::one(), 1);
          f.set_coefficient(t(), 1);
          return f;
        }(),
        y.cls, PowMode::euler_product);
    EXPECT_EQ(series, euler_route) << token;
  }
}

TEST(GenConf, LabeledClasses) {
  auto y = Y("affine_space:1");
  EXPECT_EQ(gen_conf_class(y, GeneralizedPartition({1})), q_pow(1));
  EXPECT_EQ(gen_conf_class(y, GeneralizedPartition({1, 1})), q_pow(2) - q_pow(1));
  // both-points-one-label: the class of Conf^2 itself
  auto a2 = gen_conf_class(y, GeneralizedPartition({2}));
  EXPECT_EQ(a2, q_pow(2) - q_pow(1));
  EXPECT_EQ(a2.evaluate(Rational(2)), Rational(2));
}

TEST(GenConf, MatchesConfSymfuncPairing) {
  for (const char* token : {"affine_space:1", "projective_space:1"}) {
    auto y = Y(token);
    for (int d = 1; d <= 4; ++d)
      for (const Partition& mu : Partition::all_of(d)) {
        GeneralizedPartition tau(mu);
        EXPECT_EQ(gen_conf_class(y, tau), pair_symfunc(conf_symfunc(tau, d), y.cls))
            << token << " tau=" << tau.str();
      }
  }
}

TEST(GenConf, WithFreePoints) {
  auto y = Y("affine_space:1");
  GeneralizedPartition a({1});
  EXPECT_EQ(gen_conf_with_free_points(y, a, 1), q_pow(1));
  // one marked rational point plus one more point: q(q-1), F_2 -> 2
  auto m = gen_conf_with_free_points(y, a, 2);
  EXPECT_EQ(m, q_pow(2) - q_pow(1));
  EXPECT_EQ(m.evaluate(Rational(2)),
            Rational(conf_census(VarietySpec::affine(1), 2, a, 1)));
  // empty tau reduces to the plain configuration class
  EXPECT_EQ(gen_conf_with_free_points(y, GeneralizedPartition(), 3),
            conf_class(y, 3));
  EXPECT_THROW(gen_conf_with_free_points(y, a, 0), std::domain_error);
}

TEST(FiniteExpectation, TrivialCases) {
  auto y = Y("affine_space:1");
  CharPolynomial one(Rational(1));
  for (int n = 0; n <= 4; ++n)
    EXPECT_EQ(finite_expectation(one, n, y), CountMotive(CountScalar(1)));
  EXPECT_EQ(finite_expectation(charpoly_generator(1), 1, y),
            CountMotive(CountScalar(1)));
}

TEST(FiniteExpectation, MarkedPointRatio) {
  auto y = Y("affine_space:1");
  auto e2 = finite_expectation(charpoly_generator(1), 2, y);
  EXPECT_EQ(e2, CountMotive(CountScalar(1)));  // q(q-1)/(q^2-q)
  auto e3 = finite_expectation(charpoly_generator(1), 3, y);
  EXPECT_EQ(e3, CountMotive(q_pow(1) - CountScalar(1), q_pow(1)));  // (q-1)/q
  // census cross-check at q=2: numerator counts / conf counts
  auto table = closed_point_census(VarietySpec::affine(1), 2, 3);
  GeneralizedPartition a({1});
  Rational expected =
      Rational(conf_census(table, a, 2)) / Rational(conf_census(table, {}, 3));
  Rational got = e3.num().evaluate(Rational(2)) / e3.den().evaluate(Rational(2));
  EXPECT_EQ(got, expected);
}

TEST(FiniteExpectation, MsspFailureSignals) {
  auto pt = Y("point");
  EXPECT_THROW(finite_expectation(charpoly_generator(1), 2, pt), std::domain_error);
}

TEST(StableExpectation, PaperExample) {
  auto y = Y("affine_space:1");
  // E_inf[X_1] = q/(1+q), the Example 1.4 value under the count measure
  EXPECT_EQ(stable_expectation(charpoly_generator(1), y),
            CountMotive(q_pow(1), CountScalar(1) + q_pow(1)));
}

TEST(StableExpectation, SingleBinomials) {
  auto y = Y("affine_space:1");
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> lbar(static_cast<size_t>(k), 0);
    lbar[k - 1] = 1;
    // E_inf[X_k] = M_k / (1 + q^k)
    auto expected = CountMotive(closed_point_class(k, y.cls)) *
                    stable_bernoulli_probability(y, k);
    EXPECT_EQ(stable_expectation(binomial_charpoly(lbar), y), expected) << k;
  }
}

TEST(StableExpectation, AsymptoticIndependence) {
  auto y = Y("affine_space:1");
  auto x1 = charpoly_generator(1), x2 = charpoly_generator(2);
  EXPECT_EQ(stable_expectation(x1 * x2, y),
            stable_expectation(x1, y) * stable_expectation(x2, y));
}

TEST(StableExpectation, DualRoutesAgree) {
  auto y = Y("affine_space:1");
  std::vector<CharPolynomial> polys = {
      charpoly_generator(1),
      charpoly_generator(2),
      charpoly_generator(1) * charpoly_generator(1),
      charpoly_generator(1) * charpoly_generator(2),
      binomial_charpoly({2}),
      binomial_charpoly({1, 1}) + charpoly_generator(1) * Rational(3),
  };
  for (const auto& p : polys)
    EXPECT_EQ(stable_expectation(p, y), stable_expectation_conf_route(p, y))
        << p.str("X");
}

TEST(StableConfRatio, ClosedForms) {
  auto y = Y("affine_space:1");
  EXPECT_EQ(stable_conf_ratio(y, GeneralizedPartition()), CountMotive(1));
  EXPECT_EQ(stable_conf_ratio(y, GeneralizedPartition({1})),
            CountMotive(q_pow(1), CountScalar(1) + q_pow(1)));
  // two distinct degree-1 marks: the falling moment M(M-1) beta^2,
  // q(q-1)/(1+q)^2
  auto one_plus_q = CountScalar(1) + q_pow(1);
  EXPECT_EQ(stable_conf_ratio(y, GeneralizedPartition({1, 1})),
            CountMotive(q_pow(2) - q_pow(1), one_plus_q * one_plus_q));
}

TEST(StableConfRatio, DenominatorStructure) {
  // the denominator divides a product of (1+L^{kd}) factors after clearing
  auto y = Y("affine_space:1");
  for (const auto& tau :
       {GeneralizedPartition({1}), GeneralizedPartition({1, 1}),
        GeneralizedPartition({2}), GeneralizedPartition({2, 1})}) {
    auto value = stable_conf_ratio(y, tau);
    CountScalar product(1);
    for (int k = 1; k <= tau.total(); ++k) {
      auto factor = CountScalar(1) + q_pow(k * y.dim);
      for (int i = 0; i < tau.total(); ++i) product = product * factor;
    }
    EXPECT_TRUE(value.denominator_divides(product)) << tau.str();
  }
}

TEST(ConvergenceReport, MarkedPoint) {
  auto y = Y("affine_space:1");
  auto report = convergence_report(charpoly_generator(1), y, 6);
  ASSERT_EQ(report.ns.size(), 7u);
  // frozen early values: E_1 = 1, E_2 = 1, E_3 = (q-1)/q
  EXPECT_EQ(report.finite_values[1], CountMotive(CountScalar(1)));
  EXPECT_EQ(report.finite_values[2], CountMotive(CountScalar(1)));
  EXPECT_EQ(report.finite_values[3],
            CountMotive(q_pow(1) - CountScalar(1), q_pow(1)));
  EXPECT_TRUE(report.gaps_nondecreasing(2));
  for (size_t i = 0; i < report.ns.size(); ++i) {
    int n = report.ns[i];
    if (n < 3) continue;
    ASSERT_TRUE(report.valuation_gaps[i].has_value());
    EXPECT_GE(*report.valuation_gaps[i], n - 2) << "n=" << n;
  }
  // E_4 = (q^2-q+1)/q^2, whose gap against q/(1+q) is 1/(q^2(1+q)): valuation 3
  EXPECT_EQ(report.first_n_reaching(3), std::optional<int>(4));
}

TEST(ConvergenceReport, ConstantIsExact) {
  auto y = Y("affine_space:1");
  auto report = convergence_report(CharPolynomial(Rational(1)), y, 4);
  for (auto gap : report.valuation_gaps) EXPECT_EQ(gap, std::nullopt);
}

TEST(ConvergenceReport, SecondCycleOnProjectiveLine) {
  auto y = Y("projective_space:1");
  auto report = convergence_report(charpoly_generator(2), y, 6);
  EXPECT_TRUE(report.gaps_nondecreasing(3));
  bool grows = false;
  for (size_t i = 0; i + 1 < report.ns.size(); ++i)
    if (report.valuation_gaps[i] && report.valuation_gaps[i + 1] &&
        *report.valuation_gaps[i + 1] > *report.valuation_gaps[i])
      grows = true;
  EXPECT_TRUE(grows);
}

TEST(CharPolyGenfunc, Examples) {
  auto y = Y("affine_space:1");
  // lbar = (1): coefficient of t^1 is q
  auto g1 = charpoly_genfunc({1}, y, 4);
  EXPECT_EQ(g1.coefficient(t(1)), q_pow(1));
  for (long q : {2L, 3L}) {
    auto table = closed_point_census(VarietySpec::affine(1), q, 1);
    EXPECT_EQ(g1.coefficient(t(1)).evaluate(Rational(q)),
              Rational(conf_census(table, GeneralizedPartition({1}), 0)));
  }
  // empty lbar: the configuration generating function itself
  EXPECT_EQ(charpoly_genfunc({}, y, 5), conf_series(y, 5));
  // lbar = (0,1): coefficient of t^2 is M_2 = (q^2-q)/2; F_2 -> 1, F_3 -> 3
  auto g2 = charpoly_genfunc({0, 1}, y, 4);
  EXPECT_EQ(g2.coefficient(t(2)), (q_pow(2) - q_pow(1)) * make_rational(1, 2));
  EXPECT_EQ(g2.coefficient(t(2)).evaluate(Rational(2)), Rational(1));
  EXPECT_EQ(g2.coefficient(t(2)).evaluate(Rational(3)), Rational(3));
}

TEST(CharPolyGenfunc, CoefficientIdentity) {
  // coefficient of t^n equals E_n[binom(X,lbar)] * [Conf^n Y] for all n
  for (const char* token : {"affine_space:1", "projective_space:1"}) {
    auto y = Y(token);
    for (const std::vector<int>& lbar :
         {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{0, 1}}) {
      auto series = charpoly_genfunc(lbar, y, 5);
      CharPolynomial p = binomial_charpoly(lbar);
      auto conf = conf_series(y, 5);
      for (int n = 0; n <= 5; ++n) {
        auto lhs = CountMotive(series.coefficient(t(n)));
        auto rhs = finite_expectation(p, n, y) *
                   CountMotive(conf.coefficient(t(n)));
        EXPECT_EQ(lhs, rhs) << token << " n=" << n;
      }
    }
  }
}

TEST(CharPolyGenfunc, WeightOverflowThrows) {
  EXPECT_THROW(charpoly_genfunc({0, 0, 3}, Y("affine_space:1"), 4),
               std::domain_error);
}

TEST(Hodge, StableExpectationSpecializes) {
  auto yh = VarietyClass<HodgeMeasure>::from_spec(VarietySpec::affine(1));
  auto yc = Y("affine_space:1");
  auto vh = stable_expectation(charpoly_generator(1), yh);
  auto vc = stable_expectation(charpoly_generator(1), yc);
  EXPECT_EQ(CountMotive(vh.num().specialize_to_count(),
                        vh.den().specialize_to_count()),
            vc);
}

}  // namespace
