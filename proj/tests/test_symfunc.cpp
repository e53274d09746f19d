#include "motconf/symfunc.hpp"

#include <gtest/gtest.h>

#include <random>

#include "motconf/fforacle.hpp"
#include "motconf/prelambda.hpp"
#include "motconf/variety.hpp"

using namespace motconf;

namespace {

constexpr long kCap = 8;

SymFunc p(int k) { return power_sum_p(k, kCap); }

// Independent oracle for the h_k coordinates: expand exp(sum p_k t^k / k)
// with the series engine and read off the t^k coefficient. complete_h itself
// uses Newton's recurrence, so the two routes are distinct.
SymFunc h_via_exponential(int k) {
  SeriesLayout layout(1, k);
  TruncatedSeries<SymFunc> psum(layout);
  for (int i = 1; i <= k; ++i)
    psum.set_coefficient(Monomial::variable(1, i),
                         power_sum_p(i, kCap) * make_rational(1, i));
  return exp1m(psum).coefficient(Monomial::variable(1, k));
}

TEST(SymFunc, CompleteH) {
  EXPECT_EQ(complete_h(0, kCap), GradedPoly(Rational(1)));
  EXPECT_EQ(complete_h(1, kCap), p(1));
  EXPECT_EQ(complete_h(2, kCap), (p(1) * p(1) + p(2)) * make_rational(1, 2));
  for (int k = 0; k <= kCap; ++k)
    EXPECT_EQ(complete_h(k, kCap), h_via_exponential(k)) << "k=" << k;
}

TEST(SymFunc, ElementaryE) {
  EXPECT_EQ(elementary_e(0, kCap), GradedPoly(Rational(1)));
  EXPECT_EQ(elementary_e(1, kCap), p(1));
  EXPECT_EQ(elementary_e(2, kCap), (p(1) * p(1) - p(2)) * make_rational(1, 2));
}

TEST(SymFunc, MobiusPowerSum) {
  EXPECT_EQ(mobius_power_sum(1, kCap), p(1));
  EXPECT_EQ(mobius_power_sum(2, kCap), (p(2) - p(1)) * make_rational(1, 2));
  // stated inverse identity: sum_{d|4} d p'_d = p_4
  SymFunc acc(Rational(0), kCap);
  for (long d : divisors(4))
    acc = acc + mobius_power_sum(static_cast<int>(d), kCap) * Rational(d);
  EXPECT_EQ(acc, p(4));
}

TEST(SymFunc, DegreeCapErrors) {
  EXPECT_THROW(complete_h(9, 8), std::domain_error);
  EXPECT_THROW(mobius_power_sum(9, 8), std::domain_error);
}

TEST(ConfBasis, SmallClasses) {
  GeneralizedPartition a({1}), ab({1, 1}), a2({2});
  EXPECT_EQ(conf_symfunc(a, kCap), p(1));
  EXPECT_EQ(conf_symfunc(ab, kCap), p(1) * p(1) - p(1));
  EXPECT_EQ(conf_symfunc(a2, kCap), complete_h(2, kCap) - p(1));
}

TEST(ConfBasis, DependsOnlyOnMultiplicityPartition) {
  // "a2b" and "ab2" carry the same multiset of multiplicities {2,1}
  EXPECT_EQ(GeneralizedPartition({2, 1}), GeneralizedPartition({1, 2}));
  EXPECT_EQ(conf_symfunc(GeneralizedPartition({2, 1}), kCap),
            conf_symfunc(GeneralizedPartition({1, 2}), kCap));
}

TEST(ConfBasis, ExpandBasisElement) {
  GeneralizedPartition ab({1, 1});
  auto coords = expand_in_conf_basis(conf_symfunc(ab, kCap));
  ASSERT_EQ(coords.size(), 1u);
  EXPECT_EQ(coords.at(ab), Rational(1));
}

TEST(ConfBasis, ExpandPowerSumSquare) {
  auto coords = expand_in_conf_basis(p(1) * p(1));
  ASSERT_EQ(coords.size(), 2u);
  EXPECT_EQ(coords.at(GeneralizedPartition({1, 1})), Rational(1));
  EXPECT_EQ(coords.at(GeneralizedPartition({1})), Rational(1));
}

TEST(ConfBasis, ExpandZero) {
  EXPECT_TRUE(expand_in_conf_basis(SymFunc(Rational(0), kCap)).empty());
}

TEST(ConfBasis, IntegerCoordinatesInHBasis) {
  // c_tau has integer coordinates on the h_tau monomials
  for (int d = 1; d <= 6; ++d)
    for (const Partition& mu : Partition::all_of(d)) {
      auto h = to_h_basis(conf_symfunc(GeneralizedPartition(mu), 6));
      EXPECT_TRUE(h.has_integer_coefficients())
          << "tau=" << mu.str() << ": " << h.str("h");
    }
}

TEST(ConfBasis, PointCountSeparation) {
  // a random nonzero f of degree <= 4 pairs to a nonzero number for some
  // builtin Y and q in {2,3,5}; smoke form of the zero-detection lemma
  std::mt19937_64 gen(20240817);
  std::vector<CountScalar> classes;
  for (const VarietySpec& spec :
       {VarietySpec::affine(1), VarietySpec::affine(2), VarietySpec::projective(1),
        VarietySpec::projective(2), VarietySpec::torus(1)})
    classes.push_back(variety_class<CountMeasure>(spec));

  for (int trial = 0; trial < 25; ++trial) {
    SymFunc f;
    for (int term = 0; term < 3; ++term) {
      int d = 1 + static_cast<int>(gen() % 4);
      auto parts = Partition::all_of(d);
      const Partition& mu = parts[gen() % parts.size()];
      Monomial m;
      for (int part : mu.parts()) m = m * Monomial::variable(part);
      f.add_to_coefficient(m, make_rational(static_cast<long>(gen() % 9) - 4, 1));
    }
    if (f.is_zero_poly()) continue;
    bool separated = false;
    for (const auto& cls : classes)
      for (long q : {2L, 3L, 5L})
        if (!is_zero(pair_symfunc(f, cls).evaluate(Rational(q)))) separated = true;
    EXPECT_TRUE(separated) << "undetected nonzero f = " << f.str("p");
  }
}

TEST(CharPoly, Identification) {
  EXPECT_EQ(charpoly_to_symfunc(charpoly_generator(1), kCap), p(1));
  EXPECT_EQ(charpoly_to_symfunc(charpoly_generator(2), kCap),
            (p(2) - p(1)) * make_rational(1, 2));
  // binom(X_1, 2) = (X_1^2 - X_1)/2 maps to (p_1^2 - p_1)/2
  auto b = binomial_charpoly({2});
  EXPECT_EQ(charpoly_to_symfunc(b, kCap),
            (p(1) * p(1) - p(1)) * make_rational(1, 2));
}

TEST(CharPoly, BinomialBuilders) {
  EXPECT_EQ(binomial_charpoly({1}), charpoly_generator(1));
  EXPECT_EQ(binomial_charpoly({0, 1}), charpoly_generator(2));
  auto x1 = charpoly_generator(1);
  EXPECT_EQ(binomial_charpoly({2}), x1 * (x1 - GradedPoly(1)) * make_rational(1, 2));
}

TEST(CharPoly, DegreeOverflowThrows) {
  // X_3 has degree 3 as a symmetric function
  EXPECT_THROW(charpoly_to_symfunc(charpoly_generator(3), 2), std::domain_error);
}

TEST(CharPoly, HTauProducts) {
  GeneralizedPartition tau({2, 1});
  EXPECT_EQ(complete_h_tau(tau, kCap),
            complete_h(2, kCap) * complete_h(1, kCap));
}

}  // namespace
