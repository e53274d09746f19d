#pragma once

#include "motconf/prelambda.hpp"
#include "motconf/variety.hpp"

namespace motconf {

// Two routes to f^{Pow r}. The Euler route factors f into its unique Euler
// product and exponentiates each factor through sigma; the substitution
// route is the identity f^{Pow r} = prod_k f(t^k)^{(p'_k, r)}. They agree,
// and that agreement is an executable proof of the key lemma.
enum class PowMode { euler_product, lemma_substitution };

namespace detail {

// sigma_{t^I}(r): the one-variable sigma series with t substituted by the
// monomial t^I, laid out on `layout`.
template <typename M>
TruncatedSeries<MotiveScalar<M>> sigma_at_monomial(const SeriesLayout& layout,
                                                   const Monomial& mono,
                                                   const MotiveScalar<M>& r) {
  long step = layout.wdeg(mono);
  long order = step > 0 ? layout.truncation / step : 0;
  TruncatedSeries<MotiveScalar<M>> out(layout);
  auto one_var = sigma_series(r, order);
  for (const auto& [m, c] : one_var.terms())
    out.set_coefficient(mono.scale_exponents(m.exponent(1)), c);
  return out;
}

}  // namespace detail

// The Euler factorization belonging to the power structure: the unique
// exponents a_I with f = prod_I sigma_{t^I}(a_I) up to the truncation order.
// Unlike the naive factorization, the factor divided out at each step is a
// sigma series; since sigma is additive, dividing by sigma_{t^I}(a) is
// multiplying by sigma_{t^I}(-a). For integer coefficients the two
// factorizations coincide.
template <typename M>
std::vector<std::pair<Monomial, MotiveScalar<M>>> pow_euler_factorize(
    const TruncatedSeries<MotiveScalar<M>>& f) {
  if (!(f.constant_term() == MotiveScalar<M>(1)))
    throw std::domain_error("pow_euler_factorize: constant term must be 1");
  std::vector<std::pair<Monomial, MotiveScalar<M>>> out;
  TruncatedSeries<MotiveScalar<M>> residual = f;
  for (const Monomial& m : enumerate_monomials(f.layout(), f.layout().truncation)) {
    MotiveScalar<M> a = residual.coefficient(m);
    if (is_zero(a)) continue;
    out.emplace_back(m, a);
    residual = residual * detail::sigma_at_monomial<M>(f.layout(), m, -a);
  }
  if (!is_one_series(residual))
    throw std::logic_error("pow_euler_factorize: residual did not reduce to 1");
  return out;
}

// Power-structure exponentiation of a series with coefficients already in
// the measure ring, via the Euler-product construction. This is the fully
// general form (exponents of the factorization may be arbitrary ring
// elements); prefer pow_structure() for integer inputs.
template <typename M>
TruncatedSeries<MotiveScalar<M>> pow_structure_general(
    const TruncatedSeries<MotiveScalar<M>>& f, const MotiveScalar<M>& r) {
  auto factors = pow_euler_factorize(f);
  auto out = TruncatedSeries<MotiveScalar<M>>::one(f.layout());
  for (const auto& [mono, a] : factors)
    out = out * detail::sigma_at_monomial<M>(f.layout(), mono, a * r);
  return out;
}

// f^{Pow r} for f in 1 + (t_1,...)Z[[t_1,...]].
template <typename M>
TruncatedSeries<MotiveScalar<M>> pow_structure(const TruncatedSeries<Rational>& f,
                                               const MotiveScalar<M>& r,
                                               PowMode mode) {
  if (!(f.constant_term() == Rational(1)))
    throw std::domain_error("pow_structure: constant term must be 1");
  for (const auto& [m, c] : f.terms())
    if (!is_integer(c))
      throw std::domain_error("pow_structure: input must have integer coefficients");

  if (mode == PowMode::euler_product) {
    auto lifted = map_coefficients<MotiveScalar<M>>(
        f, [](const Rational& c) { return MotiveScalar<M>(c); });
    return pow_structure_general(lifted, r);
  }

  // lemma route: prod_{k>=1} f(t_1^k, t_2^k, ...)^{(p'_k, r)}
  auto out = TruncatedSeries<MotiveScalar<M>>::one(f.layout());
  for (long k = 1; k <= f.layout().truncation; ++k) {
    TruncatedSeries<Rational> sub = substitute_powers(f, static_cast<int>(k));
    if (is_one_series(sub)) continue;
    auto lifted = map_coefficients<MotiveScalar<M>>(
        sub, [](const Rational& c) { return MotiveScalar<M>(c); });
    out = out * naive_pow(lifted, closed_point_class(static_cast<int>(k), r));
  }
  return out;
}

// Z_Y(t) = sigma_t([Y]): the Kapranov zeta function under the measure.
template <typename M>
TruncatedSeries<MotiveScalar<M>> kapranov_zeta(const VarietyClass<M>& y, long n) {
  return sigma_series(y.cls, n);
}

// Generating series of configuration classes: (1+s)^{Pow [Y]} = Z(s)/Z(s^2),
// with [Conf^n Y] the coefficient of s^n.
template <typename M>
TruncatedSeries<MotiveScalar<M>> conf_series(const VarietyClass<M>& y, long n) {
  SeriesLayout layout(1, n);
  TruncatedSeries<Rational> one_plus_s(layout);
  one_plus_s.set_coefficient(Monomial::one(), 1);
  one_plus_s.set_coefficient(Monomial::variable(1), 1);
  return pow_structure(one_plus_s, y.cls, PowMode::lemma_substitution);
}

template <typename M>
MotiveScalar<M> conf_class(const VarietyClass<M>& y, int n) {
  if (n < 0) throw std::invalid_argument("conf_class: n must be >= 0");
  return conf_series(y, n).coefficient(Monomial::variable(1, n));
}

// (1 + t_1 s + ... + t_m s + s)^{Pow [Y]}: the master series of labeled
// configurations with free points. The coefficient of t^tau s^n is the class
// of Conf^{tau * ^(n-|tau|)} Y (s counts all points, labeled and free).
template <typename M>
TruncatedSeries<MotiveScalar<M>> labeled_conf_series(const VarietyClass<M>& y,
                                                     int num_labels, long n) {
  SeriesLayout layout(num_labels + 1, n);
  const int s_var = num_labels + 1;
  TruncatedSeries<Rational> f(layout);
  f.set_coefficient(Monomial::one(), 1);
  f.set_coefficient(Monomial::variable(s_var), 1);
  for (int i = 1; i <= num_labels; ++i)
    f.set_coefficient(Monomial::variable(i) * Monomial::variable(s_var), 1);
  return pow_structure(f, y.cls, PowMode::lemma_substitution);
}

namespace detail {

inline Monomial label_monomial(const GeneralizedPartition& tau) {
  std::vector<Monomial::Entry> entries;
  const auto& parts = tau.multiplicities().parts();
  for (size_t i = 0; i < parts.size(); ++i)
    entries.emplace_back(static_cast<int>(i + 1), parts[i]);
  return Monomial(entries);
}

}  // namespace detail

// [Conf^tau Y]: coefficient of t^tau in (1 + t_1 + ... + t_m)^{Pow [Y]}.
template <typename M>
MotiveScalar<M> gen_conf_class(const VarietyClass<M>& y,
                               const GeneralizedPartition& tau) {
  if (tau.empty()) return MotiveScalar<M>(1);
  SeriesLayout layout(tau.num_labels(), tau.total());
  TruncatedSeries<Rational> f(layout);
  f.set_coefficient(Monomial::one(), 1);
  for (int i = 1; i <= tau.num_labels(); ++i)
    f.set_coefficient(Monomial::variable(i), 1);
  auto series = pow_structure(f, y.cls, PowMode::lemma_substitution);
  return series.coefficient(detail::label_monomial(tau));
}

// [Conf^{tau * ^(n-|tau|)} Y] for n total points.
template <typename M>
MotiveScalar<M> gen_conf_with_free_points(const VarietyClass<M>& y,
                                          const GeneralizedPartition& tau, int n) {
  if (n < tau.total())
    throw std::domain_error("gen_conf_with_free_points: n < |tau|");
  auto series = labeled_conf_series(y, tau.num_labels(), tau.total() + n);
  Monomial mono =
      detail::label_monomial(tau) * Monomial::variable(tau.num_labels() + 1, n);
  return series.coefficient(mono);
}

// ---- algebraic probability: finite-n and stable expectations ----

namespace detail {

// Shared machinery: a character polynomial expanded in the configuration
// basis, together with the master series deep enough for every n <= n_max.
template <typename M>
struct ExpectationEngine {
  ExpectationEngine(const CharPolynomial& p, const VarietyClass<M>& y, int n_max) {
    long deg = std::max<long>(0, p.degree());
    coords_ = expand_in_conf_basis(charpoly_to_symfunc(p, deg));
    num_labels_ = 0;
    for (const auto& [tau, c] : coords_)
      num_labels_ = std::max(num_labels_, tau.num_labels());
    series_ = std::make_unique<TruncatedSeries<MotiveScalar<M>>>(
        labeled_conf_series(y, num_labels_, deg + n_max));
  }

  // E_n[p] = sum_tau coord_tau [Conf^{tau *^(n-|tau|)}] / [Conf^n]
  RationalMotive<M> at(int n) const {
    const int s_var = num_labels_ + 1;
    MotiveScalar<M> num;
    for (const auto& [tau, c] : coords_) {
      if (tau.total() > n) continue;  // too many labels for n points
      Monomial m = label_monomial(tau) * Monomial::variable(s_var, n);
      num = num + series_->coefficient(m) * c;
    }
    MotiveScalar<M> den = series_->coefficient(Monomial::variable(s_var, n));
    if (den.is_zero_scalar())
      throw std::domain_error(
          "finite_expectation: [Conf^n Y] vanishes (MSSP* fails at n=" +
          std::to_string(n) + ")");
    return RationalMotive<M>(num, den);
  }

  std::map<GeneralizedPartition, Rational> coords_;
  int num_labels_;
  std::unique_ptr<TruncatedSeries<MotiveScalar<M>>> series_;
};

template <typename M>
RationalMotive<M> rational_motive_pow(RationalMotive<M> base, unsigned e) {
  RationalMotive<M> acc(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// binom(M, l) as a motive scalar with rational coefficients.
template <typename M>
MotiveScalar<M> binomial_scalar(const MotiveScalar<M>& m, unsigned l) {
  MotiveScalar<M> acc(1);
  for (unsigned i = 0; i < l; ++i) acc = acc * (m - MotiveScalar<M>(static_cast<int>(i)));
  return acc * Rational(Integer(1), factorial_int(l));
}

}  // namespace detail

template <typename M>
RationalMotive<M> finite_expectation(const CharPolynomial& p, int n,
                                     const VarietyClass<M>& y) {
  if (n < 0) throw std::invalid_argument("finite_expectation: n must be >= 0");
  return detail::ExpectationEngine<M>(p, y, n).at(n);
}

// The Bernoulli success probability of the degree-k point count:
// 1 / (1 + L^{k dim Y}).
template <typename M>
RationalMotive<M> stable_bernoulli_probability(const VarietyClass<M>& y, int k) {
  return RationalMotive<M>(
      MotiveScalar<M>(1),
      MotiveScalar<M>(1) + MotiveScalar<M>::lefschetz_pow(k * y.dim));
}

// E_inf[p] by the asymptotic law: the X_k are independent, X_k binomial with
// "count" M_k([Y]) and probability 1/(1+L^{k dim Y}). Monomials are expanded
// into falling factorials, whose binomial moments are exact.
template <typename M>
RationalMotive<M> stable_expectation(const CharPolynomial& p,
                                     const VarietyClass<M>& y) {
  RationalMotive<M> out;
  for (const auto& [mono, c] : p.terms()) {
    auto term = RationalMotive<M>(MotiveScalar<M>(c));
    for (const auto& [k, e] : mono.entries()) {
      MotiveScalar<M> mk = closed_point_class(k, y.cls);
      RationalMotive<M> beta = stable_bernoulli_probability(y, k);
      // E[X^e] = sum_l S(e,l) l! binom(M,l) beta^l
      RationalMotive<M> moment;
      for (unsigned l = 0; l <= static_cast<unsigned>(e); ++l) {
        Rational w(stirling2(static_cast<unsigned>(e), l) * factorial_int(l));
        if (is_zero(w)) continue;
        moment = moment + detail::rational_motive_pow(beta, l) *
                              RationalMotive<M>(detail::binomial_scalar(mk, l)) * w;
      }
      term = term * moment;
    }
    out = out + term;
  }
  return out;
}

// lim_n [Conf^{tau *^(n-|tau|)}] / [Conf^n]: the coefficient of t^tau in
// prod_k (1 + (t_1^k+...+t_m^k)/(1+L^{k dim Y}))^{M_k([Y])}.
template <typename M>
RationalMotive<M> stable_conf_ratio(const VarietyClass<M>& y,
                                    const GeneralizedPartition& tau) {
  if (tau.empty()) return RationalMotive<M>(1);
  int m = tau.num_labels();
  long d = tau.total();
  SeriesLayout layout(m, d);
  using RM = RationalMotive<M>;
  auto prod = TruncatedSeries<RM>::one(layout);
  for (int k = 1; k <= d; ++k) {
    RM beta = stable_bernoulli_probability(y, k);
    TruncatedSeries<RM> base(layout);
    base.set_coefficient(Monomial::one(), RM(1));
    for (int i = 1; i <= m; ++i)
      base.set_coefficient(Monomial::variable(i, k), beta);
    prod = prod * naive_pow(base, RM(closed_point_class(k, y.cls)));
  }
  return prod.coefficient(detail::label_monomial(tau));
}

// E_inf[p] through the configuration basis (the corollary's closed form);
// must agree with stable_expectation, and the test suites check it does.
template <typename M>
RationalMotive<M> stable_expectation_conf_route(const CharPolynomial& p,
                                                const VarietyClass<M>& y) {
  long deg = std::max<long>(0, p.degree());
  auto coords = expand_in_conf_basis(charpoly_to_symfunc(p, deg));
  RationalMotive<M> out;
  for (const auto& [tau, c] : coords)
    out = out + stable_conf_ratio(y, tau) * c;
  return out;
}

// Per-n expectations against the stable value, with the L^{-1}-adic
// valuation of the difference as the convergence certificate.
template <typename M>
struct ExpectationReport {
  std::vector<int> ns;
  std::vector<RationalMotive<M>> finite_values;
  RationalMotive<M> stable_value;
  // valuation of E_n - E_inf; nullopt means the difference is exactly 0
  std::vector<std::optional<long>> valuation_gaps;

  bool gaps_nondecreasing(int from_n = 0) const {
    long prev = LONG_MIN;
    for (size_t i = 0; i < ns.size(); ++i) {
      if (ns[i] < from_n) continue;
      if (!valuation_gaps[i]) continue;  // +infinity stays above everything
      if (*valuation_gaps[i] < prev) return false;
      prev = *valuation_gaps[i];
    }
    return true;
  }

  // First n whose gap meets `bound`; certifies convergence past that bound.
  std::optional<int> first_n_reaching(long bound) const {
    for (size_t i = 0; i < ns.size(); ++i)
      if (!valuation_gaps[i] || *valuation_gaps[i] >= bound) return ns[i];
    return std::nullopt;
  }
};

template <typename M>
ExpectationReport<M> convergence_report(const CharPolynomial& p,
                                        const VarietyClass<M>& y, int n_max) {
  detail::ExpectationEngine<M> engine(p, y, n_max);
  ExpectationReport<M> report;
  report.stable_value = stable_expectation(p, y);
  for (int n = 0; n <= n_max; ++n) {
    RationalMotive<M> en = engine.at(n);
    report.ns.push_back(n);
    report.finite_values.push_back(en);
    report.valuation_gaps.push_back((en - report.stable_value).linv_valuation());
  }
  return report;
}

// The appendix generating function: sum_n chi(V_{binom(X,lbar),n}) t^n =
// (Z(t)/Z(t^2)) prod_k binom(M_k, l_k) (t^k/(1+t^k))^{l_k}.
template <typename M>
TruncatedSeries<MotiveScalar<M>> charpoly_genfunc(const std::vector<int>& lbar,
                                                  const VarietyClass<M>& y, long n) {
  long weight = 0;
  for (size_t i = 0; i < lbar.size(); ++i) weight += static_cast<long>(i + 1) * lbar[i];
  if (weight > n)
    throw std::domain_error("charpoly_genfunc: sum k*l_k exceeds truncation order");

  auto zeta = kapranov_zeta(y, n);
  auto ratio = zeta * inverse(substitute_powers(zeta, 2));
  for (size_t i = 0; i < lbar.size(); ++i) {
    int k = static_cast<int>(i + 1), l = lbar[i];
    if (l == 0) continue;
    MotiveScalar<M> coeff =
        detail::binomial_scalar(closed_point_class(k, y.cls), static_cast<unsigned>(l));
    // (t^k / (1+t^k))^l = t^{kl} (1+t^k)^{-l}
    auto frac = one_minus_monomial_pow(ratio.layout(),
                                       Monomial::variable(1, k), MotiveScalar<M>(-l));
    // one_minus_monomial_pow gives (1-t^k)^{-l}; flip signs for (1+t^k)^{-l}
    TruncatedSeries<MotiveScalar<M>> flipped(ratio.layout());
    for (const auto& [mono, c] : frac.terms()) {
      int j = mono.exponent(1) / k;
      flipped.set_coefficient(mono, j % 2 == 0 ? c : -c);
    }
    TruncatedSeries<MotiveScalar<M>> shifted(ratio.layout());
    for (const auto& [mono, c] : flipped.terms())
      shifted.set_coefficient(mono * Monomial::variable(1, k * l), c * coeff);
    ratio = ratio * shifted;
  }
  return ratio;
}

}  // namespace motconf
