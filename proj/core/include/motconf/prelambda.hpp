#pragma once

#include "motconf/measure.hpp"
#include "motconf/series.hpp"
#include "motconf/symfunc.hpp"

namespace motconf {

// A pre-lambda carrier is a ring with Adams operations and a sigma series
// satisfying sigma_t(a+b) = sigma_t(a) sigma_t(b), sigma_1(r) = r and
// sigma_t(1) = 1/(1-t). Measure rings and (trivially) the rationals model it.
template <typename R>
concept PreLambdaCarrier = requires(const R& r, int k, long n) {
  { adams(k, r) } -> std::convertible_to<R>;
  { sigma_series(r, n) } -> std::convertible_to<TruncatedSeries<R>>;
};

// ---- measure rings ----

template <typename M>
MotiveScalar<M> adams(int k, const MotiveScalar<M>& r) {
  return r.adams(k);
}

// sigma_t of a single weighted monomial c*m: (1 - m t)^{-c}, expanded by the
// generalized binomial series. Integer c >= 0 reproduces Sym^k of an
// effective monomial class; negative integers give the inverse series and
// rational c falls back to the same formula (the naive power), which is the
// only consistent extension.
template <typename M>
TruncatedSeries<MotiveScalar<M>> sigma_monomial(
    const typename MotiveScalar<M>::Exp& e, const Rational& c, long n) {
  SeriesLayout layout(1, n);
  TruncatedSeries<MotiveScalar<M>> out(layout);
  Rational binom = 1;  // binom(c+k-1, k)
  MotiveScalar<M> mono_pow(1);
  MotiveScalar<M> mono = MotiveScalar<M>::monomial(e);
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      binom *= (c + (k - 1)) / Rational(k);
      mono_pow = mono_pow * mono;
    }
    out.set_coefficient(Monomial::variable(1, static_cast<int>(k)),
                        mono_pow * binom);
  }
  return out;
}

// sigma_t(r) = prod over terms of sigma of the monomial, by additivity.
// For a variety class this is the Kapranov zeta function under the measure.
template <typename M>
TruncatedSeries<MotiveScalar<M>> sigma_series(const MotiveScalar<M>& r, long n) {
  auto out = TruncatedSeries<MotiveScalar<M>>::one(SeriesLayout(1, n));
  for (const auto& [e, c] : r.terms()) out = out * sigma_monomial<M>(e, c, n);
  return out;
}

// The pairing (f, r): the unique ring homomorphism Lambda -> R_Q sending
// h_k to sigma_k(r); computed by substituting p_k -> adams(k, r) into the
// power-sum form of f.
template <typename M>
MotiveScalar<M> pair_symfunc(const SymFunc& f, const MotiveScalar<M>& r) {
  MotiveScalar<M> out;
  for (const auto& [mono, c] : f.terms()) {
    MotiveScalar<M> term(c);
    for (const auto& [k, exp] : mono.entries())
      term = term * r.adams(k).pow(static_cast<unsigned>(exp));
    out = out + term;
  }
  return out;
}

// M_k([Y]) = (p'_k, [Y]) = (1/k) sum_{d|k} mu(k/d) adams(d, [Y]): the motivic
// count of closed points of degree k.
template <typename M>
MotiveScalar<M> closed_point_class(int k, const MotiveScalar<M>& y) {
  if (k < 1) throw std::invalid_argument("closed_point_class: k must be >= 1");
  MotiveScalar<M> acc;
  for (long d : divisors(k)) {
    int mu = moebius(k / d);
    if (mu == 0) continue;
    acc = acc + y.adams(static_cast<int>(d)) * Rational(mu, k);
  }
  return acc;
}

// ---- the rationals as a (naive) carrier: adams is the identity and
// sigma_t(r) = (1/(1-t))^r ----

inline Rational adams(int, const Rational& r) { return r; }

inline TruncatedSeries<Rational> sigma_series(const Rational& r, long n) {
  SeriesLayout layout(1, n);
  TruncatedSeries<Rational> out(layout);
  Rational binom = 1;
  for (long k = 0; k <= n; ++k) {
    if (k > 0) binom *= (r + (k - 1)) / Rational(k);
    out.set_coefficient(Monomial::variable(1, static_cast<int>(k)), binom);
  }
  return out;
}

}  // namespace motconf
