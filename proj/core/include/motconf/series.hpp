#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "motconf/monomial.hpp"
#include "motconf/rational.hpp"

namespace motconf {

// Variable set, per-variable positive weights and the truncation order N.
// Two series interoperate only when their variable sets and weights agree;
// the truncation of a result is the minimum of the operands'.
struct SeriesLayout {
  int num_vars = 1;
  std::vector<int> weights;  // size num_vars, every entry >= 1
  long truncation = 0;

  SeriesLayout() = default;
  SeriesLayout(int nvars, long trunc)
      : num_vars(nvars), weights(nvars, 1), truncation(trunc) {
    check();
  }
  SeriesLayout(std::vector<int> w, long trunc)
      : num_vars(static_cast<int>(w.size())), weights(std::move(w)), truncation(trunc) {
    check();
  }

  void check() const {
    if (num_vars < 0 || truncation < 0)
      throw std::invalid_argument("SeriesLayout: negative sizes");
    for (int w : weights)
      if (w < 1) throw std::invalid_argument("SeriesLayout: weights must be positive");
  }

  long wdeg(const Monomial& m) const { return m.weighted_degree(weights); }
  bool same_variables(const SeriesLayout& o) const {
    return num_vars == o.num_vars && weights == o.weights;
  }
  SeriesLayout with_truncation(long n) const {
    SeriesLayout l = *this;
    l.truncation = n;
    return l;
  }
};

// All monomials in the layout's variables with weighted degree in [1, maxdeg],
// sorted by weighted degree then graded-lex. Used by the Euler factorizer.
std::vector<Monomial> enumerate_monomials(const SeriesLayout& layout, long maxdeg);

// Sparse multivariate formal power series over an exact coefficient ring R,
// truncated at a fixed weighted degree. Values are immutable in practice:
// every operation returns a fresh series, so shared instances are safe to
// read concurrently.
//
// R must provide: default construction (= 0), construction from int,
// +, -, *, unary -, ==, operator*(const Rational&), and an ADL-visible
// is_zero(const R&).
template <typename R>
class TruncatedSeries {
 public:
  using TermMap = std::map<Monomial, R, GradedLexLess>;

  explicit TruncatedSeries(SeriesLayout layout) : layout_(std::move(layout)) {}

  static TruncatedSeries constant(SeriesLayout layout, R value) {
    TruncatedSeries s(std::move(layout));
    s.set_coefficient(Monomial::one(), std::move(value));
    return s;
  }
  static TruncatedSeries one(SeriesLayout layout) {
    return constant(std::move(layout), R(1));
  }
  static TruncatedSeries monomial_term(SeriesLayout layout, Monomial m, R value) {
    TruncatedSeries s(std::move(layout));
    s.set_coefficient(std::move(m), std::move(value));
    return s;
  }

  const SeriesLayout& layout() const { return layout_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero_series() const { return terms_.empty(); }

  R coefficient(const Monomial& m) const {
    if (layout_.wdeg(m) > layout_.truncation)
      throw std::domain_error("coefficient: monomial degree exceeds truncation order");
    auto it = terms_.find(m);
    return it == terms_.end() ? R(0) : it->second;
  }

  R constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? R(0) : it->second;
  }

  // Silently drops values past the truncation order and zero values.
  void set_coefficient(Monomial m, R value) {
    if (layout_.wdeg(m) > layout_.truncation) return;
    if (is_zero(value))
      terms_.erase(m);
    else
      terms_[std::move(m)] = std::move(value);
  }

  void add_to_coefficient(const Monomial& m, const R& delta) {
    if (layout_.wdeg(m) > layout_.truncation) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!is_zero(delta)) terms_.emplace(m, delta);
    } else {
      it->second = it->second + delta;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  TruncatedSeries truncated(long n) const {
    TruncatedSeries out(layout_.with_truncation(std::min(n, layout_.truncation)));
    for (const auto& [m, c] : terms_) out.set_coefficient(m, c);
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(merged_layout(a, b));
    for (const auto& [m, c] : a.terms_) out.add_to_coefficient(m, c);
    for (const auto& [m, c] : b.terms_) out.add_to_coefficient(m, c);
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out(layout_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(merged_layout(a, b));
    const long n = out.layout_.truncation;
    for (const auto& [ma, ca] : a.terms_) {
      long da = out.layout_.wdeg(ma);
      if (da > n) continue;
      for (const auto& [mb, cb] : b.terms_) {
        if (da + out.layout_.wdeg(mb) > n) continue;
        out.add_to_coefficient(ma * mb, ca * cb);
      }
    }
    return out;
  }

  TruncatedSeries scaled(const R& r) const {
    TruncatedSeries out(layout_);
    for (const auto& [m, c] : terms_) out.set_coefficient(m, c * r);
    return out;
  }
  TruncatedSeries scaled(const Rational& r) const
    requires(!std::is_same_v<R, Rational>)
  {
    TruncatedSeries out(layout_);
    for (const auto& [m, c] : terms_) out.set_coefficient(m, c * r);
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.layout_.same_variables(b.layout_) &&
           a.layout_.truncation == b.layout_.truncation && a.terms_ == b.terms_;
  }

  // Equality of coefficient maps up to the common truncation order.
  friend bool agree_to_common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.layout_.same_variables(b.layout_)) return false;
    long n = std::min(a.layout_.truncation, b.layout_.truncation);
    return a.truncated(n).terms_ == b.truncated(n).terms_;
  }

  std::string str(std::span<const std::string> names = {},
                  const std::string& prefix = "t") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(c) << ")";
      if (!m.is_one()) os << "*" << m.str(names, prefix);
    }
    return os.str();
  }

 private:
  static SeriesLayout merged_layout(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.layout_.same_variables(b.layout_))
      throw std::invalid_argument("series operands have different variables or weights");
    return a.layout_.with_truncation(
        std::min(a.layout_.truncation, b.layout_.truncation));
  }

  template <typename T>
  static std::string coeff_str(const T& c) {
    if constexpr (std::is_same_v<T, Rational>)
      return to_string(c);
    else
      return c.str();
  }

  SeriesLayout layout_;
  TermMap terms_;
};

template <typename R>
bool is_one_series(const TruncatedSeries<R>& f) {
  return f.terms().size() == 1 && f.terms().begin()->first.is_one() &&
         f.terms().begin()->second == R(1);
}

// f^n by binary exponentiation, n >= 0. Matches naive_pow(f, n) on series
// with constant term 1 but needs no precondition.
template <typename R>
TruncatedSeries<R> pow_int(const TruncatedSeries<R>& f, long n) {
  if (n < 0) throw std::invalid_argument("pow_int: negative exponent");
  TruncatedSeries<R> acc = TruncatedSeries<R>::one(f.layout());
  TruncatedSeries<R> base = f;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

// log of a series with constant term 1, as sum_{m>=1} (-1)^{m+1}(f-1)^m/m.
// The result has constant term 0.
template <typename R>
TruncatedSeries<R> log1p(const TruncatedSeries<R>& f) {
  if (!(f.constant_term() == R(1)))
    throw std::domain_error("log1p: constant term must be 1");
  TruncatedSeries<R> g = f;
  g.add_to_coefficient(Monomial::one(), R(-1));
  TruncatedSeries<R> out(f.layout());
  TruncatedSeries<R> power = g;  // g^m
  long n = f.layout().truncation;
  for (long m = 1; m <= n && !power.is_zero_series(); ++m) {
    Rational c(m % 2 == 1 ? 1 : -1, m);
    out = out + power.scaled(c);
    if (m < n) power = power * g;
  }
  return out;
}

// exp of a series with constant term 0. The result has constant term 1;
// inverse of log1p.
template <typename R>
TruncatedSeries<R> exp1m(const TruncatedSeries<R>& g) {
  if (!is_zero(g.constant_term()))
    throw std::domain_error("exp1m: constant term must be 0");
  TruncatedSeries<R> out = TruncatedSeries<R>::one(g.layout());
  TruncatedSeries<R> power = g;  // g^m / m!
  long n = g.layout().truncation;
  for (long m = 1; m <= n && !power.is_zero_series(); ++m) {
    out = out + power;
    if (m < n) power = (power * g).scaled(Rational(1, m + 1));
  }
  return out;
}

// The naive exponential f^r = exp(r*log f) for f with constant term 1.
// (type_identity keeps expression templates like mpq sums from hijacking R)
template <typename R>
TruncatedSeries<R> naive_pow(const TruncatedSeries<R>& f,
                             const std::type_identity_t<R>& r) {
  if (is_zero(r)) return TruncatedSeries<R>::one(f.layout());
  return exp1m(log1p(f).scaled(r));
}

// (1 - t^I)^r expanded by the generalized binomial series; exact for any
// ring exponent r and much cheaper than exp(r log) for a single factor.
template <typename R>
TruncatedSeries<R> one_minus_monomial_pow(const SeriesLayout& layout,
                                          const Monomial& mono, const R& r) {
  if (mono.is_one())
    throw std::invalid_argument("one_minus_monomial_pow: monomial must be non-constant");
  TruncatedSeries<R> out(layout);
  long step = layout.wdeg(mono);
  R coeff(1);
  out.set_coefficient(Monomial::one(), coeff);
  for (long j = 1; j * step <= layout.truncation; ++j) {
    // binom(r, j) * (-1)^j, built incrementally
    coeff = coeff * (r - R(static_cast<int>(j - 1))) * Rational(-1, j);
    out.set_coefficient(mono.scale_exponents(static_cast<int>(j)), coeff);
  }
  return out;
}

// f(t_1, t_2, ...) -> f(t_1^k, t_2^k, ...). A ring homomorphism; terms pushed
// past the truncation order are dropped.
template <typename R>
TruncatedSeries<R> substitute_powers(const TruncatedSeries<R>& f, int k) {
  if (k < 1) throw std::invalid_argument("substitute_powers: k must be >= 1");
  TruncatedSeries<R> out(f.layout());
  for (const auto& [m, c] : f.terms()) out.set_coefficient(m.scale_exponents(k), c);
  return out;
}

// The unique exponents a_I with f = prod_I (1 - t^I)^{-a_I} up to the
// truncation order, for f with constant term 1. Monomials are visited in
// increasing weighted degree; at each step the coefficient of t^I in the
// residual is the exponent a_I, which is then divided out.
template <typename R>
std::vector<std::pair<Monomial, R>> euler_factorize(const TruncatedSeries<R>& f) {
  if (!(f.constant_term() == R(1)))
    throw std::domain_error("euler_factorize: constant term must be 1");
  std::vector<std::pair<Monomial, R>> out;
  TruncatedSeries<R> residual = f;
  for (const Monomial& m : enumerate_monomials(f.layout(), f.layout().truncation)) {
    R a = residual.coefficient(m);
    if (is_zero(a)) continue;
    out.emplace_back(m, a);
    residual = residual * one_minus_monomial_pow(f.layout(), m, a);
  }
  if (!is_one_series(residual))
    throw std::logic_error("euler_factorize: residual did not reduce to 1");
  return out;
}

// Re-expands an Euler factor list; inverse of euler_factorize.
template <typename R>
TruncatedSeries<R> euler_expand(const SeriesLayout& layout,
                                std::span<const std::pair<Monomial, R>> factors) {
  TruncatedSeries<R> out = TruncatedSeries<R>::one(layout);
  for (const auto& [m, a] : factors)
    out = out * one_minus_monomial_pow<R>(layout, m, -a);
  return out;
}

// Multiplicative inverse of a series with constant term 1.
template <typename R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& f) {
  return naive_pow(f, R(-1));
}

// Coefficient-wise conversion between coefficient rings.
template <typename R2, typename R, typename Fn>
TruncatedSeries<R2> map_coefficients(const TruncatedSeries<R>& f, Fn&& fn) {
  TruncatedSeries<R2> out(f.layout());
  for (const auto& [m, c] : f.terms()) out.set_coefficient(m, fn(c));
  return out;
}

}  // namespace motconf
