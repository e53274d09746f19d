#include "motconf/measure.hpp"

#include <algorithm>

namespace motconf {

std::string LinvExpansion::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (motconf::is_zero(coeffs[i])) continue;
    long e = -(lead + static_cast<long>(i));
    bool neg = sgn(coeffs[i]) < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    Rational ac = abs(coeffs[i]);
    if (e == 0) {
      os << to_string(ac);
    } else {
      if (ac != 1) os << to_string(ac) << "*";
      os << "L^" << e;
    }
  }
  if (first) return "0";
  os << " + O(L^" << -(lead + static_cast<long>(coeffs.size())) << ")";
  return os.str();
}

namespace {

// dense univariate polynomial over Q, index = exponent, no trailing zeros
using Dense = std::vector<Rational>;

Dense trim(Dense p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
  return p;
}

Dense from_profile(const std::map<long, Rational>& prof, long shift) {
  Dense p;
  for (const auto& [e, c] : prof) {
    long i = e - shift;
    if (i >= static_cast<long>(p.size())) p.resize(i + 1, Rational(0));
    p[i] = c;
  }
  return trim(p);
}

// remainder of a by monic-scaled b (classical long division)
Dense poly_mod(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = trim(std::move(a));
  }
  return a;
}

std::optional<Dense> poly_div_exact(Dense a, const Dense& b) {
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    q[a.size() - b.size()] = f;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = trim(std::move(a));
  }
  if (!a.empty()) return std::nullopt;
  return trim(std::move(q));
}

Dense poly_gcd(Dense a, Dense b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Dense r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;  // monic
  }
  return a;
}

}  // namespace

template <typename M>
bool RationalMotive<M>::univariate_divides(const std::map<long, Rational>& d,
                                           const std::map<long, Rational>& p) {
  if (d.empty()) return false;
  if (p.empty()) return true;
  Dense dd = from_profile(d, d.begin()->first);
  Dense pp = from_profile(p, p.begin()->first);
  return poly_div_exact(std::move(pp), dd).has_value();
}

template <typename M>
void RationalMotive<M>::reduce() {
  if (num_.is_zero_scalar()) {
    den_ = MotiveScalar<M>(1);
    return;
  }

  // strip the common monomial factor: shift every variable so the joint
  // minimum exponent is zero (monomials are units in the Laurent ring)
  std::array<int, M::nvars> mins;
  mins.fill(INT_MAX);
  auto scan = [&](const MotiveScalar<M>& s) {
    for (const auto& [e, c] : s.terms())
      for (int i = 0; i < M::nvars; ++i) mins[i] = std::min(mins[i], e[i]);
  };
  scan(num_);
  scan(den_);
  auto shift = [&](const MotiveScalar<M>& s) {
    MotiveScalar<M> out;
    for (const auto& [e, c] : s.terms()) {
      typename MotiveScalar<M>::Exp e2 = e;
      for (int i = 0; i < M::nvars; ++i) e2[i] -= mins[i];
      out = out + MotiveScalar<M>::monomial(e2, c);
    }
    return out;
  };
  bool need_shift = false;
  for (int i = 0; i < M::nvars; ++i) need_shift |= (mins[i] != 0);
  if (need_shift) {
    num_ = shift(num_);
    den_ = shift(den_);
  }

  // cancel the polynomial gcd whenever both sides are effectively univariate
  auto np = num_.univariate_profile();
  auto dp = den_.univariate_profile();
  if (np && dp) {
    long base = std::min(np->begin()->first, dp->begin()->first);
    Dense n = from_profile(*np, base);
    Dense d = from_profile(*dp, base);
    Dense g = poly_gcd(n, d);
    if (g.size() > 1) {
      auto qn = poly_div_exact(std::move(n), g);
      auto qd = poly_div_exact(std::move(d), g);
      if (qn && qd) {
        auto rebuild = [&](const Dense& p) {
          std::map<long, Rational> prof;
          for (size_t i = 0; i < p.size(); ++i)
            if (!motconf::is_zero(p[i])) prof[base + static_cast<long>(i)] = p[i];
          return MotiveScalar<M>::from_univariate_profile(prof);
        };
        num_ = rebuild(*qn);
        den_ = rebuild(*qd);
      }
    }
  }

  // normalize scale: denominator has coprime integer coefficients and a
  // positive leading coefficient
  Integer den_lcm = 1, den_gcd = 0;
  for (const auto& [e, c] : den_.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  MotiveScalar<M> scaled_den = den_ * Rational(den_lcm);
  for (const auto& [e, c] : scaled_den.terms())
    mpz_gcd(den_gcd.get_mpz_t(), den_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  if (den_gcd == 0) den_gcd = 1;
  Rational factor = Rational(den_lcm) / Rational(den_gcd);
  if (sgn(scaled_den.terms().rbegin()->second) < 0) factor = -factor;
  num_ = num_ * factor;
  den_ = den_ * factor;
}

template class MotiveScalar<CountMeasure>;
template class MotiveScalar<HodgeMeasure>;
template class RationalMotive<CountMeasure>;
template class RationalMotive<HodgeMeasure>;

}  // namespace motconf
