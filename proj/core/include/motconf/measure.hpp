#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>

#include "motconf/rational.hpp"

namespace motconf {

// Measure tags. Classes of varieties are only ever represented through a
// motivic measure: point counting lands in Laurent polynomials in q, the
// Hodge (E-polynomial) measure in Laurent polynomials in u, v. The Lefschetz
// class L is q, respectively uv.
struct CountMeasure {
  static constexpr int nvars = 1;
  static constexpr const char* name = "count";
  static const std::array<const char*, 1> var_names;
};
struct HodgeMeasure {
  static constexpr int nvars = 2;
  static constexpr const char* name = "hodge";
  static const std::array<const char*, 2> var_names;
};

inline const std::array<const char*, 1> CountMeasure::var_names = {"q"};
inline const std::array<const char*, 2> HodgeMeasure::var_names = {"u", "v"};

template <typename M>
struct ExpVecLess {
  using Exp = std::array<int, M::nvars>;
  bool operator()(const Exp& a, const Exp& b) const {
    long da = 0, db = 0;
    for (int i = 0; i < M::nvars; ++i) da += a[i], db += b[i];
    if (da != db) return da < db;
    return a < b;
  }
};

// The image of a Grothendieck-ring class under a measure: an exact Laurent
// polynomial in the measure variables with rational coefficients. L is
// invertible, so negative exponents are allowed.
template <typename M>
class MotiveScalar {
 public:
  using Exp = std::array<int, M::nvars>;
  using TermMap = std::map<Exp, Rational, ExpVecLess<M>>;

  MotiveScalar() = default;
  MotiveScalar(int v) : MotiveScalar(Rational(v)) {}  // NOLINT
  explicit MotiveScalar(Rational v) {
    if (!motconf::is_zero(v)) terms_.emplace(Exp{}, std::move(v));
  }

  static MotiveScalar monomial(Exp e, Rational c = Rational(1)) {
    MotiveScalar s;
    if (!motconf::is_zero(c)) s.terms_.emplace(e, std::move(c));
    return s;
  }

  // L^k: q^k for point counting, (uv)^k for Hodge.
  static MotiveScalar lefschetz_pow(int k) {
    Exp e{};
    for (int i = 0; i < M::nvars; ++i) e[i] = k;
    return monomial(e);
  }
  static MotiveScalar lefschetz() { return lefschetz_pow(1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero_scalar() const { return terms_.empty(); }
  bool is_integral() const {
    for (const auto& [e, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }

  friend MotiveScalar operator+(const MotiveScalar& a, const MotiveScalar& b) {
    MotiveScalar out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MotiveScalar operator-(const MotiveScalar& a, const MotiveScalar& b) {
    return a + (-b);
  }
  MotiveScalar operator-() const {
    MotiveScalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MotiveScalar operator*(const MotiveScalar& a, const MotiveScalar& b) {
    MotiveScalar out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (int i = 0; i < M::nvars; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  MotiveScalar operator*(const Rational& r) const {
    MotiveScalar out;
    if (motconf::is_zero(r)) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * r);
    return out;
  }
  friend bool operator==(const MotiveScalar& a, const MotiveScalar& b) {
    return a.terms_ == b.terms_;
  }

  MotiveScalar pow(unsigned e) const {
    MotiveScalar acc(1), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Adams operation: every exponent vector scaled by k. Additive, and
  // multiplicative on monomials, hence a ring endomorphism.
  MotiveScalar adams(int k) const {
    if (k < 1) throw std::invalid_argument("adams: k must be >= 1");
    MotiveScalar out;
    for (const auto& [e, c] : terms_) {
      Exp ke;
      for (int i = 0; i < M::nvars; ++i) ke[i] = e[i] * k;
      out.add_term(ke, c);
    }
    return out;
  }

  // Max total degree over terms; nullopt for 0. Drives the L^{-1} valuation.
  std::optional<long> top_total_degree() const {
    if (terms_.empty()) return std::nullopt;
    long best = LONG_MIN;
    for (const auto& [e, c] : terms_) {
      long d = 0;
      for (int i = 0; i < M::nvars; ++i) d += e[i];
      best = std::max(best, d);
    }
    return best;
  }

  // Exponent -> coefficient as a univariate Laurent profile: immediate for
  // the count measure; for Hodge defined only on Tate-type values (every
  // term a power of uv), with the exponent measured in powers of L.
  std::optional<std::map<long, Rational>> univariate_profile() const {
    std::map<long, Rational> prof;
    for (const auto& [e, c] : terms_) {
      for (int i = 1; i < M::nvars; ++i)
        if (e[i] != e[0]) return std::nullopt;
      prof[e[0]] = c;
    }
    return prof;
  }

  static MotiveScalar from_univariate_profile(const std::map<long, Rational>& prof) {
    MotiveScalar out;
    for (const auto& [k, c] : prof) {
      Exp e;
      for (int i = 0; i < M::nvars; ++i) e[i] = static_cast<int>(k);
      out.add_term(e, c);
    }
    return out;
  }

  // Point-counting evaluation at a concrete prime power (count measure only).
  Rational evaluate(const Rational& q) const
    requires std::is_same_v<M, CountMeasure>
  {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * pow_rational(q, e[0]);
    return acc;
  }

  // uv -> q substitution; defined for Tate-type values only.
  MotiveScalar<CountMeasure> specialize_to_count() const
    requires std::is_same_v<M, HodgeMeasure>
  {
    auto prof = univariate_profile();
    if (!prof)
      throw std::domain_error("specialize_to_count: non-Tate Hodge value");
    return MotiveScalar<CountMeasure>::from_univariate_profile(*prof);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // render highest degree first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = sgn(c) < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      Rational ac = abs(c);
      std::string mono = exp_str(e);
      if (mono.empty())
        os << to_string(ac);
      else if (ac == 1)
        os << mono;
      else
        os << to_string(ac) << "*" << mono;
    }
    return os.str();
  }

 private:
  static std::string exp_str(const Exp& e) {
    std::string s;
    for (int i = 0; i < M::nvars; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += M::var_names[i];
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  void add_term(const Exp& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!motconf::is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (motconf::is_zero(it->second)) terms_.erase(it);
    }
  }

  TermMap terms_;
};

template <typename M>
inline bool is_zero(const MotiveScalar<M>& x) {
  return x.is_zero_scalar();
}

using CountScalar = MotiveScalar<CountMeasure>;
using HodgeScalar = MotiveScalar<HodgeMeasure>;

// Truncated Laurent expansion in w = L^{-1}: sum_i coeffs[i] * L^{-(lead+i)}.
struct LinvExpansion {
  long lead = 0;
  std::vector<Rational> coeffs;
  std::string str() const;
};

// Quotient of two motive scalars in canonical form. Equality is exact
// cross-multiplication; reduction (common monomial factors, and a univariate
// polynomial gcd whenever the value is Tate-type) only keeps representatives
// small. Houses limit values and the completed ring via the L^{-1}-adic
// valuation.
template <typename M>
class RationalMotive {
 public:
  RationalMotive() : num_(), den_(1) {}
  RationalMotive(int v) : num_(v), den_(1) {}  // NOLINT
  RationalMotive(MotiveScalar<M> value) : num_(std::move(value)), den_(1) {}  // NOLINT
  RationalMotive(MotiveScalar<M> num, MotiveScalar<M> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero_scalar())
      throw std::domain_error("RationalMotive: zero denominator");
    reduce();
  }

  const MotiveScalar<M>& num() const { return num_; }
  const MotiveScalar<M>& den() const { return den_; }
  bool is_zero_motive() const { return num_.is_zero_scalar(); }

  friend RationalMotive operator+(const RationalMotive& a, const RationalMotive& b) {
    return RationalMotive(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalMotive operator-(const RationalMotive& a, const RationalMotive& b) {
    return RationalMotive(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalMotive operator-() const {
    RationalMotive out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalMotive operator*(const RationalMotive& a, const RationalMotive& b) {
    return RationalMotive(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalMotive operator/(const RationalMotive& a, const RationalMotive& b) {
    if (b.is_zero_motive()) throw std::domain_error("RationalMotive: division by zero");
    return RationalMotive(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalMotive operator*(const Rational& r) const {
    RationalMotive out = *this;
    out.num_ = out.num_ * r;
    if (motconf::is_zero(r)) out.den_ = MotiveScalar<M>(1);
    return out;
  }
  friend bool operator==(const RationalMotive& a, const RationalMotive& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  // Order of vanishing in L^{-1}: top degree of the denominator minus top
  // degree of the numerator (q-degree for counting, total (u,v)-degree for
  // Hodge). +infinity (nullopt) for 0. Convergence in the completed ring is
  // valuation -> infinity.
  std::optional<long> linv_valuation() const {
    auto dn = num_.top_total_degree();
    if (!dn) return std::nullopt;
    return *den_.top_total_degree() - *dn;
  }

  // Laurent expansion in descending powers of L, truncated after n terms.
  // Requires a Tate-type value under the Hodge measure.
  LinvExpansion linv_expansion(int n) const {
    auto np = num_.univariate_profile();
    auto dp = den_.univariate_profile();
    if (!np || !dp)
      throw std::domain_error("linv_expansion: non-Tate Hodge value");
    LinvExpansion out;
    if (np->empty() || n <= 0) return out;
    long atop = np->rbegin()->first;
    long btop = dp->rbegin()->first;
    // power series division in w = L^{-1}
    auto at = [&](const std::map<long, Rational>& p, long top, long j) {
      auto it = p.find(top - j);
      return it == p.end() ? Rational(0) : it->second;
    };
    out.lead = btop - atop;
    out.coeffs.resize(n, Rational(0));
    Rational d0 = at(*dp, btop, 0);
    for (int j = 0; j < n; ++j) {
      Rational acc = at(*np, atop, j);
      for (int i = 0; i < j; ++i) acc -= out.coeffs[i] * at(*dp, btop, j - i);
      out.coeffs[j] = acc / d0;
    }
    return out;
  }

  // Exact divisibility test den | other (as Laurent polynomials); used for
  // structure checks on stable values.
  bool denominator_divides(const MotiveScalar<M>& product) const {
    auto dp = den_.univariate_profile();
    auto pp = product.univariate_profile();
    if (!dp || !pp) return false;
    return univariate_divides(*dp, *pp);
  }

  std::string str() const {
    if (den_ == MotiveScalar<M>(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  static bool univariate_divides(const std::map<long, Rational>& d,
                                 const std::map<long, Rational>& p);
  void reduce();

  MotiveScalar<M> num_, den_;
};

template <typename M>
inline bool is_zero(const RationalMotive<M>& x) {
  return x.is_zero_motive();
}

using CountMotive = RationalMotive<CountMeasure>;
using HodgeMotive = RationalMotive<HodgeMeasure>;

extern template class MotiveScalar<CountMeasure>;
extern template class MotiveScalar<HodgeMeasure>;
extern template class RationalMotive<CountMeasure>;
extern template class RationalMotive<HodgeMeasure>;

}  // namespace motconf
