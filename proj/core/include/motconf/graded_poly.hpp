#pragma once

#include <climits>
#include <map>

#include "motconf/monomial.hpp"
#include "motconf/rational.hpp"

namespace motconf {

// Polynomial in countably many generators g_1, g_2, ... with deg(g_k) = k and
// exact rational coefficients, optionally truncated above a degree cap.
// Interpreting the generators as p_k gives symmetric functions in the
// power-sum basis; as X_k it gives character polynomials; as h_k or e_k the
// corresponding basis views. Values are immutable in use; operations return
// fresh objects.
class GradedPoly {
 public:
  static constexpr long kNoCap = LONG_MAX;
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  GradedPoly() : cap_(kNoCap) {}
  GradedPoly(int v) : GradedPoly(Rational(v)) {}  // NOLINT: ring-constant conversion
  explicit GradedPoly(Rational v, long cap = kNoCap) : cap_(cap) {
    if (!motconf::is_zero(v)) terms_.emplace(Monomial::one(), std::move(v));
  }

  static GradedPoly generator(int k, long cap = kNoCap);
  static long monomial_degree(const Monomial& m);  // sum of var*exp

  long cap() const { return cap_; }
  GradedPoly capped(long cap) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  // Max weighted degree of a term; -1 for the zero polynomial.
  long degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_coefficient() const { return coefficient(Monomial::one()); }
  void set_coefficient(Monomial m, Rational v);
  void add_to_coefficient(const Monomial& m, const Rational& v);

  GradedPoly homogeneous_component(long d) const;
  bool has_integer_coefficients() const;

  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly operator-() const;
  GradedPoly operator*(const Rational& r) const;
  GradedPoly pow(unsigned e) const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.terms_ == b.terms_;  // the cap is context, not value
  }

  // Replaces every generator g_k by images[k] and expands; images must be
  // defined for every generator that occurs.
  GradedPoly substitute(const std::map<int, GradedPoly>& images) const;

  std::string str(const std::string& gen_prefix = "p") const;

 private:
  static long min_cap(long a, long b) { return a < b ? a : b; }

  long cap_;
  TermMap terms_;
};

inline bool is_zero(const GradedPoly& f) { return f.is_zero_poly(); }

// Symmetric functions stored in the power-sum basis (generators p_k).
using SymFunc = GradedPoly;
// Polynomials in the cycle-counting generators X_k; conventionally uncapped.
using CharPolynomial = GradedPoly;

}  // namespace motconf
