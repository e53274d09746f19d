#include "motconf/graded_poly.hpp"

#include <sstream>

namespace motconf {

GradedPoly GradedPoly::generator(int k, long cap) {
  if (k < 1) throw std::invalid_argument("GradedPoly: generators are 1-based");
  GradedPoly g(Rational(0), cap);
  g.set_coefficient(Monomial::variable(k), 1);
  return g;
}

long GradedPoly::monomial_degree(const Monomial& m) {
  long d = 0;
  for (const auto& [v, e] : m.entries()) d += static_cast<long>(v) * e;
  return d;
}

GradedPoly GradedPoly::capped(long cap) const {
  GradedPoly out(Rational(0), cap);
  for (const auto& [m, c] : terms_) out.set_coefficient(m, c);
  return out;
}

long GradedPoly::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::set_coefficient(Monomial m, Rational v) {
  if (monomial_degree(m) > cap_) return;
  if (motconf::is_zero(v))
    terms_.erase(m);
  else
    terms_[std::move(m)] = std::move(v);
}

void GradedPoly::add_to_coefficient(const Monomial& m, const Rational& v) {
  if (monomial_degree(m) > cap_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!motconf::is_zero(v)) terms_.emplace(m, v);
  } else {
    it->second += v;
    if (motconf::is_zero(it->second)) terms_.erase(it);
  }
}

GradedPoly GradedPoly::homogeneous_component(long d) const {
  GradedPoly out(Rational(0), cap_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == d) out.set_coefficient(m, c);
  return out;
}

bool GradedPoly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out(Rational(0), GradedPoly::min_cap(a.cap_, b.cap_));
  for (const auto& [m, c] : a.terms_) out.add_to_coefficient(m, c);
  for (const auto& [m, c] : b.terms_) out.add_to_coefficient(m, c);
  return out;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return a + (-b); }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out(Rational(0), GradedPoly::min_cap(a.cap_, b.cap_));
  for (const auto& [ma, ca] : a.terms_) {
    long da = GradedPoly::monomial_degree(ma);
    if (da > out.cap_) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (da + GradedPoly::monomial_degree(mb) > out.cap_) continue;
      out.add_to_coefficient(ma * mb, ca * cb);
    }
  }
  return out;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(Rational(0), cap_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

GradedPoly GradedPoly::operator*(const Rational& r) const {
  GradedPoly out(Rational(0), cap_);
  if (motconf::is_zero(r)) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * r);
  return out;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly acc(Rational(1), cap_);
  GradedPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

GradedPoly GradedPoly::substitute(const std::map<int, GradedPoly>& images) const {
  GradedPoly out(Rational(0), cap_);
  for (const auto& [m, c] : terms_) {
    GradedPoly term(c, cap_);
    for (const auto& [v, e] : m.entries()) {
      auto it = images.find(v);
      if (it == images.end())
        throw std::invalid_argument("substitute: no image for generator " +
                                    std::to_string(v));
      term = term * it->second.pow(static_cast<unsigned>(e));
    }
    out = out + term;
  }
  return out;
}

std::string GradedPoly::str(const std::string& gen_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << to_string(c);
      continue;
    }
    if (c == 1)
      os << m.str({}, gen_prefix);
    else
      os << to_string(c) << "*" << m.str({}, gen_prefix);
  }
  return os.str();
}

}  // namespace motconf
