#include "motconf/monomial.hpp"

#include <algorithm>

namespace motconf {

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  for (const auto& [var, exp] : entries_) {
    if (var < 1) throw std::invalid_argument("Monomial: variables are 1-based");
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (exp == 0) continue;
    if (!merged.empty() && merged.back().first == var)
      merged.back().second += exp;
    else
      merged.emplace_back(var, exp);
  }
  entries_ = std::move(merged);
}

Monomial Monomial::variable(int var, int exp) {
  return Monomial({{var, exp}});
}

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : entries_)
    if (v == var) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

long Monomial::weighted_degree(std::span<const int> weights) const {
  long d = 0;
  for (const auto& [v, e] : entries_) {
    long w = (v - 1 < static_cast<int>(weights.size())) ? weights[v - 1] : 1;
    d += w * e;
  }
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->first < b->first)
      out.push_back(*a++);
    else if (a->first > b->first)
      out.push_back(*b++);
    else {
      out.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  out.insert(out.end(), a, entries_.end());
  out.insert(out.end(), b, o.entries_.end());
  Monomial m;
  m.entries_ = std::move(out);
  return m;
}

Monomial Monomial::scale_exponents(int k) const {
  if (k < 0) throw std::invalid_argument("Monomial: negative exponent scale");
  if (k == 0) return {};
  Monomial m = *this;
  for (auto& [v, e] : m.entries_) e *= k;
  return m;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
    ++ia, ++ib;
  }
  if (ia != a.entries_.end()) return -1;
  if (ib != b.entries_.end()) return 1;
  return 0;
}

std::string Monomial::str(std::span<const std::string> names,
                          const std::string& fallback_prefix) const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : entries_) {
    if (!s.empty()) s += "*";
    if (v - 1 < static_cast<int>(names.size()))
      s += names[v - 1];
    else
      s += fallback_prefix + std::to_string(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace motconf
