#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace motconf {

// Sparse exponent vector: sorted (variable, exponent) pairs with all stored
// exponents positive. Variables are 1-based. The empty monomial is t^0 = 1.
class Monomial {
 public:
  using Entry = std::pair<int, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);

  static Monomial one() { return {}; }
  static Monomial variable(int var, int exp = 1);

  bool is_one() const { return entries_.empty(); }
  int exponent(int var) const;
  int total_degree() const;
  long weighted_degree(std::span<const int> weights) const;
  int max_var() const { return entries_.empty() ? 0 : entries_.back().first; }

  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& o) const;
  // t^I -> t^{kI}: multiplies every exponent by k.
  Monomial scale_exponents(int k) const;

  bool operator==(const Monomial& o) const = default;

  // Graded lexicographic order (total degree first, then variable-by-variable
  // with larger leading exponents sorting earlier). Gives the deterministic
  // term order used for iteration and rendering.
  static int cmp(const Monomial& a, const Monomial& b);
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

  // "1", "t1^2*t2" with default names, or names[var-1] when provided.
  std::string str(std::span<const std::string> names = {},
                  const std::string& fallback_prefix = "t") const;

 private:
  std::vector<Entry> entries_;
};

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b) < 0;
  }
};

}  // namespace motconf
