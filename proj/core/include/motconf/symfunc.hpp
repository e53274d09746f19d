#pragma once

#include <map>
#include <vector>

#include "motconf/graded_poly.hpp"
#include "motconf/series.hpp"

namespace motconf {

// Multiset of positive integers, stored sorted descending.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const = default;
  // Ordered by size, then lexicographically on the sorted part lists.
  bool operator<(const Partition& o) const;

  std::string str() const;  // "3+1+1", "0" for empty

  static std::vector<Partition> all_of(int n);  // partitions of n, sorted
 private:
  std::vector<int> parts_;
};

// A generalized partition tau = a_1^{l_1}...a_m^{l_m}: m distinct labels with
// positive multiplicities l_i. Canonical form keeps only the multiplicity
// partition, since every class attached to tau depends only on it.
class GeneralizedPartition {
 public:
  GeneralizedPartition() = default;
  explicit GeneralizedPartition(std::vector<int> multiplicities)
      : mults_(Partition(std::move(multiplicities))) {}
  explicit GeneralizedPartition(Partition mults) : mults_(std::move(mults)) {}

  const Partition& multiplicities() const { return mults_; }
  int total() const { return mults_.size(); }
  int num_labels() const { return static_cast<int>(mults_.parts().size()); }
  bool empty() const { return mults_.empty(); }

  bool operator==(const GeneralizedPartition& o) const = default;
  bool operator<(const GeneralizedPartition& o) const { return mults_ < o.mults_; }

  std::string str() const;  // "a^2*b", "(empty)"

 private:
  Partition mults_;
};

// ---- Classical bases, all expressed in the power-sum basis ----

SymFunc power_sum_p(int k, long cap);     // p_k
SymFunc complete_h(int k, long cap);      // h_k via Newton's recurrence
SymFunc elementary_e(int k, long cap);    // e_k via the signed recurrence
SymFunc mobius_power_sum(int k, long cap);  // p'_k = (1/k) sum_{d|k} mu(k/d) p_d

// h_tau = h_{l_1} h_{l_2} ... indexed by the multiplicities of tau.
SymFunc complete_h_tau(const GeneralizedPartition& tau, long cap);

// Rewrites a power-sum-basis element in the h- or e-generators.
GradedPoly to_h_basis(const SymFunc& f);
GradedPoly to_e_basis(const SymFunc& f);

// ---- Configuration basis ----

// c_tau: the symmetric function pairing to the class of the generalized
// configuration space Conf^tau, extracted as the coefficient of t^tau in
// prod_k (1 + t_1^k + ... + t_m^k)^{p'_k}.
SymFunc conf_symfunc(const GeneralizedPartition& tau, long N);

// Coordinates of f in the c_tau basis; exact, f = sum coord * c_tau.
std::map<GeneralizedPartition, Rational> expand_in_conf_basis(const SymFunc& f);

// All multiplicity partitions with 1 <= total <= n, in the deterministic
// generation order (graded by total, then by the partition order).
std::vector<GeneralizedPartition> conf_basis_index(int n);

// ---- Character polynomials ----

// X_i -> p'_i, expanded in the power-sum basis. Throws std::domain_error if
// the exact image would exceed the cap.
SymFunc charpoly_to_symfunc(const CharPolynomial& p, long cap);

// binom(X, lbar) = prod_i binom(X_i, l_i); lbar[i-1] is the X_i entry.
CharPolynomial binomial_charpoly(const std::vector<int>& lbar);

CharPolynomial charpoly_generator(int i);  // X_i

// Exact solve of a square rational linear system; throws std::logic_error on
// a singular matrix.
std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b);

}  // namespace motconf
