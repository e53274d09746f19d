#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motconf/rational.hpp"
#include "motconf/symfunc.hpp"
#include "motconf/variety.hpp"

namespace motconf {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F_{p^e} as F_p[x] modulo a fixed tabulated irreducible polynomial
// (verified at construction). Elements are encoded as indices in [0, p^e)
// whose base-p digits are the polynomial coefficients; arithmetic is exact
// and deterministic across runs. Supported: p in {2,3,5,7}, e*? <= 6 per the
// modulus table.
class FiniteField {
 public:
  using Elem = uint32_t;

  FiniteField(int p, int e);
  static FiniteField of_order(long q);  // factors q = p^e
  static bool decompose_prime_power(long q, int& p, int& e);

  long size() const { return q_; }
  int characteristic() const { return p_; }
  int extension_degree() const { return e_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_integer(const Integer& n) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, long n) const;
  Elem inv(Elem a) const;
  Elem frobenius_p(Elem a) const { return frob_[a]; }  // x -> x^p

  // Degrees over the subfield F_{p^base_e}: table[x] is the least d >= 1
  // with x^{(p^base_e)^d} = x. Requires base_e | e.
  std::vector<int> degree_table(int base_e) const;

  std::string elem_str(Elem a) const;

 private:
  void decode(Elem a, int* digits) const;
  Elem encode(const int* digits) const;

  int p_, e_;
  long q_;
  std::vector<int> modulus_;  // ascending coefficients, monic, length e+1
  std::vector<Elem> frob_;    // x -> x^p
};

// Census of closed points (Frobenius orbits) by degree, over base field F_q.
struct ClosedPointTable {
  long base_q = 0;
  int depth = 0;
  std::vector<Integer> counts;  // counts[k-1] = closed points of degree k
  int orbit_verified_upto = 0;  // orbit-grouping census cross-checked to here

  const Integer& at(int k) const { return counts.at(static_cast<size_t>(k - 1)); }
};

struct OracleOptions {
  // Cap on enumeration candidates; exceeded enumerations throw budget_error
  // rather than sampling. Overridable via MOTCONF_BUDGET.
  Integer budget = Integer(10000000);
  static OracleOptions from_env();
};

// Number of F-points, by structural counting for builtins and constructors
// and exhaustive enumeration (within budget) for affine systems.
Integer count_points(const VarietySpec& spec, const FiniteField& field,
                     const OracleOptions& opt = {});

// Candidate tuples an exhaustive enumeration must visit.
Integer enumeration_candidates(const VarietySpec& spec, long field_size);

// Explicit points with their closed-point degrees over F_{p^base_e}.
struct EnumeratedPoints {
  std::vector<std::vector<uint32_t>> points;
  std::vector<int> degrees;
};
EnumeratedPoints enumerate_points(const VarietySpec& spec, const FiniteField& field,
                                  int base_e, const OracleOptions& opt = {});

// Both census routes: the Moebius formula over point counts, and (whenever
// the enumeration fits the budget) explicit Frobenius-orbit grouping, with
// the two asserted equal. Integrality or negativity failures throw
// std::logic_error - they would signal an arithmetic bug.
ClosedPointTable closed_point_census(const VarietySpec& spec, long q, int depth,
                                     const OracleOptions& opt = {});

// Number of F_q-points of Conf^{tau *^{n_free}}: assignments of pairwise
// disjoint Galois-stable sets of geometric points, one per label (of sizes
// given by tau) plus a free set with n_free points. A stable set of size l
// is a collection of closed points with degrees summing to l.
Integer conf_census(const ClosedPointTable& table, const GeneralizedPartition& tau,
                    int n_free);
Integer conf_census(const VarietySpec& spec, long q, const GeneralizedPartition& tau,
                    int n_free, const OracleOptions& opt = {});

// Left side of the appendix identity: sum over F_q-configurations of n
// points of binom(X, lbar) evaluated at the Frobenius cycle type (the
// multiset of closed-point degrees).
Integer chen_lhs(const ClosedPointTable& table, const std::vector<int>& lbar, int n);
Integer chen_lhs(const VarietySpec& spec, long q, const std::vector<int>& lbar,
                 int n, const OracleOptions& opt = {});

// Literal subset enumeration over materialized closed points; exponential
// and only suitable for tiny inputs. Kept as an independent cross-check of
// the combinatorial counting above.
Integer conf_census_literal(const ClosedPointTable& table,
                            const GeneralizedPartition& tau, int n_free);

struct ChenReport {
  bool pass = false;
  int first_mismatch = -1;  // n of the first failing coefficient
  std::vector<Integer> lhs;         // exhaustive enumeration
  std::vector<Integer> rhs;         // census-driven product formula
  std::vector<Integer> genfunc;     // symbolic generating function at q
  bool genfunc_compared = false;    // spec carried a symbolic class
  std::string detail;
};

// Verifies the appendix identity coefficient-by-coefficient up to t^N, and
// (when the spec has a symbolic class) compares both sides against the
// charpoly generating function specialized at q.
ChenReport verify_chen(const VarietySpec& spec, long q, const std::vector<int>& lbar,
                       int n_max, const OracleOptions& opt = {});

}  // namespace motconf
