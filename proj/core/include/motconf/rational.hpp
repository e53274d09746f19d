#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace motconf {

// Exact arithmetic everywhere: arbitrary-precision rationals and integers
// backed by GMP. No floating point appears anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Renders as "p" or "p/q" (the canonical GMP form, always reduced).
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on garbage.
Rational rational_from_string(const std::string& s);

// mpq_class(num, den) does not canonicalize; this does. Always build
// rationals from separate numerator/denominator through here.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Falling-factorial binomial a(a-1)...(a-k+1)/k!, valid for any rational a.
Rational binomial(const Rational& a, unsigned k);

Integer binomial_int(const Integer& n, unsigned k);
Integer factorial_int(unsigned n);

// Stirling number of the second kind S(n,k): partitions of an n-set into k
// nonempty blocks. Used for the monomial-to-binomial basis change.
Integer stirling2(unsigned n, unsigned k);

Rational pow_rational(const Rational& a, long e);  // e may be negative

// Number theory on small arguments (degrees of series truncations).
int moebius(long k);
std::vector<long> divisors(long k);
bool is_prime(long p);

}  // namespace motconf
