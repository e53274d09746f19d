#include "motconf/rational.hpp"

namespace motconf {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  v.canonicalize();
  return v;
}

Rational binomial(const Rational& a, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= a - static_cast<long>(i);
    r /= static_cast<long>(i + 1);
  }
  return r;
}

Integer binomial_int(const Integer& n, unsigned k) {
  if (n >= 0 && n < static_cast<long>(k)) return 0;
  Integer num = 1;
  for (unsigned i = 0; i < k; ++i) num *= n - static_cast<long>(i);
  Integer den = factorial_int(k);
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("binomial_int: non-integral result");
  return q;
}

Integer factorial_int(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n == 0) return 1;  // S(0,0) = 1
  if (k == 0) return 0;
  // S(n,k) = k*S(n-1,k) + S(n-1,k-1)
  std::vector<Integer> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, static_cast<unsigned>(n)); j >= 1; --j)
      row[j] = static_cast<long>(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

Rational pow_rational(const Rational& a, long e) {
  if (e == 0) return 1;
  bool inv = e < 0;
  unsigned long n = inv ? -e : e;
  Rational base = a, r = 1;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  if (inv) {
    if (is_zero(r)) throw std::domain_error("pow_rational: negative power of zero");
    r = 1 / r;
  }
  return r;
}

int moebius(long k) {
  if (k <= 0) throw std::invalid_argument("moebius: argument must be positive");
  int primes = 0;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;  // square factor
      ++primes;
    }
  }
  if (k > 1) ++primes;
  return (primes % 2 == 0) ? 1 : -1;
}

std::vector<long> divisors(long k) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      small.push_back(d);
      if (d != k / d) large.push_back(k / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace motconf
