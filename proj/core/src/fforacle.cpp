#include "motconf/fforacle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#include "motconf/motcalc.hpp"

namespace motconf {

// ------------------------------------------------------------ F_p[x] helpers

namespace {

using Fp = std::vector<int>;  // ascending coefficients mod p

Fp fp_trim(Fp a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Fp fp_mod(Fp a, const Fp& f, int p) {
  a = fp_trim(std::move(a));
  while (a.size() >= f.size()) {
    int lead = a.back();  // f is monic
    size_t off = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i)
      a[off + i] = ((a[off + i] - lead * f[i]) % p + p * p) % p;
    a = fp_trim(std::move(a));
  }
  return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& f, int p) {
  if (a.empty() || b.empty()) return {};
  Fp c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(c), f, p);
}

Fp fp_gcd(Fp a, Fp b, int p) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    // scale b monic for the division step
    Fp bm = b;
    int lead = bm.back();
    if (lead != 1) {
      int inv = 1;
      for (int t = 1; t < p; ++t)
        if (lead * t % p == 1) inv = t;
      for (auto& c : bm) c = c * inv % p;
    }
    Fp r = fp_mod(std::move(a), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f
Fp fp_xqpow(int k, const Fp& f, int p) {
  Fp r = {0, 1};  // x
  r = fp_mod(std::move(r), f, p);
  for (int step = 0; step < k; ++step) {
    Fp acc = {1};
    Fp base = r;
    int e = p;
    while (e) {
      if (e & 1) acc = fp_mulmod(acc, base, f, p);
      base = fp_mulmod(base, base, f, p);
      e >>= 1;
    }
    r = std::move(acc);
  }
  return r;
}

bool fp_irreducible(const Fp& f, int p) {
  int e = static_cast<int>(f.size()) - 1;
  if (e < 1 || f.back() != 1) return false;
  Fp x = fp_mod({0, 1}, f, p);
  if (fp_xqpow(e, f, p) != x) return false;
  for (int r = 2; r <= e; ++r) {
    if (e % r != 0 || !is_prime(r)) continue;
    Fp g = fp_xqpow(e / r, f, p);
    // gcd(x^{p^{e/r}} - x, f) must be constant
    Fp diff = g;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    diff = fp_trim(std::move(diff));
    Fp d = fp_gcd(diff, f, p);
    if (d.size() > 1) return false;
  }
  return true;
}

// Fixed moduli for the supported fields; irreducibility is re-verified at
// construction so a bad entry fails loudly.
const std::vector<int>* modulus_for(int p, int e) {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{5, 5}, {3, 4, 0, 0, 0, 1}},
      {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
      {{7, 1}, {3, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}},
      {{7, 5}, {4, 1, 0, 0, 0, 1}},
      {{7, 6}, {3, 6, 4, 5, 1, 0, 1}},
  };
  auto it = table.find({p, e});
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace

// ----------------------------------------------------------------- the field

FiniteField::FiniteField(int p, int e) : p_(p), e_(e) {
  const std::vector<int>* mod = modulus_for(p, e);
  if (!mod)
    throw std::out_of_range("FiniteField: no tabulated modulus for p=" +
                            std::to_string(p) + ", e=" + std::to_string(e));
  modulus_ = *mod;
  if (!fp_irreducible(modulus_, p))
    throw std::logic_error("FiniteField: tabulated modulus is reducible");
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;

  // Frobenius x -> x^p is F_p-linear: build it from the images of the basis.
  std::vector<Elem> basis_image(static_cast<size_t>(e));
  for (int i = 0; i < e; ++i) {
    Elem xi = 1;
    for (int j = 0; j < i; ++j) xi *= static_cast<Elem>(p);  // element x^i
    basis_image[i] = pow(xi, p);
  }
  frob_.resize(static_cast<size_t>(q_));
  std::vector<int> dig(static_cast<size_t>(e)), acc(static_cast<size_t>(e)),
      bd(static_cast<size_t>(e));
  for (long a = 0; a < q_; ++a) {
    decode(static_cast<Elem>(a), dig.data());
    std::fill(acc.begin(), acc.end(), 0);
    for (int i = 0; i < e; ++i) {
      if (dig[i] == 0) continue;
      decode(basis_image[i], bd.data());
      for (int j = 0; j < e; ++j) acc[j] = (acc[j] + dig[i] * bd[j]) % p;
    }
    frob_[a] = encode(acc.data());
  }
}

FiniteField FiniteField::of_order(long q) {
  int p, e;
  if (!decompose_prime_power(q, p, e))
    throw std::invalid_argument("FiniteField: " + std::to_string(q) +
                                " is not a prime power");
  return FiniteField(p, e);
}

bool FiniteField::decompose_prime_power(long q, int& p, int& e) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = static_cast<int>(d);
      e = 0;
      while (q > 1) {
        if (q % d != 0) return false;
        q /= d;
        ++e;
      }
      return true;
    }
  }
  p = static_cast<int>(q);
  e = 1;
  return true;
}

void FiniteField::decode(Elem a, int* digits) const {
  for (int i = 0; i < e_; ++i) {
    digits[i] = static_cast<int>(a % static_cast<Elem>(p_));
    a /= static_cast<Elem>(p_);
  }
}

FiniteField::Elem FiniteField::encode(const int* digits) const {
  Elem a = 0;
  for (int i = e_ - 1; i >= 0; --i)
    a = a * static_cast<Elem>(p_) + static_cast<Elem>(digits[i]);
  return a;
}

FiniteField::Elem FiniteField::from_integer(const Integer& n) const {
  Integer r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r.get_si());
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  int da[8], db[8];
  decode(a, da);
  decode(b, db);
  for (int i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::neg(Elem a) const {
  int da[8];
  decode(a, da);
  for (int i = 0; i < e_; ++i) da[i] = (p_ - da[i]) % p_;
  return encode(da);
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  int da[8], db[8], prod[16] = {0};
  decode(a, da);
  decode(b, db);
  for (int i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < e_; ++j) prod[i + j] += da[i] * db[j];
  }
  // reduce x^{e+j} via the monic modulus
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    int c = prod[i] % p_;
    if (c == 0) continue;
    for (int j = 0; j < e_; ++j)
      prod[i - e_ + j] = (prod[i - e_ + j] + (p_ - modulus_[j]) * c) % p_;
    prod[i] = 0;
  }
  int out[8];
  for (int i = 0; i < e_; ++i) out[i] = prod[i] % p_;
  return encode(out);
}

FiniteField::Elem FiniteField::pow(Elem a, long n) const {
  if (n < 0) return pow(inv(a), -n);
  Elem acc = 1, base = a;
  while (n) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  return pow(a, q_ - 2);
}

std::vector<int> FiniteField::degree_table(int base_e) const {
  if (base_e < 1 || e_ % base_e != 0)
    throw std::invalid_argument("degree_table: base field is not a subfield");
  std::vector<Elem> frob_base(static_cast<size_t>(q_));
  for (long a = 0; a < q_; ++a) {
    Elem x = static_cast<Elem>(a);
    for (int i = 0; i < base_e; ++i) x = frob_[x];
    frob_base[a] = x;
  }
  std::vector<int> deg(static_cast<size_t>(q_));
  for (long a = 0; a < q_; ++a) {
    int d = 1;
    Elem x = frob_base[a];
    while (x != static_cast<Elem>(a)) {
      x = frob_base[x];
      ++d;
    }
    deg[a] = d;
  }
  return deg;
}

std::string FiniteField::elem_str(Elem a) const {
  int dig[8];
  decode(a, dig);
  std::string s;
  for (int i = e_ - 1; i >= 0; --i) s += std::to_string(dig[i]);
  return s;
}

// ------------------------------------------------------------------- options

OracleOptions OracleOptions::from_env() {
  OracleOptions opt;
  if (const char* env = std::getenv("MOTCONF_BUDGET")) {
    try {
      opt.budget = Integer(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MOTCONF_BUDGET: not an integer");
    }
    if (opt.budget < 1) throw std::invalid_argument("MOTCONF_BUDGET: must be >= 1");
  }
  return opt;
}

// ------------------------------------------------------------ point counting

namespace {

Integer int_pow(Integer base, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

FiniteField::Elem eval_poly(const IntPolynomial& poly, const FiniteField& field,
                            const std::vector<FiniteField::Elem>& coords) {
  FiniteField::Elem acc = 0;
  for (const auto& [mono, c] : poly.terms) {
    FiniteField::Elem term = field.from_integer(c);
    for (const auto& [var, exp] : mono.entries())
      term = field.mul(term, field.pow(coords[var - 1], exp));
    acc = field.add(acc, term);
  }
  return acc;
}

bool satisfies_system(const VarietySpec& spec, const FiniteField& field,
                      const std::vector<FiniteField::Elem>& coords) {
  for (const auto& eq : spec.equations)
    if (eval_poly(eq, field, coords) != 0) return false;
  for (const auto& ineq : spec.inequations)
    if (eval_poly(ineq, field, coords) == 0) return false;
  return true;
}

// iterate all tuples of length n over [0, q)
template <typename Fn>
void for_each_tuple(long q, int n, Fn&& fn) {
  std::vector<FiniteField::Elem> tuple(static_cast<size_t>(n), 0);
  while (true) {
    fn(tuple);
    int i = 0;
    while (i < n) {
      if (++tuple[i] < static_cast<FiniteField::Elem>(q)) break;
      tuple[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

using DegreeCounts = std::map<int, Integer>;  // point degree -> #points

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

// Degrees of all F-points of the spec, without materializing the points.
// Frobenius acts coordinate-wise (projective representatives are normalized
// with leading coordinate 1, which Frobenius preserves), so the degree of a
// point is the lcm of its coordinate degrees.
DegreeCounts degree_census(const VarietySpec& spec, const FiniteField& field,
                           const std::vector<int>& degtab) {
  DegreeCounts out;
  switch (spec.kind) {
    case VarietySpec::Kind::point:
      out[1] = 1;
      return out;
    case VarietySpec::Kind::affine_space:
    case VarietySpec::Kind::torus: {
      bool exclude_zero = spec.kind == VarietySpec::Kind::torus;
      // degree profile of one coordinate, then multiply the profiles
      DegreeCounts line;
      for (long a = exclude_zero ? 1 : 0; a < field.size(); ++a)
        line[degtab[a]] += 1;
      out[1] = 1;
      for (int i = 0; i < spec.dim_param; ++i) {
        DegreeCounts next;
        for (const auto& [d1, c1] : out)
          for (const auto& [d2, c2] : line) next[lcm_int(d1, d2)] += c1 * c2;
        out = std::move(next);
      }
      return out;
    }
    case VarietySpec::Kind::projective_space: {
      // stratify by the first nonvanishing coordinate
      for (int lead = 0; lead <= spec.dim_param; ++lead) {
        int tail = spec.dim_param - lead;
        // coordinates: 0,...,0,1,free^tail
        DegreeCounts stratum;
        stratum[1] = 1;
        DegreeCounts line;
        for (long a = 0; a < field.size(); ++a) line[degtab[a]] += 1;
        for (int i = 0; i < tail; ++i) {
          DegreeCounts next;
          for (const auto& [d1, c1] : stratum)
            for (const auto& [d2, c2] : line) next[lcm_int(d1, d2)] += c1 * c2;
          stratum = std::move(next);
        }
        for (const auto& [d, c] : stratum) out[d] += c;
      }
      return out;
    }
    case VarietySpec::Kind::affine_system: {
      for_each_tuple(field.size(), spec.ambient,
                     [&](const std::vector<FiniteField::Elem>& tuple) {
                       if (!satisfies_system(spec, field, tuple)) return;
                       int d = 1;
                       for (auto c : tuple) d = lcm_int(d, degtab[c]);
                       out[d] += 1;
                     });
      return out;
    }
    case VarietySpec::Kind::product: {
      out[1] = 1;
      for (const auto& child : spec.children) {
        DegreeCounts cc = degree_census(child, field, degtab);
        DegreeCounts next;
        for (const auto& [d1, c1] : out)
          for (const auto& [d2, c2] : cc) next[lcm_int(d1, d2)] += c1 * c2;
        out = std::move(next);
      }
      return out;
    }
    case VarietySpec::Kind::disjoint_union: {
      for (const auto& child : spec.children)
        for (const auto& [d, c] : degree_census(child, field, degtab)) out[d] += c;
      return out;
    }
    case VarietySpec::Kind::complement: {
      out = degree_census(spec.children[0], field, degtab);
      for (const auto& [d, c] : degree_census(spec.children[1], field, degtab)) {
        out[d] -= c;
        if (out[d] < 0)
          throw std::logic_error("degree_census: complement is not a subvariety");
        if (out[d] == 0) out.erase(d);
      }
      return out;
    }
  }
  throw std::logic_error("degree_census: bad kind");
}

}  // namespace

Integer enumeration_candidates(const VarietySpec& spec, long field_size) {
  Integer q(field_size);
  switch (spec.kind) {
    case VarietySpec::Kind::point:
      return 1;
    case VarietySpec::Kind::affine_space:
    case VarietySpec::Kind::torus:
      return int_pow(q, spec.dim_param);
    case VarietySpec::Kind::projective_space: {
      Integer acc = 0;
      for (int i = 0; i <= spec.dim_param; ++i) acc += int_pow(q, i);
      return acc;
    }
    case VarietySpec::Kind::affine_system:
      return int_pow(q, spec.ambient);
    case VarietySpec::Kind::product: {
      Integer acc = 1;
      for (const auto& c : spec.children) acc *= enumeration_candidates(c, field_size);
      return acc;
    }
    case VarietySpec::Kind::disjoint_union:
    case VarietySpec::Kind::complement: {
      Integer acc = 0;
      for (const auto& c : spec.children) acc += enumeration_candidates(c, field_size);
      return acc;
    }
  }
  throw std::logic_error("enumeration_candidates: bad kind");
}

Integer count_points(const VarietySpec& spec, const FiniteField& field,
                     const OracleOptions& opt) {
  Integer q(field.size());
  switch (spec.kind) {
    case VarietySpec::Kind::point:
      return 1;
    case VarietySpec::Kind::affine_space:
      return int_pow(q, spec.dim_param);
    case VarietySpec::Kind::projective_space: {
      Integer acc = 0;
      for (int i = 0; i <= spec.dim_param; ++i) acc += int_pow(q, i);
      return acc;
    }
    case VarietySpec::Kind::torus:
      return int_pow(q - 1, spec.dim_param);
    case VarietySpec::Kind::affine_system: {
      if (enumeration_candidates(spec, field.size()) > opt.budget)
        throw budget_error("count_points: enumeration budget exceeded");
      Integer acc = 0;
      for_each_tuple(field.size(), spec.ambient,
                     [&](const std::vector<FiniteField::Elem>& tuple) {
                       if (satisfies_system(spec, field, tuple)) acc += 1;
                     });
      return acc;
    }
    case VarietySpec::Kind::product: {
      Integer acc = 1;
      for (const auto& c : spec.children) acc *= count_points(c, field, opt);
      return acc;
    }
    case VarietySpec::Kind::disjoint_union: {
      Integer acc = 0;
      for (const auto& c : spec.children) acc += count_points(c, field, opt);
      return acc;
    }
    case VarietySpec::Kind::complement:
      return count_points(spec.children[0], field, opt) -
             count_points(spec.children[1], field, opt);
  }
  throw std::logic_error("count_points: bad kind");
}

// --------------------------------------------------------------- enumeration

namespace {

EnumeratedPoints enum_rec(const VarietySpec& spec, const FiniteField& field,
                          const std::vector<int>& degtab) {
  EnumeratedPoints out;
  auto push = [&](std::vector<uint32_t> pt, int deg) {
    out.points.push_back(std::move(pt));
    out.degrees.push_back(deg);
  };
  switch (spec.kind) {
    case VarietySpec::Kind::point:
      push({}, 1);
      return out;
    case VarietySpec::Kind::affine_space:
    case VarietySpec::Kind::torus: {
      bool torus = spec.kind == VarietySpec::Kind::torus;
      for_each_tuple(field.size(), spec.dim_param,
                     [&](const std::vector<FiniteField::Elem>& tuple) {
                       int d = 1;
                       for (auto c : tuple) {
                         if (torus && c == 0) return;
                         d = lcm_int(d, degtab[c]);
                       }
                       push({tuple.begin(), tuple.end()}, d);
                     });
      return out;
    }
    case VarietySpec::Kind::projective_space: {
      for (int lead = 0; lead <= spec.dim_param; ++lead) {
        int tail = spec.dim_param - lead;
        for_each_tuple(field.size(), tail,
                       [&](const std::vector<FiniteField::Elem>& tuple) {
                         std::vector<uint32_t> pt(spec.dim_param + 1, 0);
                         pt[lead] = 1;
                         int d = 1;
                         for (int i = 0; i < tail; ++i) {
                           pt[lead + 1 + i] = tuple[i];
                           d = lcm_int(d, degtab[tuple[i]]);
                         }
                         push(std::move(pt), d);
                       });
      }
      return out;
    }
    case VarietySpec::Kind::affine_system: {
      for_each_tuple(field.size(), spec.ambient,
                     [&](const std::vector<FiniteField::Elem>& tuple) {
                       if (!satisfies_system(spec, field, tuple)) return;
                       int d = 1;
                       for (auto c : tuple) d = lcm_int(d, degtab[c]);
                       push({tuple.begin(), tuple.end()}, d);
                     });
      return out;
    }
    case VarietySpec::Kind::product: {
      push({}, 1);
      for (const auto& child : spec.children) {
        EnumeratedPoints cc = enum_rec(child, field, degtab);
        EnumeratedPoints next;
        for (size_t i = 0; i < out.points.size(); ++i)
          for (size_t j = 0; j < cc.points.size(); ++j) {
            std::vector<uint32_t> pt = out.points[i];
            pt.insert(pt.end(), cc.points[j].begin(), cc.points[j].end());
            next.points.push_back(std::move(pt));
            next.degrees.push_back(lcm_int(out.degrees[i], cc.degrees[j]));
          }
        out = std::move(next);
      }
      return out;
    }
    case VarietySpec::Kind::disjoint_union: {
      for (size_t b = 0; b < spec.children.size(); ++b) {
        EnumeratedPoints cc = enum_rec(spec.children[b], field, degtab);
        for (size_t j = 0; j < cc.points.size(); ++j) {
          std::vector<uint32_t> pt{static_cast<uint32_t>(b)};
          pt.insert(pt.end(), cc.points[j].begin(), cc.points[j].end());
          push(std::move(pt), cc.degrees[j]);
        }
      }
      return out;
    }
    case VarietySpec::Kind::complement: {
      EnumeratedPoints ambient = enum_rec(spec.children[0], field, degtab);
      EnumeratedPoints closed = enum_rec(spec.children[1], field, degtab);
      std::set<std::vector<uint32_t>> member(closed.points.begin(),
                                             closed.points.end());
      for (size_t i = 0; i < ambient.points.size(); ++i)
        if (!member.count(ambient.points[i]))
          push(ambient.points[i], ambient.degrees[i]);
      return out;
    }
  }
  throw std::logic_error("enumerate_points: bad kind");
}

}  // namespace

EnumeratedPoints enumerate_points(const VarietySpec& spec, const FiniteField& field,
                                  int base_e, const OracleOptions& opt) {
  if (enumeration_candidates(spec, field.size()) > opt.budget)
    throw budget_error("enumerate_points: enumeration budget exceeded");
  return enum_rec(spec, field, field.degree_table(base_e));
}

// -------------------------------------------------------------------- census

ClosedPointTable closed_point_census(const VarietySpec& spec, long q, int depth,
                                     const OracleOptions& opt) {
  int p, e0;
  if (!FiniteField::decompose_prime_power(q, p, e0))
    throw std::invalid_argument("closed_point_census: q must be a prime power");
  if (depth < 1) throw std::invalid_argument("closed_point_census: depth >= 1");

  std::vector<Integer> npoints(static_cast<size_t>(depth) + 1);  // 1-based
  for (int d = 1; d <= depth; ++d)
    npoints[d] = count_points(spec, FiniteField(p, e0 * d), opt);

  ClosedPointTable table;
  table.base_q = q;
  table.depth = depth;
  for (int k = 1; k <= depth; ++k) {
    Integer acc = 0;
    for (long d : divisors(k)) acc += moebius(k / d) * npoints[d];
    if (acc % k != 0)
      throw std::logic_error("closed_point_census: Moebius count not divisible");
    Integer mk = acc / k;
    if (mk < 0) throw std::logic_error("closed_point_census: negative count");
    table.counts.push_back(mk);
  }

  // orbit-grouping verification wherever enumeration fits the budget
  for (int k = 1; k <= depth; ++k) {
    FiniteField field(p, e0 * k);
    if (enumeration_candidates(spec, field.size()) > opt.budget) break;
    std::vector<int> degtab = field.degree_table(e0);
    DegreeCounts counts = degree_census(spec, field, degtab);
    Integer in_degree_k = counts.count(k) ? counts.at(k) : Integer(0);
    if (in_degree_k % k != 0)
      throw std::logic_error("closed_point_census: orbit size does not divide count");
    if (in_degree_k / k != table.at(k))
      throw std::logic_error(
          "closed_point_census: orbit census disagrees with Moebius census at k=" +
          std::to_string(k));
    table.orbit_verified_upto = k;
  }
  return table;
}

// --------------------------------------------------- configuration counting

namespace {

// per-degree usage vectors for one group: all (j_1, j_2, ...) with
// sum k*j_k = size
std::vector<std::vector<int>> degree_compositions(int size, int maxdeg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(maxdeg) + 1, 0);
  auto rec = [&](auto&& self, int k, int remaining) -> void {
    if (k > maxdeg) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int j = 0; j * k <= remaining; ++j) {
      cur[k] = j;
      self(self, k + 1, remaining - j * k);
    }
    cur[k] = 0;
  };
  rec(rec, 1, size);
  return out;
}

}  // namespace

Integer conf_census(const ClosedPointTable& table, const GeneralizedPartition& tau,
                    int n_free) {
  if (n_free < 0) throw std::invalid_argument("conf_census: n_free must be >= 0");
  std::vector<int> groups(tau.multiplicities().parts().begin(),
                          tau.multiplicities().parts().end());
  if (n_free > 0) groups.push_back(n_free);
  int need = 1;
  for (int g : groups) need = std::max(need, g);
  if (need > table.depth)
    throw std::invalid_argument("conf_census: census depth insufficient");
  if (groups.empty()) return 1;

  int maxdeg = table.depth;
  std::vector<Integer> used(static_cast<size_t>(maxdeg) + 1, 0);
  std::function<Integer(size_t)> rec = [&](size_t gi) -> Integer {
    if (gi == groups.size()) return 1;
    Integer total = 0;
    for (const auto& comp : degree_compositions(groups[gi], maxdeg)) {
      Integer ways = 1;
      for (int k = 1; k <= maxdeg && ways != 0; ++k) {
        if (comp[k] == 0) continue;
        ways *= binomial_int(table.at(k) - used[k], static_cast<unsigned>(comp[k]));
      }
      if (ways == 0) continue;
      for (int k = 1; k <= maxdeg; ++k) used[k] += comp[k];
      total += ways * rec(gi + 1);
      for (int k = 1; k <= maxdeg; ++k) used[k] -= comp[k];
    }
    return total;
  };
  return rec(0);
}

Integer conf_census(const VarietySpec& spec, long q, const GeneralizedPartition& tau,
                    int n_free, const OracleOptions& opt) {
  int depth = std::max(1, n_free);
  for (int l : tau.multiplicities().parts()) depth = std::max(depth, l);
  return conf_census(closed_point_census(spec, q, depth, opt), tau, n_free);
}

Integer chen_lhs(const ClosedPointTable& table, const std::vector<int>& lbar, int n) {
  if (n < 0) throw std::invalid_argument("chen_lhs: n must be >= 0");
  if (n > table.depth && n > 0)
    throw std::invalid_argument("chen_lhs: census depth insufficient");
  Integer total = 0;
  for (const auto& comp : degree_compositions(n, std::max(1, table.depth))) {
    Integer ways = 1;
    for (int k = 1; k <= table.depth && ways != 0; ++k) {
      if (comp[k] == 0) continue;
      ways *= binomial_int(table.at(k), static_cast<unsigned>(comp[k]));
    }
    if (ways == 0) continue;
    // binom(X, lbar) at a configuration whose cycle type has comp[i] i-cycles
    Integer value = 1;
    for (size_t i = 1; i <= lbar.size() && value != 0; ++i) {
      int have = i <= static_cast<size_t>(table.depth) ? comp[i] : 0;
      value *= binomial_int(Integer(have), static_cast<unsigned>(lbar[i - 1]));
    }
    total += ways * value;
  }
  return total;
}

Integer chen_lhs(const VarietySpec& spec, long q, const std::vector<int>& lbar,
                 int n, const OracleOptions& opt) {
  return chen_lhs(closed_point_census(spec, q, std::max(1, n), opt), lbar, n);
}

Integer conf_census_literal(const ClosedPointTable& table,
                            const GeneralizedPartition& tau, int n_free) {
  std::vector<int> orbit_degrees;
  for (int k = 1; k <= table.depth; ++k) {
    if (table.at(k) > 64)
      throw std::invalid_argument("conf_census_literal: input too large");
    long mk = table.at(k).get_si();
    for (long i = 0; i < mk; ++i) orbit_degrees.push_back(k);
  }
  if (orbit_degrees.size() > 24)
    throw std::invalid_argument("conf_census_literal: input too large");

  const auto& labels = tau.multiplicities().parts();
  std::vector<int> label_left(labels.begin(), labels.end());
  int free_left = n_free;
  // assign each orbit to: unused / free / one of the labels
  std::function<Integer(size_t)> rec = [&](size_t oi) -> Integer {
    if (oi == orbit_degrees.size()) {
      if (free_left != 0) return 0;
      for (int l : label_left)
        if (l != 0) return 0;
      return 1;
    }
    int d = orbit_degrees[oi];
    Integer total = rec(oi + 1);  // unused
    if (free_left >= d) {
      free_left -= d;
      total += rec(oi + 1);
      free_left += d;
    }
    for (size_t li = 0; li < label_left.size(); ++li) {
      if (label_left[li] < d) continue;
      label_left[li] -= d;
      total += rec(oi + 1);
      label_left[li] += d;
    }
    return total;
  };
  return rec(0);
}

// ------------------------------------------------------------- appendix check

namespace {

using ZSeries = std::vector<Integer>;  // coefficients 0..N

ZSeries z_mul(const ZSeries& a, const ZSeries& b) {
  ZSeries c(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < a.size(); ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

ZSeries z_inverse(const ZSeries& a) {
  if (a.empty() || a[0] != 1)
    throw std::logic_error("z_inverse: constant term must be 1");
  ZSeries inv(a.size(), 0);
  inv[0] = 1;
  for (size_t n = 1; n < a.size(); ++n) {
    Integer acc = 0;
    for (size_t i = 1; i <= n; ++i) acc += a[i] * inv[n - i];
    inv[n] = -acc;
  }
  return inv;
}

// Z(Y,t) = prod_k (1-t^k)^{-M_k} from the census, truncated at N.
ZSeries zeta_from_census(const ClosedPointTable& table, int n_max) {
  ZSeries z(static_cast<size_t>(n_max) + 1, 0);
  z[0] = 1;
  for (int k = 1; k <= std::min(n_max, table.depth); ++k) {
    ZSeries factor(z.size(), 0);
    for (int j = 0; j * k <= n_max; ++j)
      factor[static_cast<size_t>(j) * k] =
          binomial_int(table.at(k) + j - 1, static_cast<unsigned>(j));
    z = z_mul(z, factor);
  }
  return z;
}

}  // namespace

ChenReport verify_chen(const VarietySpec& spec, long q, const std::vector<int>& lbar,
                       int n_max, const OracleOptions& opt) {
  ChenReport report;
  ClosedPointTable table = closed_point_census(spec, q, std::max(1, n_max), opt);

  // right side: (Z(t)/Z(t^2)) prod_k binom(M_k, l_k) (t^k/(1+t^k))^{l_k}
  ZSeries z = zeta_from_census(table, n_max);
  ZSeries z2(z.size(), 0);
  for (size_t i = 0; 2 * i < z.size(); ++i) z2[2 * i] = z[i];
  ZSeries rhs = z_mul(z, z_inverse(z2));
  for (size_t i = 1; i <= lbar.size(); ++i) {
    int l = lbar[i - 1];
    if (l == 0) continue;
    int k = static_cast<int>(i);
    // (t^k/(1+t^k))^l = sum_j (-1)^j binom(l+j-1, j) t^{k(l+j)}
    ZSeries factor(z.size(), 0);
    for (int j = 0; static_cast<long>(k) * (l + j) <= n_max; ++j) {
      Integer c = binomial_int(Integer(l + j - 1), static_cast<unsigned>(j));
      factor[static_cast<size_t>(k) * (l + j)] = (j % 2 == 0) ? c : -c;
    }
    Integer mk_choose =
        k <= table.depth ? binomial_int(table.at(k), static_cast<unsigned>(l))
                         : Integer(0);
    rhs = z_mul(rhs, factor);
    for (auto& c : rhs) c *= mk_choose;
  }

  // left side by exhaustive configuration enumeration
  report.pass = true;
  for (int n = 0; n <= n_max; ++n) {
    Integer lhs = chen_lhs(table, lbar, n);
    report.lhs.push_back(lhs);
    report.rhs.push_back(rhs[static_cast<size_t>(n)]);
    if (lhs != rhs[static_cast<size_t>(n)] && report.first_mismatch < 0) {
      report.pass = false;
      report.first_mismatch = n;
      report.detail = "lhs/rhs mismatch at n=" + std::to_string(n) + ": " +
                      lhs.get_str() + " vs " + rhs[static_cast<size_t>(n)].get_str();
    }
  }

  // bridge to the symbolic generating function, when a class exists
  if (spec.has_symbolic_class()) {
    report.genfunc_compared = true;
    auto y = VarietyClass<CountMeasure>::from_spec(spec);
    auto series = charpoly_genfunc(lbar, y, n_max);
    for (int n = 0; n <= n_max; ++n) {
      Rational value =
          series.coefficient(Monomial::variable(1, n)).evaluate(Rational(q));
      if (!is_integer(value))
        throw std::logic_error("verify_chen: generating function not integral at q");
      report.genfunc.push_back(Integer(value.get_num()));
      if (report.genfunc.back() != report.lhs[static_cast<size_t>(n)] &&
          report.first_mismatch < 0) {
        report.pass = false;
        report.first_mismatch = n;
        report.detail = "generating-function mismatch at n=" + std::to_string(n);
      }
    }
  }
  return report;
}

}  // namespace motconf
