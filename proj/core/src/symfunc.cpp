#include "motconf/symfunc.hpp"

#include <algorithm>
#include <sstream>

namespace motconf {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.rbegin(), parts_.rend());
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::operator<(const Partition& o) const {
  if (size() != o.size()) return size() < o.size();
  return parts_ < o.parts_;
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> Partition::all_of(int n) {
  std::vector<Partition> out;
  std::vector<int> stack;
  // parts non-increasing, generated largest-first
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition(stack));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      stack.push_back(p);
      self(self, remaining - p, p);
      stack.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::string GeneralizedPartition::str() const {
  if (mults_.empty()) return "(empty)";
  std::string s;
  const auto& parts = mults_.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "*";
    s += static_cast<char>('a' + (i % 26));
    if (parts[i] != 1) s += "^" + std::to_string(parts[i]);
  }
  return s;
}

// ------------------------------------------------------------ classical bases

SymFunc power_sum_p(int k, long cap) {
  if (k < 1) throw std::invalid_argument("power_sum_p: k must be >= 1");
  return GradedPoly::generator(k, cap);
}

SymFunc complete_h(int k, long cap) {
  if (k < 0) throw std::invalid_argument("complete_h: k must be >= 0");
  if (k > cap) throw std::domain_error("complete_h: k exceeds degree cap");
  // k h_k = sum_{i=1}^{k} p_i h_{k-i}
  std::vector<SymFunc> h{GradedPoly(Rational(1), cap)};
  for (int j = 1; j <= k; ++j) {
    SymFunc acc(Rational(0), cap);
    for (int i = 1; i <= j; ++i) acc = acc + power_sum_p(i, cap) * h[j - i];
    h.push_back(acc * Rational(1, j));
  }
  return h[k];
}

SymFunc elementary_e(int k, long cap) {
  if (k < 0) throw std::invalid_argument("elementary_e: k must be >= 0");
  if (k > cap) throw std::domain_error("elementary_e: k exceeds degree cap");
  // k e_k = sum_{i=1}^{k} (-1)^{i-1} p_i e_{k-i}
  std::vector<SymFunc> e{GradedPoly(Rational(1), cap)};
  for (int j = 1; j <= k; ++j) {
    SymFunc acc(Rational(0), cap);
    for (int i = 1; i <= j; ++i) {
      SymFunc term = power_sum_p(i, cap) * e[j - i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    e.push_back(acc * Rational(1, j));
  }
  return e[k];
}

SymFunc mobius_power_sum(int k, long cap) {
  if (k < 1) throw std::invalid_argument("mobius_power_sum: k must be >= 1");
  if (k > cap) throw std::domain_error("mobius_power_sum: k exceeds degree cap");
  SymFunc acc(Rational(0), cap);
  for (long d : divisors(k)) {
    int mu = moebius(k / d);
    if (mu == 0) continue;
    acc = acc + power_sum_p(static_cast<int>(d), cap) * Rational(mu, k);
  }
  return acc;
}

SymFunc complete_h_tau(const GeneralizedPartition& tau, long cap) {
  SymFunc acc(Rational(1), cap);
  for (int l : tau.multiplicities().parts()) acc = acc * complete_h(l, cap);
  return acc;
}

namespace {

// p_k rewritten in the h-generators: p_k = k h_k - sum_{i<k} h_i p_{k-i}.
std::vector<GradedPoly> powersum_in_h(int kmax) {
  std::vector<GradedPoly> p{GradedPoly(Rational(0))};  // p_0 unused
  for (int k = 1; k <= kmax; ++k) {
    GradedPoly acc = GradedPoly::generator(k) * Rational(k);
    for (int i = 1; i < k; ++i)
      acc = acc - GradedPoly::generator(i) * p[k - i];
    p.push_back(acc);
  }
  return p;
}

// p_k in the e-generators: p_k = (-1)^{k-1}(k e_k - sum_{i<k}(-1)^{i-1} p_i e_{k-i}).
std::vector<GradedPoly> powersum_in_e(int kmax) {
  std::vector<GradedPoly> p{GradedPoly(Rational(0))};
  for (int k = 1; k <= kmax; ++k) {
    GradedPoly acc = GradedPoly::generator(k) * Rational(k);
    for (int i = 1; i < k; ++i) {
      GradedPoly term = p[i] * GradedPoly::generator(k - i);
      acc = (i % 2 == 1) ? acc - term : acc + term;
    }
    p.push_back(k % 2 == 1 ? acc : -acc);
  }
  return p;
}

GradedPoly rebase(const SymFunc& f, const std::vector<GradedPoly>& images) {
  std::map<int, GradedPoly> sub;
  for (int k = 1; k < static_cast<int>(images.size()); ++k) sub[k] = images[k];
  return f.substitute(sub);
}

int max_generator(const GradedPoly& f) {
  int m = 0;
  for (const auto& [mono, c] : f.terms()) m = std::max(m, mono.max_var());
  return m;
}

}  // namespace

GradedPoly to_h_basis(const SymFunc& f) {
  return rebase(f, powersum_in_h(std::max(1, max_generator(f))));
}

GradedPoly to_e_basis(const SymFunc& f) {
  return rebase(f, powersum_in_e(std::max(1, max_generator(f))));
}

// -------------------------------------------------------- configuration basis

namespace {

// G = exp( sum_k p'_k log(1 + P_k) ) as a series in formal variables P_k of
// weight k, truncated at weighted degree N. Substituting P_k = t_1^k+...+t_m^k
// recovers prod_k (1 + t_1^k + ...)^{p'_k}, so the coefficient of t^tau is
// assembled from the P-monomial coefficients afterwards; this keeps the series
// 67 terms long at N=8 instead of thousands.
TruncatedSeries<SymFunc> conf_generating_series(long N) {
  std::vector<int> weights(static_cast<size_t>(N));
  for (long k = 1; k <= N; ++k) weights[k - 1] = static_cast<int>(k);
  SeriesLayout layout(std::move(weights), N);
  TruncatedSeries<SymFunc> log_sum(layout);
  for (int k = 1; k <= N; ++k) {
    SymFunc pk = mobius_power_sum(k, N);
    for (long j = 1; j * k <= N; ++j) {
      Rational c(j % 2 == 1 ? 1 : -1, j);
      log_sum.add_to_coefficient(Monomial::variable(k, static_cast<int>(j)),
                                 pk * c);
    }
  }
  return exp1m(log_sum);
}

Partition partition_from_p_monomial(const Monomial& m) {
  std::vector<int> parts;
  for (const auto& [v, e] : m.entries())
    for (int i = 0; i < e; ++i) parts.push_back(v);
  return Partition(parts);
}

// Number of ways to assign the parts of mu (factors of the product P_mu) to
// the label slots so that slot i receives parts summing to targets[i].
// Repeated parts of equal value contribute multinomially.
Integer distribution_count(const Partition& mu, const std::vector<int>& targets) {
  // group parts by value
  std::vector<std::pair<int, int>> grouped;  // (value, count)
  for (int v : mu.parts()) {
    if (!grouped.empty() && grouped.back().first == v)
      ++grouped.back().second;
    else
      grouped.emplace_back(v, 1);
  }
  size_t m = targets.size();
  std::vector<int> residual = targets;

  std::function<Integer(size_t)> rec = [&](size_t gi) -> Integer {
    if (gi == grouped.size()) {
      for (int r : residual)
        if (r != 0) return 0;
      return 1;
    }
    auto [value, count] = grouped[gi];
    Integer total = 0;
    // distribute `count` copies of `value` over the m slots
    std::vector<int> take(m, 0);
    std::function<void(size_t, int, Integer)> place = [&](size_t slot, int left,
                                                          Integer ways) {
      if (slot == m) {
        if (left == 0) total += ways * rec(gi + 1);
        return;
      }
      int maxhere = residual[slot] / value;
      for (int c = 0; c <= std::min(left, maxhere); ++c) {
        residual[slot] -= c * value;
        // running multinomial count!/(c_1!...c_m!)
        Integer w = ways * binomial_int(Integer(left), static_cast<unsigned>(c));
        place(slot + 1, left - c, w);
        residual[slot] += c * value;
      }
    };
    place(0, count, 1);
    return total;
  };
  return rec(0);
}

}  // namespace

SymFunc conf_symfunc(const GeneralizedPartition& tau, long N) {
  if (tau.total() > N)
    throw std::domain_error("conf_symfunc: |tau| exceeds truncation order");
  if (tau.empty()) return GradedPoly(Rational(1), N);
  long d = tau.total();
  TruncatedSeries<SymFunc> g = conf_generating_series(d);
  const std::vector<int>& targets = tau.multiplicities().parts();
  SymFunc acc(Rational(0), N);
  for (const auto& [mono, coeff] : g.terms()) {
    if (mono.is_one()) continue;
    if (g.layout().wdeg(mono) != d) continue;
    Integer ways = distribution_count(partition_from_p_monomial(mono), targets);
    if (ways == 0) continue;
    acc = acc + coeff.capped(N) * Rational(ways);
  }
  return acc;
}

std::vector<GeneralizedPartition> conf_basis_index(int n) {
  std::vector<GeneralizedPartition> out;
  for (int d = 1; d <= n; ++d)
    for (const Partition& mu : Partition::all_of(d))
      out.push_back(GeneralizedPartition(mu));
  return out;
}

std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && is_zero(a[pivot][col])) ++pivot;
    if (pivot == n) throw std::logic_error("solve_linear_system: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    Rational inv = 1 / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || is_zero(a[row][col])) continue;
      Rational f = a[row][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

std::map<GeneralizedPartition, Rational> expand_in_conf_basis(const SymFunc& f) {
  std::map<GeneralizedPartition, Rational> coords;
  long dmax = f.degree();
  if (dmax < 0) return coords;

  SymFunc residual = f;
  for (long d = dmax; d >= 1; --d) {
    std::vector<Partition> rows = Partition::all_of(static_cast<int>(d));
    std::vector<GeneralizedPartition> cols;
    std::vector<SymFunc> basis;
    for (const Partition& mu : rows) {
      GeneralizedPartition tau(mu);
      cols.push_back(tau);
      basis.push_back(conf_symfunc(tau, std::max(dmax, d)));
    }
    // index the degree-d p-monomials by partition
    std::map<Partition, size_t> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    size_t n = rows.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> rhs(n, Rational(0));
    for (size_t j = 0; j < n; ++j) {
      GradedPoly top = basis[j].homogeneous_component(d);
      for (const auto& [mono, c] : top.terms())
        a[row_index.at(partition_from_p_monomial(mono))][j] = c;
    }
    GradedPoly residual_top = residual.homogeneous_component(d);
    for (const auto& [mono, c] : residual_top.terms())
      rhs[row_index.at(partition_from_p_monomial(mono))] = c;

    std::vector<Rational> x = solve_linear_system(std::move(a), std::move(rhs));
    for (size_t j = 0; j < n; ++j) {
      if (is_zero(x[j])) continue;
      coords[cols[j]] = x[j];
      residual = residual - basis[j] * x[j];
    }
  }
  Rational c0 = residual.constant_coefficient();
  if (!is_zero(c0)) coords[GeneralizedPartition()] = c0;
  residual = residual - GradedPoly(c0);
  if (!residual.is_zero_poly())
    throw std::logic_error("expand_in_conf_basis: nonzero residual");
  return coords;
}

// --------------------------------------------------------- character polys

SymFunc charpoly_to_symfunc(const CharPolynomial& p, long cap) {
  SymFunc out(Rational(0), cap);
  for (const auto& [mono, c] : p.terms()) {
    if (GradedPoly::monomial_degree(mono) > cap)
      throw std::domain_error("charpoly_to_symfunc: degree overflow past cap");
    SymFunc term(c, cap);
    for (const auto& [var, exp] : mono.entries())
      term = term * mobius_power_sum(var, cap).pow(static_cast<unsigned>(exp));
    out = out + term;
  }
  return out;
}

CharPolynomial binomial_charpoly(const std::vector<int>& lbar) {
  CharPolynomial out(Rational(1));
  for (size_t i = 0; i < lbar.size(); ++i) {
    int l = lbar[i];
    if (l < 0) throw std::invalid_argument("binomial_charpoly: negative entry");
    if (l == 0) continue;
    CharPolynomial x = GradedPoly::generator(static_cast<int>(i + 1));
    CharPolynomial falling(Rational(1));
    for (int j = 0; j < l; ++j) falling = falling * (x - GradedPoly(j));
    out = out * falling * Rational(Integer(1), factorial_int(static_cast<unsigned>(l)));
  }
  return out;
}

CharPolynomial charpoly_generator(int i) { return GradedPoly::generator(i); }

}  // namespace motconf
