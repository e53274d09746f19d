#include "motconf/checks.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "motconf/polyparse.hpp"

namespace motconf {

namespace {

using Rng = std::mt19937_64;
using Job = std::pair<std::string, std::function<std::string()>>;

// ------------------------------------------------------------ random inputs

int rand_int(Rng& g, int lo, int hi) {
  return lo + static_cast<int>(g() % static_cast<uint64_t>(hi - lo + 1));
}

Rational rand_rational(Rng& g) {
  return make_rational(rand_int(g, -9, 9), rand_int(g, 1, 3));
}

// sparse series with constant term 1
TruncatedSeries<Rational> rand_series(Rng& g, int nvars, long order, bool integral,
                                      int terms) {
  SeriesLayout layout(nvars, order);
  TruncatedSeries<Rational> f(layout);
  f.set_coefficient(Monomial::one(), 1);
  std::vector<Monomial> monos = enumerate_monomials(layout, order);
  for (int t = 0; t < terms; ++t) {
    const Monomial& m = monos[g() % monos.size()];
    Rational c = integral ? Rational(rand_int(g, -9, 9)) : rand_rational(g);
    f.set_coefficient(m, c);
  }
  return f;
}

TruncatedSeries<Rational> rand_series_zero_constant(Rng& g, int nvars, long order,
                                                    int terms) {
  TruncatedSeries<Rational> f = rand_series(g, nvars, order, false, terms);
  f.set_coefficient(Monomial::one(), 0);
  return f;
}

template <typename M>
MotiveScalar<M> rand_motive(Rng& g) {
  MotiveScalar<M> r;
  int nterms = rand_int(g, 1, 3);
  for (int t = 0; t < nterms; ++t) {
    typename MotiveScalar<M>::Exp e{};
    for (int i = 0; i < M::nvars; ++i) e[i] = rand_int(g, -2, 3);
    r = r + MotiveScalar<M>::monomial(e, Rational(rand_int(g, -4, 4)));
  }
  return r;
}

// uncapped, so products of random inputs stay exact
SymFunc rand_symfunc(Rng& g, long maxdeg, int terms) {
  SymFunc f;
  for (int t = 0; t < terms; ++t) {
    int d = rand_int(g, 1, static_cast<int>(std::min<long>(maxdeg, 6)));
    auto parts = Partition::all_of(d);
    const Partition& mu = parts[g() % parts.size()];
    Monomial m;
    for (int part : mu.parts()) m = m * Monomial::variable(part);
    f.add_to_coefficient(m, rand_rational(g));
  }
  return f;
}

// ------------------------------------------------------------ infrastructure

std::vector<CheckResult> run_jobs(std::vector<Job> jobs, bool parallel) {
  std::vector<CheckResult> out(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      r.name = jobs[i].first;
      try {
        r.detail = jobs[i].second();
        r.pass = r.detail.empty();
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
      out[i] = std::move(r);
    }
  };
  unsigned n = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  n = std::min<unsigned>(n, static_cast<unsigned>(jobs.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::string series_str(const TruncatedSeries<Rational>& f) { return f.str(); }

// ------------------------------------------------------------- axiom familes

std::string check_series_ring_axioms(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 1);
  for (int i = 0; i < opt.instances; ++i) {
    int nvars = 1 + i % 2;
    auto a = rand_series(g, nvars, opt.order, false, 6);
    auto b = rand_series(g, nvars, opt.order, false, 6);
    auto c = rand_series(g, nvars, opt.order, false, 6);
    if ((a + b) + c != a + (b + c)) return "associativity of + failed at i=" + std::to_string(i);
    if ((a * b) * c != a * (b * c)) return "associativity of * failed at i=" + std::to_string(i);
    if (a * b != b * a) return "commutativity failed at i=" + std::to_string(i);
    if (a * (b + c) != a * b + a * c)
      return "distributivity failed at i=" + std::to_string(i);
  }
  return {};
}

std::string check_exp_log_inverse(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 2);
  for (int i = 0; i < opt.instances; ++i) {
    int nvars = 1 + i % 2;
    auto f = rand_series(g, nvars, opt.order, false, 6);
    if (exp1m(log1p(f)) != f)
      return "exp1m(log1p(f)) != f for f = " + series_str(f);
    auto h = rand_series_zero_constant(g, nvars, opt.order, 6);
    if (log1p(exp1m(h)) != h)
      return "log1p(exp1m(g)) != g for g = " + series_str(h);
  }
  return {};
}

std::string check_naive_pow(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 3);
  for (int i = 0; i < opt.instances; ++i) {
    int nvars = 1 + i % 2;
    auto f = rand_series(g, nvars, opt.order, false, 5);
    auto h = rand_series(g, nvars, opt.order, false, 5);
    Rational r = rand_rational(g), s = rand_rational(g);
    if (naive_pow(f, r + s) != naive_pow(f, r) * naive_pow(f, s))
      return "f^(r+s) != f^r f^s at i=" + std::to_string(i);
    if (naive_pow(f * h, r) != naive_pow(f, r) * naive_pow(h, r))
      return "(fg)^r != f^r g^r at i=" + std::to_string(i);
    int k = rand_int(g, 0, 4);
    if (naive_pow(f, Rational(k)) != pow_int(f, k))
      return "f^k != repeated multiplication at i=" + std::to_string(i);
  }
  return {};
}

std::string check_euler_factorization(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 4);
  for (int i = 0; i < opt.instances; ++i) {
    int nvars = 1 + i % 3;
    bool integral = i % 2 == 0;
    auto f = rand_series(g, nvars, opt.order, integral, 6);
    auto factors = euler_factorize(f);
    if (integral)
      for (const auto& [m, a] : factors)
        if (!is_integer(a))
          return "integer series produced non-integer Euler exponent at i=" +
                 std::to_string(i);
    auto back = euler_expand<Rational>(f.layout(), factors);
    if (back != f) return "Euler re-expansion mismatch for f = " + series_str(f);
  }
  return {};
}

std::string check_substitute_powers(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 5);
  for (int i = 0; i < opt.instances; ++i) {
    int nvars = 1 + i % 2;
    auto a = rand_series(g, nvars, opt.order, false, 6);
    auto b = rand_series(g, nvars, opt.order, false, 6);
    int k = rand_int(g, 1, 4);
    if (substitute_powers(a * b, k) != substitute_powers(a, k) * substitute_powers(b, k))
      return "substitute_powers not multiplicative at i=" + std::to_string(i);
    if (substitute_powers(a + b, k) != substitute_powers(a, k) + substitute_powers(b, k))
      return "substitute_powers not additive at i=" + std::to_string(i);
    if (substitute_powers(a, 1) != a)
      return "substitute_powers(.,1) != id at i=" + std::to_string(i);
  }
  return {};
}

template <typename M>
std::string sigma_additivity_instances(Rng& g, const SuiteOptions& opt, int count) {
  for (int i = 0; i < count; ++i) {
    auto a = rand_motive<M>(g);
    auto b = rand_motive<M>(g);
    if (sigma_series(a + b, opt.order) !=
        sigma_series(a, opt.order) * sigma_series(b, opt.order))
      return std::string("sigma_t(a+b) != sigma_t(a) sigma_t(b) [") + M::name +
             "] at i=" + std::to_string(i);
  }
  return {};
}

std::string check_sigma_additivity(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 6);
  if (auto r = sigma_additivity_instances<CountMeasure>(g, opt, opt.instances / 2);
      !r.empty())
    return r;
  return sigma_additivity_instances<HodgeMeasure>(g, opt, opt.instances / 2);
}

std::string check_sigma_normalization(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 7);
  // sigma_t(1) = 1/(1-t)
  auto one_series = sigma_series(CountScalar(1), opt.order);
  for (long k = 0; k <= opt.order; ++k)
    if (!(one_series.coefficient(Monomial::variable(1, static_cast<int>(k))) ==
          CountScalar(1)))
      return "sigma_t(1) != 1/(1-t)";
  for (int i = 0; i < opt.instances; ++i) {
    auto r = rand_motive<CountMeasure>(g);
    if (!(sigma_series(r, opt.order).coefficient(Monomial::variable(1)) == r))
      return "sigma_1(r) != r at i=" + std::to_string(i);
  }
  return {};
}

template <typename M>
std::string sigma_powersum_link_instances(Rng& g, const SuiteOptions& opt, int count) {
  for (int i = 0; i < count; ++i) {
    auto r = rand_motive<M>(g);
    auto lg = log1p(sigma_series(r, opt.order));
    for (long k = 1; k <= opt.order; ++k) {
      // coefficient of t^{k-1} in d/dt log sigma equals adams(k, r)
      auto from_log =
          lg.coefficient(Monomial::variable(1, static_cast<int>(k))) * Rational(k);
      if (!(from_log == r.adams(static_cast<int>(k))))
        return std::string("dlog sigma mismatch at k=") + std::to_string(k) + " [" +
               M::name + "]";
    }
  }
  return {};
}

std::string check_sigma_powersum_link(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 8);
  if (auto r = sigma_powersum_link_instances<CountMeasure>(g, opt, opt.instances / 2);
      !r.empty())
    return r;
  return sigma_powersum_link_instances<HodgeMeasure>(g, opt, opt.instances / 2);
}

std::string check_sigma_euler_product(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 9);
  SeriesLayout layout(1, opt.order);
  for (int i = 0; i < opt.instances; ++i) {
    auto r = rand_motive<CountMeasure>(g);
    auto expected = sigma_series(r, opt.order);
    auto product = TruncatedSeries<CountScalar>::one(layout);
    for (long k = 1; k <= opt.order; ++k) {
      auto factor = one_minus_monomial_pow(
          layout, Monomial::variable(1, static_cast<int>(k)), CountScalar(-1));
      product = product * naive_pow(factor, closed_point_class(static_cast<int>(k), r));
    }
    if (product != expected)
      return "sigma_t(r) != prod (1-t^k)^{-M_k(r)} at i=" + std::to_string(i);
  }
  return {};
}

std::string check_pairing_homomorphism(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 10);
  for (int i = 0; i < opt.instances; ++i) {
    auto f = rand_symfunc(g, opt.order, 4);
    auto h = rand_symfunc(g, opt.order, 4);
    auto r = rand_motive<CountMeasure>(g);
    if (!(pair_symfunc(f * h, r) == pair_symfunc(f, r) * pair_symfunc(h, r)))
      return "(fg, r) != (f,r)(g,r) at i=" + std::to_string(i);
    if (!(pair_symfunc(f + h, r) == pair_symfunc(f, r) + pair_symfunc(h, r)))
      return "(f+g, r) != (f,r)+(g,r) at i=" + std::to_string(i);
    // (h_k, r) = sigma_k(r)
    auto sigma = sigma_series(r, opt.order);
    int k = rand_int(g, 0, static_cast<int>(std::min<long>(opt.order, 6)));
    if (!(pair_symfunc(complete_h(k, opt.order), r) ==
          sigma.coefficient(Monomial::variable(1, k))))
      return "(h_k, r) != sigma_k(r) at k=" + std::to_string(k);
    // additivity of the Moebius-inverted pairing
    auto b = rand_motive<CountMeasure>(g);
    int kk = rand_int(g, 1, 6);
    if (!(closed_point_class(kk, r + b) ==
          closed_point_class(kk, r) + closed_point_class(kk, b)))
      return "(p'_k, .) not additive at k=" + std::to_string(kk);
  }
  return {};
}

std::string check_lambda_identities(const SuiteOptions& opt) {
  long n = opt.order;
  SeriesLayout layout(1, n);
  // H(t) = sum h_k t^k in Lambda[[t]]
  TruncatedSeries<SymFunc> hseries(layout);
  for (long k = 0; k <= n; ++k)
    hseries.set_coefficient(Monomial::variable(1, static_cast<int>(k)),
                            complete_h(static_cast<int>(k), n));
  // exp(sum p_k t^k / k)
  TruncatedSeries<SymFunc> psum(layout);
  for (long k = 1; k <= n; ++k)
    psum.set_coefficient(Monomial::variable(1, static_cast<int>(k)),
                         power_sum_p(static_cast<int>(k), n) * Rational(1, k));
  if (exp1m(psum) != hseries) return "sum h_k t^k != exp(sum p_k t^k / k)";

  // Euler product: sum h_k t^k = prod_k (1/(1-t^k))^{p'_k}
  auto product = TruncatedSeries<SymFunc>::one(layout);
  for (long k = 1; k <= n; ++k) {
    auto factor = one_minus_monomial_pow(layout, Monomial::variable(1, static_cast<int>(k)),
                                         SymFunc(Rational(-1), n));
    product = product * naive_pow(factor, mobius_power_sum(static_cast<int>(k), n));
  }
  if (product != hseries) return "sum h_k t^k != prod (1/(1-t^k))^{p'_k}";

  // Moebius inversion p_k = sum_{d|k} d p'_d
  for (long k = 1; k <= n; ++k) {
    SymFunc acc(Rational(0), n);
    for (long d : divisors(k))
      acc = acc + mobius_power_sum(static_cast<int>(d), n) * Rational(d);
    if (!(acc == power_sum_p(static_cast<int>(k), n)))
      return "p_k != sum d p'_d at k=" + std::to_string(k);
  }

  // basis views stay sharp: h_k and e_k map to single generators
  for (int k = 1; k <= static_cast<int>(std::min<long>(n, 6)); ++k) {
    if (!(to_h_basis(complete_h(k, n)) == GradedPoly::generator(k)))
      return "h-basis roundtrip failed at k=" + std::to_string(k);
    if (!(to_e_basis(elementary_e(k, n)) == GradedPoly::generator(k)))
      return "e-basis roundtrip failed at k=" + std::to_string(k);
  }
  return {};
}

std::string check_power_structure_axioms(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 11);
  for (int i = 0; i < opt.instances; ++i) {
    int nvars = 1 + i % 2;
    PowMode mode = i % 2 == 0 ? PowMode::euler_product : PowMode::lemma_substitution;
    auto f = rand_series(g, nvars, opt.order, true, 5);
    auto h = rand_series(g, nvars, opt.order, true, 5);
    auto r = rand_motive<CountMeasure>(g);
    auto s = rand_motive<CountMeasure>(g);

    if (!is_one_series(pow_structure(f, CountScalar(0), mode)))
      return "f^{Pow 0} != 1 at i=" + std::to_string(i);
    auto lifted = map_coefficients<CountScalar>(
        f, [](const Rational& c) { return CountScalar(c); });
    if (pow_structure(f, CountScalar(1), mode) != lifted)
      return "f^{Pow 1} != f at i=" + std::to_string(i);
    if (pow_structure(f * h, r, mode) !=
        pow_structure(f, r, mode) * pow_structure(h, r, mode))
      return "(fg)^{Pow r} mismatch at i=" + std::to_string(i);
    if (pow_structure(f, r + s, mode) !=
        pow_structure(f, r, mode) * pow_structure(f, s, mode))
      return "f^{Pow r+s} mismatch at i=" + std::to_string(i);
    if (pow_structure(f, r * s, mode) !=
        pow_structure_general(pow_structure(f, s, mode), r))
      return "f^{Pow rs} != (f^{Pow s})^{Pow r} at i=" + std::to_string(i);
  }
  return {};
}

std::string check_pow_mode_equivalence(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 12);
  for (int i = 0; i < opt.instances; ++i) {
    int nvars = 1 + i % 3;
    auto f = rand_series(g, nvars, opt.order, true, 4 + nvars);
    if (i % 4 == 3) {
      auto r = rand_motive<HodgeMeasure>(g);
      if (pow_structure(f, r, PowMode::euler_product) !=
          pow_structure(f, r, PowMode::lemma_substitution))
        return "mode mismatch (hodge) at i=" + std::to_string(i);
    } else {
      auto r = rand_motive<CountMeasure>(g);
      if (pow_structure(f, r, PowMode::euler_product) !=
          pow_structure(f, r, PowMode::lemma_substitution))
        return "mode mismatch (count) at i=" + std::to_string(i);
    }
  }
  return {};
}

std::string check_conf_basis_roundtrip(const SuiteOptions& opt) {
  Rng g(opt.seed * 1000003 + 13);
  long n = opt.order;
  std::vector<GeneralizedPartition> index = conf_basis_index(static_cast<int>(n));
  int count = std::max(1, opt.instances / 4);
  for (int i = 0; i < count; ++i) {
    std::map<GeneralizedPartition, Rational> chosen;
    int picks = rand_int(g, 1, 5);
    for (int t = 0; t < picks; ++t)
      chosen[index[g() % index.size()]] = rand_rational(g);
    if (rand_int(g, 0, 1)) chosen[GeneralizedPartition()] = rand_rational(g);
    SymFunc f(Rational(0), n);
    for (const auto& [tau, c] : chosen) {
      SymFunc ctau = tau.empty() ? SymFunc(Rational(1), n) : conf_symfunc(tau, n);
      f = f + ctau * c;
    }
    auto coords = expand_in_conf_basis(f);
    for (auto it = chosen.begin(); it != chosen.end();) {
      if (is_zero(it->second))
        it = chosen.erase(it);
      else
        ++it;
    }
    if (coords != chosen) return "conf-basis coordinates mismatch at i=" + std::to_string(i);
  }
  return {};
}

std::string check_conf_euler_identity(const SuiteOptions& opt) {
  for (const char* token : {"affine_space:1", "projective_space:1"}) {
    auto y = VarietyClass<CountMeasure>::from_spec(VarietySpec::parse_builtin(token));
    for (int d = 1; d <= opt.oracle_tau_max; ++d)
      for (const Partition& mu : Partition::all_of(d)) {
        GeneralizedPartition tau(mu);
        auto direct = gen_conf_class(y, tau);
        auto via_pairing = pair_symfunc(conf_symfunc(tau, d), y.cls);
        if (!(direct == via_pairing))
          return std::string("gen_conf_class != (c_tau, [Y]) for ") + token +
                 ", tau=" + tau.str();
      }
  }
  return {};
}

// --------------------------------------------------------------- oracle suite

std::string oracle_bridge_one(const VarietySpec& spec, long q, int n_max, int tau_max,
                              const OracleOptions& oracle) {
  auto y = VarietyClass<CountMeasure>::from_spec(spec);
  ClosedPointTable table = closed_point_census(spec, q, n_max, oracle);
  auto series = labeled_conf_series(y, tau_max, tau_max + n_max);
  const int s_var = tau_max + 1;

  std::vector<GeneralizedPartition> taus{GeneralizedPartition()};
  for (const auto& tau : conf_basis_index(tau_max)) taus.push_back(tau);

  for (const auto& tau : taus) {
    for (int n = tau.total(); n <= n_max; ++n) {
      std::vector<Monomial::Entry> entries;
      const auto& parts = tau.multiplicities().parts();
      for (size_t i = 0; i < parts.size(); ++i)
        entries.emplace_back(static_cast<int>(i + 1), parts[i]);
      entries.emplace_back(s_var, n);
      Rational symbolic =
          series.coefficient(Monomial(entries)).evaluate(Rational(q));
      Integer census = conf_census(table, tau, n - tau.total());
      if (!(symbolic == Rational(census)))
        return spec.display_name() + " q=" + std::to_string(q) +
               " tau=" + tau.str() + " n=" + std::to_string(n) +
               ": symbolic=" + to_string(symbolic) + " census=" + census.get_str();
    }
  }
  return {};
}

std::string check_scissor_census(const SuiteOptions& opt) {
  // torus = A^1 minus the origin, as an explicit complement spec
  VarietySpec cut = VarietySpec::complement_of(
      VarietySpec::affine(1), VarietySpec::system(1, {"x1"}, {}));
  for (long q : opt.qs) {
    auto direct = closed_point_census(VarietySpec::torus(1), q, 4, opt.oracle);
    auto scissored = closed_point_census(cut, q, 4, opt.oracle);
    auto ambient = closed_point_census(VarietySpec::affine(1), q, 4, opt.oracle);
    auto origin = closed_point_census(VarietySpec::system(1, {"x1"}, {}), q, 4,
                                      opt.oracle);
    for (int k = 1; k <= 4; ++k) {
      if (direct.at(k) != scissored.at(k))
        return "torus census != complement census at q=" + std::to_string(q) +
               " k=" + std::to_string(k);
      if (scissored.at(k) != ambient.at(k) - origin.at(k))
        return "complement census is not the degreewise difference at q=" +
               std::to_string(q) + " k=" + std::to_string(k);
    }
  }
  return {};
}

// ------------------------------------------------------------- suite drivers

std::vector<Job> axioms_jobs(const SuiteOptions& opt) {
  return {
      {"series-ring-axioms", [opt] { return check_series_ring_axioms(opt); }},
      {"exp-log-inverse", [opt] { return check_exp_log_inverse(opt); }},
      {"naive-pow-homomorphism", [opt] { return check_naive_pow(opt); }},
      {"euler-factorization-roundtrip",
       [opt] { return check_euler_factorization(opt); }},
      {"substitute-powers-homomorphism",
       [opt] { return check_substitute_powers(opt); }},
      {"sigma-additivity", [opt] { return check_sigma_additivity(opt); }},
      {"sigma-normalization", [opt] { return check_sigma_normalization(opt); }},
      {"sigma-adams-powersum-link",
       [opt] { return check_sigma_powersum_link(opt); }},
      {"sigma-euler-product", [opt] { return check_sigma_euler_product(opt); }},
      {"pairing-ring-homomorphism",
       [opt] { return check_pairing_homomorphism(opt); }},
      {"newton-euler-identities", [opt] { return check_lambda_identities(opt); }},
      {"power-structure-axioms",
       [opt] { return check_power_structure_axioms(opt); }},
      {"pow-mode-equivalence", [opt] { return check_pow_mode_equivalence(opt); }},
      {"conf-basis-roundtrip", [opt] { return check_conf_basis_roundtrip(opt); }},
      {"conf-euler-identity", [opt] { return check_conf_euler_identity(opt); }},
  };
}

std::vector<Job> oracle_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  for (const VarietySpec& spec : oracle_builtins())
    for (long q : opt.qs) {
      std::string name =
          "oracle-bridge:" + spec.display_name() + ":q=" + std::to_string(q);
      jobs.emplace_back(name, [spec, q, opt] {
        return oracle_bridge_one(spec, q, opt.oracle_n_max, opt.oracle_tau_max,
                                 opt.oracle);
      });
    }
  jobs.emplace_back("scissor-census", [opt] { return check_scissor_census(opt); });
  return jobs;
}

std::vector<Job> chen_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  const std::vector<std::vector<int>> lbars = {{1}, {2}, {0, 1}, {1, 1}};
  for (const char* token : {"affine_space:1", "projective_space:1"})
    for (long q : opt.qs)
      for (const auto& lbar : lbars) {
        std::string lstr;
        for (size_t i = 0; i < lbar.size(); ++i)
          lstr += (i ? "," : "") + std::to_string(lbar[i]);
        std::string name = std::string("chen:") + token + ":q=" +
                           std::to_string(q) + ":l=(" + lstr + ")";
        VarietySpec spec = VarietySpec::parse_builtin(token);
        jobs.emplace_back(name, [spec, q, lbar, opt]() -> std::string {
          ChenReport report = verify_chen(spec, q, lbar, 5, opt.oracle);
          return report.pass ? std::string{} : report.detail;
        });
      }
  return jobs;
}

std::vector<Job> appendix_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  const std::vector<std::vector<int>> lbars = {{1}, {2}, {0, 1}, {1, 1}};
  for (const char* token : {"affine_space:1", "projective_space:1"})
    for (const auto& lbar : lbars) {
      std::string lstr;
      for (size_t i = 0; i < lbar.size(); ++i)
        lstr += (i ? "," : "") + std::to_string(lbar[i]);
      std::string name = std::string("charpoly-genfunc:") + token + ":l=(" + lstr + ")";
      jobs.emplace_back(name, [token, lbar, opt]() -> std::string {
        auto y = VarietyClass<CountMeasure>::from_spec(
            VarietySpec::parse_builtin(token));
        int n_max = opt.oracle_n_max;
        auto series = charpoly_genfunc(lbar, y, n_max);
        CharPolynomial p = binomial_charpoly(lbar);
        auto conf = conf_series(y, n_max);
        for (int n = 0; n <= n_max; ++n) {
          auto coeff = series.coefficient(Monomial::variable(1, n));
          auto conf_n = conf.coefficient(Monomial::variable(1, n));
          auto en = finite_expectation(p, n, y);
          // coefficient must equal E_n[p] * [Conf^n Y] exactly
          if (!(RationalMotive<CountMeasure>(coeff) ==
                en * RationalMotive<CountMeasure>(conf_n)))
            return std::string("coefficient identity fails for ") + token +
                   " at n=" + std::to_string(n);
        }
        return {};
      });
    }
  return jobs;
}

}  // namespace

std::vector<VarietySpec> oracle_builtins() {
  return {
      VarietySpec::point(),
      VarietySpec::affine(1),
      VarietySpec::affine(2),
      VarietySpec::projective(1),
      VarietySpec::torus(1),
      VarietySpec::product_of({VarietySpec::projective(1), VarietySpec::affine(1)}),
  };
}

std::vector<CheckResult> run_axioms_suite(const SuiteOptions& opt) {
  return run_jobs(axioms_jobs(opt), opt.parallel);
}
std::vector<CheckResult> run_oracle_suite(const SuiteOptions& opt) {
  return run_jobs(oracle_jobs(opt), opt.parallel);
}
std::vector<CheckResult> run_chen_suite(const SuiteOptions& opt) {
  return run_jobs(chen_jobs(opt), opt.parallel);
}
std::vector<CheckResult> run_appendix_suite(const SuiteOptions& opt) {
  return run_jobs(appendix_jobs(opt), opt.parallel);
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "axioms") return run_axioms_suite(opt);
  if (name == "oracle") return run_oracle_suite(opt);
  if (name == "chen") return run_chen_suite(opt);
  if (name == "appendix") return run_appendix_suite(opt);
  if (name == "all") {
    std::vector<Job> jobs;
    for (auto& j : axioms_jobs(opt)) jobs.push_back(std::move(j));
    for (auto& j : oracle_jobs(opt)) jobs.push_back(std::move(j));
    for (auto& j : chen_jobs(opt)) jobs.push_back(std::move(j));
    for (auto& j : appendix_jobs(opt)) jobs.push_back(std::move(j));
    return run_jobs(std::move(jobs), opt.parallel);
  }
  throw std::invalid_argument("unknown suite '" + name +
                              "' (expected axioms|oracle|chen|appendix|all)");
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace motconf
