#include "motconf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "motconf/fforacle.hpp"
#include "motconf/motcalc.hpp"
#include "motconf/polyparse.hpp"

namespace motconf {

namespace {

VarietySpec load_spec(const RunConfig& cfg) {
  if (!cfg.spec_path.empty()) {
    std::ifstream in(cfg.spec_path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + cfg.spec_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("bad JSON in " + cfg.spec_path + ": " + e.what());
    }
    return VarietySpec::from_json(j);
  }
  if (!cfg.builtin.empty()) return VarietySpec::parse_builtin(cfg.builtin);
  // a sensible default carrier for limit/expect examples
  return VarietySpec::affine(1);
}

void require_measure(const RunConfig& cfg) {
  if (cfg.measure != "count" && cfg.measure != "hodge")
    throw std::invalid_argument("unsupported measure '" + cfg.measure +
                                "' (expected count or hodge)");
}

std::string motive_text(const CountScalar& v) { return v.str(); }
std::string motive_text(const HodgeScalar& v) { return v.str(); }

// ----------------------------------------------------------------- zeta

template <typename M>
int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
  auto spec = load_spec(cfg);
  auto y = VarietyClass<M>::from_spec(spec);
  auto zeta = kapranov_zeta(y, cfg.order);
  std::vector<MotiveScalar<M>> exponents;
  for (int k = 1; k <= cfg.order; ++k)
    exponents.push_back(closed_point_class(k, y.cls));

  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "zeta";
    j["variety"] = y.name;
    j["measure"] = M::name;
    j["order"] = cfg.order;
    j["coefficients"] = nlohmann::json::array();
    for (long n = 0; n <= cfg.order; ++n)
      j["coefficients"].push_back(
          motive_json(zeta.coefficient(Monomial::variable(1, static_cast<int>(n)))));
    j["euler_exponents"] = nlohmann::json::array();
    for (const auto& mk : exponents) j["euler_exponents"].push_back(motive_json(mk));
    out << j.dump(2) << "\n";
    return 0;
  }
  if (cfg.format == "csv") {
    out << "t_power,monomial,numerator,denominator\n";
    for (long n = 0; n <= cfg.order; ++n) {
      auto c = zeta.coefficient(Monomial::variable(1, static_cast<int>(n)));
      for (const auto& [e, coeff] : c.terms()) {
        std::string mono;
        for (int i = 0; i < M::nvars; ++i)
          mono += (i ? "," : "") + std::to_string(e[i]);
        out << n << "," << mono << "," << coeff.get_num().get_str() << ","
            << coeff.get_den().get_str() << "\n";
      }
    }
    return 0;
  }
  out << "Kapranov zeta of " << y.name << " under the " << M::name
      << " measure, to order " << cfg.order << ":\n";
  for (long n = 0; n <= cfg.order; ++n)
    out << "  [Sym^" << n << "] = "
        << motive_text(zeta.coefficient(Monomial::variable(1, static_cast<int>(n))))
        << "\n";
  out << "Euler exponents (motivic closed-point counts):\n";
  for (int k = 1; k <= cfg.order; ++k)
    out << "  M_" << k << " = " << motive_text(exponents[k - 1]) << "\n";
  return 0;
}

// ----------------------------------------------------------------- conf

template <typename M>
int cmd_conf(const RunConfig& cfg, std::ostream& out) {
  auto spec = load_spec(cfg);
  auto y = VarietyClass<M>::from_spec(spec);
  auto series = conf_series(y, cfg.order);

  nlohmann::json j;
  j["command"] = "conf";
  j["variety"] = y.name;
  j["measure"] = M::name;
  if (cfg.format == "text")
    out << "Configuration classes of " << y.name << " [" << M::name << "]:\n";
  j["conf_classes"] = nlohmann::json::array();
  for (long n = 0; n <= cfg.order; ++n) {
    auto c = series.coefficient(Monomial::variable(1, static_cast<int>(n)));
    if (cfg.format == "text")
      out << "  [Conf^" << n << "] = " << motive_text(c) << "\n";
    else
      j["conf_classes"].push_back(motive_json(c));
  }
  if (!cfg.tau.empty()) {
    GeneralizedPartition tau = parse_tau(cfg.tau);
    if (cfg.format == "text")
      out << "Labeled classes for tau = " << tau.str() << ":\n";
    j["tau"] = tau.str();
    j["labeled_classes"] = nlohmann::json::array();
    auto labeled = labeled_conf_series(y, tau.num_labels(),
                                       tau.total() + cfg.order);
    for (int n = tau.total(); n <= cfg.order; ++n) {
      std::vector<Monomial::Entry> entries;
      const auto& parts = tau.multiplicities().parts();
      for (size_t i = 0; i < parts.size(); ++i)
        entries.emplace_back(static_cast<int>(i + 1), parts[i]);
      entries.emplace_back(tau.num_labels() + 1, n);
      auto c = labeled.coefficient(Monomial(entries));
      if (cfg.format == "text")
        out << "  [Conf^{" << tau.str() << " *^" << (n - tau.total())
            << "}] = " << motive_text(c) << "\n";
      else
        j["labeled_classes"].push_back(motive_json(c));
    }
  }
  if (cfg.format != "text") out << j.dump(2) << "\n";
  return 0;
}

// ----------------------------------------------------------------- limit

template <typename M>
int cmd_limit(const RunConfig& cfg, std::ostream& out) {
  auto spec = load_spec(cfg);
  auto y = VarietyClass<M>::from_spec(spec);

  RationalMotive<M> value;
  std::string what;
  if (!cfg.tau.empty()) {
    GeneralizedPartition tau = parse_tau(cfg.tau);
    value = stable_conf_ratio(y, tau);
    what = "lim [Conf^{" + tau.str() + " *^(n-|tau|)}] / [Conf^n]";
  } else {
    CharPolynomial p = parse_charpoly(cfg.charpoly.empty() ? "1" : cfg.charpoly);
    value = stable_expectation(p, y);
    auto cross = stable_expectation_conf_route(p, y);
    if (!(value == cross))
      throw std::logic_error("stable expectation routes disagree (internal error)");
    what = "E_inf[" + (cfg.charpoly.empty() ? "1" : cfg.charpoly) + "]";
  }
  auto expansion = value.linv_expansion(static_cast<int>(cfg.order));

  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "limit";
    j["variety"] = y.name;
    j["measure"] = M::name;
    j["quantity"] = what;
    j["value"] = rational_motive_json(value);
    j["linv_expansion"] = nlohmann::json::array();
    for (size_t i = 0; i < expansion.coeffs.size(); ++i)
      j["linv_expansion"].push_back(
          {{"L_power", -(expansion.lead + static_cast<long>(i))},
           {"coeff", to_string(expansion.coeffs[i])}});
    auto val = value.linv_valuation();
    j["linv_valuation"] = val ? nlohmann::json(*val) : nlohmann::json("infinity");
    out << j.dump(2) << "\n";
    return 0;
  }
  out << what << " on " << y.name << " [" << M::name << "]\n";
  out << "  exact: " << value.str() << "\n";
  out << "  L^-1-adic expansion: " << expansion.str() << "\n";
  return 0;
}

// ----------------------------------------------------------------- expect

template <typename M>
int cmd_expect(const RunConfig& cfg, std::ostream& out) {
  auto spec = load_spec(cfg);
  auto y = VarietyClass<M>::from_spec(spec);
  CharPolynomial p = parse_charpoly(cfg.charpoly.empty() ? "X1" : cfg.charpoly);
  int n_max = cfg.n > 0 ? cfg.n : static_cast<int>(cfg.order);
  auto report = convergence_report(p, y, n_max);

  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "expect";
    j["variety"] = y.name;
    j["measure"] = M::name;
    j["charpoly"] = cfg.charpoly.empty() ? "X1" : cfg.charpoly;
    j["stable"] = rational_motive_json(report.stable_value);
    j["finite"] = nlohmann::json::array();
    for (size_t i = 0; i < report.ns.size(); ++i) {
      nlohmann::json row;
      row["n"] = report.ns[i];
      row["value"] = rational_motive_json(report.finite_values[i]);
      row["valuation_gap"] = report.valuation_gaps[i]
                                 ? nlohmann::json(*report.valuation_gaps[i])
                                 : nlohmann::json("infinity");
      j["finite"].push_back(row);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "E_n[" << (cfg.charpoly.empty() ? "X1" : cfg.charpoly) << "] on " << y.name
      << " [" << M::name << "]\n";
  for (size_t i = 0; i < report.ns.size(); ++i) {
    out << "  n=" << report.ns[i] << ": " << report.finite_values[i].str();
    if (report.valuation_gaps[i])
      out << "   (gap valuation " << *report.valuation_gaps[i] << ")";
    else
      out << "   (exactly stable)";
    out << "\n";
  }
  out << "  stable: " << report.stable_value.str() << "\n";
  return 0;
}

// ----------------------------------------------------------------- symfunc

int cmd_symfunc(const RunConfig& cfg, std::ostream& out) {
  SymFunc f(Rational(0), cfg.order);
  std::string name;
  if (!cfg.tau.empty()) {
    GeneralizedPartition tau = parse_tau(cfg.tau);
    f = conf_symfunc(tau, cfg.order);
    name = "c_{" + tau.str() + "}";
  } else if (!cfg.charpoly.empty()) {
    f = charpoly_to_symfunc(parse_charpoly(cfg.charpoly), cfg.order);
    name = cfg.charpoly;
  } else {
    throw std::invalid_argument("symfunc: provide --tau or --charpoly");
  }

  nlohmann::json coords = nlohmann::json::object();
  std::string rendered;
  if (cfg.basis == "p") {
    rendered = f.str("p");
    for (const auto& [m, c] : f.terms()) coords[m.str({}, "p")] = to_string(c);
  } else if (cfg.basis == "h") {
    auto h = to_h_basis(f);
    rendered = h.str("h");
    for (const auto& [m, c] : h.terms()) coords[m.str({}, "h")] = to_string(c);
  } else if (cfg.basis == "e") {
    auto e = to_e_basis(f);
    rendered = e.str("e");
    for (const auto& [m, c] : e.terms()) coords[m.str({}, "e")] = to_string(c);
  } else if (cfg.basis == "c") {
    auto expansion = expand_in_conf_basis(f);
    bool first = true;
    for (const auto& [tau, c] : expansion) {
      rendered += (first ? "" : " + ") + to_string(c) + "*c_{" + tau.str() + "}";
      coords[tau.str()] = to_string(c);
      first = false;
    }
    if (expansion.empty()) rendered = "0";
  } else {
    throw std::invalid_argument("unknown basis '" + cfg.basis +
                                "' (expected p|h|e|c)");
  }

  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "symfunc";
    j["input"] = name;
    j["basis"] = cfg.basis;
    j["coordinates"] = coords;
    out << j.dump(2) << "\n";
  } else {
    out << name << " in basis '" << cfg.basis << "': " << rendered << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- census

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  auto spec = load_spec(cfg);
  if (cfg.qs.empty())
    throw std::invalid_argument("census: provide at least one -q prime power");
  int depth = cfg.n > 0 ? cfg.n : static_cast<int>(cfg.order);
  OracleOptions oracle = OracleOptions::from_env();

  nlohmann::json j;
  j["command"] = "census";
  j["variety"] = spec.display_name();
  j["tables"] = nlohmann::json::array();
  for (long q : cfg.qs) {
    ClosedPointTable table = closed_point_census(spec, q, depth, oracle);
    if (cfg.format == "text") {
      out << "Closed points of " << spec.display_name() << " over F_" << q
          << " (orbit-verified to degree " << table.orbit_verified_upto << "):\n";
      for (int k = 1; k <= depth; ++k)
        out << "  degree " << k << ": " << table.at(k).get_str() << "\n";
    } else {
      nlohmann::json t;
      t["q"] = q;
      t["orbit_verified_upto"] = table.orbit_verified_upto;
      t["counts"] = nlohmann::json::object();
      for (int k = 1; k <= depth; ++k)
        t["counts"][std::to_string(k)] = table.at(k).get_str();
      j["tables"].push_back(t);
    }
  }
  if (cfg.format != "text") out << j.dump(2) << "\n";
  return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.order = cfg.order;
  if (!cfg.qs.empty()) opt.qs = cfg.qs;
  if (cfg.n > 0) opt.oracle_n_max = cfg.n;
  opt.oracle = OracleOptions::from_env();

  auto results = run_suite(cfg.suite, opt);
  if (cfg.format == "json") {
    out << check_results_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " ("
          << static_cast<long>(r.millis) << " ms)";
      if (!r.pass) out << "\n       " << r.detail;
      out << "\n";
    }
  }
  if (!all_passed(results)) {
    for (const auto& r : results)
      if (!r.pass) {
        out << "first failure: " << r.name << ": " << r.detail << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

}  // namespace

nlohmann::json check_results_json(const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["millis"] = static_cast<long>(r.millis * 1000) / 1000.0;
    if (!r.pass) j["detail"] = r.detail;
    arr.push_back(j);
  }
  return arr;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"motconf: motivic invariants of configuration spaces, exactly"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool wants_variety) {
    sub->add_option("--measure", cfg.measure, "count | hodge");
    sub->add_option("-N,--order", cfg.order, "truncation order")
        ->check(CLI::Range(1L, 64L));
    if (wants_variety) {
      sub->add_option("--builtin", cfg.builtin,
                      "builtin variety, e.g. affine_space:1 or "
                      "projective_space:1*affine_space:1");
      sub->add_option("--spec", cfg.spec_path, "variety spec JSON file");
    }
    sub->add_option("--format", cfg.format, "text | json | csv");
  };

  CLI::App* zeta = app.add_subcommand("zeta", "Kapranov zeta function and its Euler exponents");
  add_common(zeta, true);

  CLI::App* conf = app.add_subcommand("conf", "configuration-space classes");
  add_common(conf, true);
  conf->add_option("--tau", cfg.tau, "generalized partition label string, e.g. a2b");

  CLI::App* limit = app.add_subcommand("limit", "stable expectations and ratios");
  add_common(limit, true);
  limit->add_option("--charpoly", cfg.charpoly, "character polynomial, e.g. X1*X2");
  limit->add_option("--tau", cfg.tau, "generalized partition label string");

  CLI::App* expect = app.add_subcommand("expect", "finite-n expectations and convergence");
  add_common(expect, true);
  expect->add_option("--charpoly", cfg.charpoly, "character polynomial");
  expect->add_option("-n", cfg.n, "largest n");

  CLI::App* symf = app.add_subcommand("symfunc", "symmetric-function rendering");
  add_common(symf, false);
  symf->add_option("--tau", cfg.tau, "render c_tau");
  symf->add_option("--charpoly", cfg.charpoly, "render a character polynomial image");
  symf->add_option("--basis", cfg.basis, "p | h | e | c");

  CLI::App* census = app.add_subcommand("census", "closed-point census (oracle)");
  add_common(census, true);
  census->add_option("-q", cfg.qs, "prime powers")->delimiter(',');
  census->add_option("-n", cfg.n, "census depth");

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  add_common(verify, false);
  verify->add_option("--suite", cfg.suite, "axioms | oracle | chen | appendix | all");
  verify->add_option("--seed", cfg.seed, "seed for randomized families");
  verify->add_option("-q", cfg.qs, "prime powers")->delimiter(',');
  verify->add_option("-n", cfg.n, "oracle n_max");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    require_measure(cfg);
    auto dispatch = [&](auto measure_tag) -> int {
      using M = decltype(measure_tag);
      if (zeta->parsed()) return cmd_zeta<M>(cfg, out);
      if (conf->parsed()) return cmd_conf<M>(cfg, out);
      if (limit->parsed()) return cmd_limit<M>(cfg, out);
      if (expect->parsed()) return cmd_expect<M>(cfg, out);
      return 2;
    };
    if (symf->parsed()) return cmd_symfunc(cfg, out);
    if (census->parsed()) return cmd_census(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    int code = cfg.measure == "count" ? dispatch(CountMeasure{})
                                      : dispatch(HodgeMeasure{});
    if (code == 2) err << "usage error: unknown subcommand\n";
    return code;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace motconf
