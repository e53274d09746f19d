#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motconf/fforacle.hpp"
#include "motconf/motcalc.hpp"

namespace motconf {

struct CheckResult {
  std::string name;
  bool pass = false;
  double millis = 0;
  std::string detail;  // first counterexample on failure
};

struct SuiteOptions {
  uint64_t seed = 7;
  long order = 8;      // truncation order for randomized identities
  int instances = 100; // instances per randomized family
  std::vector<long> qs = {2, 3};
  int oracle_n_max = 6;
  int oracle_tau_max = 3;
  OracleOptions oracle = OracleOptions::from_env();
  bool parallel = true;
};

// Named suites: "axioms", "oracle", "chen", "appendix", or "all".
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<CheckResult> run_axioms_suite(const SuiteOptions& opt);
std::vector<CheckResult> run_oracle_suite(const SuiteOptions& opt);
std::vector<CheckResult> run_chen_suite(const SuiteOptions& opt);
std::vector<CheckResult> run_appendix_suite(const SuiteOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

// The builtin varieties every oracle-facing suite runs against.
std::vector<VarietySpec> oracle_builtins();

}  // namespace motconf
