#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "motconf/checks.hpp"
#include "motconf/measure.hpp"

namespace motconf {

// Parsed command-line configuration; one subcommand per computation.
struct RunConfig {
  std::string command;
  std::string measure = "count";  // count | hodge
  long order = 8;
  std::string builtin;    // builtin token, e.g. "affine_space:1"
  std::string spec_path;  // JSON variety spec file
  std::string charpoly;
  std::string tau;
  std::string basis = "p";  // symfunc rendering basis: p | h | e | c
  std::vector<long> qs;
  int n = -1;  // point count / census depth override
  std::string format = "text";  // text | json | csv
  uint64_t seed = 7;
  std::string suite = "all";
};

// ---- JSON renderers (schema-stable; exercised by the golden tests) ----

template <typename M>
nlohmann::json motive_json(const MotiveScalar<M>& v) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [e, c] : v.terms()) {
    std::string key;
    for (int i = 0; i < M::nvars; ++i) key += (i ? "," : "") + std::to_string(e[i]);
    obj[key] = to_string(c);
  }
  return obj;
}

template <typename M>
nlohmann::json rational_motive_json(const RationalMotive<M>& v) {
  return {{"num", motive_json(v.num())}, {"den", motive_json(v.den())}};
}

nlohmann::json check_results_json(const std::vector<CheckResult>& results);

// Entry point used by the motconf binary and by the CLI tests.
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace motconf
