#pragma once

// Suite runner and report emitter behind the 3pv command line.

#include "threepv/rational.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace threepv::harness {

struct StateSpec {
  bool random = false;
  int count = 0;
  int degree = 3;
};

/// "vacuum" or "random:K:D"; throws std::invalid_argument otherwise.
StateSpec parse_state_spec(const std::string& text);
std::string to_string(const StateSpec& s);

struct SuiteConfig {
  std::string suite;
  int r = 0;
  Rational kappa0 = 1;
  Rational B0 = 0;
  std::array<std::array<Rational, 2>, 2> B1{};
  std::optional<int> window;  // unset: the suite's default
  StateSpec states;
  std::uint64_t seed = 1;
  std::string format = "text";

  /// Throws std::invalid_argument on an unknown suite or invalid parameters.
  void validate() const;
  int effective_window() const;
};

/// Applies one key=value setting (suite, r, kappa0, B0, B1, window, states, seed, format).
void apply_setting(SuiteConfig& cfg, const std::string& key, const std::string& value);
/// Flat key=value file; '#' starts a comment.
void load_config_file(SuiteConfig& cfg, const std::string& path);
/// "a,b;c,d"
std::array<std::array<Rational, 2>, 2> parse_matrix(const std::string& text);

struct Check {
  std::string lhs;
  std::string rhs;
  std::string state;
  bool pass = true;
  std::string residual;  // empty when passing
};

struct CheckReport {
  std::string suite;
  nlohmann::ordered_json params;
  /// Every failing check; passing checks are listed unless they come from a
  /// bulk checker, in which case they are only counted.
  std::vector<Check> checks;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> findings;
  nlohmann::ordered_json tables;  // optional extra tables (null when absent)

  void add(Check c);
  void add_bulk_passes(std::size_t n) { passed += n; }
  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();
int default_window(const std::string& suite);

CheckReport run_suite(const SuiteConfig& cfg);

/// "json": {"suite","params","checks","passed","failed","findings"[,"tables"]}; "text": a table.
std::string emit_report(const CheckReport& rep, const std::string& format);

/// THREEPV_THREADS if set (>= 1), else the hardware concurrency.
unsigned thread_cap();

}  // namespace threepv::harness
