#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superw/rectangle.hpp"
#include "superw/report.hpp"

namespace superw {

/// One (m, n, l, b) parameter set.
struct ParameterSet {
  std::size_t m = 1, n = 1, ell = 1;
  std::string seq = "de";

  /// Throws std::invalid_argument when seq does not have m deltas and n
  /// epsilons, or l = 0.
  void validate() const;
  EpsilonDeltaSequence sequence() const { return EpsilonDeltaSequence::parse(seq); }
  std::string str() const;
  json to_json() const;
};

/// Check names in execution order.
const std::vector<std::string>& all_checks();
/// Sets used when a run names no parameter set.
std::vector<ParameterSet> default_sweep();

struct RunConfig {
  std::vector<ParameterSet> sets;
  std::size_t degree = 2;             // iso and dims use 0..degree
  std::vector<std::string> checks;    // subset of all_checks()
  std::size_t jobs = 1;
  bool timing = false;                // record wall time per check
  std::uint64_t max_basis = 20000;    // largest supermonomial basis ranked

  /// Throws std::invalid_argument on unknown check names or a bad set.
  void validate() const;
  json to_json() const;
};

struct ParameterReport {
  ParameterSet params;
  std::vector<CheckResult> checks;
  std::vector<std::string> skipped;  // checks that do not apply to this set
  bool passed() const;
  json to_json() const;
};

struct VerificationReport {
  RunConfig config;
  std::vector<ParameterReport> sets;
  bool passed() const;
  std::uint64_t tested() const;
  json to_json() const;
  /// One line per (set, check).
  std::string summary() const;
};

VerificationReport run(const RunConfig& config);

/// Runs a single named check on one parameter set. Returns std::nullopt
/// when the check does not apply (crue away from l = 2, kappa-recursion at l = 1).
std::optional<CheckResult> run_check(const std::string& name, const ParameterSet& params, std::size_t degree,
                                     std::size_t jobs, std::uint64_t max_basis = 20000);

/// pbw_count and sym_dim for degrees 0..d.
json dims(const ParameterSet& params, std::size_t d);

/// Selectors accepted by dump().
const std::vector<std::string>& dump_selectors();
/// Throws std::invalid_argument for an unknown selector.
json dump(const ParameterSet& params, const std::string& what);

}  // namespace superw
