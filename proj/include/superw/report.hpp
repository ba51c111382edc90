#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superw/serialize.hpp"

namespace superw {

/// Outcome of one named family of identity checks.
struct CheckResult {
  std::string name;
  std::uint64_t tested = 0;
  std::uint64_t failed = 0;
  json counterexample;  // first failing case, null if none
  json details;         // check-specific summary data
  std::optional<double> seconds;

  bool passed() const { return failed == 0; }

  /// Counts one case; `payload` is only evaluated for the first failure.
  void record(bool ok, const std::function<json()>& payload = {}) {
    ++tested;
    if (ok) return;
    if (failed++ == 0 && payload) counterexample = payload();
  }

  void merge(const CheckResult& other) {
    tested += other.tested;
    if (failed == 0 && other.failed != 0) counterexample = other.counterexample;
    failed += other.failed;
  }

  json to_json() const {
    json out = {{"check", name}, {"passed", passed()}, {"tested", tested}, {"failed", failed}};
    if (!counterexample.is_null()) out["counterexample"] = counterexample;
    if (!details.is_null()) out["details"] = details;
    if (seconds) out["seconds"] = *seconds;
    return out;
  }
};

}  // namespace superw
