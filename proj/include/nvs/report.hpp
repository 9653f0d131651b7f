#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nvs {

/// One verified property: pass/fail, how many cases were scanned, and the
/// first failing witness when there is one.
struct Check {
  std::string key;
  bool passed = true;
  std::uint64_t count = 0;
  std::string witness;
};

struct VerificationReport {
  std::string name;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool all_passed() const;
  void add(const std::string& key, bool passed, std::uint64_t count = 0,
           const std::string& witness = {});
  void merge(const VerificationReport& other, const std::string& prefix = {});

  /// Plain text, one check per line, keys sorted. Stable across runs;
  /// elapsed time is only emitted when requested.
  std::string to_text(bool with_elapsed = false) const;
  std::string to_json_string(bool with_elapsed = false) const;
};

}  // namespace nvs
