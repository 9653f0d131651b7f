#pragma once

#include <cstdint>
#include <vector>

#include "nvs/report.hpp"
#include "nvs/space.hpp"

namespace nvs {

struct SuiteOptions {
  int ql_cap = 3;                      // max |S| for the six-way agreement scan
  std::uint64_t ql_set_limit = 200000; // cap on enumerated sets (prefix of the canonical order)
  int dimspan_samples = 50;
  unsigned seed = 0;
  int algebra_support = 2;             // bounded ring/module universe
  long long algebra_coeff = 3;
};

/// Runs every theorem check on the space, in the fixed section order.
/// Reports are deterministic for a given space and options.
std::vector<VerificationReport> run_suite(const SpacePtr& sp, const SuiteOptions& opts);

bool suite_passed(const std::vector<VerificationReport>& reports);

}  // namespace nvs
