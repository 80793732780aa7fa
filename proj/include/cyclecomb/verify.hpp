#pragma once

#include <string_view>
#include <vector>

#include "cyclecomb/avoiders.hpp"
#include "cyclecomb/report.hpp"

namespace cyclecomb {

/// Knobs for the named verification suites. max_n bounds exhaustive
/// enumerations, max_k bounds seed-table depth.
struct VerifyOptions {
  int max_n = 9;
  int max_k = 4;
  // first n for the empirical-status suites (bona-cory); 4 is where the data
  // window supports both inequalities for every pattern
  int min_n = 4;
  EnumLimits limits{};
};

std::vector<std::string> verify_suite_names();

/// Runs one named suite ("avoiders", "compose", "seeds", "dyck", "bounds",
/// "corollary", "bona-cory", "order" or "all"). The table collects counts
/// generated along the way. Throws UnknownPreset for a bad name.
Report run_verify_suite(std::string_view name, const VerifyOptions& options,
                        CountTable& table);

}  // namespace cyclecomb
