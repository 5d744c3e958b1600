#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kMismatch = 3,
  kBudget = 4,
};

/// Parses "5,6,7", "gaps:1,2,4", "H:28", "T:20" or "I:20". Malformed input
/// raises invalid_argument naming the offending position.
NumericalSemigroup parse_semigroup(std::string_view spec);

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in table of expected values used by verify-paper.
std::string_view paper_expectations();

}  // namespace nsg::cli
