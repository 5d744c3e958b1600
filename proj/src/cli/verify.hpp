#pragma once

#include <string_view>

#include "nsg/budget.hpp"
#include "report.hpp"

namespace nsg::cli {

struct VerifyOutcome {
  Json result;
  bool passed = true;
};

/// Selector: all, example-3.6, example-3.7, example-3.8, example-4.2,
/// remark-4.4, theorem-4.3:A..B or sweep:M:F_MAX.
VerifyOutcome verify_paper(std::string_view selector, Budget& budget, unsigned threads);

}  // namespace nsg::cli
