#include "nsg/error.hpp"

#include "nsg/budget.hpp"

namespace nsg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::not_cofinite: return "NotCofinite";
    case ErrorKind::not_closed: return "NotClosed";
    case ErrorKind::not_element: return "NotElement";
    case ErrorKind::full_semigroup: return "FullSemigroup";
    case ErrorKind::not_special_gap: return "NotSpecialGap";
    case ErrorKind::not_oversemigroup: return "NotOversemigroup";
    case ErrorKind::wrong_multiplicity: return "WrongMultiplicity";
    case ErrorKind::not_applicable: return "NotApplicable";
    case ErrorKind::search_failed: return "SearchFailed";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::undefined: return "Undefined";
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::internal_assertion: return "InternalAssertion";
  }
  return "Unknown";
}

NotClosedError::NotClosedError(std::int64_t x, std::int64_t y)
    : Error(ErrorKind::not_closed,
            "complement of the gap set is not closed: " + std::to_string(x) + " + " +
                std::to_string(y) + " = " + std::to_string(x + y) + " is a gap"),
      x_(x),
      y_(y) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

void Budget::Meter::tick(std::uint64_t nodes) {
  used_ += nodes;
  if (used_ > owner_->limit_) {
    fail(ErrorKind::budget_exceeded,
         what_ + " exceeded the budget of " + std::to_string(owner_->limit_) + " nodes");
  }
}

}  // namespace nsg
