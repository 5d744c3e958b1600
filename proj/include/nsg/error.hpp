#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace nsg {

enum class ErrorKind {
  invalid_argument,
  not_cofinite,
  not_closed,
  not_element,
  full_semigroup,
  not_special_gap,
  not_oversemigroup,
  wrong_multiplicity,
  not_applicable,
  search_failed,
  out_of_range,
  undefined,
  overflow,
  budget_exceeded,
  internal_assertion,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// front ends can map it onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by from_gaps when the complement of the gap set is not additively
// closed; x + y is a listed gap while x and y are not.
class NotClosedError : public Error {
 public:
  NotClosedError(std::int64_t x, std::int64_t y);

  std::pair<std::int64_t, std::int64_t> witness() const noexcept { return {x_, y_}; }

 private:
  std::int64_t x_;
  std::int64_t y_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void ensure(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::internal_assertion, message);
}

}  // namespace nsg
