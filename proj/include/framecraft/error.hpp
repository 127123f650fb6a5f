#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace framecraft {

enum class ErrorCode {
  NotAGroup,
  InvalidSubgroup,
  InvalidAction,
  DimensionMismatch,
  GroupMismatch,
  RepMismatch,
  SizeMismatch,
  ShapeMismatch,
  InvalidIrrepTable,
  NonIntegerMultiplicity,
  UnsupportedGroup,
  EmptyFamily,
  EmptySelection,
  NotInCyclicSpan,
  NotTwoTransitive,
  BadPsi,
  GeneratorsOutsideVJ,
  ParseError,
  NumericFailure,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `witness` carries the offending
/// element indices when there are any (e.g. a non-associative triple).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

  /// Numeric failures (eigensolver breakdown) versus bad input.
  bool is_numeric() const noexcept { return code_ == ErrorCode::NumericFailure; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace framecraft
