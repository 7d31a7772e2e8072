#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/verdict.hpp"

namespace mlat {

enum class ErrorCode {
  NotAPoset,
  NotALattice,
  NoBounds,
  UnknownLabel,
  DuplicateLabel,
  TooManyElements,
  DimensionMismatch,
  MissingOne,
  ContainsZero,
  NotClosed,
  PreconditionViolated,
  UnsupportedClass,
  MissingTop,
  SNotContained,
  PrNotContained,
  NotRLattice,
  BadParams,
  BadModulus,
  SNotClosed,
  UnknownName,
  LimitExceeded,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable code and, where the failure has a
/// concrete cause, the offending elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Binding> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Binding>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Binding> witness_;
};

}  // namespace mlat
