#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcg {

enum class ErrorKind {
  DuplicateLabel,
  UnknownEndpoint,
  SelfLoop,
  DuplicateEdge,
  UnknownLabel,
  SizeLimitExceeded,
  TooSmall,
  OutOfRange,
  NotATree,
  NegativeWeight,
  InvalidInterval,
  LabelMismatch,
  Overflow,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI's
// exit-code contract) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcg
