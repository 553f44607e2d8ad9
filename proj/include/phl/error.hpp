#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phl {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  NotAPartialOrder,
  InvalidParameter,
  IndexOutOfRange,
  BoundTooLarge,
  EmptyPoset,
  OracleTooLarge,
  DomainMismatch,
  InternalInvariantViolation,
  SizeOverflow,
  UnknownElement,
  NotStrict,
  NotStrictOnto,
  PreconditionFailed,
  NonIntegralQuotient,
  UniverseMismatch,
  NotADistributor,
  MalformedCertificate,
  MalformedInput,
  NoWitnessFound,
  NotConvex,
  NotIsomorphism,
  NotAntichain,
  ProofObligationFailed,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by unusable input documents (CLI exit code 3).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix carried by what().
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace phl
