#include "phl/error.hpp"

namespace phl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::NotStrictOnto: return "NotStrictOnto";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NonIntegralQuotient: return "NonIntegralQuotient";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::NotADistributor: return "NotADistributor";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotIsomorphism: return "NotIsomorphism";
    case ErrorKind::NotAntichain: return "NotAntichain";
    case ErrorKind::ProofObligationFailed: return "ProofObligationFailed";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel:
    case ErrorKind::UnknownLabel:
    case ErrorKind::NotAPartialOrder:
    case ErrorKind::MalformedCertificate:
    case ErrorKind::MalformedInput:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace phl
