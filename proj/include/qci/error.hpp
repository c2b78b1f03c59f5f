#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qci {

enum class ErrorKind {
  DomainMismatch,
  DimensionMismatch,
  InvalidParameters,
  AlgebraMismatch,
  NotSymmetric,
  NotABimodule,
  ScaleLimitExceeded,
  NoSuchDerivation,
  InvalidSocleMap,
  PairingNotFound,
  NotCentral,
  StructureMismatch,
  PreconditionFailed,
  NotInSpan,
  InvalidAlgebra,
  NotADerivation,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotABimodule: return "NotABimodule";
    case ErrorKind::ScaleLimitExceeded: return "ScaleLimitExceeded";
    case ErrorKind::NoSuchDerivation: return "NoSuchDerivation";
    case ErrorKind::InvalidSocleMap: return "InvalidSocleMap";
    case ErrorKind::PairingNotFound: return "PairingNotFound";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::NotADerivation: return "NotADerivation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace qci
