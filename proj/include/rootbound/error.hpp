#ifndef ROOTBOUND_ERROR_HPP
#define ROOTBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rootbound {

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  NoConvergence,
  NotUnitVector,
  HypothesisViolated,
  DegreeTooSmall,
  NonMonic,
  InvalidInput,
  IoError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotUnitVector: return "NotUnitVector";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rootbound

#endif  // ROOTBOUND_ERROR_HPP
