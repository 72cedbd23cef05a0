#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hjq {

enum class ErrorKind {
  InvalidArgument,
  InvalidFraction,
  InvalidChain,
  Parse,
  NotAdmissible,
  NotAContractibleEntry,
  NegativeWeight,
  NotAdmissibleForChains,
  MalformedChain,
  InvalidCenter,
  NotACore,
  NotGeneralizedT,
  MissingParameter,
  IncompleteLedger,
  InconsistentLedger,
  IndexTooSmall,
  NotAmple,
  TooFewTerms,
};

constexpr std::string_view name_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidFraction: return "InvalidFraction";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotAContractibleEntry: return "NotAContractibleEntry";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::NotAdmissibleForChains: return "NotAdmissibleForChains";
    case ErrorKind::MalformedChain: return "MalformedChain";
    case ErrorKind::InvalidCenter: return "InvalidCenter";
    case ErrorKind::NotACore: return "NotACore";
    case ErrorKind::NotGeneralizedT: return "NotGeneralizedT";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::IncompleteLedger: return "IncompleteLedger";
    case ErrorKind::InconsistentLedger: return "InconsistentLedger";
    case ErrorKind::IndexTooSmall: return "IndexTooSmall";
    case ErrorKind::NotAmple: return "NotAmple";
    case ErrorKind::TooFewTerms: return "TooFewTerms";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(name_of(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hjq
