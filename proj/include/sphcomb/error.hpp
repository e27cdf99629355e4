#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphcomb {

  enum class ErrorKind {
    NonFiniteType,
    RankMismatch,
    DimensionMismatch,
    GroupTooLarge,
    WildCaseUnsupported,
    NotRational,
    NotMaximalRank,
    StabilizerNotSemidirect,
    LemmaViolation,
    InductionInconsistent,
    Cor1Violation,
    NotReflectionGroup,
    InvalidArgument,
    ParseError,
  };

  constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::NonFiniteType: return "NonFiniteType";
      case ErrorKind::RankMismatch: return "RankMismatch";
      case ErrorKind::DimensionMismatch: return "DimensionMismatch";
      case ErrorKind::GroupTooLarge: return "GroupTooLarge";
      case ErrorKind::WildCaseUnsupported: return "WildCaseUnsupported";
      case ErrorKind::NotRational: return "NotRational";
      case ErrorKind::NotMaximalRank: return "NotMaximalRank";
      case ErrorKind::StabilizerNotSemidirect: return "StabilizerNotSemidirect";
      case ErrorKind::LemmaViolation: return "LemmaViolation";
      case ErrorKind::InductionInconsistent: return "InductionInconsistent";
      case ErrorKind::Cor1Violation: return "Cor1Violation";
      case ErrorKind::NotReflectionGroup: return "NotReflectionGroup";
      case ErrorKind::InvalidArgument: return "InvalidArgument";
      case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
  }

  //! Every failure raised by the library carries one of the kinds above so
  //! callers (the CLI in particular) can map it to an exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& what) {
    throw Error(kind, what);
  }

}  // namespace sphcomb
