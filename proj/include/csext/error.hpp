// csext - extensions of completely simple semigroups by groups
//
// Error type shared by every module.  Each failure carries a machine-checkable
// code plus a message naming the offending element, triple or index.

#ifndef CSEXT_ERROR_HPP_
#define CSEXT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csext {

  enum class ErrorCode {
    // group_core
    NotSquare,
    OutOfRange,
    NoIdentityAtZero,
    NotAssociative,
    MissingInverse,
    ZeroOrder,
    NotNormal,
    BadWord,
    NotGenerating,
    // semigroup_core
    SearchSpaceTooLarge,
    // rees
    EntryOutsideN,
    NotNormalized,
    // actions_products
    IdentityAxiomFails,
    CompositionAxiomFails,
    NotAutomorphism,
    SizeOverflow,
    // counterexample
    PresentationMismatch,
    ContradictionNotEstablished,
    // any mechanical re-verification of a constructed object
    VerificationFailed,
    // io / cli
    ParseError,
    UnknownSuite,
  };

  constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NotSquare: return "NotSquare";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::MissingInverse: return "MissingInverse";
      case ErrorCode::ZeroOrder: return "ZeroOrder";
      case ErrorCode::NotNormal: return "NotNormal";
      case ErrorCode::BadWord: return "BadWord";
      case ErrorCode::NotGenerating: return "NotGenerating";
      case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
      case ErrorCode::EntryOutsideN: return "EntryOutsideN";
      case ErrorCode::NotNormalized: return "NotNormalized";
      case ErrorCode::IdentityAxiomFails: return "IdentityAxiomFails";
      case ErrorCode::CompositionAxiomFails: return "CompositionAxiomFails";
      case ErrorCode::NotAutomorphism: return "NotAutomorphism";
      case ErrorCode::SizeOverflow: return "SizeOverflow";
      case ErrorCode::PresentationMismatch: return "PresentationMismatch";
      case ErrorCode::ContradictionNotEstablished:
        return "ContradictionNotEstablished";
      case ErrorCode::VerificationFailed: return "VerificationFailed";
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  // Parse failures additionally remember where in the input they happened.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace csext

#endif  // CSEXT_ERROR_HPP_
