#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bongard {

// Every recoverable failure in the pipeline carries one of these codes so
// callers (and the CLI) can report the originating condition by name.
enum class Errc {
  // action language
  UnknownKind,
  UnknownMovingType,
  ValueOutOfRange,
  MalformedSyntax,
  ExhaustedAlternatives,
  // turtle / renderer
  DegenerateArc,
  CannotFit,
  ImageReadError,
  // attributes
  UnknownAttribute,
  // shape library
  ParseError,
  DuplicateName,
  InvalidStroke,
  ArityMismatch,
  EmptyFilter,
  // generation
  GenerationBudgetExceeded,
  InsufficientLibraryCoverage,
  SpecInfeasible,
  // dataset i/o
  IoError,
  SchemaVersionMismatch,
  MissingFile,
  UnknownSplit,
  // scoring
  MissingPrediction,
  UnknownId,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::UnknownMovingType: return "UnknownMovingType";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::MalformedSyntax: return "MalformedSyntax";
    case Errc::ExhaustedAlternatives: return "ExhaustedAlternatives";
    case Errc::DegenerateArc: return "DegenerateArc";
    case Errc::CannotFit: return "CannotFit";
    case Errc::ImageReadError: return "ImageReadError";
    case Errc::UnknownAttribute: return "UnknownAttribute";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::InvalidStroke: return "InvalidStroke";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::EmptyFilter: return "EmptyFilter";
    case Errc::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
    case Errc::InsufficientLibraryCoverage: return "InsufficientLibraryCoverage";
    case Errc::SpecInfeasible: return "SpecInfeasible";
    case Errc::IoError: return "IoError";
    case Errc::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case Errc::MissingFile: return "MissingFile";
    case Errc::UnknownSplit: return "UnknownSplit";
    case Errc::MissingPrediction: return "MissingPrediction";
    case Errc::UnknownId: return "UnknownId";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bongard
