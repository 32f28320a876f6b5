#pragma once

#include <stdexcept>
#include <string>

namespace linkpos {

// Error taxonomy. Kinds map onto process exit codes in the CLI:
//   2 = input could not be parsed (text, schema, example names),
//   3 = a documented precondition was not met,
//   4 = an internal consistency guard fired (formula or chain).
enum class ErrorKind {
  MalformedBraid,
  GeneratorOutOfRange,
  EmptySelection,
  UnknownComponent,
  OddMixedCount,
  InvalidPartition,
  MalformedPD,
  ArcDegreeError,
  OrientationInconsistent,
  FormulaInconsistency,
  ChainViolation,
  NotPure,
  NotAlternating,
  NotPositive,
  NotPositiveDiagram,
  ParityError,
  MissingInput,
  UnsupportedU,
  SchemaError,
  DuplicateName,
  UnknownExample,
  BadParameter,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedBraid: return "MalformedBraid";
    case ErrorKind::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::OddMixedCount: return "OddMixedCount";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::MalformedPD: return "MalformedPD";
    case ErrorKind::ArcDegreeError: return "ArcDegreeError";
    case ErrorKind::OrientationInconsistent: return "OrientationInconsistent";
    case ErrorKind::FormulaInconsistency: return "FormulaInconsistency";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotPositiveDiagram: return "NotPositiveDiagram";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::MissingInput: return "MissingInput";
    case ErrorKind::UnsupportedU: return "UnsupportedU";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::BadParameter: return "BadParameter";
  }
  return "UnknownError";
}

inline int error_exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedBraid:
    case ErrorKind::GeneratorOutOfRange:
    case ErrorKind::MalformedPD:
    case ErrorKind::ArcDegreeError:
    case ErrorKind::OrientationInconsistent:
    case ErrorKind::SchemaError:
    case ErrorKind::DuplicateName:
    case ErrorKind::UnknownExample:
    case ErrorKind::BadParameter:
      return 2;
    case ErrorKind::FormulaInconsistency:
    case ErrorKind::ChainViolation:
      return 4;
    default:
      return 3;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }
  int exit_code() const { return error_exit_code(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace linkpos
