#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algpoly {

enum class ErrorKind {
  ZeroPolynomial,
  NotSquareFree,
  NoRootInInterval,
  FieldMismatch,
  DivisionByZero,
  SyntaxError,
  SingularMatrix,
  ShapeMismatch,
  RankDeficient,
  ZeroVector,
  DimensionMismatch,
  NotAPolytope,
  NotFullDimensional,
  NotPointed,
  UnboundedPolyhedron,
  UnknownGoal,
  BadDenominator,
  FieldElementOutsideGrammar,
  UnsupportedBlock,
  ArithmeticOverflow,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::NoRootInInterval: return "NoRootInInterval";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAPolytope: return "NotAPolytope";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::UnboundedPolyhedron: return "UnboundedPolyhedron";
    case ErrorKind::UnknownGoal: return "UnknownGoal";
    case ErrorKind::BadDenominator: return "BadDenominator";
    case ErrorKind::FieldElementOutsideGrammar: return "FieldElementOutsideGrammar";
    case ErrorKind::UnsupportedBlock: return "UnsupportedBlock";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Input errors map to CLI exit status 1, everything else to 2.
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::SyntaxError:
      case ErrorKind::UnknownGoal:
      case ErrorKind::BadDenominator:
      case ErrorKind::FieldElementOutsideGrammar:
      case ErrorKind::UnsupportedBlock:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::ZeroPolynomial:
      case ErrorKind::NotSquareFree:
      case ErrorKind::NoRootInInterval:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace algpoly
