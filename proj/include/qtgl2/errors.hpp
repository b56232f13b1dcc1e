#pragma once
#include <stdexcept>
#include <string>

namespace qtgl2 {

enum class ErrorKind {
  DivisionByZero,
  SpecializationCollapsesDenominator,
  EvaluationAtPole,
  NotAPole,
  PoleNotSimple,
  IncomparableBoxes,
  InvalidProhibitedBox,
  InvalidSlope,
  InvalidState,
  ConstraintViolated,
  SubstitutionSingular,
  WindowTooLargeForBound,
  UnknownKind,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SpecializationCollapsesDenominator: return "SpecializationCollapsesDenominator";
    case ErrorKind::EvaluationAtPole: return "EvaluationAtPole";
    case ErrorKind::NotAPole: return "NotAPole";
    case ErrorKind::PoleNotSimple: return "PoleNotSimple";
    case ErrorKind::IncomparableBoxes: return "IncomparableBoxes";
    case ErrorKind::InvalidProhibitedBox: return "InvalidProhibitedBox";
    case ErrorKind::InvalidSlope: return "InvalidSlope";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::SubstitutionSingular: return "SubstitutionSingular";
    case ErrorKind::WindowTooLargeForBound: return "WindowTooLargeForBound";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Error";
}

}  // namespace qtgl2
