#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace masseylab {

enum class ErrorKind {
  NonAssociative,
  NoIdentity,
  NoInverse,
  GeneratorsDontGenerate,
  SizeLimit,
  InconsistentConstraint,
  NotAHomomorphism,
  IndexOutOfRange,
  BadParameter,
  NotInKernel,
  DegreeLimit,
  NotACocycle,
  NotApplicable,
  ShapeMismatch,
  NotADefiningSystem,
  NotCentral,
  KernelNotOrderP,
  LiftImpossible,
  TargetMismatch,
  AdjacentOnes,
  SizeMismatch,
  HypothesisViolated,
  FormDegenerate,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace masseylab
