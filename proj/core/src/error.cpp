#include "masseylab/error.hpp"

namespace masseylab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::GeneratorsDontGenerate: return "GeneratorsDontGenerate";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InconsistentConstraint: return "InconsistentConstraint";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::DegreeLimit: return "DegreeLimit";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotADefiningSystem: return "NotADefiningSystem";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::KernelNotOrderP: return "KernelNotOrderP";
    case ErrorKind::LiftImpossible: return "LiftImpossible";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::AdjacentOnes: return "AdjacentOnes";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::FormDegenerate: return "FormDegenerate";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace masseylab
