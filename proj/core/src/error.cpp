#include "selfsim/error.hpp"

namespace selfsim {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::SourceVertex: return "SourceVertex";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::NotBijectiveAtLevel1: return "NotBijectiveAtLevel1";
    case ErrorKind::RangeMismatch: return "RangeMismatch";
    case ErrorKind::RestrictionEndpointMismatch: return "RestrictionEndpointMismatch";
    case ErrorKind::InverseTableConflict: return "InverseTableConflict";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::InconclusiveWordProblem: return "InconclusiveWordProblem";
    case ErrorKind::NotAlongPoint: return "NotAlongPoint";
    case ErrorKind::PeriodicityBudgetExceeded: return "PeriodicityBudgetExceeded";
    case ErrorKind::InvalidGroupoid: return "InvalidGroupoid";
    case ErrorKind::InvalidHomomorphism: return "InvalidHomomorphism";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::TupleLimitExceeded: return "TupleLimitExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAChainComplex: return "NotAChainComplex";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NonconstantInDegree: return "NonconstantInDegree";
    case ErrorKind::NotMonomialUnitary: return "NotMonomialUnitary";
    case ErrorKind::MixedFilterLevel: return "MixedFilterLevel";
    case ErrorKind::AssumptionFailed: return "AssumptionFailed";
    case ErrorKind::NoUnitConjugatorFound: return "NoUnitConjugatorFound";
    case ErrorKind::UnresolvedExtension: return "UnresolvedExtension";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
  }
  return "Unknown";
}

bool is_domain_refusal(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InconclusiveWordProblem:
    case ErrorKind::PeriodicityBudgetExceeded:
    case ErrorKind::TupleLimitExceeded:
    case ErrorKind::NotTransitive:
    case ErrorKind::NonconstantInDegree:
    case ErrorKind::AssumptionFailed:
    case ErrorKind::NoUnitConjugatorFound:
    case ErrorKind::UnresolvedExtension:
      return true;
    default:
      return false;
  }
}

}  // namespace selfsim
