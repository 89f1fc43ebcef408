#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfsim {

// Every failure the library reports carries one of these kinds, so callers
// (the CLI in particular) can map them onto exit codes without string
// matching.
enum class ErrorKind {
  // graph
  EmptyGraph,
  SourceVertex,
  DanglingEdge,
  UnknownVertex,
  UnknownEdge,
  NotComposable,
  // action
  UnknownGenerator,
  NotBijectiveAtLevel1,
  RangeMismatch,
  RestrictionEndpointMismatch,
  InverseTableConflict,
  NotInDomain,
  InconclusiveWordProblem,
  // germ
  NotAlongPoint,
  PeriodicityBudgetExceeded,
  // finite groupoids
  InvalidGroupoid,
  InvalidHomomorphism,
  InvalidAction,
  EndpointMismatch,
  TupleLimitExceeded,
  // linear algebra
  DimensionMismatch,
  NotAChainComplex,
  NotRankOne,
  // k-theory / homology pipelines
  NotTransitive,
  NonconstantInDegree,
  NotMonomialUnitary,
  MixedFilterLevel,
  AssumptionFailed,
  NoUnitConjugatorFound,
  UnresolvedExtension,
  // input
  ParseError,
  DuplicateIdentifier,
  UnknownIdentifier,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Refusals that stem from the mathematics (scope guards, inconclusive
// probes) rather than from malformed input.
bool is_domain_refusal(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace selfsim
