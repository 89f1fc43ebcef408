#pragma once

#include <optional>
#include <string>

#include "selfsim/action.hpp"

namespace selfsim {

// An element (alpha, w, beta) of S(G,E), or zero. Nonzero triples satisfy
// d(w) = s(beta) and t(w) = s(alpha).
class Triple {
 public:
  Triple() = default;  // zero

  static Triple zero() { return {}; }
  // Throws EndpointMismatch when the word does not fit the paths.
  static Triple make(Path alpha, Word w, Path beta);
  // z_alpha = (alpha, s(alpha), alpha).
  static Triple idempotent(const Path& alpha);

  bool is_zero() const noexcept { return zero_; }
  const Path& alpha() const noexcept { return alpha_; }
  const Word& word() const noexcept { return w_; }
  const Path& beta() const noexcept { return beta_; }

  // Structural equality (same paths, same reduced word).
  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  bool zero_ = true;
  Path alpha_;
  Word w_;
  Path beta_;
};

Triple multiply(const ActionSystem& sys, const Triple& x, const Triple& y);
Triple star(const Triple& x);

// Equality as elements of S(G,E): same paths and equal words in G.
Verdict triple_equal(const ActionSystem& sys, const Triple& x, const Triple& y, Budget budget = {});

// Throws InconclusiveWordProblem when the word problem is undecided.
bool is_idempotent(const ActionSystem& sys, const Triple& x, Budget budget = {});

// (alpha, w, beta)·(beta mu) = alpha (w·mu); nullopt off the cylinder Z(beta).
std::optional<Path> act_on_path(const ActionSystem& sys, const Triple& x, const Path& p);

// "0" or "(e3, a, e1)".
std::string format_triple(const ActionSystem& sys, const Triple& x);
// Inverse of format_triple. Throws ParseError.
Triple parse_triple(const ActionSystem& sys, const std::string& text);

}  // namespace selfsim
