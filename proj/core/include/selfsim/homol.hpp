#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/germ.hpp"
#include "selfsim/pipeline.hpp"
#include "selfsim/zlin.hpp"

namespace selfsim {

// (Z, Z): H_0 and H_1 of the level-k subgroupoid, generated by the class of
// the indicator of B(alpha, s(alpha), alpha; Z(alpha)). Throws
// NotTransitive / AssumptionFailed.
std::pair<AbGroup, AbGroup> h_of_Hk(const PipelineAssumptions& a);

// B(alpha, g, beta) -> the B(alpha (g·x), g|_x, beta x), x in d(g)E^1.
std::vector<Bisection> j_map(const ActionSystem& sys, const Bisection& b);

// Number of pieces of j_map on the unit bisection at each vertex, checked against level_multiplicity. Throws NotTransitive,
// NonconstantInDegree.
std::size_t inclusion_multiplier(const ActionSystem& sys);

// (colim(Z, D), colim(Z, D)).
std::pair<AbGroup, AbGroup> h_of_H(const ActionSystem& sys);

// The bisection U = B(v, g, x; Z(x)) carrying Z(x) onto Z(v), with label
// rho(U) = -1, that conjugates the class at v with label 1 to the class of
// x with label 0.
struct Conjugator {
  VertexId vertex = 0;
  EdgeId edge = 0;
  Word word;
  Bisection bisection;
  std::int64_t label = 0;  // rho(U)
  std::size_t points_checked = 0;
};

struct RhoStar {
  LocMult multiplier = LocMult::identity(1);
  Conjugator conjugator;
};

struct ConjugatorSearch {
  std::size_t max_word_length = 3;
  std::size_t depth = 3;  // sample cycles up to this length when checking U
  PeriodicityBudget budget = {};
};

// x(1/D). Throws NoUnitConjugatorFound when no g in G^v_{s(x)} is found.
RhoStar rho_star(const ActionSystem& sys, ConjugatorSearch search = {});

// 0 -> coker -> H1 -> ker -> 0, resolved or left open.
struct Extension {
  AbGroup sub;       // coker(1 - rho) on H_1
  AbGroup quotient;  // ker(1 - rho) on H_0
  std::optional<AbGroup> resolved;
  std::string how;
};

struct LesResult {
  AbGroup h0;
  Extension h1;
  AbGroup h2;
  // H_q = 0 for q >= 3.
  bool tail_zero = true;
  // rank(H2) - rank(H1) + rank(H0) = 0 when H1 is resolved.
  bool rank_audit = true;
};

// h0, h1 must be rho.group(). Throws DimensionMismatch.
LesResult les_solve(const AbGroup& h0, const AbGroup& h1, const LocMult& rho);

// Throws UnresolvedExtension when H_1 is not determined.
const AbGroup& h1_or_throw(const LesResult& r);

struct HomologyReport {
  PipelineAssumptions assumptions;
  std::pair<AbGroup, AbGroup> h_Hk;
  std::size_t inclusion = 0;
  std::pair<AbGroup, AbGroup> h_H;
  RhoStar rho;
  LesResult les;
};

HomologyReport homology_pipeline(const ActionSystem& sys, const DegreeCocycle& c,
                                 ProbeSettings settings = {}, ConjugatorSearch search = {});

}  // namespace selfsim
