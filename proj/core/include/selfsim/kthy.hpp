#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/pipeline.hpp"
#include "selfsim/zlin.hpp"

namespace selfsim {

// coeff · z^z · i_mu ⊗ i_w ⊗ i_nu^*
struct MonoTerm {
  std::int64_t z = 0;
  Path mu;
  Word w;
  Path nu;
  Integer coeff = 1;
};

// A finite sum of terms at one filtration level |mu| = |nu|. Terms with the
// same (z, mu, w, nu) are merged; zero coefficients are dropped.
class Monomial {
 public:
  Monomial() = default;

  // i_v: the empty paths at v with the unit word.
  static Monomial vertex(VertexId v, std::int64_t z = 0);
  // Throws EndpointMismatch or MixedFilterLevel.
  static Monomial term(Path mu, Word w, Path nu, std::int64_t z = 0, Integer coeff = 1);

  // Throws EndpointMismatch or MixedFilterLevel.
  void add(MonoTerm t);

  const std::vector<MonoTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Path length of the terms; 0 for the empty monomial.
  std::size_t level() const noexcept { return level_; }

  friend Monomial operator+(Monomial a, const Monomial& b);
  // Termwise nu_a = mu_b pairing. Throws MixedFilterLevel.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  std::vector<MonoTerm> terms_;
  std::size_t level_ = 0;
};

// Each term expanded over x in d(w)E^1 as (mu (w·x), w|_x, nu x).
Monomial phi(const ActionSystem& sys, const Monomial& x);

// Throws NotTransitive or NonconstantInDegree.
std::size_t level_multiplicity(const ActionSystem& sys);

// Sum of z + c(w) over the terms of a monomial unitary. Throws
// NotMonomialUnitary.
std::int64_t winding(const Monomial& x, const DegreeCocycle& c);

// z·i_{v0} + sum of the other i_v, v0 the first vertex.
Monomial standard_unitary(const ActionSystem& sys);

struct Multipliers {
  std::size_t D = 0;
  std::int64_t phi0 = 0;
  std::int64_t phi1 = 0;
};

// Throws NotTransitive, NonconstantInDegree, NotMonomialUnitary.
Multipliers multipliers(const ActionSystem& sys, const DegreeCocycle& c);

// (colim(Z, Phi0), colim(Z, Phi1)).
std::pair<AbGroup, AbGroup> k_fixed_point(const Multipliers& m);
// K0 = ker(1-Phi1) + coker(1-Phi0), K1 = ker(1-Phi0) + coker(1-Phi1) on the
// direct limits.
std::pair<AbGroup, AbGroup> k_cuntz_pimsner(const Multipliers& m);
// (Z, Z) with infinite isotropy evidence at the first vertex, (Z, 0) when the
// probe finds none. Throws NotTransitive.
std::pair<AbGroup, AbGroup> k_of_groupoid_algebra(const ActionSystem& sys, ProbeSettings settings = {});

struct KReport {
  PipelineAssumptions assumptions;
  Monomial unit_image;      // phi(i_{v0})
  Monomial unitary_image;   // phi(standard_unitary)
  Multipliers multipliers;
  std::pair<AbGroup, AbGroup> k_groupoid;
  std::pair<AbGroup, AbGroup> k_fixed;
  std::pair<AbGroup, AbGroup> k_algebra;
};

// Checks the pipeline assumptions first (require_assumptions).
KReport k_pipeline(const ActionSystem& sys, const DegreeCocycle& c, ProbeSettings settings = {});

// "z^1 (e1, u, e1) + (e3, v, e3)"
std::string format_monomial(const ActionSystem& sys, const Monomial& x);

}  // namespace selfsim
