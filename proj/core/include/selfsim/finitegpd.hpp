#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selfsim/zlin.hpp"

namespace selfsim {

using ElemId = std::uint32_t;
inline constexpr ElemId kNoElem = static_cast<ElemId>(-1);

// A finite groupoid with an explicit multiplication table. Units are
// elements; d and t return unit element ids. gh is defined iff d(g) = t(h).
class FiniteGroupoid {
 public:
  using Product = std::function<std::optional<ElemId>(ElemId, ElemId)>;

  FiniteGroupoid() = default;

  // Tabulates `mul` on every pair with d(g) = t(h) and checks the category
  // and inverse axioms. Throws InvalidGroupoid.
  static FiniteGroupoid build(std::vector<std::string> names, std::vector<ElemId> d,
                              std::vector<ElemId> t, const Product& mul);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<ElemId>& units() const noexcept { return units_; }
  bool is_unit(ElemId g) const { return d_.at(g) == g; }

  ElemId d(ElemId g) const { return d_.at(g); }
  ElemId t(ElemId g) const { return t_.at(g); }
  ElemId inverse(ElemId g) const { return inv_.at(g); }
  bool composable(ElemId g, ElemId h) const { return d_.at(g) == t_.at(h); }
  // Throws NotComposable.
  ElemId mul(ElemId g, ElemId h) const;

  const std::string& name(ElemId g) const { return names_.at(g); }
  std::optional<ElemId> find(const std::string& name) const;

  // Position of a unit in units(); kNoElem for non-units.
  std::size_t unit_index(ElemId u) const { return unit_index_.at(u); }
  // Elements with t(g) = u, ascending.
  const std::vector<ElemId>& with_terminus(ElemId u) const {
    return by_terminus_.at(unit_index_.at(u));
  }

  // Unit orbits: u ~ v iff some g has d(g) = u, t(g) = v.
  std::vector<std::vector<ElemId>> orbits() const;
  bool is_transitive() const { return orbits().size() == 1; }
  // Elements g with d(g) = t(g) = u.
  std::vector<ElemId> isotropy(ElemId u) const;

 private:
  std::vector<std::string> names_;
  std::vector<ElemId> d_, t_, inv_;
  std::vector<ElemId> units_;
  std::vector<std::size_t> unit_index_;
  std::vector<std::vector<ElemId>> by_terminus_;
  std::vector<ElemId> table_;  // size()^2, kNoElem when undefined
};

// Standard small groupoids.
FiniteGroupoid pair_groupoid(std::size_t k);
FiniteGroupoid cyclic_group(std::size_t n);
FiniteGroupoid units_only(std::size_t k);
FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

// Element map between finite groupoids.
struct GroupoidHom {
  std::vector<ElemId> map;
  ElemId operator()(ElemId g) const { return map.at(g); }
};

// Throws InvalidHomomorphism unless f preserves d, t and products.
void validate_hom(const FiniteGroupoid& src, const FiniteGroupoid& dst, const GroupoidHom& f);
GroupoidHom compose(const GroupoidHom& f, const GroupoidHom& g);  // f after g
GroupoidHom identity_hom(const FiniteGroupoid& g);

// Right action of G on H: anchor p: H -> G^(0) and h·g for t(g) = p(h).
struct GroupoidAction {
  FiniteGroupoid G;
  FiniteGroupoid H;
  std::vector<ElemId> anchor;  // per element of H, a unit of G
  std::vector<ElemId> table;   // H.size() * G.size(), kNoElem off H*G

  ElemId act(ElemId h, ElemId g) const;

  // Builds the table from a function and checks axioms i)-iv).
  // Throws InvalidAction.
  static GroupoidAction build(FiniteGroupoid G, FiniteGroupoid H, std::vector<ElemId> anchor,
                              const std::function<ElemId(ElemId, ElemId)>& act);
};

void validate_action(const GroupoidAction& a);

// Elements of constructions are addressed by their components.
struct Semidirect {
  FiniteGroupoid groupoid;
  std::vector<std::pair<ElemId, ElemId>> parts;  // (h, g)
  GroupoidHom pi;                                // (h, g) -> g
  std::optional<ElemId> find(ElemId h, ElemId g) const;
};

struct Skew {
  FiniteGroupoid groupoid;
  std::vector<std::pair<ElemId, ElemId>> parts;  // (g, gamma)
  std::optional<ElemId> find(ElemId g, ElemId gamma) const;
};

// H x| G with (h,g)(h'·g, g') = (hh', gg').
Semidirect semidirect(const GroupoidAction& a);
// G x_rho Gamma with (g,c)(g', c rho(g)) = (gg', c).
Skew skew(const FiniteGroupoid& G, const FiniteGroupoid& Gamma, const GroupoidHom& rho);

// phi: G1 -> G2, psi: G2 -> G1, theta1: G1^(0) -> G1 for psi∘phi ~ id and
// theta2: G2^(0) -> G2 for phi∘psi ~ id. theta vectors are indexed by unit
// position (FiniteGroupoid::unit_index).
struct SimilarityData {
  FiniteGroupoid G1;
  FiniteGroupoid G2;
  GroupoidHom phi;
  GroupoidHom psi;
  std::vector<ElemId> theta1;
  std::vector<ElemId> theta2;
};

struct SimilarityReport {
  bool ok = true;
  // First element where theta(t(x)) x != (composite)(x) theta(d(x)).
  std::optional<ElemId> witness;
  // 1 when the witness lies in G1, 2 when in G2.
  int side = 0;
  std::size_t checked = 0;
};

// Checks both identities elementwise. Throws InvalidHomomorphism when phi or
// psi is not a homomorphism, EndpointMismatch when a theta value or one of
// the products is not defined.
SimilarityReport similarity_check(const SimilarityData& s);

// (H x| G) x_pi G similar to H.
SimilarityData canonical_similarity_HG(const GroupoidAction& a);
// (G x_rho Gamma) x| Gamma similar to G.
SimilarityData canonical_similarity_Grho(const FiniteGroupoid& G, const FiniteGroupoid& Gamma,
                                         const GroupoidHom& rho);

// G^(n) in lexicographic element order; n = 0 gives the units.
struct Tuples {
  std::size_t n = 0;
  std::size_t count = 0;
  std::vector<ElemId> flat;  // count * max(n, 1)
  std::span<const ElemId> operator[](std::size_t i) const {
    std::size_t w = n == 0 ? 1 : n;
    return {flat.data() + i * w, w};
  }
};

inline constexpr std::size_t kDefaultTupleLimit = 1'000'000;

// Throws TupleLimitExceeded above the limit.
std::size_t count_composable(const FiniteGroupoid& G, std::size_t n);
Tuples composable_tuples(const FiniteGroupoid& G, std::size_t n,
                         std::size_t limit = kDefaultTupleLimit);

// delta_n: Z[G^(n)] -> Z[G^(n-1)], n >= 1, alternating sum of faces.
SparseIntMatrix boundary_matrix(const FiniteGroupoid& G, std::size_t n,
                                std::size_t limit = kDefaultTupleLimit);

// H_0 .. H_{n_max} with integer coefficients.
std::vector<AbGroup> homology(const FiniteGroupoid& G, std::size_t n_max = 3,
                              std::size_t limit = kDefaultTupleLimit);

// Relabels elements by a permutation (new id of old element i is perm[i]).
FiniteGroupoid relabel(const FiniteGroupoid& G, const std::vector<ElemId>& perm);

}  // namespace selfsim
