#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "selfsim/error.hpp"
#include "selfsim/finitegpd.hpp"

using namespace selfsim;

namespace {

AbGroup Z() { return AbGroup::free(1); }
AbGroup Z2() { return AbGroup::cyclic(2); }

// Z/2 acting on the pair groupoid on {1,2} by swapping the points.
GroupoidAction flip_action() {
  auto H = pair_groupoid(2);
  auto G = cyclic_group(2);
  std::vector<ElemId> anchor(H.size(), 0);
  return GroupoidAction::build(G, H, anchor, [](ElemId h, ElemId g) -> ElemId {
    if (g == 0) return h;
    ElemId i = h / 2, j = h % 2;
    return (1 - i) * 2 + (1 - j);
  });
}

GroupoidAction trivial_action() {
  auto H = pair_groupoid(2);
  auto G = cyclic_group(2);
  std::vector<ElemId> anchor(H.size(), 0);
  return GroupoidAction::build(G, H, anchor, [](ElemId h, ElemId) { return h; });
}

// G acting on its own unit space by u·g = d(g).
GroupoidAction unit_space_action(const FiniteGroupoid& G) {
  auto H = units_only(G.units().size());
  std::vector<ElemId> anchor(H.size());
  for (ElemId u = 0; u < H.size(); ++u) anchor[u] = G.units()[u];
  return GroupoidAction::build(G, H, anchor, [G](ElemId, ElemId g) {
    return static_cast<ElemId>(G.unit_index(G.d(g)));
  });
}

GroupoidHom projection_second(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  GroupoidHom f;
  for (ElemId x = 0; x < a.size() * b.size(); ++x) f.map.push_back(x % b.size());
  return f;
}

}  // namespace

TEST(FiniteGroupoid, StandardShapes) {
  auto P = pair_groupoid(3);
  EXPECT_EQ(P.size(), 9u);
  EXPECT_EQ(P.units().size(), 3u);
  EXPECT_TRUE(P.is_transitive());
  auto Z4 = cyclic_group(4);
  EXPECT_EQ(Z4.inverse(1), 3u);
  EXPECT_EQ(Z4.isotropy(0).size(), 4u);
  auto U = units_only(3);
  EXPECT_EQ(U.orbits().size(), 3u);
  auto D = disjoint_union(pair_groupoid(2), cyclic_group(2));
  EXPECT_EQ(D.size(), 6u);
  EXPECT_EQ(D.units().size(), 3u);
  EXPECT_FALSE(D.composable(0, 4));
  EXPECT_THROW(D.mul(0, 4), Error);
  auto G = product(pair_groupoid(3), cyclic_group(2));
  EXPECT_EQ(G.size(), 18u);
  EXPECT_EQ(G.units().size(), 3u);
}

TEST(FiniteGroupoid, AxiomsAreChecked) {
  // Non-associative "group" on {0,1,2}.
  std::vector<ElemId> z(3, 0);
  auto bad = [](ElemId a, ElemId b) -> std::optional<ElemId> {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) return 0;
    return a == 1 ? 2 : 1;  // xy = y, yx = x
  };
  try {
    FiniteGroupoid::build({"e", "x", "y"}, z, z, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidGroupoid);
  }
  // A monoid that is not a group.
  try {
    FiniteGroupoid::build({"e", "x"}, {0, 0}, {0, 0},
                          [](ElemId a, ElemId b) -> std::optional<ElemId> { return a | b; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidGroupoid);
  }
  EXPECT_THROW(FiniteGroupoid::build({"e", "e"}, {0, 1}, {0, 1},
                                     [](ElemId a, ElemId) -> std::optional<ElemId> { return a; }),
               Error);
}

TEST(FiniteGroupoid, HomsAreChecked) {
  auto Z4 = cyclic_group(4), Z2 = cyclic_group(2);
  validate_hom(Z4, Z2, GroupoidHom{{0, 1, 0, 1}});
  EXPECT_THROW(validate_hom(Z4, Z2, GroupoidHom{{0, 1, 1, 0}}), Error);
  EXPECT_THROW(validate_hom(Z2, Z4, GroupoidHom{{0, 1}}), Error);
  validate_hom(Z2, Z4, GroupoidHom{{0, 2}});
}

TEST(Action, AxiomsAreChecked) {
  auto H = pair_groupoid(2);
  auto G = cyclic_group(2);
  std::vector<ElemId> anchor(H.size(), 0);
  // Swapping only the units does not respect products.
  try {
    GroupoidAction::build(G, H, anchor, [](ElemId h, ElemId g) -> ElemId {
      if (g == 0) return h;
      return h == 0 ? 3 : h == 3 ? 0 : h;
    });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAction);
  }
  flip_action();
}

TEST(Semidirect, FlipGivesEightElements) {
  auto S = semidirect(flip_action());
  EXPECT_EQ(S.groupoid.size(), 8u);
  EXPECT_EQ(S.groupoid.units().size(), 2u);
  validate_hom(S.groupoid, cyclic_group(2), S.pi);
  // (h,g)^-1 = (h^-1·g, g^-1)
  auto a = flip_action();
  for (ElemId x = 0; x < S.groupoid.size(); ++x) {
    auto [h, g] = S.parts[x];
    auto inv = S.find(a.act(a.H.inverse(h), a.G.inverse(g)), a.G.inverse(g));
    ASSERT_TRUE(inv);
    EXPECT_EQ(S.groupoid.inverse(x), *inv);
  }
}

TEST(Semidirect, TrivialActingGroupoid) {
  auto H = pair_groupoid(3);
  auto G = units_only(1);
  auto a = GroupoidAction::build(G, H, std::vector<ElemId>(H.size(), 0),
                                 [](ElemId h, ElemId) { return h; });
  auto S = semidirect(a);
  EXPECT_EQ(S.groupoid.size(), H.size());
  for (ElemId x = 0; x < S.groupoid.size(); ++x)
    for (ElemId y = 0; y < S.groupoid.size(); ++y)
      if (S.groupoid.composable(x, y))
        EXPECT_EQ(S.parts[S.groupoid.mul(x, y)].first, H.mul(S.parts[x].first, S.parts[y].first));
}

TEST(Skew, IdentityOnZ2IsThePairGroupoid) {
  auto Z2g = cyclic_group(2);
  auto K = skew(Z2g, Z2g, identity_hom(Z2g));
  EXPECT_EQ(K.groupoid.size(), 4u);
  EXPECT_EQ(K.groupoid.units().size(), 2u);
  EXPECT_TRUE(K.groupoid.is_transitive());
  EXPECT_EQ(homology(K.groupoid, 3), homology(pair_groupoid(2), 3));
  for (ElemId u : K.groupoid.units()) EXPECT_EQ(K.groupoid.isotropy(u).size(), 1u);
}

TEST(Skew, TrivialCocycleGivesG) {
  auto G = pair_groupoid(3);
  auto one = units_only(1);
  auto K = skew(G, one, GroupoidHom{std::vector<ElemId>(G.size(), 0)});
  EXPECT_EQ(K.groupoid.size(), G.size());
  for (ElemId x = 0; x < K.groupoid.size(); ++x)
    for (ElemId y = 0; y < K.groupoid.size(); ++y)
      if (K.groupoid.composable(x, y))
        EXPECT_EQ(K.parts[K.groupoid.mul(x, y)].first, G.mul(K.parts[x].first, K.parts[y].first));
}

TEST(Similarity, IdentityData) {
  auto G = pair_groupoid(3);
  SimilarityData s{G, G, identity_hom(G), identity_hom(G), G.units(), G.units()};
  auto r = similarity_check(s);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.checked, 18u);
}

TEST(Similarity, CanonicalDataPasses) {
  auto G3 = product(pair_groupoid(3), cyclic_group(2));
  std::vector<GroupoidAction> actions{trivial_action(), flip_action(), unit_space_action(G3)};
  for (const auto& a : actions) {
    auto s = canonical_similarity_HG(a);
    auto r = similarity_check(s);
    EXPECT_TRUE(r.ok) << "witness " << (r.witness ? s.G1.name(*r.witness) : "");
  }
  EXPECT_EQ(canonical_similarity_HG(flip_action()).G1.size(), 16u);
  EXPECT_EQ(canonical_similarity_HG(unit_space_action(G3)).G1.size(), 108u);

  auto Z2g = cyclic_group(2);
  std::vector<std::pair<FiniteGroupoid, GroupoidHom>> cocycles{
      {Z2g, GroupoidHom{{0, 0}}}, {Z2g, identity_hom(Z2g)}, {G3, projection_second(pair_groupoid(3), Z2g)}};
  for (const auto& [G, rho] : cocycles) {
    auto s = canonical_similarity_Grho(G, Z2g, rho);
    auto r = similarity_check(s);
    EXPECT_TRUE(r.ok) << "witness " << (r.witness ? s.G1.name(*r.witness) : "");
  }
  auto big = canonical_similarity_Grho(G3, Z2g, projection_second(pair_groupoid(3), Z2g));
  EXPECT_EQ(big.G1.size(), 72u);
  EXPECT_EQ(big.G1.units().size(), 6u);
}

TEST(Similarity, TrivialCocycleHasUnitTheta) {
  auto G = pair_groupoid(2);
  auto one = units_only(1);
  auto s = canonical_similarity_Grho(G, one, GroupoidHom{std::vector<ElemId>(G.size(), 0)});
  EXPECT_EQ(s.G1.size(), G.size());
  for (ElemId th : s.theta1) EXPECT_TRUE(s.G1.is_unit(th));
}

TEST(Similarity, CorruptedThetaGivesWitness) {
  auto G3 = product(pair_groupoid(3), cyclic_group(2));
  auto s = canonical_similarity_Grho(G3, cyclic_group(2), projection_second(pair_groupoid(3), cyclic_group(2)));
  // Multiply theta at one unit by a nontrivial isotropy element.
  const auto& G1 = s.G1;
  bool corrupted = false;
  for (std::size_t i = 0; i < s.theta1.size() && !corrupted; ++i) {
    ElemId th = s.theta1[i];
    for (ElemId z : G1.isotropy(G1.t(th))) {
      if (G1.is_unit(z)) continue;
      s.theta1[i] = G1.mul(z, th);
      corrupted = true;
      break;
    }
  }
  ASSERT_TRUE(corrupted);
  auto r = similarity_check(s);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.side, 1);
}

TEST(Similarity, EndpointMismatch) {
  auto s = canonical_similarity_HG(flip_action());
  // theta with the wrong terminus makes theta(t(x)) x undefined.
  s.theta1[0] = s.G1.units()[1];
  try {
    similarity_check(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EndpointMismatch);
  }
  s.theta1.pop_back();
  EXPECT_THROW(similarity_check(s), Error);
}

TEST(Nerve, TuplesAndBoundary) {
  auto P = pair_groupoid(2);
  EXPECT_EQ(count_composable(P, 1), 4u);
  EXPECT_EQ(count_composable(P, 2), 8u);
  auto d1 = boundary_matrix(P, 1);
  EXPECT_EQ(d1.rows(), 2u);
  EXPECT_EQ(d1.cols(), 4u);
  EXPECT_EQ(invariant_factors(d1).rank, 1u);
  // (1,2) has d = (2,2), t = (1,1).
  auto dense = d1.to_dense();
  EXPECT_EQ(dense, (IntMatrix{{0, -1, 1, 0}, {0, 1, -1, 0}}));

  auto T = composable_tuples(P, 2);
  for (std::size_t i = 1; i < T.count; ++i)
    EXPECT_TRUE(std::lexicographical_compare(T[i - 1].begin(), T[i - 1].end(), T[i].begin(), T[i].end()));
}

TEST(Nerve, Z2MatchesBarComplex) {
  auto Z2g = cyclic_group(2);
  auto d2 = boundary_matrix(Z2g, 2).to_dense();
  // Pairs (0,0),(0,1),(1,0),(1,1); faces g2 - g1g2 + g1.
  IntMatrix bar(2, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      int col = a * 2 + b;
      bar(b, col) += 1;
      bar((a + b) % 2, col) -= 1;
      bar(a, col) += 1;
    }
  EXPECT_EQ(d2, bar);
}

TEST(Nerve, TupleLimit) {
  auto G = pair_groupoid(10);
  try {
    composable_tuples(G, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TupleLimitExceeded);
  }
  EXPECT_EQ(count_composable(G, 6), 10'000'000u);
}

TEST(Homology, Examples) {
  for (std::size_t k = 1; k <= 3; ++k)
    EXPECT_EQ(homology(pair_groupoid(k), 3),
              (std::vector<AbGroup>{Z(), AbGroup::zero(), AbGroup::zero(), AbGroup::zero()}));
  EXPECT_EQ(homology(cyclic_group(2), 3), (std::vector<AbGroup>{Z(), Z2(), AbGroup::zero(), Z2()}));
  EXPECT_EQ(homology(units_only(2), 2)[0], AbGroup::free(2));
  EXPECT_EQ(homology(units_only(1), 3),
            (std::vector<AbGroup>{Z(), AbGroup::zero(), AbGroup::zero(), AbGroup::zero()}));
  EXPECT_EQ(homology(cyclic_group(3), 2)[1], AbGroup::cyclic(3));
}

TEST(Homology, BoundarySquaresToZero) {
  auto G3 = product(pair_groupoid(3), cyclic_group(2));
  std::vector<FiniteGroupoid> gs{pair_groupoid(3), cyclic_group(4), G3,
                                 semidirect(flip_action()).groupoid,
                                 disjoint_union(cyclic_group(2), pair_groupoid(2))};
  for (const auto& G : gs)
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_TRUE((boundary_matrix(G, n) * boundary_matrix(G, n + 1)).is_zero());
}

TEST(Homology, RelabelInvariant) {
  std::mt19937_64 rng(42);
  std::vector<FiniteGroupoid> gs{cyclic_group(2), semidirect(flip_action()).groupoid,
                                 disjoint_union(cyclic_group(3), pair_groupoid(2))};
  for (const auto& G : gs) {
    auto ref = homology(G, 3);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<ElemId> perm(G.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(homology(relabel(G, perm), 3), ref);
    }
  }
}

TEST(Homology, SimilarSidesAgree) {
  auto flip = canonical_similarity_HG(flip_action());
  EXPECT_EQ(homology(flip.G1, 3), homology(flip.G2, 3));
  auto Z2g = cyclic_group(2);
  auto s = canonical_similarity_Grho(Z2g, Z2g, identity_hom(Z2g));
  EXPECT_EQ(homology(s.G1, 3), homology(s.G2, 3));
}
