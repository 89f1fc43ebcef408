#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "selfsim/error.hpp"
#include "selfsim/homol.hpp"

using namespace selfsim;

namespace {

const DegreeCocycle kOnes{{1, 1, 1}};

AbGroup Zhalf() { return AbGroup::localized(2); }

}  // namespace

TEST(Assumptions, Example) {
  auto sys = fx::example_system();
  auto a = assess_assumptions(sys, kOnes);
  EXPECT_TRUE(a.all_pass()) << format_assumptions(a);
  auto fp = free_on_paths_probe(sys, 4, 4);
  EXPECT_FALSE(fp.violation);
  EXPECT_GT(fp.words, 0u);
  EXPECT_GT(fp.points, 0u);
}

TEST(Assumptions, Failures) {
  auto sys = fx::example_system();
  auto bad = assess_assumptions(sys, DegreeCocycle{{1, 1, -1}});
  EXPECT_FALSE(bad.cocycle.pass);
  EXPECT_TRUE(bad.transitive.pass);
  EXPECT_NE(bad.cocycle.detail.find("a^-1 c b a"), std::string::npos) << bad.cocycle.detail;

  auto two = fx::trivial_system({"p", "q"}, {{"x", "p", "q"}, {"y", "q", "p"}});
  auto a = assess_assumptions(two, DegreeCocycle{});
  EXPECT_FALSE(a.transitive.pass);
  try {
    require_assumptions(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTransitive);
  }
}

TEST(Assumptions, FixedPointIsFound) {
  // y fixes the loop e with unit restriction and swaps f and g; y·e^inf = e^inf.
  auto sys = fx::make_system({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}, {"g", "v", "v"}},
                             {{"y", "v", "v", {{"e", "e", "v"}, {"f", "g", "y"}, {"g", "f", "y"}}}});
  auto fp = free_on_paths_probe(sys, 1, 1);
  ASSERT_TRUE(fp.violation);
  EXPECT_EQ(sys.format(fp.violation->word), "y");
}

TEST(Homology, Pieces) {
  auto sys = fx::example_system();
  auto a = assess_assumptions(sys, kOnes);
  EXPECT_EQ(h_of_Hk(a), std::make_pair(AbGroup::free(1), AbGroup::free(1)));
  EXPECT_EQ(inclusion_multiplier(sys), 2u);
  auto j = j_map(sys, std_bisection_vertex(*sys.graph().find_vertex("u")));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(format_bisection(sys, j[0]), "B(e1, u, e1)");
  EXPECT_EQ(format_bisection(sys, j[1]), "B(e3, v, e3)");
  EXPECT_EQ(h_of_H(sys), std::make_pair(Zhalf(), Zhalf()));
}

TEST(Homology, RhoStar) {
  auto sys = fx::example_system();
  auto r = rho_star(sys);
  EXPECT_EQ(r.multiplier.to_string(), "x(1/2)");
  EXPECT_EQ(sys.graph().edge_name(r.conjugator.edge), "e1");
  EXPECT_TRUE(r.conjugator.word.is_unit());
  EXPECT_EQ(r.conjugator.label, -1);
  EXPECT_EQ(format_bisection(sys, r.conjugator.bisection), "B(u, u, e1)");
  EXPECT_GT(r.conjugator.points_checked, 0u);

  auto one = fx::trivial_system({"v"}, {{"l", "v", "v"}});
  EXPECT_EQ(rho_star(one).multiplier.to_string(), "x1");

  auto cycle = fx::trivial_system({"p", "q"}, {{"x", "p", "q"}, {"y", "q", "p"}});
  try {
    rho_star(cycle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoUnitConjugatorFound);
  }
}

TEST(Homology, LongExactSequence) {
  auto half = les_solve(Zhalf(), Zhalf(), LocMult(1, 2, 2));
  EXPECT_TRUE(half.h0.is_zero());
  EXPECT_TRUE(h1_or_throw(half).is_zero());
  EXPECT_TRUE(half.h2.is_zero());
  EXPECT_TRUE(half.tail_zero);
  EXPECT_TRUE(half.rank_audit);

  auto id = les_solve(AbGroup::free(1), AbGroup::free(1), LocMult::identity(1));
  EXPECT_EQ(id.h0, AbGroup::free(1));
  EXPECT_EQ(h1_or_throw(id), AbGroup::free(2));
  EXPECT_EQ(id.h2, AbGroup::free(1));
  EXPECT_TRUE(id.rank_audit);

  auto four = les_solve(Zhalf(), Zhalf(), LocMult(4, 1, 2));
  EXPECT_EQ(four.h0, AbGroup::cyclic(3));
  EXPECT_EQ(h1_or_throw(four), AbGroup::cyclic(3));
  EXPECT_TRUE(four.h2.is_zero());

  auto idhalf = les_solve(Zhalf(), Zhalf(), LocMult::identity(2));
  EXPECT_EQ(h1_or_throw(idhalf), Zhalf() + Zhalf());
  EXPECT_TRUE(idhalf.rank_audit);

  EXPECT_THROW(les_solve(AbGroup::free(1), Zhalf(), LocMult(1, 2, 2)), Error);
}

TEST(Homology, Pipeline) {
  auto sys = fx::example_system();
  auto r = homology_pipeline(sys, kOnes);
  EXPECT_EQ(r.h_H, std::make_pair(Zhalf(), Zhalf()));
  EXPECT_EQ(r.rho.multiplier.to_string(), "x(1/2)");
  EXPECT_TRUE(r.les.h0.is_zero());
  EXPECT_TRUE(h1_or_throw(r.les).is_zero());
  EXPECT_TRUE(r.les.h2.is_zero());
  try {
    homology_pipeline(sys, DegreeCocycle{{1, 1, -1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AssumptionFailed);
  }
}
