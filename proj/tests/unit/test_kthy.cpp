#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "random.hpp"
#include "selfsim/error.hpp"
#include "selfsim/kthy.hpp"

using namespace selfsim;

namespace {

ActionSystem loops(std::size_t n) {
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({"l" + std::to_string(i + 1), "v", "v"});
  return fx::trivial_system({"v"}, edges);
}

const DegreeCocycle kOnes{{1, 1, 1}};

// All single-term monomials of level k on the example.
std::vector<Monomial> level_terms(const ActionSystem& sys, std::size_t k, std::size_t max_word) {
  std::vector<Word> words;
  for (VertexId v = 0; v < sys.graph().num_vertices(); ++v) words.push_back(Word::unit(v));
  for (std::size_t n = 1; n <= max_word; ++n)
    for (auto& w : reduced_words_of_length(sys.alphabet(), n)) words.push_back(w);
  auto paths = all_paths_of_length(sys.graph(), k);
  std::vector<Monomial> out;
  for (const auto& w : words)
    for (const auto& mu : paths)
      for (const auto& nu : paths)
        if (mu.source() == w.terminus() && nu.source() == w.domain())
          out.push_back(Monomial::term(mu, w, nu));
  return out;
}

}  // namespace

TEST(Monomial, PhiOnExample) {
  auto sys = fx::example_system();
  auto u = *sys.graph().find_vertex("u");
  EXPECT_EQ(format_monomial(sys, phi(sys, Monomial::vertex(u))), "(e1, u, e1) + (e3, v, e3)");
  auto x = Monomial::term(sys.parse_path("e3"), sys.parse_word("a"), sys.parse_path("e1"));
  EXPECT_EQ(format_monomial(sys, phi(sys, x)), "(e3 e2, u, e1 e1) + (e3 e6, b, e1 e3)");
  EXPECT_TRUE(phi(sys, Monomial()).empty());
}

TEST(Monomial, MergingAndErrors) {
  auto sys = fx::example_system();
  auto u = *sys.graph().find_vertex("u");
  auto m = Monomial::vertex(u) + Monomial::vertex(u);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.terms()[0].coeff, 2);
  EXPECT_EQ(format_monomial(sys, m), "2*(u, u, u)");
  auto neg = Monomial::term(Path::empty(u), Word::unit(u), Path::empty(u), 0, -2);
  EXPECT_TRUE((m + neg).empty());
  EXPECT_EQ(format_monomial(sys, m + neg), "0");
  try {
    Monomial::term(sys.parse_path("e1"), Word::unit(u), Path::empty(u));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedFilterLevel);
  }
  EXPECT_THROW(Monomial::term(sys.parse_path("e1"), sys.parse_word("a"), sys.parse_path("e1")), Error);
  EXPECT_THROW(m + phi(sys, m), Error);
  EXPECT_THROW(m * phi(sys, m), Error);
}

TEST(Monomial, Winding) {
  auto sys = fx::example_system();
  EXPECT_EQ(winding(standard_unitary(sys), kOnes), 1);
  EXPECT_EQ(winding(phi(sys, standard_unitary(sys)), kOnes), 2);
  Monomial id;
  for (VertexId v = 0; v < 3; ++v) id = id + Monomial::vertex(v);
  EXPECT_EQ(winding(id, kOnes), 0);
  EXPECT_EQ(winding(Monomial::vertex(0), kOnes), 0);
  auto bad = phi(sys, Monomial::vertex(0)) + phi(sys, Monomial::vertex(0));
  EXPECT_THROW(winding(bad, kOnes), Error);
  auto offdiag = Monomial::term(sys.parse_path("e3"), sys.parse_word("a"), sys.parse_path("e1"));
  try {
    winding(offdiag, kOnes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMonomialUnitary);
  }
}

TEST(Monomial, PhiIsMultiplicative) {
  auto sys = fx::example_system();
  for (std::size_t k = 0; k <= 1; ++k) {
    auto xs = level_terms(sys, k, 1);
    std::size_t nonzero = 0;
    for (const auto& x : xs)
      for (const auto& y : xs) {
        auto xy = x * y;
        if (!xy.empty()) ++nonzero;
        ASSERT_EQ(phi(sys, xy), phi(sys, x) * phi(sys, y))
            << format_monomial(sys, x) << " * " << format_monomial(sys, y);
      }
    EXPECT_GT(nonzero, 0u);
  }
}

TEST(Monomial, WindingIsAdditive) {
  auto sys = fx::example_system();
  auto w = standard_unitary(sys);
  auto p = phi(sys, w);
  EXPECT_EQ(winding(p * p, kOnes), 2 * winding(p, kOnes));
  EXPECT_EQ(winding(phi(sys, w * w), kOnes), 4);
}

TEST(Multipliers, Example) {
  auto sys = fx::example_system();
  EXPECT_EQ(level_multiplicity(sys), 2u);
  auto m = multipliers(sys, kOnes);
  EXPECT_EQ(m.D, 2u);
  EXPECT_EQ(m.phi0, 2);
  EXPECT_EQ(m.phi1, 2);
  auto [k0f, k1f] = k_fixed_point(m);
  EXPECT_EQ(k0f.to_string(), "Z[1/2]");
  EXPECT_EQ(k1f.to_string(), "Z[1/2]");
  auto [k0, k1] = k_cuntz_pimsner(m);
  EXPECT_TRUE(k0.is_zero());
  EXPECT_TRUE(k1.is_zero());
  // Negating the cocycle does not change the crossed product.
  auto mneg = multipliers(sys, DegreeCocycle{{-1, -1, -1}});
  EXPECT_EQ(k_cuntz_pimsner(mneg), k_cuntz_pimsner(m));
  EXPECT_EQ(k_of_groupoid_algebra(sys), std::make_pair(AbGroup::free(1), AbGroup::free(1)));
}

TEST(Multipliers, TrivialLoops) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto sys = loops(n);
    EXPECT_EQ(level_multiplicity(sys), n);
    auto m = multipliers(sys, DegreeCocycle{});
    EXPECT_EQ(m.phi0, static_cast<std::int64_t>(n));
    EXPECT_EQ(m.phi1, static_cast<std::int64_t>(n));
    EXPECT_EQ(k_of_groupoid_algebra(sys), std::make_pair(AbGroup::free(1), AbGroup::zero()));
  }
  auto one = multipliers(loops(1), DegreeCocycle{});
  EXPECT_EQ(k_fixed_point(one), std::make_pair(AbGroup::free(1), AbGroup::free(1)));
  EXPECT_EQ(k_cuntz_pimsner(one), std::make_pair(AbGroup::free(2), AbGroup::free(2)));
  auto three = multipliers(loops(3), DegreeCocycle{});
  EXPECT_EQ(k_fixed_point(three).first.to_string(), "Z[1/3]");
  EXPECT_EQ(k_cuntz_pimsner(three), std::make_pair(AbGroup::cyclic(2), AbGroup::cyclic(2)));
}

TEST(Multipliers, ScopeGuards) {
  auto two = fx::trivial_system({"p", "q"}, {{"x", "p", "p"}, {"y", "q", "q"}});
  try {
    level_multiplicity(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTransitive);
  }
  EXPECT_THROW(k_of_groupoid_algebra(two), Error);
  try {
    k_pipeline(loops(2), DegreeCocycle{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AssumptionFailed);
  }
  try {
    k_pipeline(fx::example_system(), DegreeCocycle{{1, 1, -1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AssumptionFailed);
    EXPECT_NE(std::string(e.what()).find("cocycle"), std::string::npos);
  }
}

TEST(Multipliers, Pipeline) {
  auto sys = fx::example_system();
  auto r = k_pipeline(sys, kOnes);
  EXPECT_TRUE(r.assumptions.all_pass()) << format_assumptions(r.assumptions);
  EXPECT_EQ(r.unit_image.size(), 2u);
  EXPECT_EQ(r.multipliers.phi1, 2);
  EXPECT_TRUE(r.k_algebra.first.is_zero());
}
