#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "fixtures.hpp"
#include "random.hpp"
#include "selfsim/action.hpp"
#include "selfsim/error.hpp"

using namespace selfsim;
using selfsim::fx::Gen;

namespace {

class Example : public ::testing::Test {
 protected:
  ActionSystem sys = fx::example_system();
  Word W(const std::string& s) const { return sys.parse_word(s); }
  Path P(const std::string& s) const { return sys.parse_path(s); }
  EdgeId E(const std::string& s) const { return *sys.graph().find_edge(s); }
  std::string str(const Word& w) const { return sys.format(w); }
  std::string str(const Path& p) const { return sys.format(p); }
};

ErrorKind build_error(const std::vector<Gen>& gens) {
  try {
    fx::make_system({"u", "v", "w"}, fx::example_edges(), gens);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "build succeeded";
  return ErrorKind::ParseError;
}

}  // namespace

TEST_F(Example, DerivedInverseRows) {
  struct Expect {
    const char* letter;
    const char* edge;
    const char* image;
    const char* restriction;
  };
  const Expect rows[] = {
      {"a^-1", "e2", "e1", "u"},    {"a^-1", "e6", "e3", "b^-1"}, {"b^-1", "e5", "e2", "a^-1"},
      {"b^-1", "e4", "e6", "c^-1"}, {"c^-1", "e2", "e4", "a"},    {"c^-1", "e6", "e5", "b^-1"},
  };
  for (const auto& r : rows) {
    auto [img, res] = sys.act_restrict_edge(W(r.letter), E(r.edge));
    EXPECT_EQ(sys.graph().edge_name(img), r.image) << r.letter << " " << r.edge;
    EXPECT_EQ(str(res), r.restriction) << r.letter << " " << r.edge;
  }
}

TEST_F(Example, UnitsActTrivially) {
  for (EdgeId e = 0; e < 6; ++e) {
    auto unit = Word::unit(sys.graph().range(e));
    auto [img, res] = sys.act_restrict_edge(unit, e);
    EXPECT_EQ(img, e);
    EXPECT_EQ(res, Word::unit(sys.graph().source(e)));
  }
}

TEST(Build, IdentityOnlySystem) {
  EXPECT_NO_THROW(fx::trivial_system({"u", "v", "w"}, fx::example_edges()));
}

TEST(Build, Errors) {
  auto gens = fx::example_gens();
  gens[0].rows[1].image = "e2";
  EXPECT_EQ(build_error(gens), ErrorKind::NotBijectiveAtLevel1);

  gens = fx::example_gens();
  gens[0].rows.pop_back();
  EXPECT_EQ(build_error(gens), ErrorKind::NotBijectiveAtLevel1);

  gens = fx::example_gens();
  gens[0].rows[0].image = "e4";  // r(e4) = w, but t(a) = v
  EXPECT_EQ(build_error(gens), ErrorKind::RangeMismatch);

  gens = fx::example_gens();
  gens[0].rows[1].restriction = "c";  // d(c) = w != s(e3) = v
  EXPECT_EQ(build_error(gens), ErrorKind::RestrictionEndpointMismatch);
}

TEST(Build, InverseRowsVerified) {
  Graph g;
  auto x = g.add_vertex("x");
  auto f = g.add_edge("f", x, x);
  auto h = g.add_edge("h", x, x);
  Alphabet al;
  al.add({"s", x, x});
  auto sw = parse_word(g, al, "s");
  GeneratorTable t{0, {{f, {h, sw}}, {h, {f, Word::unit(x)}}}, {{h, {f, sw.inverse()}}}};
  EXPECT_NO_THROW(ActionSystem::build(g, al, {t}));
  t.inverse_moves = {{h, {f, sw}}};
  try {
    ActionSystem::build(g, al, {t});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InverseTableConflict);
  }
}

TEST_F(Example, WordComputations) {
  auto x = W("a^-1 c b a");
  EXPECT_EQ(str(P(sys.format(Path::single(sys.graph(), sys.act_edge(x, E("e1")))))), "e3");
  EXPECT_EQ(sys.act_edge(x, E("e3")), E("e1"));
  EXPECT_EQ(str(sys.restrict_edge(x, E("e1"))), "a");
  EXPECT_EQ(str(sys.restrict_edge(x, E("e3"))), "a^-1 c b");
  EXPECT_EQ(str(sys.restrict_path(x * x, P("e1"))), "a^-1 c b a");
  EXPECT_THROW(sys.act_edge(x, E("e2")), Error);
}

TEST_F(Example, ActPath) {
  EXPECT_EQ(str(sys.act_path(W("a"), P("e3 e2"))), "e6 e5");
  EXPECT_EQ(str(sys.act_path(W("u"), P("e1 e1"))), "e1 e1");
}

TEST_F(Example, IsUnit) {
  EXPECT_EQ(sys.is_unit(W("a a^-1")).verdict, Verdict::Yes);
  auto x = W("a^-1 c b a");
  auto r1 = sys.is_unit(x);
  ASSERT_EQ(r1.verdict, Verdict::No);
  EXPECT_EQ(str(r1.witness->input), "e1");
  EXPECT_EQ(str(r1.witness->output), "e3");
  auto r2 = sys.is_unit(x * x);
  ASSERT_EQ(r2.verdict, Verdict::No);
  EXPECT_EQ(str(r2.witness->input), "e1 e1");
  EXPECT_EQ(str(r2.witness->output), "e1 e3");
  for (std::size_t n = 1; n <= 8; ++n) {
    auto r = sys.is_unit(x.power(n));
    ASSERT_EQ(r.verdict, Verdict::No) << n;
    EXPECT_EQ(sys.act_path(x.power(n), r.witness->input), r.witness->output);
    EXPECT_NE(r.witness->input, r.witness->output);
  }
  auto mismatch = sys.is_unit(W("a"));
  EXPECT_EQ(mismatch.verdict, Verdict::No);
}

TEST_F(Example, IsUnitYesClosureFixesEdges) {
  // x^2 restricted along e1 e1 is x again; x x^-1 style products reduce away,
  // so build a nontrivial unit in the trivial system instead.
  auto triv = fx::make_system(
      {"x"}, {{"f", "x", "x"}, {"h", "x", "x"}},
      {{"s", "x", "x", {{"f", "f", "t"}, {"h", "h", "x"}}},
       {"t", "x", "x", {{"f", "f", "s"}, {"h", "h", "x"}}}});
  auto w = triv.parse_word("s t");
  auto r = triv.is_unit(w);
  ASSERT_EQ(r.verdict, Verdict::Yes);
  for (const auto& y : r.closure)
    for (EdgeId e : triv.graph().edges_into(y.domain())) EXPECT_EQ(triv.act_edge(y, e), e);
}

TEST_F(Example, BudgetGivesUnknown) {
  auto triv = fx::make_system(
      {"x"}, {{"f", "x", "x"}, {"h", "x", "x"}},
      {{"s", "x", "x", {{"f", "f", "s s"}, {"h", "h", "x"}}}});
  // s fixes level 1 and restricts to s^2, s^4, ...: the closure never ends.
  auto r = triv.is_unit(triv.parse_word("s"), Budget{50, 64});
  EXPECT_EQ(r.verdict, Verdict::Unknown);
}

TEST_F(Example, Equal) {
  EXPECT_EQ(equal(sys, W("a"), W("a")).verdict, Verdict::Yes);
  EXPECT_EQ(equal(sys, W("a^-1 c b a"), W("u")).verdict, Verdict::No);
  EXPECT_EQ(equal(sys, W("a"), W("b")).verdict, Verdict::No);
}

TEST_F(Example, PseudoFree) {
  auto r = pseudo_free_probe(sys, 4);
  EXPECT_FALSE(r.violation);
  EXPECT_TRUE(r.inconclusive.empty());
  auto triv = fx::trivial_system({"u", "v", "w"}, fx::example_edges());
  EXPECT_FALSE(pseudo_free_probe(triv, 6).violation);
}

TEST(PseudoFree, Violation) {
  auto sys = fx::make_system(
      {"x"}, {{"e", "x", "x"}, {"f", "x", "x"}, {"g", "x", "x"}},
      {{"y", "x", "x", {{"e", "e", "x"}, {"f", "g", "x"}, {"g", "f", "x"}}}});
  auto r = pseudo_free_probe(sys, 2);
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(sys.format(*r.word), "y");
  EXPECT_EQ(sys.graph().edge_name(*r.edge), "e");
}

TEST_F(Example, Orbits) {
  EXPECT_EQ(orbits(sys).size(), 1u);
  EXPECT_TRUE(is_transitive(sys));
  auto triv = fx::trivial_system({"u", "v", "w"}, fx::example_edges());
  EXPECT_EQ(orbits(triv), (std::vector<std::vector<VertexId>>{{0}, {1}, {2}}));
  auto gens = fx::example_gens();
  gens[0].rows = {{"e1", "e2", "u"}, {"e3", "e6", "v"}};
  gens.resize(1);
  // a|e3 must land in G^{w}_{v}; with only a available no such word exists,
  // so use the identity-only graph and check the union-find directly.
  auto only_a = fx::make_system(
      {"u", "v", "w"}, {{"e1", "u", "u"}, {"e2", "v", "u"}, {"e3", "w", "w"}},
      {{"a", "u", "v", {{"e1", "e2", "u"}}}});
  EXPECT_EQ(orbits(only_a), (std::vector<std::vector<VertexId>>{{0, 1}, {2}}));
  EXPECT_FALSE(is_transitive(only_a));
}

TEST_F(Example, Isotropy) {
  auto u = *sys.graph().find_vertex("u");
  auto rep = isotropy_probe(sys, u, 4, 8);
  bool found = false;
  for (const auto& ev : rep.nonunit_loops) {
    if (str(ev.word) == "a^-1 c b a") {
      found = true;
      EXPECT_EQ(ev.nonunit_powers, 8u);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(rep.unit_loops.empty());
  auto triv = fx::trivial_system({"u", "v", "w"}, fx::example_edges());
  EXPECT_TRUE(isotropy_probe(triv, 0, 4, 8).nonunit_loops.empty());
}

TEST_F(Example, Cocycle) {
  EXPECT_TRUE(validate_cocycle(sys, DegreeCocycle{{1, 1, 1}}, 6).ok);
  EXPECT_TRUE(validate_cocycle(sys, DegreeCocycle{{1, 0, 0}}, 6).ok);
  EXPECT_EQ(DegreeCocycle({1, 1, 1})(W("a^-1 c b a")), 2);

  auto swap2 = fx::make_system(
      {"x"}, {{"f", "x", "x"}, {"h", "x", "x"}},
      {{"s", "x", "x", {{"f", "h", "x"}, {"h", "f", "x"}}},
       {"t", "x", "x", {{"f", "h", "x"}, {"h", "f", "x"}}}});
  auto r = validate_cocycle(swap2, DegreeCocycle{{1, 0}}, 2);
  ASSERT_FALSE(r.ok);
  EXPECT_NE(DegreeCocycle({1, 0})(*r.conflict), 0);
  EXPECT_EQ(swap2.is_unit(*r.conflict).verdict, Verdict::Yes);
  std::vector<Word> xy{swap2.parse_word("s t")};
  auto only = validate_cocycle(swap2, DegreeCocycle{{1, 0}}, xy);
  ASSERT_FALSE(only.ok);
  EXPECT_EQ(swap2.format(*only.conflict), "s t");
}

TEST_F(Example, RkClasses) {
  auto k1 = rk_classes(sys, 1);
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0].size(), 6u);
  auto k2 = rk_classes(sys, 2);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0].size(), 12u);
  auto triv = fx::trivial_system({"u", "v", "w"}, fx::example_edges());
  auto t1 = rk_classes(triv, 1);
  ASSERT_EQ(t1.size(), 3u);
  for (const auto& cls : t1)
    for (const auto& p : cls) EXPECT_EQ(p.source(), cls.front().source());
}

TEST_F(Example, RestrictionIdentities) {
  fx::Rng rng(0x5e1f);
  const auto& g = sys.graph();
  for (int iter = 0; iter < 2000; ++iter) {
    auto w2 = fx::random_word(rng, sys, 5);
    auto w1 = fx::random_word_from(rng, sys.alphabet(), w2.terminus(), 5);
    auto mu = fx::random_path_from(rng, g, w2.domain(), fx::pick(rng, 4));
    auto nu = fx::random_path_from(rng, g, mu.source(), fx::pick(rng, 3));
    auto prod = w1 * w2;
    // (3)
    EXPECT_EQ(sys.act_path(prod, mu), sys.act_path(w1, sys.act_path(w2, mu)));
    auto lhs = sys.restrict_path(prod, mu);
    auto rhs = sys.restrict_path(w1, sys.act_path(w2, mu)) * sys.restrict_path(w2, mu);
    EXPECT_EQ(lhs, rhs);
    // (1)
    EXPECT_EQ(sys.restrict_path(w2, concat(mu, nu)),
              sys.restrict_path(sys.restrict_path(w2, mu), nu));
    // (2)
    EXPECT_EQ(sys.restrict_path(Word::unit(mu.range()), mu), Word::unit(mu.source()));
    // (4)
    auto inv = w2.inverse();
    auto back = sys.act_path(inv, sys.act_path(w2, mu));
    EXPECT_EQ(back, mu);
    EXPECT_EQ(sys.restrict_path(inv, sys.act_path(w2, mu)), sys.restrict_path(w2, mu).inverse());
    // endpoints
    auto img = sys.act_path(w2, mu);
    EXPECT_EQ(img.range(), w2.terminus());
    EXPECT_EQ(img.source(), sys.restrict_path(w2, mu).terminus());
  }
}

TEST_F(Example, ActPathBijective) {
  const auto& g = sys.graph();
  for (const auto& w : reduced_words_of_length(sys.alphabet(), 2)) {
    for (std::size_t k = 0; k <= 5; ++k) {
      std::set<Path> image;
      auto dom = paths_of_length(g, w.domain(), k);
      for (const auto& mu : dom) {
        auto img = sys.act_path(w, mu);
        EXPECT_EQ(img.length(), k);
        EXPECT_EQ(img.range(), w.terminus());
        image.insert(img);
      }
      EXPECT_EQ(image.size(), dom.size());
      EXPECT_EQ(image.size(), paths_of_length(g, w.terminus(), k).size());
    }
  }
}

TEST_F(Example, ConcurrentUse) {
  auto x = W("a^-1 c b a");
  std::vector<std::thread> threads;
  std::vector<Verdict> out(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { out[t] = sys.is_unit(x.power(t + 3)).verdict; });
  for (auto& th : threads) th.join();
  for (auto v : out) EXPECT_EQ(v, Verdict::No);
}
