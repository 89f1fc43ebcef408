#include "selfsim/homol.hpp"

#include "selfsim/error.hpp"
#include "selfsim/kthy.hpp"

namespace selfsim {

std::pair<AbGroup, AbGroup> h_of_Hk(const PipelineAssumptions& a) {
  require_assumptions(a);
  return {AbGroup::free(1), AbGroup::free(1)};
}

std::vector<Bisection> j_map(const ActionSystem& sys, const Bisection& b) {
  const Graph& g = sys.graph();
  std::vector<Bisection> out;
  for (EdgeId x : g.edges_into(b.w.domain())) {
    auto [y, res] = sys.act_restrict_edge(b.w, x);
    Bisection t{b.alpha, std::move(res), b.beta};
    t.alpha.push_back(g, y);
    t.beta.push_back(g, x);
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t inclusion_multiplier(const ActionSystem& sys) {
  std::size_t D = level_multiplicity(sys);
  for (VertexId v = 0; v < sys.graph().num_vertices(); ++v)
    if (j_map(sys, std_bisection_vertex(v)).size() != D)
      throw Error(ErrorKind::NonconstantInDegree, "inclusion multiplier differs at " + sys.graph().vertex_name(v));
  return D;
}

std::pair<AbGroup, AbGroup> h_of_H(const ActionSystem& sys) {
  Integer D = inclusion_multiplier(sys);
  return {colimit_const_Z(D), colimit_const_Z(D)};
}

namespace {

// Eventually periodic points in Z(x) with |cycle| <= depth.
std::vector<EvPath> points_in(const Graph& g, EdgeId x, std::size_t depth) {
  std::vector<EvPath> out;
  Path head = Path::single(g, x);
  for (std::size_t k = 1; k <= depth; ++k)
    for (auto& c : paths_of_length(g, head.source(), k))
      if (c.source() == c.range()) out.push_back(EvPath{head, c});
  return out;
}

// U^-1 U is the unit at every sample of Z(x), U U^-1 the unit at its image,
// and U hits Z(v).
bool verify(const ActionSystem& sys, const Bisection& U, const std::vector<EvPath>& pts,
            const PeriodicityBudget& budget) {
  const Graph& g = sys.graph();
  for (const auto& xi : pts) {
    auto germ = germ_at(g, U, xi);
    if (!germ) return false;
    Germ inv = invert(sys, *germ, budget);
    if (inv.xi.range() != U.alpha.range()) return false;
    if (germ_equal(sys, compose(sys, inv, *germ, budget), unit_germ(xi)) != Verdict::Yes) return false;
    if (germ_equal(sys, compose(sys, *germ, inv, budget), unit_germ(inv.xi)) != Verdict::Yes) return false;
    if (rho(*germ) != rho(U)) return false;
  }
  return true;
}

}  // namespace

RhoStar rho_star(const ActionSystem& sys, ConjugatorSearch search) {
  const Graph& g = sys.graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (EdgeId x : g.edges_into(v)) {
      VertexId s = g.source(x);
      std::vector<Word> candidates;
      if (s == v) candidates.push_back(Word::unit(v));
      for (std::size_t n = 1; n <= search.max_word_length; ++n)
        for (auto& w : reduced_words_of_length(sys.alphabet(), n))
          if (w.domain() == s && w.terminus() == v) candidates.push_back(std::move(w));
      for (const auto& w : candidates) {
        Bisection U{Path::empty(v), w, Path::single(g, x)};
        auto pts = points_in(g, x, search.depth);
        if (pts.empty() || !verify(sys, U, pts, search.budget)) continue;
        RhoStar r;
        std::size_t D = level_multiplicity(sys);
        r.multiplier = LocMult(1, D, D);
        r.conjugator = Conjugator{v, x, w, U, rho(U), pts.size()};
        return r;
      }
    }
  }
  throw Error(ErrorKind::NoUnitConjugatorFound,
              "no word g with t(g) = v and d(g) = s(x) up to length " + std::to_string(search.max_word_length));
}

LesResult les_solve(const AbGroup& h0, const AbGroup& h1, const LocMult& rho) {
  if (h0 != rho.group() || h1 != rho.group())
    throw Error(ErrorKind::DimensionMismatch, "inputs are not the group rho acts on");
  auto [ker, coker] = ker_coker(LocMult::identity(rho.base()) - rho);
  LesResult r;
  r.h0 = coker;
  r.h2 = ker;
  r.h1.sub = coker;
  r.h1.quotient = ker;
  if (coker.is_zero()) {
    r.h1.resolved = ker;
    r.h1.how = "sub is 0";
  } else if (ker.is_zero()) {
    r.h1.resolved = coker;
    r.h1.how = "quotient is 0";
  } else if (ker.localized_factors().empty() && ker.torsion().empty()) {
    r.h1.resolved = coker + ker;
    r.h1.how = "quotient is free, the sequence splits";
  } else if (coker.torsion().empty() && coker.free_rank() == 0 && ker.free_rank() == 0 &&
             ker.torsion().empty() && ker.localized_factors() == coker.localized_factors()) {
    // Z[1/D] is uniquely D-divisible, so Ext(Z[1/D], Z[1/D]) = 0.
    r.h1.resolved = coker + ker;
    r.h1.how = "sub is uniquely divisible by the primes of the quotient, the sequence splits";
  } else {
    r.h1.how = "extension not determined";
  }
  if (r.h1.resolved)
    r.rank_audit = r.h2.rank() + r.h0.rank() == r.h1.resolved->rank();
  return r;
}

const AbGroup& h1_or_throw(const LesResult& r) {
  if (!r.h1.resolved)
    throw Error(ErrorKind::UnresolvedExtension,
                "0 -> " + r.h1.sub.to_string() + " -> H1 -> " + r.h1.quotient.to_string() + " -> 0");
  return *r.h1.resolved;
}

HomologyReport homology_pipeline(const ActionSystem& sys, const DegreeCocycle& c, ProbeSettings settings,
                                 ConjugatorSearch search) {
  HomologyReport r;
  r.assumptions = assess_assumptions(sys, c, settings);
  r.h_Hk = h_of_Hk(r.assumptions);
  r.inclusion = inclusion_multiplier(sys);
  r.h_H = h_of_H(sys);
  r.rho = rho_star(sys, search);
  r.les = les_solve(r.h_H.first, r.h_H.second, r.rho.multiplier);
  return r;
}

}  // namespace selfsim
