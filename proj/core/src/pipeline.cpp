#include "selfsim/pipeline.hpp"

#include <map>

#include "selfsim/error.hpp"

namespace selfsim {

namespace {

std::vector<EvPath> sample_points(const Graph& g, VertexId v, std::size_t depth) {
  std::vector<EvPath> out;
  std::vector<Path> prefixes{Path::empty(v)};
  for (auto& p : paths_of_length(g, v, 1)) prefixes.push_back(p);
  for (const auto& pre : prefixes)
    for (std::size_t k = 1; k <= depth; ++k)
      for (auto& c : paths_of_length(g, pre.source(), k))
        if (c.source() == c.range()) out.push_back(EvPath{pre, c});
  return out;
}

// Does w fix the point? nullopt when undecided within the step limit.
std::optional<bool> fixes(const ActionSystem& sys, const Word& w, const EvPath& xi, std::size_t limit) {
  Word h = w;
  const std::size_t p = xi.prefix.length(), c = xi.cycle.length();
  std::map<std::pair<Word, std::size_t>, bool> seen;
  for (std::size_t i = 0; i < limit; ++i) {
    if (h.is_unit()) return true;
    if (i >= p) {
      auto key = std::make_pair(h, (i - p) % c);
      if (!seen.emplace(key, true).second) return true;
    }
    EdgeId e = i < p ? xi.prefix[i] : xi.cycle[(i - p) % c];
    auto [img, res] = sys.act_restrict_edge(h, e);
    if (img != e) return false;
    h = std::move(res);
  }
  return std::nullopt;
}

}  // namespace

FreeOnPathsResult free_on_paths_probe(const ActionSystem& sys, std::size_t word_bound,
                                      std::size_t depth, Budget budget) {
  FreeOnPathsResult result;
  result.word_bound = word_bound;
  result.depth = depth;
  const Graph& g = sys.graph();
  std::vector<std::vector<EvPath>> points(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    points[v] = sample_points(g, v, depth);
    result.points += points[v].size();
  }
  const std::size_t limit = 64 * (depth + 1);
  for (const auto& w : loop_words(sys, word_bound)) {
    if (sys.is_unit(w, budget).verdict != Verdict::No) continue;
    ++result.words;
    for (const auto& xi : points[w.domain()]) {
      auto f = fixes(sys, w, xi, limit);
      if (!f) {
        ++result.inconclusive;
      } else if (*f) {
        result.violation = FixedPointWitness{w, xi};
        return result;
      }
    }
  }
  return result;
}

bool PipelineAssumptions::all_pass() const {
  for (const auto* f : flags())
    if (!f->pass) return false;
  return true;
}

PipelineAssumptions assess_assumptions(const ActionSystem& sys, const DegreeCocycle& c,
                                       ProbeSettings settings) {
  PipelineAssumptions a;
  a.settings = settings;
  const Graph& g = sys.graph();

  auto orbs = orbits(sys);
  a.transitive = {"transitive", orbs.size() == 1,
                  std::to_string(orbs.size()) + " vertex orbit" + (orbs.size() == 1 ? "" : "s")};

  auto pf = pseudo_free_probe(sys, settings.pseudo_free_bound, settings.budget);
  a.pseudo_free.name = "pseudo-free";
  a.pseudo_free.pass = !pf.violation && pf.inconclusive.empty();
  if (pf.violation)
    a.pseudo_free.detail = sys.format(*pf.word) + " fixes " + g.edge_name(*pf.edge) + " with unit restriction";
  else
    a.pseudo_free.detail = "no violation up to word length " + std::to_string(pf.bound) +
                           (pf.inconclusive.empty() ? "" : ", " + std::to_string(pf.inconclusive.size()) + " inconclusive");

  a.cocycle.name = "cocycle";
  auto cc = validate_cocycle(sys, c, settings.cocycle_sample_length, settings.budget);
  if (!cc.ok) {
    a.cocycle.detail = "unit word " + sys.format(*cc.conflict) + " has degree " + std::to_string(c(*cc.conflict));
  } else if (g.num_vertices() == 0) {
    a.cocycle.detail = "empty graph";
  } else {
    auto iso = isotropy_probe(sys, 0, settings.isotropy_length, 1, settings.budget);
    const Word* zero = nullptr;
    for (const auto& ev : iso.nonunit_loops)
      if (c(ev.word) == 0) {
        zero = &ev.word;
        break;
      }
    if (iso.nonunit_loops.empty())
      a.cocycle.detail = "no non-unit isotropy loop at " + g.vertex_name(0) + " up to length " +
                         std::to_string(settings.isotropy_length);
    else if (zero)
      a.cocycle.detail = "non-unit isotropy loop " + sys.format(*zero) + " has degree 0";
    else {
      a.cocycle.pass = true;
      a.cocycle.detail = std::to_string(cc.checked) + " loop words checked; " +
                         std::to_string(iso.nonunit_loops.size()) + " isotropy loops of nonzero degree";
    }
  }

  auto fp = free_on_paths_probe(sys, settings.free_word_bound, settings.depth, settings.budget);
  a.free_on_paths.name = "free-on-paths";
  a.free_on_paths.pass = !fp.violation && fp.inconclusive == 0;
  if (fp.violation)
    a.free_on_paths.detail = sys.format(fp.violation->word) + " fixes " + format_evpath(g, fp.violation->point);
  else
    a.free_on_paths.detail = std::to_string(fp.words) + " loop words on " + std::to_string(fp.points) +
                             " points, depth " + std::to_string(fp.depth) +
                             (fp.inconclusive ? ", " + std::to_string(fp.inconclusive) + " inconclusive" : "");
  return a;
}

void require_assumptions(const PipelineAssumptions& a) {
  if (!a.transitive.pass) throw Error(ErrorKind::NotTransitive, a.transitive.detail);
  for (const auto* f : a.flags())
    if (!f->pass) throw Error(ErrorKind::AssumptionFailed, f->name + ": " + f->detail);
}

std::string format_assumptions(const PipelineAssumptions& a) {
  std::string out;
  for (const auto* f : a.flags())
    out += (f->pass ? "  [pass] " : "  [FAIL] ") + f->name + ": " + f->detail + "\n";
  const auto& s = a.settings;
  out += "  budgets: max_seen=" + std::to_string(s.budget.max_seen) +
         " max_length=" + std::to_string(s.budget.max_length) +
         " depth=" + std::to_string(s.depth) + "\n";
  return out;
}

}  // namespace selfsim
