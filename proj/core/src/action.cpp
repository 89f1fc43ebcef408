#include "selfsim/action.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "selfsim/error.hpp"
#include "selfsim/hash.hpp"

namespace selfsim {

namespace {

struct WordEdge {
  Word word;
  EdgeId edge;
  bool operator==(const WordEdge&) const = default;
};

struct WordEdgeHash {
  std::size_t operator()(const WordEdge& k) const noexcept {
    return hash_combine(k.word.hash(), k.edge);
  }
};

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  b.max_seen = env_or("ISUNIT_MAX_SEEN", b.max_seen);
  b.max_length = env_or("ISUNIT_MAX_LEN", b.max_length);
  return b;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

struct ActionSystem::Cache {
  std::shared_mutex mutex;
  std::unordered_map<WordEdge, std::pair<EdgeId, Word>, WordEdgeHash> edge;
  std::mutex unit_mutex;
  std::unordered_map<Word, UnitCheck> unit;
};

ActionSystem::ActionSystem(Graph graph, Alphabet alphabet)
    : graph_(std::move(graph)), alphabet_(std::move(alphabet)), cache_(std::make_unique<Cache>()) {}

ActionSystem::ActionSystem(ActionSystem&&) noexcept = default;
ActionSystem& ActionSystem::operator=(ActionSystem&&) noexcept = default;
ActionSystem::~ActionSystem() = default;

ActionSystem ActionSystem::build(Graph graph, Alphabet alphabet,
                                 std::vector<GeneratorTable> tables) {
  require_valid(graph);
  for (GenId g = 0; g < alphabet.size(); ++g) {
    const auto& sig = alphabet[g];
    if (!graph.has_vertex(sig.domain) || !graph.has_vertex(sig.terminus))
      throw Error(ErrorKind::UnknownVertex, "endpoints of generator " + sig.name);
  }

  ActionSystem sys(std::move(graph), std::move(alphabet));
  const Graph& gr = sys.graph_;
  const Alphabet& al = sys.alphabet_;
  sys.rows_.assign(2 * al.size(), std::vector<std::optional<Move>>(gr.num_edges()));

  std::vector<bool> seen_gen(al.size(), false);
  for (const auto& table : tables) {
    if (table.gen >= al.size())
      throw Error(ErrorKind::UnknownGenerator, "generator id " + std::to_string(table.gen));
    if (seen_gen[table.gen])
      throw Error(ErrorKind::DuplicateIdentifier, "second table for " + al[table.gen].name);
    seen_gen[table.gen] = true;
  }
  std::vector<GeneratorTable> by_gen(al.size());
  for (GenId g = 0; g < al.size(); ++g) by_gen[g].gen = g;
  for (auto& table : tables) by_gen[table.gen] = std::move(table);

  for (GenId g = 0; g < al.size(); ++g) {
    auto& table = by_gen[g];
    const auto& sig = al[g];
    const std::string& gname = sig.name;
    auto& fwd = sys.rows_[Letter{g, false}.index()];
    auto& inv = sys.rows_[Letter{g, true}.index()];

    for (const auto& [e, mv] : table.moves) {
      if (!gr.has_edge(e) || !gr.has_edge(mv.image))
        throw Error(ErrorKind::UnknownEdge, "in table of " + gname);
      const std::string where = gname + ", " + gr.edge_name(e);
      if (gr.range(e) != sig.domain)
        throw Error(ErrorKind::NotInDomain, where + ": r(e) is not d(g)");
      if (gr.range(mv.image) != sig.terminus) throw Error(ErrorKind::RangeMismatch, where);
      if (fwd[e]) throw Error(ErrorKind::DuplicateIdentifier, where + ": row given twice");
      fwd[e] = mv;
    }

    // Level-1 bijectivity d(g)E^1 -> t(g)E^1.
    auto dom = gr.edges_into(sig.domain);
    auto cod = gr.edges_into(sig.terminus);
    if (dom.size() != cod.size())
      throw Error(ErrorKind::NotBijectiveAtLevel1,
                  gname + ": |d(g)E^1| != |t(g)E^1|");
    for (EdgeId e : dom) {
      if (!fwd[e])
        throw Error(ErrorKind::NotBijectiveAtLevel1, gname + ": no row for " + gr.edge_name(e));
      EdgeId img = fwd[e]->image;
      if (inv[img])
        throw Error(ErrorKind::NotBijectiveAtLevel1,
                    gname + ": two edges map to " + gr.edge_name(img));
      inv[img] = Move{e, fwd[e]->restriction.inverse()};
    }
    for (EdgeId e : dom) {
      const Word& r = fwd[e]->restriction;
      if (r.domain() != gr.source(e) || r.terminus() != gr.source(fwd[e]->image))
        throw Error(ErrorKind::RestrictionEndpointMismatch, gname + ", " + gr.edge_name(e));
    }

    for (const auto& [e, mv] : table.inverse_moves) {
      if (!gr.has_edge(e) || !inv[e] || inv[e]->image != mv.image ||
          inv[e]->restriction != mv.restriction)
        throw Error(ErrorKind::InverseTableConflict,
                    gname + ", " + (gr.has_edge(e) ? gr.edge_name(e) : std::string("?")));
    }
  }
  sys.tables_ = std::move(by_gen);
  return sys;
}

const Move& ActionSystem::move(Letter l, EdgeId e) const {
  if (l.index() >= rows_.size() || e >= graph_.num_edges() || !rows_[l.index()][e])
    throw Error(ErrorKind::NotInDomain, "letter has no row for edge");
  return *rows_[l.index()][e];
}

std::pair<EdgeId, Word> ActionSystem::act_restrict_edge(const Word& w, EdgeId e) const {
  if (!graph_.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e));
  if (w.domain() != graph_.range(e))
    throw Error(ErrorKind::NotInDomain,
                "d(w) != r(" + graph_.edge_name(e) + ")");
  if (w.is_unit()) return {e, Word::unit(graph_.source(e))};
  if (w.length() == 1) {
    const Move& m = move(w.letters()[0], e);
    return {m.image, m.restriction};
  }

  WordEdge key{w, e};
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->edge.find(key);
    if (it != cache_->edge.end()) return it->second;
  }

  // (hg)|_e = h|_{g·e} g|_e, applied letter by letter from the right.
  EdgeId cur = e;
  Word res = Word::unit(graph_.source(e));
  auto letters = w.letters();
  for (std::size_t i = letters.size(); i-- > 0;) {
    const Move& m = move(letters[i], cur);
    res = m.restriction * res;
    cur = m.image;
  }
  std::pair<EdgeId, Word> out{cur, std::move(res)};
  {
    std::unique_lock lock(cache_->mutex);
    cache_->edge.emplace(std::move(key), out);
  }
  return out;
}

std::pair<Path, Word> ActionSystem::act_restrict_path(const Word& w, const Path& mu) const {
  if (w.domain() != mu.range()) throw Error(ErrorKind::NotInDomain, "d(w) != r(mu)");
  if (mu.is_empty()) return {Path::empty(w.terminus()), w};
  Word cur = w;
  Path out = Path::empty(w.terminus());
  for (EdgeId e : mu.edges()) {
    auto [img, res] = act_restrict_edge(cur, e);
    out.push_back(graph_, img);
    cur = std::move(res);
  }
  return {std::move(out), std::move(cur)};
}

UnitCheck ActionSystem::is_unit(const Word& w, Budget budget) const {
  UnitCheck result;
  if (w.domain() != w.terminus()) {
    result.verdict = Verdict::No;
    result.reason = "d(w) != t(w)";
    result.witness = UnitWitness{Path::empty(w.domain()), Path::empty(w.terminus())};
    return result;
  }
  if (w.is_unit()) {
    result.verdict = Verdict::Yes;
    result.reason = "reduces to a unit";
    result.closure = {w};
    result.explored = 1;
    return result;
  }
  {
    std::lock_guard lock(cache_->unit_mutex);
    auto it = cache_->unit.find(w);
    if (it != cache_->unit.end()) return it->second;
  }

  struct Node {
    Word word;
    std::size_t parent;
    EdgeId via;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{w, kRoot, 0}};
  std::unordered_map<Word, std::size_t> seen{{w, 0}};
  bool incomplete = false;

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Word x = nodes[i].word;
    std::vector<Word> children;
    for (EdgeId e : graph_.edges_into(x.domain())) {
      auto [img, res] = act_restrict_edge(x, e);
      if (img != e) {
        std::vector<EdgeId> chain{e};
        for (std::size_t j = i; nodes[j].parent != kRoot; j = nodes[j].parent)
          chain.push_back(nodes[j].via);
        std::reverse(chain.begin(), chain.end());
        Path input = Path::from_edges(graph_, std::move(chain));
        Path output = act_path(w, input);
        result.verdict = Verdict::No;
        result.reason = "moves a finite path";
        result.witness = UnitWitness{std::move(input), std::move(output)};
        result.explored = nodes.size();
        std::lock_guard lock(cache_->unit_mutex);
        cache_->unit.emplace(w, result);
        return result;
      }
      if (res.is_unit() || seen.count(res)) continue;
      if (res.length() > budget.max_length || nodes.size() >= budget.max_seen) {
        incomplete = true;
        continue;
      }
      seen.emplace(res, nodes.size());
      nodes.push_back({std::move(res), i, e});
    }
  }

  result.explored = nodes.size();
  if (incomplete) {
    result.verdict = Verdict::Unknown;
    result.reason = "budget exceeded";
    return result;
  }
  result.verdict = Verdict::Yes;
  result.reason = "restriction closure fixes every edge";
  result.closure.reserve(nodes.size());
  for (auto& n : nodes) result.closure.push_back(std::move(n.word));
  std::lock_guard lock(cache_->unit_mutex);
  cache_->unit.emplace(w, result);
  return result;
}

UnitCheck equal(const ActionSystem& sys, const Word& w1, const Word& w2, Budget budget) {
  if (w1.domain() != w2.domain() || w1.terminus() != w2.terminus()) {
    UnitCheck r;
    r.verdict = Verdict::No;
    r.reason = "endpoints differ";
    return r;
  }
  return sys.is_unit(w1 * w2.inverse(), budget);
}

std::vector<Word> loop_words(const ActionSystem& sys, std::size_t max_length,
                             std::optional<VertexId> at) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    for (auto& w : reduced_words_of_length(sys.alphabet(), n)) {
      if (!w.is_loop()) continue;
      if (at && w.domain() != *at) continue;
      out.push_back(std::move(w));
    }
  }
  return out;
}

PseudoFreeResult pseudo_free_probe(const ActionSystem& sys, std::size_t length_bound,
                                   Budget budget) {
  PseudoFreeResult result;
  result.bound = length_bound;
  // w·e = e forces r(e) = d(w) = t(w), so only loops can violate.
  for (const auto& w : loop_words(sys, length_bound)) {
    bool flagged = false;
    for (EdgeId e : sys.graph().edges_into(w.domain())) {
      auto [img, res] = sys.act_restrict_edge(w, e);
      if (img != e) continue;
      auto res_unit = sys.is_unit(res, budget);
      if (res_unit.verdict == Verdict::Unknown) {
        flagged = true;
        continue;
      }
      if (res_unit.verdict == Verdict::No) continue;
      auto w_unit = sys.is_unit(w, budget);
      if (w_unit.verdict == Verdict::Unknown) {
        flagged = true;
        continue;
      }
      if (w_unit.verdict == Verdict::No) {
        result.violation = true;
        result.word = w;
        result.edge = e;
        return result;
      }
    }
    if (flagged) result.inconclusive.push_back(w);
  }
  return result;
}

std::vector<std::vector<VertexId>> orbits(const ActionSystem& sys) {
  const std::size_t n = sys.graph().num_vertices();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (GenId g = 0; g < sys.alphabet().size(); ++g) {
    VertexId a = find(sys.alphabet()[g].domain), b = find(sys.alphabet()[g].terminus);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (VertexId v = 0; v < n; ++v) {
    VertexId root = find(v);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

bool is_transitive(const ActionSystem& sys) { return orbits(sys).size() == 1; }

IsotropyReport isotropy_probe(const ActionSystem& sys, VertexId v, std::size_t length_bound,
                              std::size_t power_bound, Budget budget) {
  if (!sys.graph().has_vertex(v))
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
  IsotropyReport report;
  report.vertex = v;
  for (const auto& w : loop_words(sys, length_bound, v)) {
    ++report.examined;
    auto check = sys.is_unit(w, budget);
    if (check.verdict == Verdict::Yes) {
      report.unit_loops.push_back(w);
      continue;
    }
    if (check.verdict == Verdict::Unknown) {
      report.inconclusive.push_back(w);
      continue;
    }
    LoopEvidence ev{w, 1};
    Word power = w;
    for (std::size_t k = 2; k <= power_bound; ++k) {
      power = power * w;
      if (sys.is_unit(power, budget).verdict != Verdict::No) break;
      ev.nonunit_powers = k;
    }
    report.nonunit_loops.push_back(std::move(ev));
  }
  return report;
}

std::int64_t DegreeCocycle::operator()(const Word& w) const {
  std::int64_t total = 0;
  for (const auto& l : w.letters()) {
    std::int64_t d = l.gen < degree.size() ? degree[l.gen] : 0;
    total += l.inverse ? -d : d;
  }
  return total;
}

CocycleCheck validate_cocycle(const ActionSystem& sys, const DegreeCocycle& c,
                              std::span<const Word> samples, Budget budget) {
  CocycleCheck result;
  for (const auto& w : samples) {
    ++result.checked;
    auto check = sys.is_unit(w, budget);
    if (check.verdict == Verdict::Unknown) {
      ++result.inconclusive;
      continue;
    }
    if (check.verdict == Verdict::Yes && c(w) != 0) {
      result.ok = false;
      result.conflict = w;
      return result;
    }
  }
  return result;
}

CocycleCheck validate_cocycle(const ActionSystem& sys, const DegreeCocycle& c,
                              std::size_t sample_length, Budget budget) {
  auto samples = loop_words(sys, sample_length);
  return validate_cocycle(sys, c, samples, budget);
}

std::vector<std::vector<Path>> rk_classes(const ActionSystem& sys, std::size_t k) {
  auto orbs = orbits(sys);
  std::vector<std::size_t> orbit_of(sys.graph().num_vertices());
  for (std::size_t i = 0; i < orbs.size(); ++i)
    for (VertexId v : orbs[i]) orbit_of[v] = i;
  std::vector<std::vector<Path>> classes(orbs.size());
  for (auto& p : all_paths_of_length(sys.graph(), k))
    classes[orbit_of[p.source()]].push_back(std::move(p));
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

}  // namespace selfsim
