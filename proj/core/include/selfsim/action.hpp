#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "selfsim/graph.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

// g·e and g|_e for a single letter g and edge e.
struct Move {
  EdgeId image = 0;
  Word restriction;
};

struct GeneratorTable {
  GenId gen = 0;
  std::vector<std::pair<EdgeId, Move>> moves;
  // Optional explicit rows for g^-1; checked against the derived ones.
  std::vector<std::pair<EdgeId, Move>> inverse_moves;
};

struct Budget {
  std::size_t max_seen = 10000;
  std::size_t max_length = 64;

  // Defaults overridden by ISUNIT_MAX_SEEN / ISUNIT_MAX_LEN when set.
  static Budget from_env();
};

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v) noexcept;

// A finite path moved by the word: w·input = output != input.
struct UnitWitness {
  Path input;
  Path output;
};

struct UnitCheck {
  Verdict verdict = Verdict::Unknown;
  std::optional<UnitWitness> witness;
  std::string reason;
  // For Yes: the restriction-closed set of words that fix every edge.
  std::vector<Word> closure;
  std::size_t explored = 0;
};

// Graph plus generator tables with derived inverse tables. Immutable apart
// from internal memo caches, which are guarded and safe to share.
class ActionSystem {
 public:
  // Throws NotBijectiveAtLevel1, RangeMismatch, RestrictionEndpointMismatch,
  // InverseTableConflict, NotInDomain, or the graph validation errors.
  static ActionSystem build(Graph graph, Alphabet alphabet, std::vector<GeneratorTable> tables);

  ActionSystem(ActionSystem&&) noexcept;
  ActionSystem& operator=(ActionSystem&&) noexcept;
  ~ActionSystem();

  const Graph& graph() const noexcept { return graph_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  // Single-letter table lookup (derived rows for inverse letters).
  const Move& move(Letter l, EdgeId e) const;

  std::pair<EdgeId, Word> act_restrict_edge(const Word& w, EdgeId e) const;
  EdgeId act_edge(const Word& w, EdgeId e) const { return act_restrict_edge(w, e).first; }
  Word restrict_edge(const Word& w, EdgeId e) const { return act_restrict_edge(w, e).second; }

  std::pair<Path, Word> act_restrict_path(const Word& w, const Path& mu) const;
  Path act_path(const Word& w, const Path& mu) const { return act_restrict_path(w, mu).first; }
  Word restrict_path(const Word& w, const Path& mu) const { return act_restrict_path(w, mu).second; }

  UnitCheck is_unit(const Word& w, Budget budget = {}) const;

  std::string format(const Word& w) const { return format_word(graph_, alphabet_, w); }
  std::string format(const Path& p) const { return format_path(graph_, p); }
  Word parse_word(const std::string& text) const {
    return selfsim::parse_word(graph_, alphabet_, text);
  }
  Path parse_path(const std::string& text) const { return selfsim::parse_path(graph_, text); }

  // The tables as given (one per generator, ascending edge).
  const std::vector<GeneratorTable>& tables() const noexcept { return tables_; }

 private:
  struct Cache;

  ActionSystem(Graph graph, Alphabet alphabet);

  Graph graph_;
  Alphabet alphabet_;
  std::vector<GeneratorTable> tables_;
  // Indexed by Letter::index(), then edge id.
  std::vector<std::vector<std::optional<Move>>> rows_;
  std::unique_ptr<Cache> cache_;
};

inline UnitCheck is_unit(const ActionSystem& sys, const Word& w, Budget budget = {}) {
  return sys.is_unit(w, budget);
}

// No when endpoints differ, otherwise is_unit(w1 w2^-1).
UnitCheck equal(const ActionSystem& sys, const Word& w1, const Word& w2, Budget budget = {});

// Every reduced loop word of length 1..max_length, optionally at one vertex.
std::vector<Word> loop_words(const ActionSystem& sys, std::size_t max_length,
                             std::optional<VertexId> at = std::nullopt);

struct PseudoFreeResult {
  std::size_t bound = 0;
  bool violation = false;
  std::optional<Word> word;
  std::optional<EdgeId> edge;
  // Words where some is_unit call came back Unknown.
  std::vector<Word> inconclusive;
};

PseudoFreeResult pseudo_free_probe(const ActionSystem& sys, std::size_t length_bound,
                                   Budget budget = {});

// Vertex orbits under t(g) ~ d(g). Each orbit ascending; orbits ordered by
// their smallest vertex.
std::vector<std::vector<VertexId>> orbits(const ActionSystem& sys);
bool is_transitive(const ActionSystem& sys);

struct LoopEvidence {
  Word word;
  // Largest n <= power_bound with w^k certified non-unit for all 1 <= k <= n.
  std::size_t nonunit_powers = 0;
};

struct IsotropyReport {
  VertexId vertex = 0;
  std::size_t examined = 0;
  std::vector<LoopEvidence> nonunit_loops;
  // Reduced but nonempty loops certified to act trivially.
  std::vector<Word> unit_loops;
  std::vector<Word> inconclusive;
};

IsotropyReport isotropy_probe(const ActionSystem& sys, VertexId v, std::size_t length_bound,
                              std::size_t power_bound, Budget budget = {});

// Integer degree per generator, extended additively to words.
struct DegreeCocycle {
  std::vector<std::int64_t> degree;

  std::int64_t operator()(const Word& w) const;
};

struct CocycleCheck {
  bool ok = true;
  std::optional<Word> conflict;
  std::size_t checked = 0;
  std::size_t inconclusive = 0;
};

// For each sample certified to be a unit, require degree 0.
CocycleCheck validate_cocycle(const ActionSystem& sys, const DegreeCocycle& c,
                              std::span<const Word> samples, Budget budget = {});
CocycleCheck validate_cocycle(const ActionSystem& sys, const DegreeCocycle& c,
                              std::size_t sample_length, Budget budget = {});

// E^k partitioned by the orbit of the source vertex.
std::vector<std::vector<Path>> rk_classes(const ActionSystem& sys, std::size_t k);

}  // namespace selfsim
