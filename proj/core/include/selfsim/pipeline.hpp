#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/germ.hpp"

namespace selfsim {

// A loop word that fixes an eventually periodic point.
struct FixedPointWitness {
  Word word;
  EvPath point;
};

struct FreeOnPathsResult {
  std::size_t word_bound = 0;
  std::size_t depth = 0;
  std::size_t points = 0;
  std::size_t words = 0;
  std::optional<FixedPointWitness> violation;
  // Pairs where the restriction chain neither repeated nor moved an edge
  // within the step limit.
  std::size_t inconclusive = 0;
};

// Follows every certified non-unit loop word of length <= word_bound along
// the points prefix·cycle^inf with |prefix| <= 1 and 1 <= |cycle| <= depth.
FreeOnPathsResult free_on_paths_probe(const ActionSystem& sys, std::size_t word_bound,
                                      std::size_t depth, Budget budget = {});

struct ProbeSettings {
  std::size_t pseudo_free_bound = 4;
  std::size_t cocycle_sample_length = 4;
  std::size_t isotropy_length = 4;
  std::size_t free_word_bound = 4;
  std::size_t depth = 4;
  Budget budget = {};
};

struct AssumptionFlag {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Which hypotheses of the K-theory and homology pipelines hold, and under
// which budgets they were probed.
struct PipelineAssumptions {
  AssumptionFlag transitive;
  AssumptionFlag pseudo_free;
  AssumptionFlag cocycle;
  AssumptionFlag free_on_paths;
  ProbeSettings settings;

  std::vector<const AssumptionFlag*> flags() const {
    return {&transitive, &pseudo_free, &cocycle, &free_on_paths};
  }
  bool all_pass() const;
};

// The cocycle flag needs validate_cocycle to pass and every certified
// non-unit isotropy loop at the first vertex to have nonzero degree (with at
// least one such loop found).
PipelineAssumptions assess_assumptions(const ActionSystem& sys, const DegreeCocycle& c,
                                       ProbeSettings settings = {});

// Throws NotTransitive or AssumptionFailed naming the first failed flag.
void require_assumptions(const PipelineAssumptions& a);

std::string format_assumptions(const PipelineAssumptions& a);

}  // namespace selfsim
