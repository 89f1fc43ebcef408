#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "selfsim/action.hpp"

namespace selfsim {

// The eventually periodic infinite path prefix·cycle·cycle·...
struct EvPath {
  Path prefix;
  Path cycle;  // nonempty loop with r(cycle) = s(prefix)

  // Throws NotComposable when the pieces do not fit.
  static EvPath make(Path prefix, Path cycle);

  VertexId range() const noexcept { return prefix.is_empty() ? cycle.range() : prefix.range(); }

  friend bool operator==(const EvPath&, const EvPath&) = default;
};

// The first n edges.
Path ev_prefix(const Graph& g, const EvPath& xi, std::size_t n);
// Equality of the infinite paths.
bool ev_equal(const Graph& g, const EvPath& a, const EvPath& b);
// The tail after n edges.
EvPath ev_drop(const Graph& g, const EvPath& xi, std::size_t n);
// Shortest prefix, primitive cycle.
EvPath ev_canonical(const Graph& g, const EvPath& xi);
bool ev_starts_with(const Graph& g, const EvPath& xi, const Path& p);

struct PeriodicityBudget {
  std::size_t max_steps = 256;
  Budget word_budget = {};
};

// w·xi. The restrictions w|_{prefix cycle^k} are followed until one repeats;
// throws PeriodicityBudgetExceeded when none does within the budget.
EvPath ev_act(const ActionSystem& sys, const Word& w, const EvPath& xi, PeriodicityBudget budget = {});
// The first n edges of w·xi, without any periodicity search.
Path ev_act_prefix(const ActionSystem& sys, const Word& w, const EvPath& xi, std::size_t n);

// "e3 e2 (e1)^inf"; the prefix is omitted when empty.
std::string format_evpath(const Graph& g, const EvPath& xi);
// Throws ParseError.
EvPath parse_evpath(const Graph& g, const std::string& text);

// [alpha, w, beta; xi] with beta a prefix of xi.
struct Germ {
  Path alpha;
  Word w;
  Path beta;
  EvPath xi;

  // Throws EndpointMismatch or NotAlongPoint.
  static Germ make(const Graph& g, Path alpha, Word w, Path beta, EvPath xi);

  friend bool operator==(const Germ&, const Germ&) = default;
};

// d(germ) = xi; t(germ) = alpha (w·mu) where xi = beta mu.
const EvPath& source_point(const Germ& x);
EvPath range_point(const ActionSystem& sys, const Germ& x, PeriodicityBudget budget = {});

// [alpha (w·lambda), w|_lambda, beta lambda; xi]. Throws NotAlongPoint.
Germ extend(const ActionSystem& sys, const Germ& x, const Path& lambda);

Verdict germ_equal(const ActionSystem& sys, const Germ& a, const Germ& b, Budget budget = {});

// Throws NotComposable when t(b) != d(a).
Germ compose(const ActionSystem& sys, const Germ& a, const Germ& b, PeriodicityBudget budget = {});
Germ invert(const ActionSystem& sys, const Germ& x, PeriodicityBudget budget = {});
// The unit germ [empty, r(xi), empty; xi].
Germ unit_germ(const EvPath& xi);

// |alpha| - |beta|.
std::int64_t rho(const Germ& x);

// Full-cylinder bisection B(alpha, w, beta; Z(beta)).
struct Bisection {
  Path alpha;
  Word w;
  Path beta;

  friend bool operator==(const Bisection&, const Bisection&) = default;
};

Bisection std_bisection(const Word& w);
Bisection std_bisection_edge(const Graph& g, EdgeId e);
Bisection std_bisection_vertex(VertexId v);
std::int64_t rho(const Bisection& b);
// The germ of b at xi; nullopt when xi is not in Z(beta).
std::optional<Germ> germ_at(const Graph& g, const Bisection& b, const EvPath& xi);

std::string format_germ(const ActionSystem& sys, const Germ& x);
// "[alpha, w, beta; xi]". Throws ParseError.
Germ parse_germ(const ActionSystem& sys, const std::string& text);
std::string format_bisection(const ActionSystem& sys, const Bisection& b);

}  // namespace selfsim
