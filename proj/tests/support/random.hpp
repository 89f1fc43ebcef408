#pragma once

#include <random>
#include <vector>

#include "selfsim/action.hpp"

namespace selfsim::fx {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// A reduced word of length <= max_len with the given domain, grown on the
// left. May come back shorter if no letter fits.
inline Word random_word_from(Rng& rng, const Alphabet& al, VertexId domain, std::size_t max_len) {
  Word w = Word::unit(domain);
  std::size_t len = pick(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Letter> options;
    for (GenId g = 0; g < al.size(); ++g) {
      for (bool inv : {false, true}) {
        Letter l{g, inv};
        if (al.domain(l) != w.terminus()) continue;
        if (!w.is_unit() && w.letters().front() == l.inverted()) continue;
        options.push_back(l);
      }
    }
    if (options.empty()) break;
    w = Word::letter(al, options[pick(rng, options.size())]) * w;
  }
  return w;
}

inline Word random_word(Rng& rng, const ActionSystem& sys, std::size_t max_len) {
  auto v = static_cast<VertexId>(pick(rng, sys.graph().num_vertices()));
  return random_word_from(rng, sys.alphabet(), v, max_len);
}

inline Path random_path_from(Rng& rng, const Graph& g, VertexId range, std::size_t len) {
  Path p = Path::empty(range);
  for (std::size_t i = 0; i < len; ++i) {
    auto in = g.edges_into(p.source());
    p.push_back(g, in[pick(rng, in.size())]);
  }
  return p;
}

}  // namespace selfsim::fx
