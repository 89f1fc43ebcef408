#pragma once

#include <string>
#include <vector>

#include "selfsim/action.hpp"

namespace selfsim::fx {

struct Row {
  std::string edge;
  std::string image;
  std::string restriction;
};

struct Gen {
  std::string name;
  std::string domain;
  std::string terminus;
  std::vector<Row> rows;
};

// Builds a system from string tables. Restriction words may use any of the
// generators.
inline ActionSystem make_system(const std::vector<std::string>& vertices,
                                const std::vector<std::vector<std::string>>& edges,
                                const std::vector<Gen>& gens) {
  Graph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& e : edges)
    g.add_edge(e[0], *g.find_vertex(e[1]), *g.find_vertex(e[2]));
  Alphabet al;
  for (const auto& gen : gens)
    al.add({gen.name, *g.find_vertex(gen.domain), *g.find_vertex(gen.terminus)});
  std::vector<GeneratorTable> tables;
  for (GenId id = 0; id < gens.size(); ++id) {
    GeneratorTable t;
    t.gen = id;
    for (const auto& row : gens[id].rows)
      t.moves.push_back({*g.find_edge(row.edge),
                         Move{*g.find_edge(row.image), parse_word(g, al, row.restriction)}});
    tables.push_back(std::move(t));
  }
  return ActionSystem::build(std::move(g), std::move(al), std::move(tables));
}

// Edges as {name, range, source}.
inline std::vector<std::vector<std::string>> example_edges() {
  return {{"e1", "u", "u"}, {"e2", "v", "u"}, {"e3", "u", "v"},
          {"e4", "w", "v"}, {"e5", "w", "v"}, {"e6", "v", "w"}};
}

inline std::vector<Gen> example_gens() {
  return {{"a", "u", "v", {{"e1", "e2", "u"}, {"e3", "e6", "b"}}},
          {"b", "v", "w", {{"e2", "e5", "a"}, {"e6", "e4", "c"}}},
          {"c", "w", "v", {{"e4", "e2", "a^-1"}, {"e5", "e6", "b"}}}};
}

// Three vertices u, v, w, six edges, generators a, b, c with G free on them
// and a single isotropy class generated by a^-1 c b a at u.
inline ActionSystem example_system() {
  return make_system({"u", "v", "w"}, example_edges(), example_gens());
}

inline ActionSystem trivial_system(const std::vector<std::string>& vertices,
                                   const std::vector<std::vector<std::string>>& edges) {
  return make_system(vertices, edges, {});
}

}  // namespace selfsim::fx
