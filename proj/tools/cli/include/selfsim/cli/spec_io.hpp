#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/action.hpp"

namespace selfsim::cli {

// The YAML system document:
//
//   graph:
//     vertices: [u, v, w]
//     edges:
//       - {name: e1, r: u, s: u}
//   generators:
//     - name: a
//       d: u
//       t: v
//       moves:
//         e1: {image: e2, restriction: u}
//   cocycle: {a: 1}               # optional
//   budgets: {max_seen: 10000, max_length: 64}   # optional
struct SystemSpec {
  struct Edge {
    std::string name;
    std::string range;
    std::string source;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  struct MoveSpec {
    std::string edge;
    std::string image;
    std::string restriction;
    friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
  };
  struct Generator {
    std::string name;
    std::string domain;
    std::string terminus;
    std::vector<MoveSpec> moves;
    std::vector<MoveSpec> inverse_moves;
    friend bool operator==(const Generator&, const Generator&) = default;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Generator> generators;
  std::optional<std::vector<std::pair<std::string, std::int64_t>>> cocycle;
  std::optional<std::size_t> max_seen;
  std::optional<std::size_t> max_length;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

// Throws ParseError ("line L, column C: ...") or DuplicateIdentifier.
SystemSpec parse_spec(const std::string& text);
SystemSpec load_spec(const std::string& path);
std::string emit_spec(const SystemSpec& spec);

// Throws UnknownIdentifier for names that do not resolve, plus whatever
// ActionSystem::build throws.
ActionSystem build_system(const SystemSpec& spec);
// Degrees per generator; missing generators get 0. Throws UnknownIdentifier.
DegreeCocycle cocycle_of(const SystemSpec& spec, const ActionSystem& sys);
// "a=1,b=1,c=-1". Throws ParseError / UnknownIdentifier.
DegreeCocycle parse_cocycle(const std::string& text, const ActionSystem& sys);
// Spec budgets over the environment defaults.
Budget budget_of(const SystemSpec& spec);

}  // namespace selfsim::cli
