#include "selfsim/cli/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "selfsim/error.hpp"

namespace selfsim::cli {

namespace {

[[noreturn]] void parse_error(const YAML::Node& at, const std::string& msg) {
  const auto m = at.Mark();
  if (m.line >= 0)
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(m.line + 1) + ", column " + std::to_string(m.column + 1) + ": " + msg);
  throw Error(ErrorKind::ParseError, msg);
}

void only_keys(const YAML::Node& map, std::initializer_list<const char*> keys, const std::string& where) {
  if (!map.IsMap()) parse_error(map, where + " must be a mapping");
  for (const auto& kv : map) {
    auto k = kv.first.as<std::string>();
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) parse_error(kv.first, "unknown key '" + k + "' in " + where);
  }
}

std::string scalar(const YAML::Node& map, const char* key, const std::string& where) {
  auto n = map[key];
  if (!n) parse_error(map, where + " needs '" + key + "'");
  if (!n.IsScalar()) parse_error(n, where + "." + key + " must be a scalar");
  return n.as<std::string>();
}

std::vector<SystemSpec::MoveSpec> moves_of(const YAML::Node& node, const std::string& where) {
  std::vector<SystemSpec::MoveSpec> out;
  if (!node) return out;
  if (!node.IsMap()) parse_error(node, where + " must map edges to {image, restriction}");
  std::set<std::string> seen;
  for (const auto& kv : node) {
    auto edge = kv.first.as<std::string>();
    if (!seen.insert(edge).second)
      throw Error(ErrorKind::DuplicateIdentifier, where + " lists edge " + edge + " twice");
    only_keys(kv.second, {"image", "restriction"}, where + "." + edge);
    out.push_back({edge, scalar(kv.second, "image", where + "." + edge),
                   scalar(kv.second, "restriction", where + "." + edge)});
  }
  return out;
}

template <class T>
T as_number(const YAML::Node& n, const std::string& what) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    parse_error(n, what + " must be an integer");
  }
}

}  // namespace

SystemSpec parse_spec(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(e.mark.line + 1) + ", column " +
                                           std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  SystemSpec spec;
  if (root.IsNull()) return spec;
  try {
    only_keys(root, {"graph", "generators", "cocycle", "budgets"}, "document");
    if (auto graph = root["graph"]) {
      only_keys(graph, {"vertices", "edges"}, "graph");
      if (auto vs = graph["vertices"]) {
        if (!vs.IsSequence()) parse_error(vs, "graph.vertices must be a list");
        for (const auto& v : vs) spec.vertices.push_back(v.as<std::string>());
      }
      if (auto es = graph["edges"]) {
        if (!es.IsSequence()) parse_error(es, "graph.edges must be a list");
        for (const auto& e : es) {
          only_keys(e, {"name", "r", "s"}, "edge");
          spec.edges.push_back({scalar(e, "name", "edge"), scalar(e, "r", "edge"), scalar(e, "s", "edge")});
        }
      }
    }
    if (auto gens = root["generators"]) {
      if (!gens.IsSequence()) parse_error(gens, "generators must be a list");
      for (const auto& g : gens) {
        only_keys(g, {"name", "d", "t", "moves", "inverse_moves"}, "generator");
        SystemSpec::Generator gen;
        gen.name = scalar(g, "name", "generator");
        gen.domain = scalar(g, "d", "generator " + gen.name);
        gen.terminus = scalar(g, "t", "generator " + gen.name);
        gen.moves = moves_of(g["moves"], gen.name + ".moves");
        gen.inverse_moves = moves_of(g["inverse_moves"], gen.name + ".inverse_moves");
        spec.generators.push_back(std::move(gen));
      }
    }
    if (auto c = root["cocycle"]) {
      if (!c.IsMap()) parse_error(c, "cocycle must map generators to integers");
      spec.cocycle.emplace();
      for (const auto& kv : c)
        spec.cocycle->push_back({kv.first.as<std::string>(), as_number<std::int64_t>(kv.second, "cocycle value")});
    }
    if (auto b = root["budgets"]) {
      only_keys(b, {"max_seen", "max_length"}, "budgets");
      if (b["max_seen"]) spec.max_seen = as_number<std::size_t>(b["max_seen"], "budgets.max_seen");
      if (b["max_length"]) spec.max_length = as_number<std::size_t>(b["max_length"], "budgets.max_length");
    }
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(e.mark.line + 1) + ", column " +
                                           std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  return spec;
}

SystemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string emit_spec(const SystemSpec& spec) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "graph" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "vertices" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& v : spec.vertices) out << v;
  out << YAML::EndSeq;
  out << YAML::Key << "edges" << YAML::Value << YAML::BeginSeq;
  for (const auto& e : spec.edges)
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value << e.name << YAML::Key << "r"
        << YAML::Value << e.range << YAML::Key << "s" << YAML::Value << e.source << YAML::EndMap;
  out << YAML::EndSeq << YAML::EndMap;

  auto emit_moves = [&](const char* key, const std::vector<SystemSpec::MoveSpec>& moves) {
    out << YAML::Key << key << YAML::Value << YAML::BeginMap;
    for (const auto& m : moves)
      out << YAML::Key << m.edge << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "image"
          << YAML::Value << m.image << YAML::Key << "restriction" << YAML::Value << m.restriction
          << YAML::EndMap;
    out << YAML::EndMap;
  };
  out << YAML::Key << "generators" << YAML::Value << YAML::BeginSeq;
  for (const auto& g : spec.generators) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << g.name;
    out << YAML::Key << "d" << YAML::Value << g.domain;
    out << YAML::Key << "t" << YAML::Value << g.terminus;
    emit_moves("moves", g.moves);
    if (!g.inverse_moves.empty()) emit_moves("inverse_moves", g.inverse_moves);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  if (spec.cocycle) {
    out << YAML::Key << "cocycle" << YAML::Value << YAML::Flow << YAML::BeginMap;
    for (const auto& [g, d] : *spec.cocycle) out << YAML::Key << g << YAML::Value << d;
    out << YAML::EndMap;
  }
  if (spec.max_seen || spec.max_length) {
    out << YAML::Key << "budgets" << YAML::Value << YAML::Flow << YAML::BeginMap;
    if (spec.max_seen) out << YAML::Key << "max_seen" << YAML::Value << *spec.max_seen;
    if (spec.max_length) out << YAML::Key << "max_length" << YAML::Value << *spec.max_length;
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

ActionSystem build_system(const SystemSpec& spec) {
  Graph g;
  for (const auto& v : spec.vertices) g.add_vertex(v);
  auto vertex = [&](const std::string& name, const std::string& where) {
    auto v = g.find_vertex(name);
    if (!v) throw Error(ErrorKind::UnknownIdentifier, "vertex '" + name + "' in " + where);
    return *v;
  };
  for (const auto& e : spec.edges)
    g.add_edge(e.name, vertex(e.range, "edge " + e.name), vertex(e.source, "edge " + e.name));
  Alphabet al;
  for (const auto& gen : spec.generators)
    al.add({gen.name, vertex(gen.domain, "generator " + gen.name), vertex(gen.terminus, "generator " + gen.name)});
  auto edge = [&](const std::string& name, const std::string& where) {
    auto e = g.find_edge(name);
    if (!e) throw Error(ErrorKind::UnknownIdentifier, "edge '" + name + "' in " + where);
    return *e;
  };
  auto rows = [&](const std::vector<SystemSpec::MoveSpec>& ms, const std::string& where) {
    std::vector<std::pair<EdgeId, Move>> out;
    for (const auto& m : ms) {
      Word w;
      try {
        w = parse_word(g, al, m.restriction);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::ParseError) throw;
        throw Error(ErrorKind::UnknownIdentifier, where + "." + m.edge + ": " + err.detail());
      }
      out.push_back({edge(m.edge, where), Move{edge(m.image, where), std::move(w)}});
    }
    return out;
  };
  std::vector<GeneratorTable> tables;
  for (GenId id = 0; id < spec.generators.size(); ++id) {
    const auto& gen = spec.generators[id];
    GeneratorTable t;
    t.gen = id;
    t.moves = rows(gen.moves, gen.name);
    t.inverse_moves = rows(gen.inverse_moves, gen.name + "^-1");
    tables.push_back(std::move(t));
  }
  return ActionSystem::build(std::move(g), std::move(al), std::move(tables));
}

DegreeCocycle cocycle_of(const SystemSpec& spec, const ActionSystem& sys) {
  DegreeCocycle c;
  c.degree.assign(sys.alphabet().size(), 0);
  if (!spec.cocycle) return c;
  for (const auto& [name, d] : *spec.cocycle) {
    auto id = sys.alphabet().find(name);
    if (!id) throw Error(ErrorKind::UnknownIdentifier, "cocycle names unknown generator '" + name + "'");
    c.degree[*id] = d;
  }
  return c;
}

DegreeCocycle parse_cocycle(const std::string& text, const ActionSystem& sys) {
  DegreeCocycle c;
  c.degree.assign(sys.alphabet().size(), 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "cocycle entries look like a=1: " + item);
    std::string name = item.substr(0, eq);
    auto id = sys.alphabet().find(name);
    if (!id) throw Error(ErrorKind::UnknownIdentifier, "cocycle names unknown generator '" + name + "'");
    try {
      std::size_t used = 0;
      c.degree[*id] = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad degree in " + item);
    }
  }
  return c;
}

Budget budget_of(const SystemSpec& spec) {
  Budget b;
  if (spec.max_seen) b.max_seen = *spec.max_seen;
  if (spec.max_length) b.max_length = *spec.max_length;
  Budget env = Budget::from_env();
  Budget defaults;
  if (env.max_seen != defaults.max_seen) b.max_seen = env.max_seen;
  if (env.max_length != defaults.max_length) b.max_length = env.max_length;
  return b;
}

}  // namespace selfsim::cli
