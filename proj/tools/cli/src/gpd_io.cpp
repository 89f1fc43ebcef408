#include "selfsim/cli/gpd_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "selfsim/error.hpp"

namespace selfsim::cli {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

FiniteGroupoid parse_gpd(const std::string& text) {
  std::vector<std::string> names, unit_names, d_names, t_names;
  bool have_elements = false, have_units = false, have_d = false, have_t = false;
  struct ProductLine {
    std::size_t line;
    std::string g, h, gh;
  };
  std::vector<ProductLine> products;

  std::istringstream in(text);
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = tokens(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    auto rest = std::vector<std::string>(toks.begin() + 1, toks.end());
    auto take = [&](bool& seen, std::vector<std::string>& dst) {
      if (seen) fail(lineno, "repeated '" + head + "'");
      seen = true;
      dst = rest;
    };
    if (head == "elements:") take(have_elements, names);
    else if (head == "units:") take(have_units, unit_names);
    else if (head == "d:") take(have_d, d_names);
    else if (head == "t:") take(have_t, t_names);
    else if (head == "product") {
      if (rest.size() != 4 || rest[2] != "=") fail(lineno, "expected 'product g h = gh'");
      products.push_back({lineno, rest[0], rest[1], rest[3]});
    } else {
      fail(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_elements || !have_units || !have_d || !have_t)
    throw Error(ErrorKind::ParseError, "need elements:, units:, d: and t: lines");

  std::unordered_map<std::string, ElemId> index;
  for (ElemId i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second)
      throw Error(ErrorKind::DuplicateIdentifier, "element " + names[i] + " listed twice");
  auto lookup = [&](const std::string& n, const std::string& where) {
    auto it = index.find(n);
    if (it == index.end()) throw Error(ErrorKind::UnknownIdentifier, "element '" + n + "' in " + where);
    return it->second;
  };
  if (d_names.size() != names.size() || t_names.size() != names.size())
    throw Error(ErrorKind::ParseError, "d: and t: need one entry per element");
  std::vector<ElemId> d, t;
  for (const auto& n : d_names) d.push_back(lookup(n, "d:"));
  for (const auto& n : t_names) t.push_back(lookup(n, "t:"));
  std::vector<bool> listed_unit(names.size(), false);
  for (const auto& n : unit_names) listed_unit[lookup(n, "units:")] = true;
  for (ElemId i = 0; i < names.size(); ++i) {
    bool is_unit = d[i] == i;
    if (is_unit != listed_unit[i])
      throw Error(ErrorKind::InvalidGroupoid, "units: disagrees with d at " + names[i]);
  }

  std::map<std::pair<ElemId, ElemId>, ElemId> table;
  for (const auto& p : products) {
    auto key = std::pair{lookup(p.g, "line " + std::to_string(p.line)),
                         lookup(p.h, "line " + std::to_string(p.line))};
    if (!table.emplace(key, lookup(p.gh, "line " + std::to_string(p.line))).second)
      throw Error(ErrorKind::DuplicateIdentifier, "line " + std::to_string(p.line) + ": product " + p.g +
                                                      " " + p.h + " given twice");
  }
  return FiniteGroupoid::build(std::move(names), std::move(d), std::move(t),
                               [&](ElemId g, ElemId h) -> std::optional<ElemId> {
                                 auto it = table.find({g, h});
                                 if (it == table.end()) return std::nullopt;
                                 return it->second;
                               });
}

FiniteGroupoid load_gpd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gpd(ss.str());
}

std::string emit_gpd(const FiniteGroupoid& G) {
  std::ostringstream out;
  auto list = [&](const char* key, auto&& name_of) {
    out << key;
    for (ElemId g = 0; g < G.size(); ++g) out << ' ' << name_of(g);
    out << '\n';
  };
  list("elements:", [&](ElemId g) { return G.name(g); });
  out << "units:";
  for (ElemId u : G.units()) out << ' ' << G.name(u);
  out << '\n';
  list("d:", [&](ElemId g) { return G.name(G.d(g)); });
  list("t:", [&](ElemId g) { return G.name(G.t(g)); });
  for (ElemId g = 0; g < G.size(); ++g)
    for (ElemId h : G.with_terminus(G.d(g)))
      out << "product " << G.name(g) << ' ' << G.name(h) << " = " << G.name(G.mul(g, h)) << '\n';
  return out.str();
}

}  // namespace selfsim::cli
