#include "selfsim/cli/commands.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "selfsim/cli/demos.hpp"
#include "selfsim/cli/gpd_io.hpp"
#include "selfsim/cli/spec_io.hpp"
#include "selfsim/error.hpp"
#include "selfsim/finitegpd.hpp"
#include "selfsim/germ.hpp"
#include "selfsim/homol.hpp"
#include "selfsim/kthy.hpp"
#include "selfsim/pipeline.hpp"
#include "selfsim/semigroup.hpp"

namespace selfsim::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kComputed = "computed";
constexpr const char* kAssumed = "assumed-identification";
constexpr const char* kProbe = "probe-bounded";

struct Options {
  std::string format = "text";
  std::optional<std::size_t> budget_seen;
  std::optional<std::size_t> budget_len;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> nmax;
  std::string cocycle;
};

// What a command produced: a structured document and its text rendering.
struct Output {
  Json doc = Json::object();
  std::string text;
  int code = kExitOk;
};

Json tagged(Json value, const char* provenance) {
  return Json{{"value", std::move(value)}, {"provenance", provenance}};
}

std::string tag_text(const std::string& value, const char* provenance) {
  return value + "  [" + provenance + "]";
}

struct Loaded {
  SystemSpec spec;
  ActionSystem sys;
  Budget budget;
};

Loaded load(const std::string& path, const Options& o) {
  auto spec = load_spec(path);
  auto sys = build_system(spec);
  Budget b = budget_of(spec);
  if (o.budget_seen) b.max_seen = *o.budget_seen;
  if (o.budget_len) b.max_length = *o.budget_len;
  return {std::move(spec), std::move(sys), b};
}

DegreeCocycle cocycle(const Loaded& l, const Options& o) {
  return o.cocycle.empty() ? cocycle_of(l.spec, l.sys) : parse_cocycle(o.cocycle, l.sys);
}

ProbeSettings settings_of(const Loaded& l, const Options& o) {
  ProbeSettings s;
  s.budget = l.budget;
  if (o.depth) s.depth = *o.depth;
  return s;
}

ConjugatorSearch search_of(const Loaded& l, const Options& o) {
  ConjugatorSearch s;
  s.budget.word_budget = l.budget;
  if (o.depth) s.depth = *o.depth;
  return s;
}

Json budgets_json(const ProbeSettings& s) {
  return Json{{"max_seen", s.budget.max_seen}, {"max_length", s.budget.max_length}, {"depth", s.depth}};
}

Json group_pair(const std::pair<AbGroup, AbGroup>& g, const char* provenance) {
  return Json{{"0", tagged(g.first.to_string(), provenance)}, {"1", tagged(g.second.to_string(), provenance)}};
}

std::string pair_text(const std::string& label, const std::pair<AbGroup, AbGroup>& g, const char* provenance) {
  return "  " + label + " = (" + g.first.to_string() + ", " + g.second.to_string() + ")  [" + provenance + "]\n";
}

// ------------------------------------------------------------ assumptions

Json assumptions_json(const PipelineAssumptions& a) {
  Json flags = Json::array();
  for (const auto* f : a.flags())
    flags.push_back(Json{{"name", f->name}, {"pass", f->pass}, {"detail", f->detail}, {"provenance", kProbe}});
  return flags;
}

std::string assumptions_text(const PipelineAssumptions& a) {
  return "assumptions  [" + std::string(kProbe) + "]\n" + format_assumptions(a);
}

// Fills the assumption section and refuses when a flag failed.
bool check_assumptions(const PipelineAssumptions& a, Output& o, std::ostream& err) {
  o.doc["budgets"] = budgets_json(a.settings);
  o.doc["assumptions"] = assumptions_json(a);
  o.text += assumptions_text(a);
  if (a.all_pass()) return true;
  try {
    require_assumptions(a);
  } catch (const Error& e) {
    err << "refused: " << e.what() << "\n";
  }
  o.code = kExitRefused;
  return false;
}

void k_section(const ActionSystem& sys, const KReport& r, Output& o) {
  const auto& m = r.multipliers;
  o.doc["ktheory"] = Json{
      {"unit_image", tagged(format_monomial(sys, r.unit_image), kComputed)},
      {"unitary_image", tagged(format_monomial(sys, r.unitary_image), kComputed)},
      {"D", tagged(m.D, kComputed)},
      {"Phi0", tagged(m.phi0, kComputed)},
      {"Phi1", tagged(m.phi1, kComputed)},
      {"K_groupoid_algebra", group_pair(r.k_groupoid, kAssumed)},
      {"K_fixed_point", group_pair(r.k_fixed, kComputed)},
      {"K_algebra", group_pair(r.k_algebra, kComputed)},
  };
  std::string t = "ktheory\n";
  t += "  phi(i_v) = " + tag_text(format_monomial(sys, r.unit_image), kComputed) + "\n";
  t += "  phi(U) = " + tag_text(format_monomial(sys, r.unitary_image), kComputed) + "\n";
  t += "  D = " + tag_text(std::to_string(m.D), kComputed) + "\n";
  t += "  Phi0 = " + tag_text(std::to_string(m.phi0), kComputed) + "\n";
  t += "  Phi1 = " + tag_text(std::to_string(m.phi1), kComputed) + "\n";
  t += pair_text("K(C*(G))", r.k_groupoid, kAssumed);
  t += pair_text("K(F)", r.k_fixed, kComputed);
  t += pair_text("K(C*(G,E))", r.k_algebra, kComputed);
  o.text += t;
}

void h_section(const ActionSystem& sys, const HomologyReport& r, Output& o) {
  const auto& c = r.rho.conjugator;
  const auto& les = r.les;
  Json h1 = les.h1.resolved ? tagged(les.h1.resolved->to_string(), kComputed)
                            : Json{{"value", nullptr},
                                   {"sub", les.h1.sub.to_string()},
                                   {"quotient", les.h1.quotient.to_string()},
                                   {"provenance", kComputed}};
  o.doc["homology"] = Json{
      {"H_Hk", group_pair(r.h_Hk, kAssumed)},
      {"inclusion_multiplier", tagged(r.inclusion, kComputed)},
      {"H_H", group_pair(r.h_H, kComputed)},
      {"rho_star", tagged(r.rho.multiplier.to_string(), kComputed)},
      {"conjugator",
       Json{{"edge", sys.graph().edge_name(c.edge)},
            {"word", sys.format(c.word)},
            {"bisection", format_bisection(sys, c.bisection)},
            {"label", c.label},
            {"points_checked", c.points_checked}}},
      {"H0", tagged(les.h0.to_string(), kComputed)},
      {"H1", h1},
      {"H1_extension", les.h1.how},
      {"H2", tagged(les.h2.to_string(), kComputed)},
      {"tail_zero", les.tail_zero},
      {"rank_audit", les.rank_audit},
  };
  std::string t = "homology\n";
  t += pair_text("H(H_k)", r.h_Hk, kAssumed);
  t += "  inclusion multiplier = " + tag_text(std::to_string(r.inclusion), kComputed) + "\n";
  t += pair_text("H(H)", r.h_H, kComputed);
  t += "  rho_* = " + tag_text(r.rho.multiplier.to_string(), kComputed) + "\n";
  t += "  conjugator " + format_bisection(sys, c.bisection) + " from " + sys.graph().edge_name(c.edge) +
       ", label " + std::to_string(c.label) + ", " + std::to_string(c.points_checked) + " points checked\n";
  t += "  H0 = " + tag_text(les.h0.to_string(), kComputed) + "\n";
  if (les.h1.resolved)
    t += "  H1 = " + tag_text(les.h1.resolved->to_string(), kComputed) + " (" + les.h1.how + ")\n";
  else
    t += "  H1 = extension of " + les.h1.quotient.to_string() + " by " + les.h1.sub.to_string() + " (unresolved)\n";
  t += "  H2 = " + tag_text(les.h2.to_string(), kComputed) + "\n";
  t += std::string("  H_q = 0 for q >= 3: ") + (les.tail_zero ? "yes" : "no") + "\n";
  o.text += t;
}

// ------------------------------------------------------------ commands

Output cmd_validate(const std::string& path, bool emit, const Options& opt) {
  Output o;
  auto l = load(path, opt);
  if (emit) {
    o.text = emit_spec(l.spec);
    o.doc["canonical"] = o.text;
    return o;
  }
  const auto& g = l.sys.graph();
  const auto& al = l.sys.alphabet();
  Json rows = Json::array();
  std::string t = "ok: " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
                  " edges, " + std::to_string(al.size()) + " generators\n";
  for (GenId id = 0; id < al.size(); ++id) {
    for (bool inv : {false, true}) {
      Letter l1{id, inv};
      std::string name = al[id].name + (inv ? "^-1" : "");
      for (EdgeId e : g.edges_into(al.domain(l1))) {
        const Move& m = l.sys.move(l1, e);
        std::string restr = l.sys.format(m.restriction);
        rows.push_back(Json{{"letter", name},
                            {"edge", g.edge_name(e)},
                            {"image", g.edge_name(m.image)},
                            {"restriction", restr}});
        t += "  " + name + "·" + g.edge_name(e) + " = " + g.edge_name(m.image) + ", " + name + "|_" +
             g.edge_name(e) + " = " + restr + "\n";
      }
    }
  }
  o.doc["vertices"] = g.num_vertices();
  o.doc["edges"] = g.num_edges();
  o.doc["generators"] = al.size();
  o.doc["tables"] = rows;
  o.text = t;
  return o;
}

Output cmd_act(const std::string& path, const std::string& word, const std::string& point, const Options& opt) {
  Output o;
  auto l = load(path, opt);
  Word w = l.sys.parse_word(word);
  std::string result;
  if (point.find("^inf") != std::string::npos) {
    PeriodicityBudget pb;
    pb.word_budget = l.budget;
    result = format_evpath(l.sys.graph(), ev_act(l.sys, w, parse_evpath(l.sys.graph(), point), pb));
  } else {
    result = l.sys.format(l.sys.act_path(w, l.sys.parse_path(point)));
  }
  o.doc = Json{{"word", l.sys.format(w)}, {"input", point}, {"output", result}};
  o.text = result + "\n";
  return o;
}

Output cmd_restrict(const std::string& path, const std::string& word, const std::string& pth, const Options& opt) {
  Output o;
  auto l = load(path, opt);
  Word w = l.sys.parse_word(word);
  auto r = l.sys.format(l.sys.restrict_path(w, l.sys.parse_path(pth)));
  o.doc = Json{{"word", l.sys.format(w)}, {"path", pth}, {"restriction", r}};
  o.text = r + "\n";
  return o;
}

Output unit_output(const ActionSystem& sys, const UnitCheck& uc, Json doc) {
  Output o;
  doc["verdict"] = std::string(to_string(uc.verdict));
  std::string t(to_string(uc.verdict));
  if (uc.witness) {
    auto in = sys.format(uc.witness->input), out = sys.format(uc.witness->output);
    doc["witness"] = Json{{"input", in}, {"output", out}};
    t += " (moves " + in + " to " + out + ")";
  }
  if (uc.verdict == Verdict::Unknown) {
    doc["reason"] = uc.reason;
    t += ": " + uc.reason;
    o.code = kExitRefused;
  }
  doc["explored"] = uc.explored;
  doc["provenance"] = uc.verdict == Verdict::Unknown ? kProbe : kComputed;
  o.doc = std::move(doc);
  o.text = t + "\n";
  return o;
}

Output cmd_is_unit(const std::string& path, const std::string& word, const Options& opt) {
  auto l = load(path, opt);
  Word w = l.sys.parse_word(word);
  return unit_output(l.sys, l.sys.is_unit(w, l.budget), Json{{"word", l.sys.format(w)}});
}

Output cmd_equal(const std::string& path, const std::string& w1, const std::string& w2, const Options& opt) {
  auto l = load(path, opt);
  Word a = l.sys.parse_word(w1), b = l.sys.parse_word(w2);
  return unit_output(l.sys, equal(l.sys, a, b, l.budget),
                     Json{{"left", l.sys.format(a)}, {"right", l.sys.format(b)}});
}

Output cmd_pseudo_free(const std::string& path, std::size_t length, const Options& opt) {
  Output o;
  auto l = load(path, opt);
  auto r = pseudo_free_probe(l.sys, length, l.budget);
  o.doc["bound"] = r.bound;
  o.doc["violation"] = r.violation;
  if (r.violation) {
    auto w = l.sys.format(*r.word);
    auto e = l.sys.graph().edge_name(*r.edge);
    o.doc["word"] = w;
    o.doc["edge"] = e;
    o.text = "violation: " + w + " fixes " + e + " with a unit restriction but is not a unit\n";
  } else if (!r.inconclusive.empty()) {
    o.text = "unknown: no violation up to length " + std::to_string(length) + ", " +
             std::to_string(r.inconclusive.size()) + " words inconclusive\n";
    o.code = kExitRefused;
  } else {
    o.text = tag_text("pass: no violation up to length " + std::to_string(length), kProbe) + "\n";
  }
  Json inc = Json::array();
  for (const auto& w : r.inconclusive) inc.push_back(l.sys.format(w));
  o.doc["inconclusive"] = inc;
  o.doc["provenance"] = kProbe;
  return o;
}

Output cmd_orbits(const std::string& path, const Options& opt) {
  Output o;
  auto l = load(path, opt);
  Json arr = Json::array();
  for (const auto& orb : orbits(l.sys)) {
    Json names = Json::array();
    std::string t = "{";
    for (std::size_t i = 0; i < orb.size(); ++i) {
      names.push_back(l.sys.graph().vertex_name(orb[i]));
      t += (i ? ", " : "") + l.sys.graph().vertex_name(orb[i]);
    }
    arr.push_back(names);
    o.text += t + "}\n";
  }
  o.doc["orbits"] = arr;
  return o;
}

Output cmd_isotropy(const std::string& path, const std::string& vertex, std::size_t length, std::size_t powers,
                    const Options& opt) {
  Output o;
  auto l = load(path, opt);
  auto v = l.sys.graph().find_vertex(vertex);
  if (!v) throw Error(ErrorKind::UnknownIdentifier, "vertex '" + vertex + "'");
  auto r = isotropy_probe(l.sys, *v, length, powers, l.budget);
  Json nonunit = Json::array(), units = Json::array(), inc = Json::array();
  o.text = "isotropy at " + vertex + ", loops up to length " + std::to_string(length) + "  [" + kProbe + "]\n";
  o.text += "  examined " + std::to_string(r.examined) + "\n";
  for (const auto& ev : r.nonunit_loops) {
    nonunit.push_back(Json{{"word", l.sys.format(ev.word)}, {"nonunit_powers", ev.nonunit_powers}});
    o.text += "  non-unit " + l.sys.format(ev.word) + " (powers 1.." + std::to_string(ev.nonunit_powers) + ")\n";
  }
  for (const auto& w : r.unit_loops) {
    units.push_back(l.sys.format(w));
    o.text += "  unit " + l.sys.format(w) + "\n";
  }
  for (const auto& w : r.inconclusive) {
    inc.push_back(l.sys.format(w));
    o.text += "  unknown " + l.sys.format(w) + "\n";
  }
  o.doc = Json{{"vertex", vertex}, {"examined", r.examined},   {"nonunit", nonunit},
               {"unit", units},    {"inconclusive", inc},      {"provenance", kProbe}};
  return o;
}

Output cmd_sgp_mul(const std::string& path, const std::string& x, const std::string& y, const Options& opt) {
  Output o;
  auto l = load(path, opt);
  auto r = format_triple(l.sys, multiply(l.sys, parse_triple(l.sys, x), parse_triple(l.sys, y)));
  o.doc = Json{{"left", x}, {"right", y}, {"product", r}};
  o.text = r + "\n";
  return o;
}

Output cmd_germ(const std::string& path, const std::string& op, const std::vector<std::string>& args,
                const Options& opt) {
  Output o;
  auto l = load(path, opt);
  PeriodicityBudget pb;
  pb.word_budget = l.budget;
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(ErrorKind::ParseError, "germ " + op + " takes " + std::to_string(n) + " argument(s)");
  };
  auto germ = [&](std::size_t i) { return parse_germ(l.sys, args.at(i)); };
  std::string r;
  if (op == "compose") {
    need(2);
    r = format_germ(l.sys, compose(l.sys, germ(0), germ(1), pb));
  } else if (op == "invert") {
    need(1);
    r = format_germ(l.sys, invert(l.sys, germ(0), pb));
  } else if (op == "equal") {
    need(2);
    auto v = germ_equal(l.sys, germ(0), germ(1), l.budget);
    r = std::string(to_string(v));
    if (v == Verdict::Unknown) o.code = kExitRefused;
  } else if (op == "extend") {
    need(2);
    r = format_germ(l.sys, extend(l.sys, germ(0), l.sys.parse_path(args[1])));
  } else if (op == "rho") {
    need(1);
    r = std::to_string(rho(germ(0)));
  } else if (op == "range") {
    need(1);
    r = format_evpath(l.sys.graph(), range_point(l.sys, germ(0), pb));
  } else {
    throw Error(ErrorKind::ParseError, "unknown germ operation '" + op + "'");
  }
  Json in = Json::array();
  for (const auto& a : args) in.push_back(a);
  o.doc = Json{{"op", op}, {"args", in}, {"result", r}};
  o.text = r + "\n";
  return o;
}

Output cmd_finite_homology(const std::string& path, const Options& opt) {
  Output o;
  auto G = load_gpd(path);
  std::size_t nmax = opt.nmax.value_or(3);
  auto hs = homology(G, nmax);
  Json arr = Json::array();
  o.text = std::to_string(G.size()) + " elements, " + std::to_string(G.units().size()) + " units\n";
  for (std::size_t n = 0; n < hs.size(); ++n) {
    arr.push_back(tagged(hs[n].to_string(), kComputed));
    o.text += "H" + std::to_string(n) + " = " + tag_text(hs[n].to_string(), kComputed) + "\n";
  }
  o.doc = Json{{"elements", G.size()}, {"units", G.units().size()}, {"nmax", nmax}, {"homology", arr}};
  return o;
}

Output cmd_similarity(std::vector<std::string> names, bool corrupt, const Options& opt) {
  Output o;
  if (names.empty()) names = demo_names();
  std::size_t nmax = opt.nmax.value_or(2);
  Json arr = Json::array();
  for (const auto& name : names) {
    auto demo = make_demo(name);
    Json entry{{"name", name}, {"description", demo.description}};
    o.text += name + ": " + demo.description + "\n";
    if (corrupt) {
      bool done = corrupt_theta(demo.data);
      entry["corrupted"] = done;
      if (!done) o.text += "  theta1 left unchanged: no non-unit isotropy in G1\n";
    }
    auto r = similarity_check(demo.data);
    entry["ok"] = r.ok;
    entry["checked"] = r.checked;
    o.text += "  |G1| = " + std::to_string(demo.data.G1.size()) + ", |G2| = " + std::to_string(demo.data.G2.size()) +
              ", " + std::to_string(r.checked) + " identities checked: " + (r.ok ? "ok" : "FAILED") + "\n";
    if (!r.ok) {
      const auto& G = r.side == 1 ? demo.data.G1 : demo.data.G2;
      entry["witness"] = Json{{"side", r.side}, {"element", G.name(*r.witness)}};
      o.text += "  witness in G" + std::to_string(r.side) + ": " + G.name(*r.witness) + "\n";
      o.code = kExitRefused;
    } else {
      auto h1 = homology(demo.data.G1, nmax), h2 = homology(demo.data.G2, nmax);
      Json hs = Json::array();
      std::string line = "  homology";
      for (std::size_t n = 0; n <= nmax; ++n) {
        hs.push_back(Json{{"G1", h1[n].to_string()}, {"G2", h2[n].to_string()}, {"agree", h1[n] == h2[n]}});
        line += " H" + std::to_string(n) + "=" + h1[n].to_string() + (h1[n] == h2[n] ? "" : "/" + h2[n].to_string());
      }
      entry["homology"] = hs;
      o.text += tag_text(line, kComputed) + "\n";
    }
    arr.push_back(entry);
  }
  o.doc["instances"] = arr;
  return o;
}

Output cmd_ktheory(const std::string& path, const Options& opt, std::ostream& err) {
  Output o;
  auto l = load(path, opt);
  auto c = cocycle(l, opt);
  auto a = assess_assumptions(l.sys, c, settings_of(l, opt));
  if (!check_assumptions(a, o, err)) return o;
  k_section(l.sys, k_pipeline(l.sys, c, settings_of(l, opt)), o);
  return o;
}

Output cmd_homology(const std::string& path, const Options& opt, std::ostream& err) {
  Output o;
  auto l = load(path, opt);
  auto c = cocycle(l, opt);
  auto a = assess_assumptions(l.sys, c, settings_of(l, opt));
  if (!check_assumptions(a, o, err)) return o;
  h_section(l.sys, homology_pipeline(l.sys, c, settings_of(l, opt), search_of(l, opt)), o);
  return o;
}

Output cmd_report(const std::string& path, const Options& opt, std::ostream& err) {
  Output o;
  auto l = load(path, opt);
  auto c = cocycle(l, opt);
  const auto& g = l.sys.graph();
  o.doc["system"] = Json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()},
                         {"generators", l.sys.alphabet().size()}};
  o.text = "system: " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
           " edges, " + std::to_string(l.sys.alphabet().size()) + " generators\n";
  auto a = assess_assumptions(l.sys, c, settings_of(l, opt));
  if (!check_assumptions(a, o, err)) return o;
  k_section(l.sys, k_pipeline(l.sys, c, settings_of(l, opt)), o);
  h_section(l.sys, homology_pipeline(l.sys, c, settings_of(l, opt), search_of(l, opt)), o);
  return o;
}

int finish(const Output& r, const Options& opt, std::ostream& out) {
  if (opt.format == "json")
    out << r.doc.dump(2) << "\n";
  else
    out << r.text;
  return r.code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-similar groupoid actions on graphs: word problem, K-theory and homology"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget-seen", opt.budget_seen, "Word-problem state budget");
  app.add_option("--budget-len", opt.budget_len, "Word-problem length budget");
  app.add_option("--depth", opt.depth, "Probe depth for points and conjugator checks");
  app.add_option("--nmax", opt.nmax, "Top homology degree");
  app.add_option("--cocycle", opt.cocycle, "Degrees as a=1,b=1,c=1 (overrides the spec)");

  std::function<Output()> action;
  std::string spec, word, word2, point, vertex, op;
  std::vector<std::string> rest;
  bool emit = false, corrupt = false;
  std::size_t length = 4, powers = 8;

  auto with_spec = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("spec", spec, "System file")->required();
    return sc;
  };

  auto* validate = with_spec("validate", "Check a system and print its tables");
  validate->add_flag("--emit", emit, "Print the canonical form of the file");
  validate->callback([&] { action = [&] { return cmd_validate(spec, emit, opt); }; });

  auto* act = with_spec("act", "Act by a word on a finite or eventually periodic path");
  act->add_option("word", word)->required();
  act->add_option("path", point)->required();
  act->callback([&] { action = [&] { return cmd_act(spec, word, point, opt); }; });

  auto* restrict_ = with_spec("restrict", "Restriction of a word to a path");
  restrict_->add_option("word", word)->required();
  restrict_->add_option("path", point)->required();
  restrict_->callback([&] { action = [&] { return cmd_restrict(spec, word, point, opt); }; });

  auto* isunit = with_spec("is-unit", "Decide whether a word acts trivially");
  isunit->add_option("word", word)->required();
  isunit->callback([&] { action = [&] { return cmd_is_unit(spec, word, opt); }; });

  auto* eq = with_spec("equal", "Decide whether two words are equal in the groupoid");
  eq->add_option("left", word)->required();
  eq->add_option("right", word2)->required();
  eq->callback([&] { action = [&] { return cmd_equal(spec, word, word2, opt); }; });

  auto* pf = with_spec("pseudo-free", "Search for pseudo-freeness violations");
  pf->add_option("--length", length, "Word length bound");
  pf->callback([&] { action = [&] { return cmd_pseudo_free(spec, length, opt); }; });

  auto* orb = with_spec("orbits", "Vertex orbits");
  orb->callback([&] { action = [&] { return cmd_orbits(spec, opt); }; });

  auto* iso = with_spec("isotropy", "Probe loops at a vertex");
  iso->add_option("vertex", vertex)->required();
  iso->add_option("--length", length, "Loop length bound");
  iso->add_option("--powers", powers, "Powers to certify");
  iso->callback([&] { action = [&] { return cmd_isotropy(spec, vertex, length, powers, opt); }; });

  auto* sgp = with_spec("sgp-mul", "Multiply two elements of the inverse semigroup");
  sgp->add_option("x", word)->required();
  sgp->add_option("y", word2)->required();
  sgp->callback([&] { action = [&] { return cmd_sgp_mul(spec, word, word2, opt); }; });

  auto* germ = with_spec("germ", "Germ operations: compose, invert, equal, extend, rho, range");
  std::string germ_a, germ_b;
  germ->add_option("op", op)->required();
  germ->add_option("first", germ_a, "A germ [alpha, w, beta; xi]")->required();
  germ->add_option("second", germ_b, "A second germ, or a path for extend");
  germ->callback([&] {
    action = [&] {
      std::vector<std::string> args{germ_a};
      if (!germ_b.empty()) args.push_back(germ_b);
      return cmd_germ(spec, op, args, opt);
    };
  });

  auto* fh = app.add_subcommand("finite-homology", "Homology of a finite groupoid file");
  fh->add_option("groupoid", spec)->required();
  fh->callback([&] { action = [&] { return cmd_finite_homology(spec, opt); }; });

  auto* sim = app.add_subcommand("similarity-demo", "Check the canonical similarities on built-in instances");
  sim->add_option("names", rest, "Instances (default: all)");
  sim->add_flag("--corrupt", corrupt, "Perturb theta1 before checking");
  sim->callback([&] { action = [&] { return cmd_similarity(rest, corrupt, opt); }; });

  auto* kt = with_spec("ktheory", "K-theory pipeline");
  kt->callback([&] { action = [&] { return cmd_ktheory(spec, opt, err); }; });

  auto* hm = with_spec("homology", "Homology pipeline");
  hm->callback([&] { action = [&] { return cmd_homology(spec, opt, err); }; });

  auto* rep = with_spec("report", "Assumptions, K-theory and homology");
  rep->callback([&] { action = [&] { return cmd_report(spec, opt, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return finish(action(), opt, out);
  } catch (const Error& e) {
    bool refusal = is_domain_refusal(e.kind());
    err << (refusal ? "refused: " : "error: ") << e.what() << "\n";
    return refusal ? kExitRefused : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"selfsim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace selfsim::cli
