#include "selfsim/germ.hpp"

#include <algorithm>

#include "selfsim/error.hpp"

namespace selfsim {

namespace {

Path from_edges_at(const Graph& g, VertexId v, std::vector<EdgeId> edges) {
  if (edges.empty()) return Path::empty(v);
  return Path::from_edges(g, std::move(edges));
}

EdgeId edge_at(const EvPath& xi, std::size_t i) {
  if (i < xi.prefix.length()) return xi.prefix[i];
  return xi.cycle[(i - xi.prefix.length()) % xi.cycle.length()];
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  auto e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// The n edges of xi after position `from`.
Path slice(const Graph& g, const EvPath& xi, std::size_t from, std::size_t n) {
  return ev_prefix(g, ev_drop(g, xi, from), n);
}

}  // namespace

EvPath EvPath::make(Path prefix, Path cycle) {
  if (cycle.is_empty()) throw Error(ErrorKind::NotComposable, "cycle must be nonempty");
  if (cycle.range() != cycle.source()) throw Error(ErrorKind::NotComposable, "cycle must be a loop");
  if (prefix.source() != cycle.range())
    throw Error(ErrorKind::NotComposable, "cycle does not start where the prefix ends");
  return EvPath{std::move(prefix), std::move(cycle)};
}

Path ev_prefix(const Graph& g, const EvPath& xi, std::size_t n) {
  std::vector<EdgeId> edges(n);
  for (std::size_t i = 0; i < n; ++i) edges[i] = edge_at(xi, i);
  return from_edges_at(g, xi.range(), std::move(edges));
}

bool ev_starts_with(const Graph& g, const EvPath& xi, const Path& p) {
  return ev_prefix(g, xi, p.length()) == p;
}

bool ev_equal(const Graph&, const EvPath& a, const EvPath& b) {
  if (a.range() != b.range()) return false;
  std::size_t n = 2 * (std::max(a.prefix.length(), b.prefix.length()) +
                       a.cycle.length() * b.cycle.length());
  for (std::size_t i = 0; i < n; ++i)
    if (edge_at(a, i) != edge_at(b, i)) return false;
  return true;
}

EvPath ev_drop(const Graph& g, const EvPath& xi, std::size_t n) {
  const auto p = xi.prefix.edges();
  if (n <= p.size())
    return EvPath{from_edges_at(g, xi.prefix.source(), {p.begin() + n, p.end()}), xi.cycle};
  const auto c = xi.cycle.edges();
  std::size_t k = (n - p.size()) % c.size();
  std::vector<EdgeId> rot(c.begin() + k, c.end());
  rot.insert(rot.end(), c.begin(), c.begin() + k);
  Path cycle = Path::from_edges(g, std::move(rot));
  return EvPath{Path::empty(cycle.range()), cycle};
}

EvPath ev_canonical(const Graph& g, const EvPath& xi) {
  std::vector<EdgeId> p(xi.prefix.edges().begin(), xi.prefix.edges().end());
  std::vector<EdgeId> c(xi.cycle.edges().begin(), xi.cycle.edges().end());
  while (!p.empty() && p.back() == c.back()) {
    std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
    p.pop_back();
  }
  for (std::size_t d = 1; d < c.size(); ++d) {
    if (c.size() % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < c.size() && periodic; ++i) periodic = c[i] == c[i - d];
    if (periodic) {
      c.resize(d);
      break;
    }
  }
  Path cycle = Path::from_edges(g, std::move(c));
  return EvPath{from_edges_at(g, cycle.range(), std::move(p)), cycle};
}

EvPath ev_act(const ActionSystem& sys, const Word& w, const EvPath& xi, PeriodicityBudget budget) {
  const Graph& g = sys.graph();
  auto [head, h] = sys.act_restrict_path(w, xi.prefix);
  std::vector<Word> states{h};
  std::vector<Path> outs;
  for (std::size_t step = 0; step < budget.max_steps; ++step) {
    auto [out, next] = sys.act_restrict_path(states.back(), xi.cycle);
    outs.push_back(std::move(out));
    for (std::size_t i = 0; i < states.size(); ++i) {
      const Word& s = states[i];
      if (s.domain() != next.domain() || s.terminus() != next.terminus()) continue;
      if (s == next || equal(sys, s, next, budget.word_budget).verdict == Verdict::Yes) {
        Path prefix = head;
        for (std::size_t j = 0; j < i; ++j) prefix = concat(prefix, outs[j]);
        Path cycle = outs[i];
        for (std::size_t j = i + 1; j < outs.size(); ++j) cycle = concat(cycle, outs[j]);
        return EvPath::make(std::move(prefix), std::move(cycle));
      }
    }
    states.push_back(std::move(next));
  }
  throw Error(ErrorKind::PeriodicityBudgetExceeded,
              "restrictions of " + sys.format(w) + " along " + format_evpath(g, xi) +
                  " did not repeat within " + std::to_string(budget.max_steps) + " periods");
}

Path ev_act_prefix(const ActionSystem& sys, const Word& w, const EvPath& xi, std::size_t n) {
  return sys.act_path(w, ev_prefix(sys.graph(), xi, n));
}

std::string format_evpath(const Graph& g, const EvPath& xi) {
  std::string out;
  if (!xi.prefix.is_empty()) out = format_path(g, xi.prefix) + " ";
  return out + "(" + format_path(g, xi.cycle) + ")^inf";
}

EvPath parse_evpath(const Graph& g, const std::string& text) {
  std::string s = trim(text);
  auto open = s.find('(');
  auto close = s.rfind(")^inf");
  if (open == std::string::npos || close == std::string::npos || close < open ||
      close + 5 != s.size())
    throw Error(ErrorKind::ParseError, "expected 'prefix (cycle)^inf': " + text);
  Path cycle = parse_path(g, s.substr(open + 1, close - open - 1));
  std::string head = trim(s.substr(0, open));
  Path prefix = head.empty() ? Path::empty(cycle.range()) : parse_path(g, head);
  try {
    return EvPath::make(std::move(prefix), std::move(cycle));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.detail() + ": " + text);
  }
}

Germ Germ::make(const Graph& g, Path alpha, Word w, Path beta, EvPath xi) {
  if (w.domain() != beta.source() || w.terminus() != alpha.source())
    throw Error(ErrorKind::EndpointMismatch, "word does not fit between s(beta) and s(alpha)");
  if (!ev_starts_with(g, xi, beta))
    throw Error(ErrorKind::NotAlongPoint, format_path(g, beta) + " is not a prefix of " + format_evpath(g, xi));
  return Germ{std::move(alpha), std::move(w), std::move(beta), std::move(xi)};
}

const EvPath& source_point(const Germ& x) { return x.xi; }

EvPath range_point(const ActionSystem& sys, const Germ& x, PeriodicityBudget budget) {
  const Graph& g = sys.graph();
  EvPath img = ev_act(sys, x.w, ev_drop(g, x.xi, x.beta.length()), budget);
  return EvPath{concat(x.alpha, img.prefix), img.cycle};
}

Germ extend(const ActionSystem& sys, const Germ& x, const Path& lambda) {
  const Graph& g = sys.graph();
  if (lambda.range() != x.beta.source() || !ev_starts_with(g, ev_drop(g, x.xi, x.beta.length()), lambda))
    throw Error(ErrorKind::NotAlongPoint,
                format_path(g, x.beta) + " " + format_path(g, lambda) + " is not a prefix of " +
                    format_evpath(g, x.xi));
  auto [img, res] = sys.act_restrict_path(x.w, lambda);
  return Germ{concat(x.alpha, img), std::move(res), concat(x.beta, lambda), x.xi};
}

Verdict germ_equal(const ActionSystem& sys, const Germ& a, const Germ& b, Budget budget) {
  const Graph& g = sys.graph();
  if (!ev_equal(g, a.xi, b.xi)) return Verdict::No;
  if (rho(a) != rho(b)) return Verdict::No;
  Germ x = a, y = b;
  if (x.beta.length() < y.beta.length())
    x = extend(sys, x, slice(g, x.xi, x.beta.length(), y.beta.length() - x.beta.length()));
  else if (y.beta.length() < x.beta.length())
    y = extend(sys, y, slice(g, y.xi, y.beta.length(), x.beta.length() - y.beta.length()));
  if (x.alpha != y.alpha || x.beta != y.beta) return Verdict::No;
  if (x.w == y.w) return Verdict::Yes;
  return equal(sys, x.w, y.w, budget).verdict;
}

Germ compose(const ActionSystem& sys, const Germ& a, const Germ& b, PeriodicityBudget budget) {
  const Graph& g = sys.graph();
  Germ x = a, y = b;
  if (x.beta.length() < y.alpha.length())
    x = extend(sys, x, slice(g, x.xi, x.beta.length(), y.alpha.length() - x.beta.length()));
  else if (y.alpha.length() < x.beta.length())
    y = extend(sys, y, slice(g, y.xi, y.beta.length(), x.beta.length() - y.alpha.length()));
  if (x.beta != y.alpha || !ev_equal(g, x.xi, range_point(sys, y, budget)))
    throw Error(ErrorKind::NotComposable, "t(" + format_germ(sys, b) + ") != d(" + format_germ(sys, a) + ")");
  return Germ{x.alpha, x.w * y.w, y.beta, y.xi};
}

Germ invert(const ActionSystem& sys, const Germ& x, PeriodicityBudget budget) {
  return Germ{x.beta, x.w.inverse(), x.alpha, range_point(sys, x, budget)};
}

Germ unit_germ(const EvPath& xi) {
  VertexId v = xi.range();
  return Germ{Path::empty(v), Word::unit(v), Path::empty(v), xi};
}

std::int64_t rho(const Germ& x) {
  return static_cast<std::int64_t>(x.alpha.length()) - static_cast<std::int64_t>(x.beta.length());
}

Bisection std_bisection(const Word& w) {
  return Bisection{Path::empty(w.terminus()), w, Path::empty(w.domain())};
}

Bisection std_bisection_edge(const Graph& g, EdgeId e) {
  VertexId s = g.source(e);
  return Bisection{Path::single(g, e), Word::unit(s), Path::empty(s)};
}

Bisection std_bisection_vertex(VertexId v) {
  return Bisection{Path::empty(v), Word::unit(v), Path::empty(v)};
}

std::int64_t rho(const Bisection& b) {
  return static_cast<std::int64_t>(b.alpha.length()) - static_cast<std::int64_t>(b.beta.length());
}

std::optional<Germ> germ_at(const Graph& g, const Bisection& b, const EvPath& xi) {
  if (!ev_starts_with(g, xi, b.beta)) return std::nullopt;
  return Germ{b.alpha, b.w, b.beta, xi};
}

std::string format_germ(const ActionSystem& sys, const Germ& x) {
  return "[" + sys.format(x.alpha) + ", " + sys.format(x.w) + ", " + sys.format(x.beta) + "; " +
         format_evpath(sys.graph(), x.xi) + "]";
}

Germ parse_germ(const ActionSystem& sys, const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorKind::ParseError, "germ must look like [alpha, w, beta; xi]: " + text);
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw Error(ErrorKind::ParseError, "germ needs '; xi': " + text);
  std::string head = s.substr(0, semi);
  if (std::count(head.begin(), head.end(), ',') != 2)
    throw Error(ErrorKind::ParseError, "germ needs alpha, w, beta: " + text);
  auto c1 = head.find(','), c2 = head.find(',', c1 + 1);
  Path alpha = sys.parse_path(trim(head.substr(0, c1)));
  Word w = sys.parse_word(trim(head.substr(c1 + 1, c2 - c1 - 1)));
  Path beta = sys.parse_path(trim(head.substr(c2 + 1)));
  EvPath xi = parse_evpath(sys.graph(), s.substr(semi + 1));
  return Germ::make(sys.graph(), std::move(alpha), std::move(w), std::move(beta), std::move(xi));
}

std::string format_bisection(const ActionSystem& sys, const Bisection& b) {
  return "B(" + sys.format(b.alpha) + ", " + sys.format(b.w) + ", " + sys.format(b.beta) + ")";
}

}  // namespace selfsim
