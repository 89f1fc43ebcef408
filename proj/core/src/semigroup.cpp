#include "selfsim/semigroup.hpp"

#include <algorithm>

#include "selfsim/error.hpp"

namespace selfsim {

Triple Triple::make(Path alpha, Word w, Path beta) {
  if (w.domain() != beta.source() || w.terminus() != alpha.source())
    throw Error(ErrorKind::EndpointMismatch, "word does not fit between s(beta) and s(alpha)");
  Triple x;
  x.zero_ = false;
  x.alpha_ = std::move(alpha);
  x.w_ = std::move(w);
  x.beta_ = std::move(beta);
  return x;
}

Triple Triple::idempotent(const Path& alpha) { return make(alpha, Word::unit(alpha.source()), alpha); }

Triple multiply(const ActionSystem& sys, const Triple& x, const Triple& y) {
  if (x.is_zero() || y.is_zero()) return Triple::zero();
  const Path& beta = x.beta();
  const Path& lambda = y.alpha();
  if (auto mu = strip_prefix(beta, lambda)) {
    // beta = lambda mu: (alpha, g (h|_{h^-1 mu}), omega (h^-1 mu))
    const Word& h = y.word();
    auto [pre, hinv_res] = sys.act_restrict_path(h.inverse(), *mu);
    Word res = hinv_res.inverse();  // h|_{h^-1 mu} = (h^-1|_mu)^-1
    return Triple::make(x.alpha(), x.word() * res, concat(y.beta(), pre));
  }
  if (auto mu = strip_prefix(lambda, beta)) {
    // lambda = beta mu: (alpha (g·mu), g|_mu h, omega)
    auto [img, res] = sys.act_restrict_path(x.word(), *mu);
    return Triple::make(concat(x.alpha(), img), res * y.word(), y.beta());
  }
  return Triple::zero();
}

Triple star(const Triple& x) {
  if (x.is_zero()) return x;
  return Triple::make(x.beta(), x.word().inverse(), x.alpha());
}

Verdict triple_equal(const ActionSystem& sys, const Triple& x, const Triple& y, Budget budget) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero() ? Verdict::Yes : Verdict::No;
  if (x.alpha() != y.alpha() || x.beta() != y.beta()) return Verdict::No;
  if (x.word() == y.word()) return Verdict::Yes;
  return equal(sys, x.word(), y.word(), budget).verdict;
}

bool is_idempotent(const ActionSystem& sys, const Triple& x, Budget budget) {
  Verdict v = triple_equal(sys, multiply(sys, x, x), x, budget);
  if (v == Verdict::Unknown)
    throw Error(ErrorKind::InconclusiveWordProblem, "idempotence of " + format_triple(sys, x));
  return v == Verdict::Yes;
}

std::optional<Path> act_on_path(const ActionSystem& sys, const Triple& x, const Path& p) {
  if (x.is_zero()) return std::nullopt;
  auto mu = strip_prefix(p, x.beta());
  if (!mu) return std::nullopt;
  return concat(x.alpha(), sys.act_path(x.word(), *mu));
}

std::string format_triple(const ActionSystem& sys, const Triple& x) {
  if (x.is_zero()) return "0";
  return "(" + sys.format(x.alpha()) + ", " + sys.format(x.word()) + ", " + sys.format(x.beta()) + ")";
}

Triple parse_triple(const ActionSystem& sys, const std::string& text) {
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\n");
    auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string s = trim(text);
  if (s == "0") return Triple::zero();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorKind::ParseError, "triple must look like (alpha, w, beta): " + text);
  s = s.substr(1, s.size() - 2);
  if (std::count(s.begin(), s.end(), ',') != 2)
    throw Error(ErrorKind::ParseError, "triple needs exactly three components: " + text);
  auto c1 = s.find(','), c2 = s.find(',', c1 + 1);
  Path alpha = sys.parse_path(trim(s.substr(0, c1)));
  Word w = sys.parse_word(trim(s.substr(c1 + 1, c2 - c1 - 1)));
  Path beta = sys.parse_path(trim(s.substr(c2 + 1)));
  return Triple::make(std::move(alpha), std::move(w), std::move(beta));
}

}  // namespace selfsim
