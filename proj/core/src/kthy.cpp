#include "selfsim/kthy.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "selfsim/error.hpp"

namespace selfsim {

namespace {

auto key(const MonoTerm& t) { return std::tie(t.z, t.mu, t.w, t.nu); }

bool key_less(const MonoTerm& a, const MonoTerm& b) { return key(a) < key(b); }

}  // namespace

Monomial Monomial::vertex(VertexId v, std::int64_t z) {
  return term(Path::empty(v), Word::unit(v), Path::empty(v), z);
}

Monomial Monomial::term(Path mu, Word w, Path nu, std::int64_t z, Integer coeff) {
  Monomial m;
  m.add(MonoTerm{z, std::move(mu), std::move(w), std::move(nu), std::move(coeff)});
  return m;
}

void Monomial::add(MonoTerm t) {
  if (t.mu.length() != t.nu.length())
    throw Error(ErrorKind::MixedFilterLevel, "|mu| != |nu| in a term");
  if (t.w.domain() != t.nu.source() || t.w.terminus() != t.mu.source())
    throw Error(ErrorKind::EndpointMismatch, "word does not fit between s(nu) and s(mu)");
  if (!terms_.empty() && t.mu.length() != level_)
    throw Error(ErrorKind::MixedFilterLevel,
                "term of level " + std::to_string(t.mu.length()) + " added to level " + std::to_string(level_));
  if (t.coeff == 0) return;
  level_ = t.mu.length();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, key_less);
  if (it != terms_.end() && key(*it) == key(t)) {
    it->coeff += t.coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, std::move(t));
  }
}

Monomial operator+(Monomial a, const Monomial& b) {
  for (const auto& t : b.terms_) a.add(t);
  return a;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  if (a.empty() || b.empty()) return out;
  if (a.level_ != b.level_)
    throw Error(ErrorKind::MixedFilterLevel, "product of levels " + std::to_string(a.level_) + " and " +
                                                 std::to_string(b.level_));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      if (s.nu == t.mu) out.add(MonoTerm{s.z + t.z, s.mu, s.w * t.w, t.nu, s.coeff * t.coeff});
  return out;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (key(a.terms_[i]) != key(b.terms_[i]) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Monomial phi(const ActionSystem& sys, const Monomial& x) {
  const Graph& g = sys.graph();
  Monomial out;
  for (const auto& t : x.terms())
    for (EdgeId e : g.edges_into(t.w.domain())) {
      auto [img, res] = sys.act_restrict_edge(t.w, e);
      Path mu = t.mu, nu = t.nu;
      mu.push_back(g, img);
      nu.push_back(g, e);
      out.add(MonoTerm{t.z, std::move(mu), std::move(res), std::move(nu), t.coeff});
    }
  return out;
}

std::size_t level_multiplicity(const ActionSystem& sys) {
  if (!is_transitive(sys)) throw Error(ErrorKind::NotTransitive, "the action has more than one vertex orbit");
  const Graph& g = sys.graph();
  std::size_t D = g.edges_into(0).size();
  for (VertexId v = 1; v < g.num_vertices(); ++v)
    if (g.edges_into(v).size() != D)
      throw Error(ErrorKind::NonconstantInDegree, "|" + g.vertex_name(v) + "E^1| = " +
                                                      std::to_string(g.edges_into(v).size()) + " but " +
                                                      std::to_string(D) + " elsewhere");
  return D;
}

std::int64_t winding(const Monomial& x, const DegreeCocycle& c) {
  std::set<Path> rows, cols;
  std::int64_t total = 0;
  for (const auto& t : x.terms()) {
    if (t.coeff != 1) throw Error(ErrorKind::NotMonomialUnitary, "coefficient other than 1");
    if (!rows.insert(t.mu).second || !cols.insert(t.nu).second)
      throw Error(ErrorKind::NotMonomialUnitary, "repeated row or column");
    total += t.z + c(t.w);
  }
  if (rows != cols) throw Error(ErrorKind::NotMonomialUnitary, "row and column sets differ");
  return total;
}

Monomial standard_unitary(const ActionSystem& sys) {
  Monomial m;
  for (VertexId v = 0; v < sys.graph().num_vertices(); ++v) m = m + Monomial::vertex(v, v == 0 ? 1 : 0);
  return m;
}

Multipliers multipliers(const ActionSystem& sys, const DegreeCocycle& c) {
  Multipliers m;
  m.D = level_multiplicity(sys);
  for (VertexId v = 0; v < sys.graph().num_vertices(); ++v) {
    auto n = phi(sys, Monomial::vertex(v)).size();
    if (n != m.D)
      throw Error(ErrorKind::NonconstantInDegree, "phi(i_" + sys.graph().vertex_name(v) + ") has " +
                                                      std::to_string(n) + " terms");
  }
  m.phi0 = static_cast<std::int64_t>(m.D);
  m.phi1 = winding(phi(sys, standard_unitary(sys)), c);
  return m;
}

namespace {

Integer magnitude(std::int64_t x) { return x < 0 ? Integer(-Integer(x)) : Integer(x); }

// 1 - Phi acting on colim(Z, Phi).
std::pair<AbGroup, AbGroup> one_minus(std::int64_t phi) {
  if (phi == 0) return {AbGroup::zero(), AbGroup::zero()};
  return ker_coker(LocMult(1 - Integer(phi), 1, magnitude(phi)));
}

}  // namespace

std::pair<AbGroup, AbGroup> k_fixed_point(const Multipliers& m) {
  return {colimit_const_Z(magnitude(m.phi0)), colimit_const_Z(magnitude(m.phi1))};
}

std::pair<AbGroup, AbGroup> k_cuntz_pimsner(const Multipliers& m) {
  auto [ker0, coker0] = one_minus(m.phi0);
  auto [ker1, coker1] = one_minus(m.phi1);
  return {ker1 + coker0, ker0 + coker1};
}

std::pair<AbGroup, AbGroup> k_of_groupoid_algebra(const ActionSystem& sys, ProbeSettings settings) {
  if (!is_transitive(sys)) throw Error(ErrorKind::NotTransitive, "the action has more than one vertex orbit");
  auto iso = isotropy_probe(sys, 0, settings.isotropy_length, 1, settings.budget);
  if (iso.nonunit_loops.empty()) return {AbGroup::free(1), AbGroup::zero()};
  return {AbGroup::free(1), AbGroup::free(1)};
}

KReport k_pipeline(const ActionSystem& sys, const DegreeCocycle& c, ProbeSettings settings) {
  KReport r;
  r.assumptions = assess_assumptions(sys, c, settings);
  require_assumptions(r.assumptions);
  r.unit_image = phi(sys, Monomial::vertex(0));
  r.unitary_image = phi(sys, standard_unitary(sys));
  r.multipliers = multipliers(sys, c);
  r.k_groupoid = k_of_groupoid_algebra(sys, settings);
  r.k_fixed = k_fixed_point(r.multipliers);
  r.k_algebra = k_cuntz_pimsner(r.multipliers);
  return r;
}

std::string format_monomial(const ActionSystem& sys, const Monomial& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& t : x.terms()) {
    if (!out.empty()) out += " + ";
    if (t.coeff != 1) out += t.coeff.str() + "*";
    if (t.z != 0) out += "z^" + std::to_string(t.z) + " ";
    out += "(" + sys.format(t.mu) + ", " + sys.format(t.w) + ", " + sys.format(t.nu) + ")";
  }
  return out;
}

}  // namespace selfsim
