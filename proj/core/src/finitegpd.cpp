#include "selfsim/finitegpd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "selfsim/error.hpp"

namespace selfsim {

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidGroupoid, what); }

}  // namespace

// ---------------------------------------------------------------- groupoid

FiniteGroupoid FiniteGroupoid::build(std::vector<std::string> names, std::vector<ElemId> d,
                                     std::vector<ElemId> t, const Product& mul) {
  const std::size_t n = names.size();
  if (d.size() != n || t.size() != n) invalid("d and t must list every element");
  if (n == 0) invalid("a groupoid needs at least one element");
  FiniteGroupoid G;
  G.names_ = std::move(names);
  G.d_ = std::move(d);
  G.t_ = std::move(t);
  {
    std::unordered_map<std::string, ElemId> seen;
    for (ElemId g = 0; g < n; ++g)
      if (!seen.emplace(G.names_[g], g).second) invalid("duplicate element name " + G.names_[g]);
  }
  for (ElemId g = 0; g < n; ++g) {
    if (G.d_[g] >= n || G.t_[g] >= n) invalid("d/t of " + G.names_[g] + " out of range");
    if (G.d_[G.d_[g]] != G.d_[g] || G.t_[G.d_[g]] != G.d_[g] || G.d_[G.t_[g]] != G.t_[g] ||
        G.t_[G.t_[g]] != G.t_[g])
      invalid("d/t of " + G.names_[g] + " is not a unit");
  }
  G.unit_index_.assign(n, kNoElem);
  for (ElemId g = 0; g < n; ++g) {
    if (G.d_[g] == g) {
      if (G.t_[g] != g) invalid("unit " + G.names_[g] + " has t != itself");
      G.unit_index_[g] = G.units_.size();
      G.units_.push_back(g);
    }
  }
  G.by_terminus_.assign(G.units_.size(), {});
  for (ElemId g = 0; g < n; ++g) G.by_terminus_[G.unit_index_[G.t_[g]]].push_back(g);

  G.table_.assign(n * n, kNoElem);
  for (ElemId g = 0; g < n; ++g) {
    for (ElemId h : G.by_terminus_[G.unit_index_[G.d_[g]]]) {
      auto r = mul(g, h);
      if (!r || *r >= n) invalid("product " + G.names_[g] + "*" + G.names_[h] + " undefined");
      if (G.d_[*r] != G.d_[h] || G.t_[*r] != G.t_[g])
        invalid("product " + G.names_[g] + "*" + G.names_[h] + " has wrong endpoints");
      G.table_[g * n + h] = *r;
    }
  }
  for (ElemId g = 0; g < n; ++g) {
    if (G.table_[G.t_[g] * n + g] != g || G.table_[g * n + G.d_[g]] != g)
      invalid("units are not neutral for " + G.names_[g]);
  }
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b : G.by_terminus_[G.unit_index_[G.d_[a]]])
      for (ElemId c : G.by_terminus_[G.unit_index_[G.d_[b]]]) {
        ElemId ab = G.table_[a * n + b], bc = G.table_[b * n + c];
        if (G.table_[ab * n + c] != G.table_[a * n + bc])
          invalid("not associative at " + G.names_[a] + "," + G.names_[b] + "," + G.names_[c]);
      }
  G.inv_.assign(n, kNoElem);
  for (ElemId g = 0; g < n; ++g) {
    for (ElemId h : G.by_terminus_[G.unit_index_[G.d_[g]]]) {
      if (G.d_[h] != G.t_[g]) continue;
      if (G.table_[g * n + h] == G.t_[g] && G.table_[h * n + g] == G.d_[g]) {
        G.inv_[g] = h;
        break;
      }
    }
    if (G.inv_[g] == kNoElem) invalid(G.names_[g] + " has no inverse");
  }
  return G;
}

ElemId FiniteGroupoid::mul(ElemId g, ElemId h) const {
  if (g >= size() || h >= size()) throw Error(ErrorKind::InvalidGroupoid, "element out of range");
  ElemId r = table_[g * size() + h];
  if (r == kNoElem) throw Error(ErrorKind::NotComposable, names_[g] + " * " + names_[h]);
  return r;
}

std::optional<ElemId> FiniteGroupoid::find(const std::string& name) const {
  for (ElemId g = 0; g < size(); ++g)
    if (names_[g] == name) return g;
  return std::nullopt;
}

std::vector<std::vector<ElemId>> FiniteGroupoid::orbits() const {
  std::vector<std::size_t> parent(units_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find_root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElemId g = 0; g < size(); ++g) {
    auto a = find_root(unit_index_[d_[g]]), b = find_root(unit_index_[t_[g]]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<ElemId>> groups;
  for (std::size_t i = 0; i < units_.size(); ++i) groups[find_root(i)].push_back(units_[i]);
  std::vector<std::vector<ElemId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<ElemId> FiniteGroupoid::isotropy(ElemId u) const {
  std::vector<ElemId> out;
  for (ElemId g : with_terminus(u))
    if (d_[g] == u) out.push_back(g);
  return out;
}

FiniteGroupoid pair_groupoid(std::size_t k) {
  if (k == 0) invalid("pair groupoid on zero points");
  std::vector<std::string> names;
  std::vector<ElemId> d, t;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      names.push_back(pair_name(std::to_string(i + 1), std::to_string(j + 1)));
      d.push_back(static_cast<ElemId>(j * k + j));
      t.push_back(static_cast<ElemId>(i * k + i));
    }
  return FiniteGroupoid::build(std::move(names), std::move(d), std::move(t),
                               [k](ElemId a, ElemId b) -> std::optional<ElemId> {
                                 return static_cast<ElemId>((a / k) * k + b % k);
                               });
}

FiniteGroupoid cyclic_group(std::size_t n) {
  if (n == 0) invalid("cyclic group of order zero");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<ElemId> zeros(n, 0);
  return FiniteGroupoid::build(std::move(names), zeros, zeros,
                               [n](ElemId a, ElemId b) -> std::optional<ElemId> {
                                 return static_cast<ElemId>((a + b) % n);
                               });
}

FiniteGroupoid units_only(std::size_t k) {
  std::vector<std::string> names;
  std::vector<ElemId> ids(k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("u" + std::to_string(i + 1));
    ids[i] = static_cast<ElemId>(i);
  }
  return FiniteGroupoid::build(std::move(names), ids, ids,
                               [](ElemId a, ElemId) -> std::optional<ElemId> { return a; });
}

FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t nb = b.size();
  std::vector<std::string> names;
  std::vector<ElemId> d, t;
  for (ElemId x = 0; x < a.size(); ++x)
    for (ElemId y = 0; y < nb; ++y) {
      names.push_back(pair_name(a.name(x), b.name(y)));
      d.push_back(static_cast<ElemId>(a.d(x) * nb + b.d(y)));
      t.push_back(static_cast<ElemId>(a.t(x) * nb + b.t(y)));
    }
  return FiniteGroupoid::build(std::move(names), std::move(d), std::move(t),
                               [&](ElemId p, ElemId q) -> std::optional<ElemId> {
                                 ElemId x = a.mul(p / nb, q / nb), y = b.mul(p % nb, q % nb);
                                 return static_cast<ElemId>(x * nb + y);
                               });
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const auto off = static_cast<ElemId>(a.size());
  std::vector<std::string> names;
  std::vector<ElemId> d, t;
  for (ElemId x = 0; x < a.size(); ++x) {
    names.push_back("L" + a.name(x));
    d.push_back(a.d(x));
    t.push_back(a.t(x));
  }
  for (ElemId y = 0; y < b.size(); ++y) {
    names.push_back("R" + b.name(y));
    d.push_back(off + b.d(y));
    t.push_back(off + b.t(y));
  }
  return FiniteGroupoid::build(std::move(names), std::move(d), std::move(t),
                               [&](ElemId p, ElemId q) -> std::optional<ElemId> {
                                 if (p < off && q < off) return a.mul(p, q);
                                 if (p >= off && q >= off) return off + b.mul(p - off, q - off);
                                 return std::nullopt;
                               });
}

FiniteGroupoid relabel(const FiniteGroupoid& G, const std::vector<ElemId>& perm) {
  const std::size_t n = G.size();
  if (perm.size() != n) invalid("permutation size");
  std::vector<ElemId> back(n, kNoElem);
  for (ElemId i = 0; i < n; ++i) {
    if (perm[i] >= n || back[perm[i]] != kNoElem) invalid("not a permutation");
    back[perm[i]] = i;
  }
  std::vector<std::string> names(n);
  std::vector<ElemId> d(n), t(n);
  for (ElemId i = 0; i < n; ++i) {
    names[perm[i]] = G.name(i);
    d[perm[i]] = perm[G.d(i)];
    t[perm[i]] = perm[G.t(i)];
  }
  return FiniteGroupoid::build(std::move(names), std::move(d), std::move(t),
                               [&](ElemId a, ElemId b) -> std::optional<ElemId> {
                                 return perm[G.mul(back[a], back[b])];
                               });
}

// ---------------------------------------------------------------- homs

void validate_hom(const FiniteGroupoid& src, const FiniteGroupoid& dst, const GroupoidHom& f) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::InvalidHomomorphism, why); };
  if (f.map.size() != src.size()) bad("map does not cover the source");
  for (ElemId g = 0; g < src.size(); ++g) {
    if (f.map[g] >= dst.size()) bad("image of " + src.name(g) + " out of range");
    if (dst.d(f(g)) != f(src.d(g)) || dst.t(f(g)) != f(src.t(g)))
      bad("endpoints not preserved at " + src.name(g));
  }
  for (ElemId g = 0; g < src.size(); ++g)
    for (ElemId h : src.with_terminus(src.d(g)))
      if (f(src.mul(g, h)) != dst.mul(f(g), f(h)))
        bad("product not preserved at " + src.name(g) + "," + src.name(h));
}

GroupoidHom compose(const GroupoidHom& f, const GroupoidHom& g) {
  GroupoidHom out;
  out.map.reserve(g.map.size());
  for (ElemId x : g.map) out.map.push_back(f(x));
  return out;
}

GroupoidHom identity_hom(const FiniteGroupoid& g) {
  GroupoidHom f;
  f.map.resize(g.size());
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

// ---------------------------------------------------------------- actions

ElemId GroupoidAction::act(ElemId h, ElemId g) const {
  if (h >= H.size() || g >= G.size()) throw Error(ErrorKind::InvalidAction, "out of range");
  ElemId r = table[h * G.size() + g];
  if (r == kNoElem) throw Error(ErrorKind::NotComposable, "t(g) != p(h) in action");
  return r;
}

GroupoidAction GroupoidAction::build(FiniteGroupoid G, FiniteGroupoid H,
                                     std::vector<ElemId> anchor,
                                     const std::function<ElemId(ElemId, ElemId)>& act) {
  GroupoidAction a{std::move(G), std::move(H), std::move(anchor), {}};
  if (a.anchor.size() != a.H.size()) throw Error(ErrorKind::InvalidAction, "anchor size");
  for (ElemId p : a.anchor)
    if (p >= a.G.size() || !a.G.is_unit(p))
      throw Error(ErrorKind::InvalidAction, "anchor value is not a unit of G");
  a.table.assign(a.H.size() * a.G.size(), kNoElem);
  for (ElemId h = 0; h < a.H.size(); ++h)
    for (ElemId g : a.G.with_terminus(a.anchor[h])) {
      ElemId r = act(h, g);
      if (r >= a.H.size()) throw Error(ErrorKind::InvalidAction, "action value out of range");
      a.table[h * a.G.size() + g] = r;
    }
  validate_action(a);
  return a;
}

void validate_action(const GroupoidAction& a) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::InvalidAction, why); };
  const auto& G = a.G;
  const auto& H = a.H;
  for (ElemId h = 0; h < H.size(); ++h) {
    if (a.anchor[h] != a.anchor[H.t(h)] || a.anchor[h] != a.anchor[H.d(h)])
      bad("p is not constant along " + H.name(h));
    // iv)
    if (a.act(h, a.anchor[h]) != h) bad("h·p(h) != h at " + H.name(h));
    for (ElemId g1 : G.with_terminus(a.anchor[h])) {
      ElemId hg = a.act(h, g1);
      // i)
      if (a.anchor[hg] != G.d(g1)) bad("p(h·g) != d(g) at " + H.name(h) + "," + G.name(g1));
      // ii)
      for (ElemId g2 : G.with_terminus(G.d(g1)))
        if (a.act(h, G.mul(g1, g2)) != a.act(hg, g2))
          bad("h·(g1 g2) != (h·g1)·g2 at " + H.name(h));
    }
  }
  // iii)
  for (ElemId h1 = 0; h1 < H.size(); ++h1)
    for (ElemId h2 : H.with_terminus(H.d(h1))) {
      ElemId h12 = H.mul(h1, h2);
      for (ElemId g : G.with_terminus(a.anchor[h12])) {
        ElemId x = a.act(h1, g), y = a.act(h2, g);
        if (!H.composable(x, y) || H.mul(x, y) != a.act(h12, g))
          bad("(h1 h2)·g != (h1·g)(h2·g) at " + H.name(h1) + "," + H.name(h2));
      }
    }
}

// ---------------------------------------------------------------- constructions

std::optional<ElemId> Semidirect::find(ElemId h, ElemId g) const {
  auto it = std::lower_bound(parts.begin(), parts.end(), std::make_pair(h, g));
  if (it == parts.end() || *it != std::make_pair(h, g)) return std::nullopt;
  return static_cast<ElemId>(it - parts.begin());
}

std::optional<ElemId> Skew::find(ElemId g, ElemId gamma) const {
  auto it = std::lower_bound(parts.begin(), parts.end(), std::make_pair(g, gamma));
  if (it == parts.end() || *it != std::make_pair(g, gamma)) return std::nullopt;
  return static_cast<ElemId>(it - parts.begin());
}

Semidirect semidirect(const GroupoidAction& a) {
  const auto& G = a.G;
  const auto& H = a.H;
  Semidirect S;
  for (ElemId h = 0; h < H.size(); ++h)
    for (ElemId g : G.with_terminus(a.anchor[h])) S.parts.push_back({h, g});
  std::sort(S.parts.begin(), S.parts.end());
  const std::size_t n = S.parts.size();
  std::vector<std::string> names(n);
  std::vector<ElemId> d(n), t(n);
  auto id = [&](ElemId h, ElemId g) {
    auto r = S.find(h, g);
    if (!r) throw Error(ErrorKind::InvalidAction, "semidirect element missing");
    return *r;
  };
  for (ElemId x = 0; x < n; ++x) {
    auto [h, g] = S.parts[x];
    names[x] = pair_name(H.name(h), G.name(g));
    ElemId dh = a.act(H.d(h), g);
    d[x] = id(dh, a.anchor[dh]);
    t[x] = id(H.t(h), a.anchor[H.t(h)]);
  }
  S.groupoid = FiniteGroupoid::build(
      std::move(names), std::move(d), std::move(t), [&](ElemId x, ElemId y) -> std::optional<ElemId> {
        auto [h, g] = S.parts[x];
        auto [k, g2] = S.parts[y];
        // (h,g)(k,g2) = (h (k·g^-1), g g2)
        ElemId k1 = a.act(k, G.inverse(g));
        if (!H.composable(h, k1) || !G.composable(g, g2)) return std::nullopt;
        return S.find(H.mul(h, k1), G.mul(g, g2));
      });
  S.pi.map.resize(n);
  for (ElemId x = 0; x < n; ++x) S.pi.map[x] = S.parts[x].second;
  return S;
}

Skew skew(const FiniteGroupoid& G, const FiniteGroupoid& Gamma, const GroupoidHom& rho) {
  validate_hom(G, Gamma, rho);
  Skew K;
  // (g, c) with d(c) = t(rho(g))
  for (ElemId g = 0; g < G.size(); ++g)
    for (ElemId c = 0; c < Gamma.size(); ++c)
      if (Gamma.d(c) == Gamma.t(rho(g))) K.parts.push_back({g, c});
  const std::size_t n = K.parts.size();
  std::vector<std::string> names(n);
  std::vector<ElemId> d(n), t(n);
  for (ElemId x = 0; x < n; ++x) {
    auto [g, c] = K.parts[x];
    names[x] = pair_name(G.name(g), Gamma.name(c));
    d[x] = *K.find(G.d(g), Gamma.mul(c, rho(g)));
    t[x] = *K.find(G.t(g), c);
  }
  K.groupoid = FiniteGroupoid::build(
      std::move(names), std::move(d), std::move(t), [&](ElemId x, ElemId y) -> std::optional<ElemId> {
        auto [g, c] = K.parts[x];
        auto [g2, c2] = K.parts[y];
        if (!G.composable(g, g2) || c2 != Gamma.mul(c, rho(g))) return std::nullopt;
        return K.find(G.mul(g, g2), c);
      });
  return K;
}

// ---------------------------------------------------------------- similarity

SimilarityReport similarity_check(const SimilarityData& s) {
  validate_hom(s.G1, s.G2, s.phi);
  validate_hom(s.G2, s.G1, s.psi);
  if (s.theta1.size() != s.G1.units().size() || s.theta2.size() != s.G2.units().size())
    throw Error(ErrorKind::EndpointMismatch, "theta must be given on every unit");

  SimilarityReport report;
  auto run = [&](const FiniteGroupoid& X, const std::vector<ElemId>& theta,
                 const GroupoidHom& composite, int side) {
    for (ElemId th : theta)
      if (th >= X.size()) throw Error(ErrorKind::EndpointMismatch, "theta value out of range");
    for (ElemId x = 0; x < X.size(); ++x) {
      ++report.checked;
      ElemId a = theta[X.unit_index(X.t(x))], b = theta[X.unit_index(X.d(x))];
      ElemId cx = composite(x);
      if (!X.composable(a, x) || !X.composable(cx, b))
        throw Error(ErrorKind::EndpointMismatch, "similarity products undefined at " + X.name(x));
      if (X.mul(a, x) != X.mul(cx, b)) {
        report.ok = false;
        report.witness = x;
        report.side = side;
        return false;
      }
    }
    return true;
  };
  if (!run(s.G1, s.theta1, compose(s.psi, s.phi), 1)) return report;
  run(s.G2, s.theta2, compose(s.phi, s.psi), 2);
  return report;
}

SimilarityData canonical_similarity_HG(const GroupoidAction& a) {
  const auto& G = a.G;
  const auto& H = a.H;
  Semidirect S = semidirect(a);
  Skew K = skew(S.groupoid, G, S.pi);
  SimilarityData out;
  out.G1 = K.groupoid;
  out.G2 = H;
  // phi(h, g, g') = h · g'^-1
  out.phi.map.resize(K.parts.size());
  for (ElemId x = 0; x < K.parts.size(); ++x) {
    auto [s, g2] = K.parts[x];
    ElemId h = S.parts[s].first;
    out.phi.map[x] = a.act(h, G.inverse(g2));
  }
  // psi(h) = (h, p(h), p(h))
  out.psi.map.resize(H.size());
  for (ElemId h = 0; h < H.size(); ++h) {
    ElemId p = a.anchor[h];
    out.psi.map[h] = *K.find(*S.find(h, p), p);
  }
  // theta(u, c) = (u · c^-1, c, t(c))
  for (ElemId unit : out.G1.units()) {
    auto [s, c] = K.parts[unit];
    ElemId u = S.parts[s].first;
    ElemId h = a.act(u, G.inverse(c));
    out.theta1.push_back(*K.find(*S.find(h, c), G.t(c)));
  }
  out.theta2 = H.units();
  return out;
}

SimilarityData canonical_similarity_Grho(const FiniteGroupoid& G, const FiniteGroupoid& Gamma,
                                         const GroupoidHom& rho) {
  Skew K = skew(G, Gamma, rho);
  const auto& H = K.groupoid;
  std::vector<ElemId> anchor(H.size());
  for (ElemId x = 0; x < H.size(); ++x) anchor[x] = Gamma.t(K.parts[x].second);
  // (g, c) · c' = (g, c'^-1 c)
  auto action = GroupoidAction::build(Gamma, H, anchor, [&](ElemId x, ElemId c2) {
    auto [g, c] = K.parts[x];
    return *K.find(g, Gamma.mul(Gamma.inverse(c2), c));
  });
  Semidirect S = semidirect(action);
  SimilarityData out;
  out.G1 = S.groupoid;
  out.G2 = G;
  out.phi.map.resize(S.parts.size());
  for (ElemId x = 0; x < S.parts.size(); ++x) out.phi.map[x] = K.parts[S.parts[x].first].first;
  // psi(g) = (g, rho(t(g)), rho(g))
  out.psi.map.resize(G.size());
  for (ElemId g = 0; g < G.size(); ++g)
    out.psi.map[g] = *S.find(*K.find(g, rho(G.t(g))), rho(g));
  // theta(u, c) = (u, rho(u), c^-1)
  for (ElemId unit : out.G1.units()) {
    auto [u, c] = K.parts[S.parts[unit].first];
    out.theta1.push_back(*S.find(*K.find(u, rho(u)), Gamma.inverse(c)));
  }
  out.theta2 = G.units();
  return out;
}

// ---------------------------------------------------------------- nerve

namespace {

// Lexicographic ranks of composable tuples without a lookup table.
struct TupleIndexer {
  const FiniteGroupoid& G;
  std::size_t n;
  // C[m][unit index]: number of m-tuples whose first entry has t = unit.
  std::vector<std::vector<std::size_t>> C;
  // P[m][g]: sum over h < g of C[m][d(h)]
  std::vector<std::vector<std::size_t>> P;
  // Q[m][g]: same sum restricted to h with t(h) = t(g)
  std::vector<std::vector<std::size_t>> Q;

  TupleIndexer(const FiniteGroupoid& g, std::size_t n_) : G(g), n(n_) {
    const std::size_t U = G.units().size();
    C.assign(n + 1, std::vector<std::size_t>(U, 0));
    for (std::size_t u = 0; u < U; ++u) C[0][u] = 1;
    for (std::size_t m = 1; m <= n; ++m)
      for (std::size_t u = 0; u < U; ++u) {
        std::size_t s = 0;
        for (ElemId h : G.with_terminus(G.units()[u])) s += C[m - 1][G.unit_index(G.d(h))];
        C[m][u] = s;
      }
    P.assign(n + 1, std::vector<std::size_t>(G.size() + 1, 0));
    Q.assign(n + 1, std::vector<std::size_t>(G.size(), 0));
    for (std::size_t m = 0; m <= n; ++m) {
      for (ElemId g = 0; g < G.size(); ++g)
        P[m][g + 1] = P[m][g] + C[m][G.unit_index(G.d(g))];
      for (ElemId u : G.units()) {
        std::size_t acc = 0;
        for (ElemId h : G.with_terminus(u)) {
          Q[m][h] = acc;
          acc += C[m][G.unit_index(G.d(h))];
        }
      }
    }
  }

  std::size_t total() const { return n == 0 ? G.units().size() : P[n - 1][G.size()]; }

  std::size_t rank(std::span<const ElemId> tup) const {
    const std::size_t k = tup.size();
    std::size_t r = P[k - 1][tup[0]];
    for (std::size_t i = 1; i < k; ++i) r += Q[k - 1 - i][tup[i]];
    return r;
  }
};

}  // namespace

std::size_t count_composable(const FiniteGroupoid& G, std::size_t n) {
  if (n == 0) return G.units().size();
  return TupleIndexer(G, n).total();
}

Tuples composable_tuples(const FiniteGroupoid& G, std::size_t n, std::size_t limit) {
  Tuples out;
  out.n = n;
  if (n == 0) {
    out.count = G.units().size();
    out.flat = G.units();
    return out;
  }
  std::size_t count = count_composable(G, n);
  if (count > limit)
    throw Error(ErrorKind::TupleLimitExceeded,
                std::to_string(count) + " composable " + std::to_string(n) + "-tuples");
  out.count = count;
  out.flat.reserve(count * n);
  std::vector<ElemId> cur(n);
  // Depth-first in lexicographic order.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.flat.insert(out.flat.end(), cur.begin(), cur.end());
      return;
    }
    if (i == 0) {
      for (ElemId g = 0; g < G.size(); ++g) {
        cur[0] = g;
        rec(1);
      }
      return;
    }
    for (ElemId g : G.with_terminus(G.d(cur[i - 1]))) {
      cur[i] = g;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

SparseIntMatrix boundary_matrix(const FiniteGroupoid& G, std::size_t n, std::size_t limit) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "boundary_matrix needs n >= 1");
  Tuples tuples = composable_tuples(G, n, limit);
  std::size_t rows = count_composable(G, n - 1);
  SparseIntMatrix m(rows, tuples.count);
  if (n == 1) {
    for (ElemId g = 0; g < G.size(); ++g) {
      m.add(G.unit_index(G.d(g)), g, 1);
      m.add(G.unit_index(G.t(g)), g, -1);
    }
    return m;
  }
  TupleIndexer idx(G, n - 1);
  std::vector<ElemId> face(n - 1);
  for (std::size_t j = 0; j < tuples.count; ++j) {
    auto tup = tuples[j];
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t w = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (i == 0 && k == 0) continue;
        if (i == n && k == n - 1) continue;
        if (i > 0 && i < n && k == i) continue;
        if (i > 0 && i < n && k == i - 1) {
          face[w++] = G.mul(tup[k], tup[k + 1]);
          continue;
        }
        face[w++] = tup[k];
      }
      m.add(idx.rank(face), j, (i % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

std::vector<AbGroup> homology(const FiniteGroupoid& G, std::size_t n_max, std::size_t limit) {
  std::vector<SparseIntMatrix> delta(n_max + 2);
  delta[0] = SparseIntMatrix(0, G.units().size());
  for (std::size_t k = 1; k <= n_max + 1; ++k) delta[k] = boundary_matrix(G, k, limit);
  std::vector<AbGroup> out;
  for (std::size_t k = 0; k <= n_max; ++k) out.push_back(homology_of_pair(delta[k], delta[k + 1]));
  return out;
}

}  // namespace selfsim
