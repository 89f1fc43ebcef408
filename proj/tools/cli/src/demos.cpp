#include "selfsim/cli/demos.hpp"

#include "selfsim/error.hpp"

namespace selfsim::cli {

namespace {

GroupoidAction on_pair2(bool flip) {
  auto H = pair_groupoid(2);
  auto G = cyclic_group(2);
  std::vector<ElemId> anchor(H.size(), 0);
  return GroupoidAction::build(G, H, anchor, [flip](ElemId h, ElemId g) -> ElemId {
    if (g == 0 || !flip) return h;
    ElemId i = h / 2, j = h % 2;
    return (1 - i) * 2 + (1 - j);
  });
}

FiniteGroupoid pair3_z2() { return product(pair_groupoid(3), cyclic_group(2)); }

GroupoidAction unit_space_action(const FiniteGroupoid& G) {
  auto H = units_only(G.units().size());
  std::vector<ElemId> anchor(H.size());
  for (ElemId u = 0; u < H.size(); ++u) anchor[u] = G.units()[u];
  return GroupoidAction::build(G, H, anchor,
                               [&G](ElemId, ElemId g) { return static_cast<ElemId>(G.unit_index(G.d(g))); });
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"hg-trivial", "hg-flip", "hg-unit-space", "rho-zero", "rho-identity", "rho-projection"};
}

SimilarityDemo make_demo(const std::string& name) {
  auto z2 = cyclic_group(2);
  if (name == "hg-trivial")
    return {name, "(H x| G) x_pi G ~ H, Z/2 acting trivially on pair(2)", canonical_similarity_HG(on_pair2(false))};
  if (name == "hg-flip")
    return {name, "(H x| G) x_pi G ~ H, Z/2 swapping the points of pair(2)", canonical_similarity_HG(on_pair2(true))};
  if (name == "hg-unit-space") {
    auto G = pair3_z2();
    return {name, "(H x| G) x_pi G ~ H, pair(3) x Z/2 on its unit space", canonical_similarity_HG(unit_space_action(G))};
  }
  if (name == "rho-zero")
    return {name, "(G x_rho Z/2) x| Z/2 ~ G, G = Z/2, rho = 0", canonical_similarity_Grho(z2, z2, GroupoidHom{{0, 0}})};
  if (name == "rho-identity")
    return {name, "(G x_rho Z/2) x| Z/2 ~ G, G = Z/2, rho = id", canonical_similarity_Grho(z2, z2, identity_hom(z2))};
  if (name == "rho-projection") {
    auto G = pair3_z2();
    GroupoidHom rho;
    for (ElemId x = 0; x < G.size(); ++x) rho.map.push_back(x % 2);
    return {name, "(G x_rho Z/2) x| Z/2 ~ G, G = pair(3) x Z/2, rho = projection",
            canonical_similarity_Grho(G, z2, rho)};
  }
  throw Error(ErrorKind::UnknownIdentifier, "no similarity demo named '" + name + "'");
}

bool corrupt_theta(SimilarityData& s) {
  const auto& G1 = s.G1;
  for (std::size_t i = 0; i < s.theta1.size(); ++i) {
    ElemId th = s.theta1[i];
    for (ElemId z : G1.isotropy(G1.t(th))) {
      if (G1.is_unit(z)) continue;
      s.theta1[i] = G1.mul(z, th);
      return true;
    }
  }
  return false;
}

}  // namespace selfsim::cli
