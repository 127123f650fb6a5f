#pragma once

// Subgroup pairs used by the Zak and translate suites.

#include <string>
#include <vector>

#include "framecraft.hpp"

namespace fixture {

struct Pair {
  std::string name;
  framecraft::LtwoG space;
  framecraft::IrrepTable table;
};

inline Pair make_pair(const std::string& parent, const std::string& sub, const std::vector<int>& members,
                      std::string name) {
  using namespace framecraft;
  const auto g = builtin_group(parent);
  const auto k = builtin_group(sub);
  auto emb = SubgroupEmbedding::from_homomorphism(g, k, find_isomorphism_onto(*k, *g, members));
  return {std::move(name), LtwoG(right_cosets(emb)), builtin_irrep_table(sub)};
}

inline std::vector<int> s4_point_stabilizer() {
  const auto perms = framecraft::symmetric_permutations(4);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i)
    if (perms[i][3] == 3) out.push_back(i);
  return out;
}

inline std::vector<Pair> zak_pairs() {
  return {make_pair("dihedral:3", "cyclic:3", {0, 1, 2}, "D3/Z3"),
          make_pair("dihedral:3", "cyclic:2", {0, 3}, "D3/Z2"),
          make_pair("symmetric:4", "symmetric:3", s4_point_stabilizer(), "S4/S3"),
          make_pair("cyclic:6", "cyclic:3", {0, 2, 4}, "Z6/Z3")};
}

/// Left translation by K on L2(G) as matrices on C^|G|, coordinates scaled so
/// the plain dot product is the L2(G) inner product.
inline framecraft::UnitaryRep translation_rep(const framecraft::LtwoG& space) {
  using namespace framecraft;
  const int n = space.size();
  std::vector<CMatrix> mats;
  for (Element k = 0; k < space.subgroup()->order(); ++k) {
    CMatrix m(n, n);
    for (int x = 0; x < n; ++x) {
      CVector e = CVector::Zero(n);
      e[x] = 1;
      m.col(x) = space.left_translate(e, k);
    }
    mats.push_back(std::move(m));
  }
  return UnitaryRep(space.subgroup(), std::move(mats));
}

}  // namespace fixture
