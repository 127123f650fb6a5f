#pragma once

#include <vector>

#include "framecraft/harmonic.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/tolerances.hpp"

namespace framecraft {

/// x -> <f, rho(x) g>, linear in f.
GroupFunction matrix_element(const UnitaryRep& rep, const CVector& f, const CVector& g);

/// Fourier transform of matrix_element(f, g).
BracketValue bracket(const UnitaryRep& rep, const CVector& f, const CVector& g,
                     const IrrepTable& table);

/// Orthonormal basis of the cyclic subspace spanned by the orbit of f.
CMatrix cyclic_span_basis(const UnitaryRep& rep, const CVector& f, const Tolerances& tol = {});

/// The isometry <f> -> L2(K) intertwining rho with left translation, applied
/// to g. Throws Error{NotInCyclicSpan} when g is not in <f>.
GroupFunction cyclic_isometry_image(const UnitaryRep& rep, const CVector& g, const CVector& f,
                                    const IrrepTable& table, const Tolerances& tol = {});

/// Ranks are eigenvalue counts above tol.rank times the largest eigenvalue
/// over all blocks.
std::vector<int> bracket_ranks(const BracketValue& b, const Tolerances& tol = {});

struct CyclicityReport {
  bool cyclic = false;
  std::vector<int> ranks;     // rank [f,f](pi)
  std::vector<int> expected;  // mult(contragredient pi, rho)
  int span_dim = 0;           // sum d_pi * rank
  int dim = 0;
};

CyclicityReport is_cyclic(const UnitaryRep& rep, const CVector& f, const IrrepTable& table,
                          const Tolerances& tol = {});

/// rho realized inside L2(K x Z_m) (index k * m + i) as an orthogonal sum of
/// cyclic pieces. `isometry` maps coordinates in H_rho to function values on
/// the model group; it satisfies ||Tg||^2 = ||g||^2 with the K-normalized
/// inner product and T rho(k) = L_(k,0) T.
struct RegularModel {
  std::vector<CVector> generators;
  GroupPtr model_group;
  int copies = 0;
  CMatrix isometry;
};

RegularModel embed_into_regular_model(const UnitaryRep& rep, const IrrepTable& table,
                                      const Tolerances& tol = {});

}  // namespace framecraft
