#pragma once

#include <vector>

#include "framecraft/frame_report.hpp"
#include "framecraft/group.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/tolerances.hpp"

namespace framecraft {

/// L2(G) for a pair K <= G: weight 1/|K| on every point of G, so that the
/// coset map K x (K\G) -> G is measure preserving with counting measure on K\G.
class LtwoG {
 public:
  explicit LtwoG(CosetDecomposition cosets);

  const GroupPtr& parent() const { return cosets_.embedding().parent(); }
  const GroupPtr& subgroup() const { return cosets_.embedding().induced(); }
  const CosetDecomposition& cosets() const { return cosets_; }
  int size() const { return parent()->order(); }

  cplx inner_product(const CVector& f, const CVector& g) const;
  double norm_sq(const CVector& f) const;

  /// (L_k f)(x) = f(k^-1 x) for a K-index k.
  CVector left_translate(const CVector& f, Element k) const;

 private:
  CosetDecomposition cosets_;
};

/// Block pi has shape (cosets * d_pi) x d_pi; rows of coset c hold the
/// Fourier coefficient of x -> f(x tau(c)) on K.
struct ZakCoefficients {
  std::vector<CMatrix> blocks;
  int num_cosets = 1;
};

ZakCoefficients zak(const CVector& f, const LtwoG& space, const IrrepTable& table);
CVector inverse_zak(const ZakCoefficients& z, const LtwoG& space, const IrrepTable& table);

/// Transform for the cross section tau'(c) = eta_c tau(c), given the
/// transform for tau: coset block c is left-multiplied by pi(eta_c).
ZakCoefficients apply_cross_section_change(const ZakCoefficients& z,
                                           const std::vector<Element>& shift,
                                           const IrrepTable& table);

/// One subspace J(pi) per irrep, given by orthonormal columns.
struct RangeFunction {
  std::vector<CMatrix> fibers;

  int fiber_dim(int p) const { return static_cast<int>(fibers[p].cols()); }
};

/// J(pi) = span of the columns of Zf(pi) over the family.
RangeFunction generated_range_function(const std::vector<CVector>& family, const LtwoG& space,
                                       const IrrepTable& table, const Tolerances& tol = {});

/// Fiberwise orthogonal complement.
RangeFunction complement(const RangeFunction& j);

/// Dimension of V_J: sum_pi d_pi dim J(pi).
int invariant_dim(const RangeFunction& j, const IrrepTable& table);

bool is_member(const CVector& f, const RangeFunction& j, const LtwoG& space,
               const IrrepTable& table, const Tolerances& tol = {});

/// Orthogonal projection of L2(G) onto V_J.
CVector project_onto(const CVector& f, const RangeFunction& j, const LtwoG& space,
                     const IrrepTable& table);

/// An irreducible K-invariant piece of V_J: all g whose transform vanishes
/// off `irrep` and whose columns at `irrep` are multiples of `fiber_vector`.
/// K acts on it through the contragredient of `irrep`.
struct ZakComponent {
  int irrep = 0;
  CVector fiber_vector;
};

std::vector<ZakComponent> canonical_decomposition(const RangeFunction& j);

/// Orthonormal basis (in L2(G)) of a component, d_pi functions.
std::vector<CVector> component_basis(const ZakComponent& c, const LtwoG& space,
                                     const IrrepTable& table);

/// Bounds of {L_k f : k in K, f in family} on the subspace it spans, from the
/// spectra of sum_f Zf(pi) Zf(pi)^* restricted to J(pi).
FrameReport translates_frame_bounds(const std::vector<CVector>& family, const LtwoG& space,
                                    const IrrepTable& table, const Tolerances& tol = {});

}  // namespace framecraft
