#pragma once

#include <optional>
#include <vector>

#include "framecraft/frame_report.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/tolerances.hpp"
#include "framecraft/zak.hpp"

namespace framecraft {

/// Generators in the model space H = sum_pi H_pi^(m_pi). components[j][pi] is
/// an m_pi x d_pi matrix whose row i is the i-th copy component of generator j.
struct MultiGenSpec {
  std::vector<int> multiplicities;
  std::vector<std::vector<CMatrix>> generators;

  int num_generators() const { return static_cast<int>(generators.size()); }
};

/// Throws Error{ShapeMismatch}.
void validate_spec(const MultiGenSpec& spec, const IrrepTable& table);

/// Q[i][i'] = sum_j <f_(i',j), f_(i,j)>, so that c^* Q c = sum_j ||sum_i c_i f_(i,j)||^2.
CMatrix row_form(const MultiGenSpec& spec, int p);

struct RieszEntry {
  std::vector<double> gram_eigenvalues;  // ascending
  double lower = 0;
  double upper = 0;
  bool independent = false;
};

/// Spectrum of Q (or fiber^* Q fiber when a fiber basis is given).
RieszEntry riesz_row_bounds(const MultiGenSpec& spec, const IrrepTable& table, int p,
                            const std::optional<CMatrix>& fiber = std::nullopt,
                            const Tolerances& tol = {});

struct RieszReport {
  /// Empty for irreps with m_pi = 0.
  std::vector<std::optional<RieszEntry>> per_pi;
  /// Bounds on the span; is_frame_for_whole_space compares with H (or V_J).
  FrameReport overall;
  /// Irreps whose rows are not a Riesz sequence.
  std::vector<int> deficient;
  /// Rows lie in l2 of the index set; automatic for finite families.
  bool rows_square_summable = true;
};

/// J(pi) = range of Q_pi, the fibers of the subspace the orbit spans.
RangeFunction generated_fibers(const MultiGenSpec& spec, const IrrepTable& table,
                               const Tolerances& tol = {});

/// Without J: frame for H iff every Q_pi is invertible. With J: generators
/// must lie in V_J (Error{GeneratorsOutsideVJ}) and the forms are restricted.
RieszReport multigen_frame_bounds(const MultiGenSpec& spec, const IrrepTable& table,
                                  const std::optional<RangeFunction>& j = std::nullopt,
                                  const Tolerances& tol = {});

struct MultiGenIsotypicalCheck {
  std::vector<std::optional<FrameReport>> per_pi;
  RieszReport overall;
  bool consistent = false;
};

MultiGenIsotypicalCheck multigen_isotypical_check(const MultiGenSpec& spec,
                                                  const IrrepTable& table,
                                                  const Tolerances& tol = {});

/// rho acting on H as pi on each copy. Coordinates ordered by irrep, copy,
/// then basis index.
UnitaryRep standard_model_rep(const IrrepTable& table, const std::vector<int>& multiplicities);

/// Coordinates of generator j in the standard model.
CVector model_vector(const MultiGenSpec& spec, int j, const IrrepTable& table);

/// Splits vectors of H_rho along an explicit isotypic basis.
MultiGenSpec spec_from_rep_vectors(const UnitaryRep& rep, const std::vector<CVector>& vectors,
                                   const IrrepTable& table, const Tolerances& tol = {});

/// The irreducible subspace {(conj(e_i) u)_i : u in H_pi} of H_pi^(m_pi).
struct MultiGenComponent {
  int irrep = 0;
  CVector fiber_vector;
  /// Orthonormal basis in standard model coordinates, d_pi columns.
  CMatrix basis;
};

std::vector<MultiGenComponent> canonical_decomposition_general(
    const std::vector<int>& multiplicities, const RangeFunction& j, const IrrepTable& table);

}  // namespace framecraft
