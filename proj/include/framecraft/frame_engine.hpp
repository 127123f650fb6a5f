#pragma once

#include <optional>
#include <vector>

#include "framecraft/frame_report.hpp"
#include "framecraft/group.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/tolerances.hpp"

namespace framecraft {

/// Orbit {rho(x) f} analyzed through the eigenvalues of [f,f](pi).
FrameReport frame_bounds_single(const UnitaryRep& rep, const CVector& f, const IrrepTable& table,
                                const Tolerances& tol = {});

/// Left multiplication by [f,f](pi) on d_pi x d_pi matrices, in the basis
/// E_ij / sqrt(d_pi) ordered row-major. Equals [f,f](pi) (x) I.
std::vector<CMatrix> gramian_blocks(const UnitaryRep& rep, const CVector& f,
                                    const IrrepTable& table);

/// G[x][y] = (1/|K|) <rho(y) f, rho(x) f>, built directly from the orbit.
CMatrix gramian_oracle(const UnitaryRep& rep, const CVector& f);

/// S = (1/|K|) sum rho(x) f f^* rho(x)^*.
CMatrix frame_operator(const UnitaryRep& rep, const CVector& f);

/// S^+ f and (S^+)^(1/2) f, inverses taken on <f>.
CVector canonical_dual(const UnitaryRep& rep, const CVector& f, const Tolerances& tol = {});
CVector canonical_tight(const UnitaryRep& rep, const CVector& f, const Tolerances& tol = {});

struct IsotypicalFrameCheck {
  /// Report for P_pi f inside M_pi, per irrep in table order.
  std::vector<FrameReport> components;
  FrameReport global;
  /// Component bounds combine to the global bounds and the whole-space
  /// verdicts agree.
  bool consistent = false;
};

IsotypicalFrameCheck isotypical_frame_check(const UnitaryRep& rep, const CVector& f,
                                            const IrrepTable& table, const Tolerances& tol = {});

struct TwoTransitiveVerdict {
  bool tight = false;            // |sum f|^2 == sum |f|^2 and f != 0
  double sum_abs_sq = 0;         // |sum f|^2
  double norm_sq = 0;            // sum |f|^2
  bool frame_operator_tight = false;
  std::optional<double> discrete_bound;
  int orbit_size = 0;
  bool consistent = false;
};

/// Throws Error{NotTwoTransitive}.
TwoTransitiveVerdict two_transitive_tightness(const GroupAction& action, const CVector& f,
                                              const Tolerances& tol = {});

}  // namespace framecraft
