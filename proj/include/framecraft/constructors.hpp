#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framecraft/harmonic.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/tolerances.hpp"

namespace framecraft {

/// r_pi in [0, d_pi] per irrep, table order. Throws Error{ShapeMismatch}.
void check_ranks(const IrrepTable& table, const std::vector<int>& ranks);

/// f with F(pi) = projection onto the first r_pi basis vectors of H_pi.
GroupFunction parseval_generator(const IrrepTable& table, const std::vector<int>& ranks);

struct FrameMatrix {
  /// Column x is the frame vector for group element x.
  CMatrix vectors;
  /// (irrep name, rows kept) in output order.
  std::vector<std::pair<std::string, int>> rows_kept;
  std::string basis;
};

/// Columns stack sqrt(d_pi) pi_ij(x) for rows i < r_pi, all j. Throws
/// Error{EmptySelection} when every rank is zero.
FrameMatrix harmonic_frame(const IrrepTable& table, const std::vector<int>& ranks);

/// Direct sum of r_pi copies of conj(pi).
UnitaryRep rep_from_rank_selection(const IrrepTable& table, const std::vector<int>& ranks);

struct KFrameVerdict {
  bool admits = false;
  std::string reason;
  std::vector<int> multiplicities;
  /// A Parseval generator for the whole space when one exists.
  std::optional<CVector> generator;
};

/// Finite K: a Parseval orbit for H_rho exists iff mult(pi, rho) <= d_pi.
KFrameVerdict admits_k_frame(const UnitaryRep& rep, const IrrepTable& table,
                             const Tolerances& tol = {});

/// ones + psi with psi scaled to ||psi||^2 = n^2 - n; default psi is
/// (1, -1, 0, ..., 0). Throws Error{BadPsi}.
CVector permutation_frame_generator(int n, const std::optional<CVector>& psi = std::nullopt,
                                    const Tolerances& tol = {});

}  // namespace framecraft
