#include "framecraft/constructors.hpp"

#include <cmath>

#include "framecraft/error.hpp"

namespace framecraft {

void check_ranks(const IrrepTable& table, const std::vector<int>& ranks) {
  if (static_cast<int>(ranks.size()) != table.size())
    throw Error(ErrorCode::ShapeMismatch, "need one rank per irrep (" + std::to_string(table.size()) + ")");
  for (int p = 0; p < table.size(); ++p)
    if (ranks[p] < 0 || ranks[p] > table.dim(p))
      throw Error(ErrorCode::ShapeMismatch, "rank for '" + table.name(p) + "' must lie in [0, " +
                                                std::to_string(table.dim(p)) + "]", {p});
}

GroupFunction parseval_generator(const IrrepTable& table, const std::vector<int>& ranks) {
  check_ranks(table, ranks);
  FourierCoefficients coeffs;
  for (int p = 0; p < table.size(); ++p) {
    CMatrix proj = CMatrix::Zero(table.dim(p), table.dim(p));
    for (int i = 0; i < ranks[p]; ++i) proj(i, i) = 1.0;
    coeffs.blocks.push_back(std::move(proj));
  }
  return inverse_fourier(coeffs, table);
}

FrameMatrix harmonic_frame(const IrrepTable& table, const std::vector<int>& ranks) {
  check_ranks(table, ranks);
  int rows = 0;
  for (int p = 0; p < table.size(); ++p) rows += ranks[p] * table.dim(p);
  if (rows == 0) throw Error(ErrorCode::EmptySelection, "every rank is zero; the frame would be empty");
  const int n = table.group()->order();
  FrameMatrix out;
  out.basis = table.basis_label();
  out.vectors = CMatrix::Zero(rows, n);
  int row = 0;
  for (int p = 0; p < table.size(); ++p) {
    if (ranks[p] == 0) continue;
    const int d = table.dim(p);
    const double scale = std::sqrt(static_cast<double>(d));
    for (int i = 0; i < ranks[p]; ++i)
      for (int j = 0; j < d; ++j, ++row)
        for (Element x = 0; x < n; ++x) out.vectors(row, x) = scale * table(p, x)(i, j);
    out.rows_kept.emplace_back(table.name(p), ranks[p]);
  }
  return out;
}

UnitaryRep rep_from_rank_selection(const IrrepTable& table, const std::vector<int>& ranks) {
  check_ranks(table, ranks);
  std::vector<UnitaryRep> parts;
  for (int p = 0; p < table.size(); ++p)
    for (int i = 0; i < ranks[p]; ++i) parts.push_back(conjugate_rep(table.irrep(p)));
  if (parts.empty()) throw Error(ErrorCode::EmptySelection, "every rank is zero; the representation would be empty");
  return direct_sum(parts);
}

KFrameVerdict admits_k_frame(const UnitaryRep& rep, const IrrepTable& table, const Tolerances& tol) {
  KFrameVerdict v;
  v.multiplicities = multiplicities(rep, table, tol);
  for (int p = 0; p < table.size(); ++p)
    if (v.multiplicities[p] > table.dim(p)) {
      v.reason = "irrep '" + table.name(p) + "' occurs " + std::to_string(v.multiplicities[p]) +
                 " times but has dimension " + std::to_string(table.dim(p));
      return v;
    }
  // Copy i of pi gets sqrt(d_pi) e_i: the copy rows are orthogonal with squared
  // norm d_pi, which makes the orbit Parseval for the whole space.
  const auto iso = isotypic_basis(rep, table, tol);
  CVector coords = CVector::Zero(rep.dim());
  int block = 0;
  for (int p = 0; p < table.size(); ++p)
    for (int i = 0; i < v.multiplicities[p]; ++i, ++block)
      coords[iso.block_offsets[block] + i] = std::sqrt(static_cast<double>(table.dim(p)));
  v.admits = true;
  v.reason = "every irrep occurs at most as often as its dimension";
  v.generator = iso.unitary * coords;
  return v;
}

CVector permutation_frame_generator(int n, const std::optional<CVector>& psi, const Tolerances& tol) {
  if (n < 1) throw Error(ErrorCode::BadPsi, "the set must have at least one point");
  CVector dir = CVector::Zero(n);
  if (psi) {
    if (psi->size() != n) throw Error(ErrorCode::BadPsi, "psi needs " + std::to_string(n) + " entries");
    const double norm = psi->norm();
    if (norm <= tol.numeric) throw Error(ErrorCode::BadPsi, "psi must be nonzero");
    if (std::abs(psi->sum()) > tol.numeric * norm * std::sqrt(static_cast<double>(n)))
      throw Error(ErrorCode::BadPsi, "psi must sum to zero");
    dir = *psi / norm;
  } else if (n >= 2) {
    dir[0] = 1.0 / std::sqrt(2.0);
    dir[1] = -1.0 / std::sqrt(2.0);
  }
  return CVector::Ones(n) + std::sqrt(static_cast<double>(n) * n - n) * dir;
}

}  // namespace framecraft
