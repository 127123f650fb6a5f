#include "framecraft/frame_engine.hpp"

#include <algorithm>
#include <cmath>

#include "framecraft/bracket.hpp"
#include "framecraft/error.hpp"

namespace framecraft {

namespace {

CMatrix orbit_matrix(const UnitaryRep& rep, const CVector& f) {
  if (f.size() != rep.dim()) throw Error(ErrorCode::RepMismatch, "vector length does not match the representation");
  const int n = rep.group()->order();
  CMatrix orbit(rep.dim(), n);
  for (Element x = 0; x < n; ++x) orbit.col(x) = rep(x) * f;
  return orbit;
}

double top_eigenvalue(const CMatrix& m) {
  const auto eig = linalg::hermitian_eig(m);
  return eig.values.size() ? eig.values.maxCoeff() : 0.0;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

FrameReport frame_bounds_single(const UnitaryRep& rep, const CVector& f, const IrrepTable& table,
                                const Tolerances& tol) {
  const auto b = bracket(rep, f, f, table);
  std::vector<std::vector<double>> spectra;
  for (const auto& block : b.blocks) {
    const auto eig = linalg::hermitian_eig(block);
    spectra.emplace_back(eig.values.data(), eig.values.data() + eig.values.size());
  }
  const auto cyc = is_cyclic(rep, f, table, tol);
  auto report = report_from_spectra(std::move(spectra), cyc.span_dim, rep.group()->order(), tol);
  report.is_frame_for_whole_space = cyc.cyclic;
  return report;
}

std::vector<CMatrix> gramian_blocks(const UnitaryRep& rep, const CVector& f, const IrrepTable& table) {
  const auto b = bracket(rep, f, f, table);
  std::vector<CMatrix> out;
  for (int p = 0; p < table.size(); ++p)
    out.push_back(linalg::kron(b.blocks[p], CMatrix::Identity(table.dim(p), table.dim(p))));
  return out;
}

CMatrix gramian_oracle(const UnitaryRep& rep, const CVector& f) {
  const CMatrix orbit = orbit_matrix(rep, f);
  return orbit.adjoint() * orbit / static_cast<double>(rep.group()->order());
}

CMatrix frame_operator(const UnitaryRep& rep, const CVector& f) {
  const CMatrix orbit = orbit_matrix(rep, f);
  return orbit * orbit.adjoint() / static_cast<double>(rep.group()->order());
}

CVector canonical_dual(const UnitaryRep& rep, const CVector& f, const Tolerances& tol) {
  const CMatrix s = frame_operator(rep, f);
  return linalg::psd_pinv(s, tol.rank * top_eigenvalue(s)) * f;
}

CVector canonical_tight(const UnitaryRep& rep, const CVector& f, const Tolerances& tol) {
  const CMatrix s = frame_operator(rep, f);
  return linalg::psd_pinv_sqrt(s, tol.rank * top_eigenvalue(s)) * f;
}

IsotypicalFrameCheck isotypical_frame_check(const UnitaryRep& rep, const CVector& f, const IrrepTable& table,
                                            const Tolerances& tol) {
  IsotypicalFrameCheck check;
  check.global = frame_bounds_single(rep, f, table, tol);
  const auto mult = multiplicities(rep, table, tol);
  bool all_whole = true;
  bool any_bounds = false;
  double lo = 0, hi = 0;
  for (int p = 0; p < table.size(); ++p) {
    // Absent irreps project to rounding noise, which a relative cutoff would
    // read as a spanning vector.
    const CVector part = mult[p] == 0 ? CVector::Zero(rep.dim()).eval()
                                      : (isotypical_projection(rep, table, p) * f).eval();
    auto report = frame_bounds_single(rep, part, table, tol);
    report.is_frame_for_whole_space = report.span_dim == table.dim(p) * mult[p];
    all_whole = all_whole && *report.is_frame_for_whole_space;
    if (report.continuous_bounds) {
      lo = any_bounds ? std::min(lo, report.continuous_bounds->first) : report.continuous_bounds->first;
      hi = any_bounds ? std::max(hi, report.continuous_bounds->second) : report.continuous_bounds->second;
      any_bounds = true;
    }
    check.components.push_back(std::move(report));
  }
  const auto& g = check.global;
  const bool bounds_agree = any_bounds == g.continuous_bounds.has_value() &&
                            (!any_bounds || (close(lo, g.continuous_bounds->first, tol.spectrum) &&
                                             close(hi, g.continuous_bounds->second, tol.spectrum)));
  check.consistent = bounds_agree && all_whole == g.is_frame_for_whole_space.value_or(false);
  return check;
}

TwoTransitiveVerdict two_transitive_tightness(const GroupAction& action, const CVector& f, const Tolerances& tol) {
  if (!is_two_transitive(action)) throw Error(ErrorCode::NotTwoTransitive, "action is not 2-transitive");
  if (f.size() != action.set_size())
    throw Error(ErrorCode::SizeMismatch, "vector needs one entry per point of the set");
  TwoTransitiveVerdict v;
  v.sum_abs_sq = std::norm(f.sum());
  v.norm_sq = f.squaredNorm();
  v.orbit_size = action.group()->order();
  v.tight = v.norm_sq > 0 && std::abs(v.sum_abs_sq - v.norm_sq) <= tol.tight * v.norm_sq;

  const auto rep = permutation_representation(action);
  const auto eig = linalg::hermitian_eig(frame_operator(rep, f));
  const double lo = eig.values.minCoeff(), hi = eig.values.maxCoeff();
  v.frame_operator_tight = hi > 0 && hi - lo <= tol.tight * hi;
  if (v.frame_operator_tight) v.discrete_bound = eig.values.mean() * v.orbit_size;
  v.consistent = v.tight == v.frame_operator_tight;
  return v;
}

}  // namespace framecraft
