#include "framecraft/zak.hpp"

#include <algorithm>
#include <cmath>

#include "framecraft/error.hpp"

namespace framecraft {

namespace {

void require_table(const LtwoG& space, const IrrepTable& table) {
  if (!same_group(space.subgroup(), table.group()))
    throw Error(ErrorCode::GroupMismatch, "irrep table does not belong to the subgroup");
}

void require_size(const LtwoG& space, const CVector& f) {
  if (f.size() != space.size())
    throw Error(ErrorCode::SizeMismatch, "function on G needs " + std::to_string(space.size()) + " values");
}

}  // namespace

LtwoG::LtwoG(CosetDecomposition cosets) : cosets_(std::move(cosets)) {}

cplx LtwoG::inner_product(const CVector& f, const CVector& g) const {
  require_size(*this, f);
  require_size(*this, g);
  return g.dot(f) / static_cast<double>(subgroup()->order());
}

double LtwoG::norm_sq(const CVector& f) const {
  require_size(*this, f);
  return f.squaredNorm() / subgroup()->order();
}

CVector LtwoG::left_translate(const CVector& f, Element k) const {
  require_size(*this, f);
  const auto& g = *parent();
  const Element inv = g.inverse(cosets_.embedding().parent_of(k));
  CVector out(f.size());
  for (Element x = 0; x < g.order(); ++x) out[x] = f[g.mul(inv, x)];
  return out;
}

ZakCoefficients zak(const CVector& f, const LtwoG& space, const IrrepTable& table) {
  require_table(space, table);
  require_size(space, f);
  const auto& cosets = space.cosets();
  const int nk = space.subgroup()->order();
  const int nc = cosets.num_cosets();
  ZakCoefficients z;
  z.num_cosets = nc;
  for (int p = 0; p < table.size(); ++p) {
    const int d = table.dim(p);
    CMatrix block = CMatrix::Zero(nc * d, d);
    for (int c = 0; c < nc; ++c)
      for (Element k = 0; k < nk; ++k) {
        const cplx v = f[cosets.compose(k, c)];
        if (v != 0.0) block.block(c * d, 0, d, d) += v * table(p, k).adjoint();
      }
    z.blocks.push_back(block / static_cast<double>(nk));
  }
  return z;
}

CVector inverse_zak(const ZakCoefficients& z, const LtwoG& space, const IrrepTable& table) {
  require_table(space, table);
  const auto& cosets = space.cosets();
  const int nk = space.subgroup()->order();
  if (z.num_cosets != cosets.num_cosets() || static_cast<int>(z.blocks.size()) != table.size())
    throw Error(ErrorCode::ShapeMismatch, "Zak coefficients do not match the coset decomposition");
  CVector f = CVector::Zero(space.size());
  for (int p = 0; p < table.size(); ++p) {
    const int d = table.dim(p);
    if (z.blocks[p].rows() != z.num_cosets * d || z.blocks[p].cols() != d)
      throw Error(ErrorCode::ShapeMismatch, "Zak block for '" + table.name(p) + "' has the wrong shape", {p});
    for (int c = 0; c < z.num_cosets; ++c)
      for (Element k = 0; k < nk; ++k)
        f[cosets.compose(k, c)] += static_cast<double>(d) * (z.blocks[p].block(c * d, 0, d, d) * table(p, k)).trace();
  }
  return f;
}

ZakCoefficients apply_cross_section_change(const ZakCoefficients& z, const std::vector<Element>& shift,
                                           const IrrepTable& table) {
  if (static_cast<int>(shift.size()) != z.num_cosets)
    throw Error(ErrorCode::ShapeMismatch, "one shift per coset is required");
  ZakCoefficients out = z;
  for (int p = 0; p < table.size(); ++p) {
    const int d = table.dim(p);
    for (int c = 0; c < z.num_cosets; ++c)
      out.blocks[p].block(c * d, 0, d, d) = table(p, shift[c]) * z.blocks[p].block(c * d, 0, d, d);
  }
  return out;
}

RangeFunction generated_range_function(const std::vector<CVector>& family, const LtwoG& space,
                                       const IrrepTable& table, const Tolerances& tol) {
  require_table(space, table);
  const int nc = space.cosets().num_cosets();
  std::vector<CMatrix> columns(table.size());
  for (int p = 0; p < table.size(); ++p) columns[p] = CMatrix(nc * table.dim(p), 0);
  for (const auto& f : family) {
    const auto z = zak(f, space, table);
    for (int p = 0; p < table.size(); ++p) {
      CMatrix wider(columns[p].rows(), columns[p].cols() + z.blocks[p].cols());
      wider << columns[p], z.blocks[p];
      columns[p] = std::move(wider);
    }
  }
  double top = 0;
  for (const auto& c : columns) top = std::max(top, linalg::spectral_norm(c));
  RangeFunction j;
  for (const auto& c : columns)
    j.fibers.push_back(top > 0 ? linalg::orthonormal_basis(c, tol.rank * top) : CMatrix(c.rows(), 0));
  return j;
}

RangeFunction complement(const RangeFunction& j) {
  RangeFunction out;
  for (const auto& fiber : j.fibers) out.fibers.push_back(linalg::orthogonal_complement(fiber, fiber.rows()));
  return out;
}

int invariant_dim(const RangeFunction& j, const IrrepTable& table) {
  int total = 0;
  for (int p = 0; p < table.size(); ++p) total += table.dim(p) * j.fiber_dim(p);
  return total;
}

bool is_member(const CVector& f, const RangeFunction& j, const LtwoG& space, const IrrepTable& table,
               const Tolerances& tol) {
  const auto z = zak(f, space, table);
  if (static_cast<int>(j.fibers.size()) != table.size())
    throw Error(ErrorCode::ShapeMismatch, "range function needs one fiber per irrep");
  double residual = 0, total = 0;
  for (int p = 0; p < table.size(); ++p) {
    if (j.fibers[p].rows() != z.blocks[p].rows())
      throw Error(ErrorCode::ShapeMismatch, "fiber for '" + table.name(p) + "' has the wrong ambient dimension", {p});
    const CMatrix& b = z.blocks[p];
    const CMatrix off = b - j.fibers[p] * (j.fibers[p].adjoint() * b);
    residual += table.dim(p) * off.squaredNorm();
    total += table.dim(p) * b.squaredNorm();
  }
  if (total == 0) return true;
  return std::sqrt(residual / total) <= tol.membership;
}

CVector project_onto(const CVector& f, const RangeFunction& j, const LtwoG& space, const IrrepTable& table) {
  auto z = zak(f, space, table);
  for (int p = 0; p < table.size(); ++p) z.blocks[p] = j.fibers[p] * (j.fibers[p].adjoint() * z.blocks[p]);
  return inverse_zak(z, space, table);
}

std::vector<ZakComponent> canonical_decomposition(const RangeFunction& j) {
  std::vector<ZakComponent> out;
  for (int p = 0; p < static_cast<int>(j.fibers.size()); ++p)
    for (Eigen::Index c = 0; c < j.fibers[p].cols(); ++c) out.push_back({p, j.fibers[p].col(c)});
  return out;
}

std::vector<CVector> component_basis(const ZakComponent& c, const LtwoG& space, const IrrepTable& table) {
  const int nc = space.cosets().num_cosets();
  const int d = table.dim(c.irrep);
  if (c.fiber_vector.size() != nc * d)
    throw Error(ErrorCode::ShapeMismatch, "fiber vector has the wrong length");
  std::vector<CVector> basis;
  for (int col = 0; col < d; ++col) {
    ZakCoefficients z;
    z.num_cosets = nc;
    for (int p = 0; p < table.size(); ++p) z.blocks.push_back(CMatrix::Zero(nc * table.dim(p), table.dim(p)));
    z.blocks[c.irrep].col(col) = c.fiber_vector / std::sqrt(static_cast<double>(d));
    basis.push_back(inverse_zak(z, space, table));
  }
  return basis;
}

FrameReport translates_frame_bounds(const std::vector<CVector>& family, const LtwoG& space,
                                    const IrrepTable& table, const Tolerances& tol) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "frame of translates needs at least one function");
  require_table(space, table);
  const int nc = space.cosets().num_cosets();
  std::vector<CMatrix> fiber_ops;
  for (int p = 0; p < table.size(); ++p) {
    const int n = nc * table.dim(p);
    fiber_ops.push_back(CMatrix::Zero(n, n));
  }
  for (const auto& f : family) {
    const auto z = zak(f, space, table);
    for (int p = 0; p < table.size(); ++p) fiber_ops[p] += z.blocks[p] * z.blocks[p].adjoint();
  }
  std::vector<linalg::HermitianEigen> eigs;
  double top = 0;
  for (const auto& op : fiber_ops) {
    eigs.push_back(linalg::hermitian_eig(op));
    if (eigs.back().values.size()) top = std::max(top, eigs.back().values.maxCoeff());
  }
  // J(pi) is the range of the fiber frame operator; its spectrum there gives the bounds.
  std::vector<std::vector<double>> spectra;
  int span = 0;
  for (int p = 0; p < table.size(); ++p) {
    spectra.push_back(top > 0 ? linalg::above(eigs[p].values, tol.rank * top) : std::vector<double>{});
    span += table.dim(p) * static_cast<int>(spectra.back().size());
  }
  auto report = report_from_spectra(std::move(spectra), span, space.subgroup()->order(), tol);
  report.is_frame_for_whole_space = span == space.size();
  return report;
}

}  // namespace framecraft
