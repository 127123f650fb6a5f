#include "framecraft/harmonic.hpp"

#include <algorithm>

#include "framecraft/error.hpp"

namespace framecraft {

namespace {

void require_same(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f.group, g.group)) throw Error(ErrorCode::GroupMismatch, "functions live on different groups");
}

void require_table(const GroupFunction& f, const IrrepTable& table) {
  if (!same_group(f.group, table.group()))
    throw Error(ErrorCode::GroupMismatch, "function and irrep table use different groups");
}

}  // namespace

GroupFunction::GroupFunction(GroupPtr g, CVector v) : group(std::move(g)), values(std::move(v)) {
  if (values.size() != group->order())
    throw Error(ErrorCode::SizeMismatch, "function needs one value per group element");
}

GroupFunction GroupFunction::zero(const GroupPtr& g) { return {g, CVector::Zero(g->order())}; }

GroupFunction GroupFunction::unit(const GroupPtr& g) {
  GroupFunction f = zero(g);
  f.values[g->identity()] = static_cast<double>(g->order());
  return f;
}

cplx inner_product(const GroupFunction& f, const GroupFunction& g) {
  require_same(f, g);
  // Eigen's dot conjugates its left operand.
  return g.values.dot(f.values) / static_cast<double>(f.group->order());
}

double norm_sq(const GroupFunction& f) {
  return f.values.squaredNorm() / f.group->order();
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  require_same(f, g);
  const auto& k = *f.group;
  GroupFunction out = GroupFunction::zero(f.group);
  for (Element y = 0; y < k.order(); ++y) {
    const Element y_inv = k.inverse(y);
    for (Element x = 0; x < k.order(); ++x) out.values[x] += f.values[y] * g.values[k.mul(y_inv, x)];
  }
  out.values /= static_cast<double>(k.order());
  return out;
}

GroupFunction involution(const GroupFunction& f) {
  GroupFunction out = GroupFunction::zero(f.group);
  for (Element x = 0; x < f.group->order(); ++x) out.values[x] = std::conj(f.values[f.group->inverse(x)]);
  return out;
}

GroupFunction left_translate(const GroupFunction& f, Element x) {
  const auto& k = *f.group;
  GroupFunction out = GroupFunction::zero(f.group);
  const Element x_inv = k.inverse(x);
  for (Element y = 0; y < k.order(); ++y) out.values[y] = f.values[k.mul(x_inv, y)];
  return out;
}

GroupFunction right_translate(const GroupFunction& f, Element x) {
  const auto& k = *f.group;
  GroupFunction out = GroupFunction::zero(f.group);
  for (Element y = 0; y < k.order(); ++y) out.values[y] = f.values[k.mul(y, x)];
  return out;
}

CMatrix fourier_block(const CVector& values, const IrrepTable& table, int p) {
  const int n = table.group()->order();
  if (values.size() != n) throw Error(ErrorCode::SizeMismatch, "function needs one value per group element");
  const int d = table.dim(p);
  CMatrix block = CMatrix::Zero(d, d);
  for (Element x = 0; x < n; ++x)
    if (values[x] != 0.0) block += values[x] * table(p, x).adjoint();
  return block / static_cast<double>(n);
}

FourierCoefficients fourier(const GroupFunction& f, const IrrepTable& table) {
  require_table(f, table);
  FourierCoefficients out;
  for (int p = 0; p < table.size(); ++p) out.blocks.push_back(fourier_block(f.values, table, p));
  return out;
}

GroupFunction inverse_fourier(const FourierCoefficients& coeffs, const IrrepTable& table) {
  if (static_cast<int>(coeffs.blocks.size()) != table.size())
    throw Error(ErrorCode::ShapeMismatch, "one Fourier block per irrep is required");
  for (int p = 0; p < table.size(); ++p)
    if (coeffs.blocks[p].rows() != table.dim(p) || coeffs.blocks[p].cols() != table.dim(p))
      throw Error(ErrorCode::ShapeMismatch, "Fourier block for '" + table.name(p) + "' has the wrong shape", {p});
  GroupFunction out = GroupFunction::zero(table.group());
  for (Element x = 0; x < table.group()->order(); ++x) {
    cplx v = 0;
    for (int p = 0; p < table.size(); ++p)
      v += static_cast<double>(table.dim(p)) * (coeffs.blocks[p] * table(p, x)).trace();
    out.values[x] = v;
  }
  return out;
}

double plancherel_norm_sq(const FourierCoefficients& coeffs, const IrrepTable& table) {
  double total = 0;
  for (int p = 0; p < table.size(); ++p) total += table.dim(p) * coeffs.blocks[p].squaredNorm();
  return total;
}

PositiveTypeVerdict is_positive_type(const GroupFunction& f, const IrrepTable& table, const Tolerances& tol) {
  require_table(f, table);
  PositiveTypeVerdict verdict;
  const double scale = std::max(1.0, f.values.size() ? f.values.cwiseAbs().maxCoeff() : 0.0);
  verdict.involution_defect = (involution(f).values - f.values).cwiseAbs().maxCoeff();
  if (verdict.involution_defect > tol.numeric * scale) verdict.positive = false;
  const auto coeffs = fourier(f, table);
  verdict.min_eigenvalue = 0;
  bool first = true;
  for (int p = 0; p < table.size(); ++p) {
    const auto eig = linalg::hermitian_eig(coeffs.blocks[p]);
    const double lo = eig.values.minCoeff();
    const double hi = eig.values.cwiseAbs().maxCoeff();
    if (first || lo < verdict.min_eigenvalue) verdict.min_eigenvalue = lo;
    first = false;
    if (lo < -tol.psd * (1 + hi) && !verdict.failing_irrep) {
      verdict.positive = false;
      verdict.failing_irrep = p;
    }
  }
  return verdict;
}

}  // namespace framecraft
