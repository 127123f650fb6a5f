#include "framecraft/bracket.hpp"

#include <algorithm>
#include <cmath>

#include "framecraft/builtin_groups.hpp"
#include "framecraft/error.hpp"

namespace framecraft {

namespace {

void require_vector(const UnitaryRep& rep, const CVector& v) {
  if (v.size() != rep.dim())
    throw Error(ErrorCode::RepMismatch, "vector length " + std::to_string(v.size()) +
                                            " does not match representation dimension " + std::to_string(rep.dim()));
}

void require_table(const UnitaryRep& rep, const IrrepTable& table) {
  if (!same_group(rep.group(), table.group()))
    throw Error(ErrorCode::GroupMismatch, "representation and irrep table use different groups");
}

double largest_eigenvalue(const BracketValue& b) {
  double top = 0;
  for (const auto& block : b.blocks) {
    const auto eig = linalg::hermitian_eig(block);
    if (eig.values.size()) top = std::max(top, eig.values.maxCoeff());
  }
  return top;
}

}  // namespace

GroupFunction matrix_element(const UnitaryRep& rep, const CVector& f, const CVector& g) {
  require_vector(rep, f);
  require_vector(rep, g);
  GroupFunction out = GroupFunction::zero(rep.group());
  for (Element x = 0; x < rep.group()->order(); ++x) out.values[x] = (rep(x) * g).dot(f);
  return out;
}

BracketValue bracket(const UnitaryRep& rep, const CVector& f, const CVector& g, const IrrepTable& table) {
  require_table(rep, table);
  return fourier(matrix_element(rep, f, g), table);
}

CMatrix cyclic_span_basis(const UnitaryRep& rep, const CVector& f, const Tolerances& tol) {
  require_vector(rep, f);
  const int n = rep.group()->order();
  CMatrix orbit(rep.dim(), n);
  for (Element x = 0; x < n; ++x) orbit.col(x) = rep(x) * f;
  const double top = linalg::spectral_norm(orbit);
  if (top == 0) return CMatrix(rep.dim(), 0);
  // Singular values of the orbit are square roots of frame operator eigenvalues.
  return linalg::orthonormal_basis(orbit, std::sqrt(tol.rank) * top);
}

GroupFunction cyclic_isometry_image(const UnitaryRep& rep, const CVector& g, const CVector& f,
                                    const IrrepTable& table, const Tolerances& tol) {
  require_table(rep, table);
  require_vector(rep, g);
  const CMatrix span = cyclic_span_basis(rep, f, tol);
  const double residual = (g - span * (span.adjoint() * g)).norm();
  if (residual > tol.membership * g.norm())
    throw Error(ErrorCode::NotInCyclicSpan, "vector is not in the cyclic subspace of the generator");
  const auto ff = bracket(rep, f, f, table);
  const auto gf = bracket(rep, g, f, table);
  const double cutoff = tol.rank * largest_eigenvalue(ff);
  FourierCoefficients image;
  for (int p = 0; p < table.size(); ++p)
    image.blocks.push_back(linalg::psd_pinv_sqrt(ff.blocks[p], cutoff) * gf.blocks[p]);
  return inverse_fourier(image, table);
}

std::vector<int> bracket_ranks(const BracketValue& b, const Tolerances& tol) {
  std::vector<linalg::HermitianEigen> eigs;
  double top = 0;
  for (const auto& block : b.blocks) {
    eigs.push_back(linalg::hermitian_eig(block));
    if (eigs.back().values.size()) top = std::max(top, eigs.back().values.maxCoeff());
  }
  std::vector<int> ranks;
  for (const auto& e : eigs)
    ranks.push_back(top > 0 ? static_cast<int>(linalg::above(e.values, tol.rank * top).size()) : 0);
  return ranks;
}

CyclicityReport is_cyclic(const UnitaryRep& rep, const CVector& f, const IrrepTable& table, const Tolerances& tol) {
  CyclicityReport r;
  r.dim = rep.dim();
  r.ranks = bracket_ranks(bracket(rep, f, f, table), tol);
  const auto mult = multiplicities(rep, table, tol);
  r.cyclic = true;
  for (int p = 0; p < table.size(); ++p) {
    r.expected.push_back(mult[table.contragredient_of(p)]);
    r.span_dim += table.dim(p) * r.ranks[p];
    if (r.ranks[p] != r.expected[p]) r.cyclic = false;
  }
  return r;
}

RegularModel embed_into_regular_model(const UnitaryRep& rep, const IrrepTable& table, const Tolerances& tol) {
  require_table(rep, table);
  const int dim = rep.dim();
  RegularModel model;
  std::vector<CMatrix> pieces;
  CMatrix residual = CMatrix::Identity(dim, dim);
  while (residual.cols() > 0) {
    // Largest projection of a standard basis vector onto what is left.
    Eigen::Index best = 0;
    residual.rowwise().squaredNorm().maxCoeff(&best);
    CVector f = residual * residual.row(best).adjoint();
    f /= f.norm();
    const CMatrix span = cyclic_span_basis(rep, f, tol);
    model.generators.push_back(f);
    pieces.push_back(span);
    const CMatrix rest = residual - span * (span.adjoint() * residual);
    residual = linalg::orthonormal_basis(rest, 0.5);
  }
  model.copies = static_cast<int>(model.generators.size());
  model.model_group = direct_product(*rep.group(), *builtin_group(GroupSpec{GroupSpec::Kind::Cyclic, model.copies, {}}));
  const int nk = rep.group()->order();
  model.isometry = CMatrix::Zero(nk * model.copies, dim);
  for (int a = 0; a < dim; ++a) {
    const CVector e = CVector::Unit(dim, a);
    for (int i = 0; i < model.copies; ++i) {
      const CVector part = pieces[i] * (pieces[i].adjoint() * e);
      if (part.norm() == 0) continue;
      const auto image = cyclic_isometry_image(rep, part, model.generators[i], table, tol);
      for (Element k = 0; k < nk; ++k) model.isometry(k * model.copies + i, a) = image.values[k];
    }
  }
  return model;
}

}  // namespace framecraft
