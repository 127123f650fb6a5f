#include "framecraft/linalg.hpp"

#include <algorithm>

#include "framecraft/error.hpp"

namespace framecraft::linalg {

HermitianEigen hermitian_eig(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "eigensolver needs a square matrix");
  if (m.rows() == 0) return {RVector(0), CMatrix(0, 0)};
  const CMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericFailure, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& m) {
  return max_abs(m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols()));
}

namespace {

template <typename F>
CMatrix spectral_apply(const CMatrix& m, double cutoff, F fn) {
  const auto eig = hermitian_eig(m);
  RVector mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    mapped[i] = eig.values[i] > cutoff ? fn(eig.values[i]) : 0.0;
  }
  return eig.vectors * mapped.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

CMatrix psd_sqrt(const CMatrix& m, double cutoff) {
  return spectral_apply(m, cutoff, [](double x) { return std::sqrt(x); });
}

CMatrix psd_pinv(const CMatrix& m, double cutoff) {
  return spectral_apply(m, cutoff, [](double x) { return 1.0 / x; });
}

CMatrix psd_pinv_sqrt(const CMatrix& m, double cutoff) {
  return spectral_apply(m, cutoff, [](double x) { return 1.0 / std::sqrt(x); });
}

CMatrix orthonormal_basis(const CMatrix& cols, double cutoff) {
  if (cols.rows() == 0 || cols.cols() == 0) return CMatrix(cols.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(cols, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s[r] > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()[0];
}

CMatrix orthogonal_complement(const CMatrix& basis, Eigen::Index n) {
  if (basis.cols() == 0) return CMatrix::Identity(n, n);
  const CMatrix proj = CMatrix::Identity(n, n) - basis * basis.adjoint();
  const auto eig = hermitian_eig(proj);
  const Eigen::Index k = n - basis.cols();
  // Eigenvalues are 0 (span) or 1 (complement); the top k are the complement.
  return eig.vectors.rightCols(k);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<double> above(const RVector& values, double cutoff) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values[i] > cutoff) out.push_back(values[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace framecraft::linalg
