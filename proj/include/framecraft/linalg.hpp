#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace framecraft {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

namespace linalg {

/// Eigen-decomposition of (M + M*)/2. Eigenvalues ascending.
struct HermitianEigen {
  RVector values;
  CMatrix vectors;
};

HermitianEigen hermitian_eig(const CMatrix& m);

double max_abs(const CMatrix& m);

/// Largest |entry| of M*M - I.
double unitarity_defect(const CMatrix& m);

/// Rank-truncated functions of a PSD matrix; eigenvalues <= `cutoff` are zeroed.
CMatrix psd_sqrt(const CMatrix& m, double cutoff);
CMatrix psd_pinv(const CMatrix& m, double cutoff);
CMatrix psd_pinv_sqrt(const CMatrix& m, double cutoff);

/// Orthonormal basis (as columns) for the column span of `cols`, keeping
/// singular directions whose singular value exceeds `cutoff`.
CMatrix orthonormal_basis(const CMatrix& cols, double cutoff);

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const CMatrix& m);

/// Orthogonal complement of the span of the orthonormal columns `basis` in C^n.
CMatrix orthogonal_complement(const CMatrix& basis, Eigen::Index n);

/// Kronecker product.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Eigenvalues strictly above `cutoff`, ascending.
std::vector<double> above(const RVector& values, double cutoff);

}  // namespace linalg
}  // namespace framecraft
