#pragma once

namespace framecraft {

/// Numerical thresholds shared by all modules. Values are relative to the
/// max-norm (or largest eigen/singular value) of the quantity being tested.
struct Tolerances {
  double unitary = 1e-10;     // unitarity / homomorphism of representation matrices
  double character = 1e-8;    // character inner products, multiplicities
  double numeric = 1e-9;      // generic identities (round trips, projections)
  double psd = 1e-9;          // min eigenvalue >= -psd * (1 + |lambda_max|)
  double rank = 1e-10;        // singular/eigen values below rank * max are zero
  double tight = 1e-8;        // A == B test
  double spectrum = 1e-8;     // multiset comparison of spectra
  double membership = 1e-8;   // relative residual for subspace membership

  bool valid() const {
    return unitary > 0 && character > 0 && numeric > 0 && psd > 0 && rank > 0 && tight > 0 &&
           spectrum > 0 && membership > 0;
  }
};

}  // namespace framecraft
