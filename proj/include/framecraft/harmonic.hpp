#pragma once

#include <optional>
#include <vector>

#include "framecraft/group.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/tolerances.hpp"

namespace framecraft {

/// An element of L2(K) with the normalized counting measure.
struct GroupFunction {
  GroupPtr group;
  CVector values;

  GroupFunction() = default;
  GroupFunction(GroupPtr g, CVector v);

  static GroupFunction zero(const GroupPtr& g);
  /// |K| * delta_e, the unit for convolution.
  static GroupFunction unit(const GroupPtr& g);
};

/// One d_pi x d_pi block per irrep, in table order. Brackets share the layout.
struct FourierCoefficients {
  std::vector<CMatrix> blocks;
};
using BracketValue = FourierCoefficients;

/// (1/|K|) sum f(x) conj(g(x)).
cplx inner_product(const GroupFunction& f, const GroupFunction& g);
double norm_sq(const GroupFunction& f);

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);
GroupFunction involution(const GroupFunction& f);

/// (L_x f)(y) = f(x^-1 y) and (R_x f)(y) = f(y x).
GroupFunction left_translate(const GroupFunction& f, Element x);
GroupFunction right_translate(const GroupFunction& f, Element x);

/// Coefficient at pi: (1/|K|) sum f(x) pi(x)^*.
FourierCoefficients fourier(const GroupFunction& f, const IrrepTable& table);
CMatrix fourier_block(const CVector& values, const IrrepTable& table, int p);

/// f(x) = sum_pi d_pi tr(F(pi) pi(x)).
GroupFunction inverse_fourier(const FourierCoefficients& coeffs, const IrrepTable& table);

/// sum_pi d_pi ||F(pi)||_HS^2, which equals ||f||^2 for f's transform.
double plancherel_norm_sq(const FourierCoefficients& coeffs, const IrrepTable& table);

struct PositiveTypeVerdict {
  bool positive = true;
  double involution_defect = 0;
  /// Set when some block fails: the irrep and its smallest eigenvalue.
  std::optional<int> failing_irrep;
  double min_eigenvalue = 0;
};

/// f = f* and every Fourier block Hermitian PSD.
PositiveTypeVerdict is_positive_type(const GroupFunction& f, const IrrepTable& table,
                                     const Tolerances& tol = {});

}  // namespace framecraft
