#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "framecraft/builtin_groups.hpp"
#include "framecraft/group.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/tolerances.hpp"

namespace framecraft {

/// A representation stored densely: one dim x dim matrix per group element.
/// Construction only checks shapes; unitarity is reported by validate_rep.
class UnitaryRep {
 public:
  UnitaryRep(GroupPtr group, std::vector<CMatrix> matrices);

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const CMatrix& operator()(Element g) const { return matrices_[g]; }
  const std::vector<CMatrix>& matrices() const { return matrices_; }

 private:
  GroupPtr group_;
  int dim_ = 0;
  std::vector<CMatrix> matrices_;
};

struct RepValidationReport {
  double unitarity_defect = 0;
  double homomorphism_defect = 0;
  double identity_defect = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Homomorphism is checked on all pairs for |K| <= 64 and against a
/// generating set otherwise.
RepValidationReport validate_rep(const UnitaryRep& rep, const Tolerances& tol = {});

std::vector<cplx> character(const UnitaryRep& rep);

/// (1/|K|) sum chi_a(x) conj(chi_b(x)).
cplx character_inner(const std::vector<cplx>& a, const std::vector<cplx>& b);

UnitaryRep regular_representation(const GroupPtr& group);
UnitaryRep direct_sum(const std::vector<UnitaryRep>& parts);
UnitaryRep conjugate_rep(const UnitaryRep& rep);
UnitaryRep permutation_representation(const GroupAction& action);

/// Unitary change of basis: x -> U^* rho(x) U.
UnitaryRep conjugated(const UnitaryRep& rep, const CMatrix& unitary);

enum class Basis { Complex, Real };

/// The dual object of a finite group as explicit matrices.
class IrrepTable {
 public:
  /// Validates irreducibility, pairwise inequivalence, completeness and
  /// derives the contragredient map. Throws Error{InvalidIrrepTable}.
  static IrrepTable create(GroupPtr group, std::vector<UnitaryRep> irreps,
                           std::vector<std::string> names, std::string basis_label,
                           const Tolerances& tol = {});

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(irreps_.size()); }
  int dim(int p) const { return irreps_[p].dim(); }
  const UnitaryRep& irrep(int p) const { return irreps_[p]; }
  const CMatrix& operator()(int p, Element g) const { return irreps_[p](g); }
  const std::string& name(int p) const { return names_[p]; }
  const std::vector<std::string>& names() const { return names_; }
  int contragredient_of(int p) const { return contragredient_[p]; }
  const std::string& basis_label() const { return basis_label_; }
  /// All matrices have zero imaginary part.
  bool is_real() const { return real_; }

  /// Throws Error{ParseError} for unknown names.
  int index_of(std::string_view name) const;

 private:
  IrrepTable() = default;

  GroupPtr group_;
  std::vector<UnitaryRep> irreps_;
  std::vector<std::string> names_;
  std::vector<int> contragredient_;
  std::string basis_label_;
  bool real_ = false;
};

/// Validated tables for cyclic:n, dihedral:n, symmetric:3, symmetric:4 and
/// products of these. Dihedral tables come in a complex basis
/// (a -> diag(w, w^-1), b -> swap) or the real rotation/reflection basis.
IrrepTable builtin_irrep_table(const GroupSpec& spec, Basis basis = Basis::Complex);
IrrepTable builtin_irrep_table(std::string_view spec, Basis basis = Basis::Complex);

std::vector<int> multiplicities(const UnitaryRep& rep, const IrrepTable& table,
                                const Tolerances& tol = {});

/// P_pi = d_pi/|K| sum conj(chi_pi(x)) rho(x).
CMatrix isotypical_projection(const UnitaryRep& rep, const IrrepTable& table, int p);

/// Explicit unitary U whose columns v_{pi,i,k} (pi in table order, copy i,
/// basis index k) satisfy rho(x) v_{pi,i,k} = sum_l pi(x)_{l,k} v_{pi,i,l}.
/// In these coordinates rho becomes the block diagonal sum of copies of pi.
struct IsotypicBasis {
  std::vector<int> multiplicities;
  CMatrix unitary;
  /// First column of each (pi, copy) block, in the order of `unitary`.
  std::vector<int> block_offsets;
};

IsotypicBasis isotypic_basis(const UnitaryRep& rep, const IrrepTable& table,
                             const Tolerances& tol = {});

}  // namespace framecraft
