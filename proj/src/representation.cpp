#include "framecraft/representation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "framecraft/error.hpp"

namespace framecraft {

namespace {

constexpr int kExhaustiveHomomorphismLimit = 64;

CMatrix permutation_matrix(const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  CMatrix p = CMatrix::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) p(perm[x], x) = 1.0;
  return p;
}

// Orthonormal real basis of the sum-zero hyperplane in R^n (Helmert vectors).
CMatrix sum_zero_basis(int n) {
  CMatrix b = CMatrix::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int x = 0; x < k; ++x) b(x, k - 1) = s;
    b(k, k - 1) = -k * s;
  }
  return b;
}

CMatrix standard_matrix(const std::vector<int>& perm) {
  const CMatrix b = sum_zero_basis(static_cast<int>(perm.size()));
  return b.adjoint() * permutation_matrix(perm) * b;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// S4 -> S3 through the action on the three ways to split {0,1,2,3} into pairs.
std::vector<int> action_on_pairings(const std::vector<int>& perm) {
  auto pairing_of = [](int a, int b) {
    if (a > b) std::swap(a, b);
    const int partner_of_zero = a == 0 ? b : -1;
    if (partner_of_zero > 0) return partner_of_zero - 1;
    // Pair not containing 0: its complement contains 0.
    for (int c = 1; c < 4; ++c)
      if (c != a && c != b) return c - 1;
    return -1;
  };
  std::vector<int> out(3);
  for (int p = 0; p < 3; ++p) out[p] = pairing_of(perm[0], perm[p + 1]);
  return out;
}

IrrepTable cyclic_table(const GroupPtr& g, int n) {
  std::vector<UnitaryRep> irreps;
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) {
    std::vector<CMatrix> mats;
    for (int k = 0; k < n; ++k)
      mats.push_back(CMatrix::Constant(1, 1, std::polar(1.0, 2 * std::numbers::pi * j * k / n)));
    irreps.emplace_back(g, std::move(mats));
    names.push_back("chi" + std::to_string(j));
  }
  return IrrepTable::create(g, std::move(irreps), std::move(names), "complex");
}

IrrepTable dihedral_table(const GroupPtr& g, int n, Basis basis) {
  std::vector<UnitaryRep> irreps;
  std::vector<std::string> names;
  auto one_dim = [&](int a_sign, int b_sign, std::string name) {
    std::vector<CMatrix> mats;
    for (int x = 0; x < 2 * n; ++x) {
      const int s = x / n, k = x % n;
      const double v = (k % 2 && a_sign < 0 ? -1.0 : 1.0) * (s && b_sign < 0 ? -1.0 : 1.0);
      mats.push_back(CMatrix::Constant(1, 1, v));
    }
    irreps.emplace_back(g, std::move(mats));
    names.push_back(std::move(name));
  };
  one_dim(1, 1, "trivial");
  one_dim(1, -1, "sign");
  if (n % 2 == 0) {
    one_dim(-1, 1, "alt+");
    one_dim(-1, -1, "alt-");
  }
  for (int h = 1; 2 * h < n; ++h) {
    std::vector<CMatrix> mats;
    for (int x = 0; x < 2 * n; ++x) {
      const int s = x / n, k = x % n;
      const double angle = 2 * std::numbers::pi * h * k / n;
      CMatrix rot(2, 2), refl(2, 2);
      if (basis == Basis::Complex) {
        rot << std::polar(1.0, angle), 0.0, 0.0, std::polar(1.0, -angle);
        refl << 0.0, 1.0, 1.0, 0.0;
      } else {
        rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
        refl << 1.0, 0.0, 0.0, -1.0;
      }
      mats.push_back(s ? CMatrix(rot * refl) : rot);
    }
    irreps.emplace_back(g, std::move(mats));
    names.push_back("rot" + std::to_string(h));
  }
  return IrrepTable::create(g, std::move(irreps), std::move(names),
                            basis == Basis::Complex ? "complex" : "real");
}

IrrepTable symmetric_table(const GroupPtr& g, int n) {
  if (n > 4)
    throw Error(ErrorCode::UnsupportedGroup, "builtin irreps are available for symmetric:n with n <= 4");
  const auto perms = symmetric_permutations(n);
  std::vector<UnitaryRep> irreps;
  std::vector<std::string> names;
  auto add = [&](std::string name, auto&& matrix_of) {
    std::vector<CMatrix> mats;
    for (const auto& p : perms) mats.push_back(matrix_of(p));
    irreps.emplace_back(g, std::move(mats));
    names.push_back(std::move(name));
  };
  add("trivial", [](const std::vector<int>&) { return CMatrix::Constant(1, 1, 1.0); });
  if (n >= 2)
    add("sign", [](const std::vector<int>& p) { return CMatrix::Constant(1, 1, permutation_sign(p)); });
  if (n == 3) add("standard", standard_matrix);
  if (n == 4) {
    add("pairs", [](const std::vector<int>& p) { return standard_matrix(action_on_pairings(p)); });
    add("standard", standard_matrix);
    add("standard_sign", [](const std::vector<int>& p) {
      return CMatrix(standard_matrix(p) * static_cast<double>(permutation_sign(p)));
    });
  }
  return IrrepTable::create(g, std::move(irreps), std::move(names), "real");
}

}  // namespace

UnitaryRep::UnitaryRep(GroupPtr group, std::vector<CMatrix> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  if (static_cast<int>(matrices_.size()) != group_->order())
    throw Error(ErrorCode::DimensionMismatch, "need one matrix per group element");
  dim_ = static_cast<int>(matrices_.front().rows());
  if (dim_ < 1) throw Error(ErrorCode::DimensionMismatch, "representation dimension must be positive");
  for (size_t g = 0; g < matrices_.size(); ++g)
    if (matrices_[g].rows() != dim_ || matrices_[g].cols() != dim_)
      throw Error(ErrorCode::DimensionMismatch, "matrix for element " + std::to_string(g) + " is not dim x dim",
                  {static_cast<int>(g)});
}

RepValidationReport validate_rep(const UnitaryRep& rep, const Tolerances& tol) {
  const auto& g = *rep.group();
  RepValidationReport report;
  for (Element x = 0; x < g.order(); ++x)
    report.unitarity_defect = std::max(report.unitarity_defect, linalg::unitarity_defect(rep(x)));
  report.identity_defect =
      linalg::max_abs(rep(g.identity()) - CMatrix::Identity(rep.dim(), rep.dim()));
  std::vector<Element> right = g.order() <= kExhaustiveHomomorphismLimit ? std::vector<Element>{} : generating_set(g);
  if (right.empty())
    for (Element y = 0; y < g.order(); ++y) right.push_back(y);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : right)
      report.homomorphism_defect =
          std::max(report.homomorphism_defect, linalg::max_abs(rep(g.mul(x, y)) - rep(x) * rep(y)));

  if (report.unitarity_defect > tol.unitary)
    report.violations.push_back("unitarity defect " + std::to_string(report.unitarity_defect));
  if (report.identity_defect > tol.unitary)
    report.violations.push_back("identity not mapped to I, defect " + std::to_string(report.identity_defect));
  if (report.homomorphism_defect > tol.unitary)
    report.violations.push_back("homomorphism defect " + std::to_string(report.homomorphism_defect));
  if (report.ok()) {
    const auto chi = character(rep);
    double class_defect = 0;
    for (Element x = 0; x < g.order(); ++x)
      for (Element h = 0; h < g.order(); ++h)
        class_defect = std::max(class_defect, std::abs(chi[g.mul(g.mul(h, x), g.inverse(h))] - chi[x]));
    if (class_defect > tol.character)
      report.violations.push_back("character is not a class function, defect " + std::to_string(class_defect));
  }
  return report;
}

std::vector<cplx> character(const UnitaryRep& rep) {
  std::vector<cplx> chi;
  for (const auto& m : rep.matrices()) chi.push_back(m.trace());
  return chi;
}

cplx character_inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::GroupMismatch, "characters of different groups");
  cplx sum = 0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * std::conj(b[i]);
  return sum / static_cast<double>(a.size());
}

UnitaryRep regular_representation(const GroupPtr& group) {
  const int n = group->order();
  std::vector<CMatrix> mats;
  for (Element x = 0; x < n; ++x) {
    CMatrix m = CMatrix::Zero(n, n);
    for (Element y = 0; y < n; ++y) m(group->mul(x, y), y) = 1.0;
    mats.push_back(std::move(m));
  }
  return UnitaryRep(group, std::move(mats));
}

UnitaryRep direct_sum(const std::vector<UnitaryRep>& parts) {
  if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "direct sum of nothing");
  const auto& group = parts.front().group();
  int dim = 0;
  for (const auto& p : parts) {
    if (!same_group(p.group(), group)) throw Error(ErrorCode::GroupMismatch, "summands over different groups");
    dim += p.dim();
  }
  std::vector<CMatrix> mats;
  for (Element x = 0; x < group->order(); ++x) {
    CMatrix m = CMatrix::Zero(dim, dim);
    int offset = 0;
    for (const auto& p : parts) {
      m.block(offset, offset, p.dim(), p.dim()) = p(x);
      offset += p.dim();
    }
    mats.push_back(std::move(m));
  }
  return UnitaryRep(group, std::move(mats));
}

UnitaryRep conjugate_rep(const UnitaryRep& rep) {
  std::vector<CMatrix> mats;
  for (const auto& m : rep.matrices()) mats.push_back(m.conjugate());
  return UnitaryRep(rep.group(), std::move(mats));
}

UnitaryRep permutation_representation(const GroupAction& action) {
  if (action.set_size() < 1) throw Error(ErrorCode::InvalidAction, "empty set");
  std::vector<CMatrix> mats;
  for (const auto& row : action.table()) mats.push_back(permutation_matrix(row));
  return UnitaryRep(action.group(), std::move(mats));
}

UnitaryRep conjugated(const UnitaryRep& rep, const CMatrix& unitary) {
  std::vector<CMatrix> mats;
  for (const auto& m : rep.matrices()) mats.push_back(unitary.adjoint() * m * unitary);
  return UnitaryRep(rep.group(), std::move(mats));
}

IrrepTable IrrepTable::create(GroupPtr group, std::vector<UnitaryRep> irreps,
                              std::vector<std::string> names, std::string basis_label,
                              const Tolerances& tol) {
  const int count = static_cast<int>(irreps.size());
  if (count == 0) throw Error(ErrorCode::InvalidIrrepTable, "empty irrep table");
  if (static_cast<int>(names.size()) != count)
    throw Error(ErrorCode::InvalidIrrepTable, "one name per irrep is required");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw Error(ErrorCode::InvalidIrrepTable, "irrep names must be distinct");
  int dim_sq = 0;
  std::vector<std::vector<cplx>> chars;
  for (int p = 0; p < count; ++p) {
    if (!same_group(irreps[p].group(), group))
      throw Error(ErrorCode::InvalidIrrepTable, "irrep '" + names[p] + "' is over another group");
    const auto report = validate_rep(irreps[p], tol);
    if (!report.ok())
      throw Error(ErrorCode::InvalidIrrepTable, "irrep '" + names[p] + "' is invalid: " + report.violations.front(), {p});
    dim_sq += irreps[p].dim() * irreps[p].dim();
    chars.push_back(character(irreps[p]));
  }
  for (int p = 0; p < count; ++p)
    for (int q = 0; q < count; ++q) {
      const cplx ip = character_inner(chars[p], chars[q]);
      if (std::abs(ip - (p == q ? 1.0 : 0.0)) > tol.character)
        throw Error(ErrorCode::InvalidIrrepTable,
                    p == q ? "irrep '" + names[p] + "' is reducible"
                           : "irreps '" + names[p] + "' and '" + names[q] + "' are equivalent",
                    {p, q});
    }
  if (dim_sq != group->order())
    throw Error(ErrorCode::InvalidIrrepTable, "table is incomplete: sum of d^2 is " + std::to_string(dim_sq) +
                                                  ", group order " + std::to_string(group->order()));

  IrrepTable t;
  t.contragredient_.assign(count, -1);
  for (int p = 0; p < count; ++p) {
    std::vector<cplx> conj_chi(chars[p].size());
    std::transform(chars[p].begin(), chars[p].end(), conj_chi.begin(), [](cplx z) { return std::conj(z); });
    for (int q = 0; q < count; ++q)
      if (std::abs(character_inner(conj_chi, chars[q]) - 1.0) <= tol.character) t.contragredient_[p] = q;
    if (t.contragredient_[p] < 0)
      throw Error(ErrorCode::InvalidIrrepTable, "no contragredient for '" + names[p] + "'", {p});
  }
  t.real_ = true;
  for (const auto& rep : irreps)
    for (const auto& m : rep.matrices())
      if (m.size() && m.imag().cwiseAbs().maxCoeff() > tol.unitary) t.real_ = false;
  t.group_ = std::move(group);
  t.irreps_ = std::move(irreps);
  t.names_ = std::move(names);
  t.basis_label_ = std::move(basis_label);
  return t;
}

int IrrepTable::index_of(std::string_view name) const {
  for (int p = 0; p < size(); ++p)
    if (names_[p] == name) return p;
  throw Error(ErrorCode::ParseError, "unknown irrep '" + std::string(name) + "'");
}

IrrepTable builtin_irrep_table(const GroupSpec& spec, Basis basis) {
  const GroupPtr g = builtin_group(spec);
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic_table(g, spec.n);
    case GroupSpec::Kind::Dihedral: return dihedral_table(g, spec.n, basis);
    case GroupSpec::Kind::Symmetric: return symmetric_table(g, spec.n);
    case GroupSpec::Kind::Product: {
      const IrrepTable a = builtin_irrep_table(spec.factors[0], basis);
      const IrrepTable b = builtin_irrep_table(spec.factors[1], basis);
      const int m = b.group()->order();
      std::vector<UnitaryRep> irreps;
      std::vector<std::string> names;
      for (int p = 0; p < a.size(); ++p)
        for (int q = 0; q < b.size(); ++q) {
          std::vector<CMatrix> mats;
          for (Element x = 0; x < g->order(); ++x) mats.push_back(linalg::kron(a(p, x / m), b(q, x % m)));
          irreps.emplace_back(g, std::move(mats));
          names.push_back(a.name(p) + "*" + b.name(q));
        }
      const std::string label = a.basis_label() == b.basis_label() ? a.basis_label() : "mixed";
      return IrrepTable::create(g, std::move(irreps), std::move(names), label);
    }
  }
  throw Error(ErrorCode::UnsupportedGroup, "no builtin irreps for " + spec.to_string());
}

IrrepTable builtin_irrep_table(std::string_view spec, Basis basis) {
  return builtin_irrep_table(parse_group_spec(spec), basis);
}

std::vector<int> multiplicities(const UnitaryRep& rep, const IrrepTable& table, const Tolerances& tol) {
  if (!same_group(rep.group(), table.group()))
    throw Error(ErrorCode::GroupMismatch, "representation and irrep table use different groups");
  const auto chi = character(rep);
  std::vector<int> mult(table.size());
  int total = 0;
  for (int p = 0; p < table.size(); ++p) {
    const cplx m = character_inner(chi, character(table.irrep(p)));
    const double rounded = std::round(m.real());
    if (std::abs(m - rounded) > tol.character || rounded < 0)
      throw Error(ErrorCode::NonIntegerMultiplicity,
                  "multiplicity of '" + table.name(p) + "' is not a nonnegative integer", {p});
    mult[p] = static_cast<int>(rounded);
    total += mult[p] * table.dim(p);
  }
  if (total != rep.dim())
    throw Error(ErrorCode::NonIntegerMultiplicity, "multiplicities do not add up to the dimension");
  return mult;
}

CMatrix isotypical_projection(const UnitaryRep& rep, const IrrepTable& table, int p) {
  if (!same_group(rep.group(), table.group()))
    throw Error(ErrorCode::GroupMismatch, "representation and irrep table use different groups");
  const auto& g = *rep.group();
  CMatrix proj = CMatrix::Zero(rep.dim(), rep.dim());
  for (Element x = 0; x < g.order(); ++x) proj += std::conj(table(p, x).trace()) * rep(x);
  return proj * (static_cast<double>(table.dim(p)) / g.order());
}

IsotypicBasis isotypic_basis(const UnitaryRep& rep, const IrrepTable& table, const Tolerances& tol) {
  IsotypicBasis out;
  out.multiplicities = multiplicities(rep, table, tol);
  out.unitary = CMatrix::Zero(rep.dim(), rep.dim());
  const auto& g = *rep.group();
  int col = 0;
  for (int p = 0; p < table.size(); ++p) {
    const int m = out.multiplicities[p];
    if (m == 0) continue;
    const int d = table.dim(p);
    const double scale = static_cast<double>(d) / g.order();
    // E_k = d/|K| sum conj(pi_k0(x)) rho(x) maps the range of E_0 onto copy coordinate k.
    std::vector<CMatrix> e(d, CMatrix::Zero(rep.dim(), rep.dim()));
    for (Element x = 0; x < g.order(); ++x)
      for (int k = 0; k < d; ++k) e[k] += std::conj(table(p, x)(k, 0)) * rep(x);
    for (auto& ek : e) ek *= scale;
    // E_0 is an orthogonal projection of rank m; its singular values are 0 or 1.
    const CMatrix v = linalg::orthonormal_basis(e[0], 0.5);
    if (v.cols() != m) throw Error(ErrorCode::NumericFailure, "isotypic basis has the wrong rank", {p});
    for (int i = 0; i < m; ++i) {
      out.block_offsets.push_back(col);
      for (int k = 0; k < d; ++k) out.unitary.col(col++) = e[k] * v.col(i);
    }
  }
  if (linalg::unitarity_defect(out.unitary) > std::sqrt(tol.numeric))
    throw Error(ErrorCode::NumericFailure, "isotypic basis is not orthonormal");
  return out;
}

}  // namespace framecraft
