#include "framecraft/multigen.hpp"

#include <algorithm>
#include <cmath>

#include "framecraft/error.hpp"

namespace framecraft {

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

int count_above(const std::vector<double>& values, double cutoff) {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [&](double v) { return v > cutoff; }));
}

std::vector<double> to_std(const RVector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

void validate_spec(const MultiGenSpec& spec, const IrrepTable& table) {
  if (static_cast<int>(spec.multiplicities.size()) != table.size())
    throw Error(ErrorCode::ShapeMismatch, "need one multiplicity per irrep");
  for (int p = 0; p < table.size(); ++p)
    if (spec.multiplicities[p] < 0) throw Error(ErrorCode::ShapeMismatch, "negative multiplicity", {p});
  for (int j = 0; j < spec.num_generators(); ++j) {
    if (static_cast<int>(spec.generators[j].size()) != table.size())
      throw Error(ErrorCode::ShapeMismatch, "generator " + std::to_string(j) + " needs one block per irrep", {j});
    for (int p = 0; p < table.size(); ++p) {
      const auto& f = spec.generators[j][p];
      if (f.rows() != spec.multiplicities[p] || f.cols() != table.dim(p))
        throw Error(ErrorCode::ShapeMismatch, "generator " + std::to_string(j) + " block '" + table.name(p) +
                                                  "' must be " + std::to_string(spec.multiplicities[p]) + " x " +
                                                  std::to_string(table.dim(p)),
                    {j, p});
    }
  }
}

CMatrix row_form(const MultiGenSpec& spec, int p) {
  const int m = spec.multiplicities[p];
  CMatrix q = CMatrix::Zero(m, m);
  for (const auto& gen : spec.generators) q += (gen[p] * gen[p].adjoint()).conjugate();
  return q;
}

RieszEntry riesz_row_bounds(const MultiGenSpec& spec, const IrrepTable& table, int p,
                            const std::optional<CMatrix>& fiber, const Tolerances& tol) {
  validate_spec(spec, table);
  if (p < 0 || p >= table.size() || spec.multiplicities[p] < 1)
    throw Error(ErrorCode::ShapeMismatch, "irrep has no copies in the model space", {p});
  CMatrix q = row_form(spec, p);
  if (fiber) {
    if (fiber->rows() != q.rows()) throw Error(ErrorCode::ShapeMismatch, "fiber has the wrong ambient dimension", {p});
    q = fiber->adjoint() * q * *fiber;
  }
  RieszEntry e;
  e.gram_eigenvalues = to_std(linalg::hermitian_eig(q).values);
  if (e.gram_eigenvalues.empty()) {
    e.independent = true;
    return e;
  }
  e.lower = e.gram_eigenvalues.front();
  e.upper = e.gram_eigenvalues.back();
  e.independent = e.upper > 0 && e.lower > tol.rank * e.upper;
  return e;
}

RangeFunction generated_fibers(const MultiGenSpec& spec, const IrrepTable& table, const Tolerances& tol) {
  validate_spec(spec, table);
  std::vector<linalg::HermitianEigen> eigs;
  double top = 0;
  for (int p = 0; p < table.size(); ++p) {
    eigs.push_back(linalg::hermitian_eig(row_form(spec, p)));
    if (eigs.back().values.size()) top = std::max(top, eigs.back().values.maxCoeff());
  }
  RangeFunction j;
  for (int p = 0; p < table.size(); ++p) {
    const auto& e = eigs[p];
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < e.values.size(); ++i)
      if (top > 0 && e.values[i] > tol.rank * top) keep.push_back(i);
    CMatrix fiber(spec.multiplicities[p], static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) fiber.col(c) = e.vectors.col(keep[c]);
    j.fibers.push_back(std::move(fiber));
  }
  return j;
}

RieszReport multigen_frame_bounds(const MultiGenSpec& spec, const IrrepTable& table,
                                  const std::optional<RangeFunction>& j, const Tolerances& tol) {
  validate_spec(spec, table);
  if (spec.generators.empty()) throw Error(ErrorCode::EmptyFamily, "no generators");
  if (j) {
    if (static_cast<int>(j->fibers.size()) != table.size())
      throw Error(ErrorCode::ShapeMismatch, "range function needs one fiber per irrep");
    double residual = 0, total = 0;
    for (int p = 0; p < table.size(); ++p) {
      if (j->fibers[p].rows() != spec.multiplicities[p])
        throw Error(ErrorCode::ShapeMismatch, "fiber for '" + table.name(p) + "' has the wrong ambient dimension", {p});
      for (const auto& gen : spec.generators) {
        const CMatrix cols = gen[p].conjugate();
        const CMatrix off = cols - j->fibers[p] * (j->fibers[p].adjoint() * cols);
        residual += off.squaredNorm();
        total += cols.squaredNorm();
      }
    }
    if (total > 0 && std::sqrt(residual / total) > tol.membership)
      throw Error(ErrorCode::GeneratorsOutsideVJ, "generators do not lie in the subspace given by the range function");
  }

  RieszReport r;
  std::vector<std::vector<double>> spectra(table.size());
  double top = 0;
  for (int p = 0; p < table.size(); ++p) {
    if (spec.multiplicities[p] == 0) {
      r.per_pi.emplace_back();
      continue;
    }
    std::optional<CMatrix> fiber;
    if (j) fiber = j->fibers[p];
    auto entry = riesz_row_bounds(spec, table, p, fiber, tol);
    for (double v : entry.gram_eigenvalues) {
      spectra[p].push_back(v / table.dim(p));
      top = std::max(top, v / table.dim(p));
    }
    r.per_pi.push_back(std::move(entry));
  }
  int span = 0, full = 0;
  for (int p = 0; p < table.size(); ++p) {
    const int available = static_cast<int>(spectra[p].size());
    const int rank = top > 0 ? count_above(spectra[p], tol.rank * top) : 0;
    span += table.dim(p) * rank;
    full += table.dim(p) * available;
    if (rank < available) r.deficient.push_back(p);
  }
  r.overall = report_from_spectra(std::move(spectra), span, table.group()->order(), tol);
  r.overall.is_frame_for_whole_space = span == full;
  return r;
}

MultiGenIsotypicalCheck multigen_isotypical_check(const MultiGenSpec& spec, const IrrepTable& table,
                                                  const Tolerances& tol) {
  MultiGenIsotypicalCheck check;
  check.overall = multigen_frame_bounds(spec, table, std::nullopt, tol);
  bool any = false, all_whole = true;
  double lo = 0, hi = 0;
  for (int p = 0; p < table.size(); ++p) {
    if (!check.overall.per_pi[p]) {
      check.per_pi.emplace_back();
      continue;
    }
    std::vector<std::vector<double>> spectra(table.size());
    for (double v : check.overall.per_pi[p]->gram_eigenvalues) spectra[p].push_back(v / table.dim(p));
    const double top = spectra[p].empty() ? 0.0 : *std::max_element(spectra[p].begin(), spectra[p].end());
    const int rank = top > 0 ? count_above(spectra[p], tol.rank * top) : 0;
    const bool whole = rank == spec.multiplicities[p];
    auto report = report_from_spectra(std::move(spectra), table.dim(p) * rank, table.group()->order(), tol);
    report.is_frame_for_whole_space = whole;
    all_whole = all_whole && whole;
    if (report.continuous_bounds) {
      lo = any ? std::min(lo, report.continuous_bounds->first) : report.continuous_bounds->first;
      hi = any ? std::max(hi, report.continuous_bounds->second) : report.continuous_bounds->second;
      any = true;
    }
    check.per_pi.push_back(std::move(report));
  }
  const auto& o = check.overall.overall;
  // A component whose form is zero has no bounds of its own but still makes
  // the global verdict fail; the bound comparison only involves nonzero parts.
  const bool bounds_agree = any == o.continuous_bounds.has_value() &&
                            (!any || (close(lo, o.continuous_bounds->first, tol.spectrum) &&
                                      close(hi, o.continuous_bounds->second, tol.spectrum)));
  check.consistent = bounds_agree && all_whole == o.is_frame_for_whole_space.value_or(false);
  return check;
}

UnitaryRep standard_model_rep(const IrrepTable& table, const std::vector<int>& multiplicities) {
  if (static_cast<int>(multiplicities.size()) != table.size())
    throw Error(ErrorCode::ShapeMismatch, "need one multiplicity per irrep");
  std::vector<UnitaryRep> parts;
  for (int p = 0; p < table.size(); ++p)
    for (int i = 0; i < multiplicities[p]; ++i) parts.push_back(table.irrep(p));
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "model space is zero-dimensional");
  return direct_sum(parts);
}

CVector model_vector(const MultiGenSpec& spec, int j, const IrrepTable& table) {
  validate_spec(spec, table);
  int dim = 0;
  for (int p = 0; p < table.size(); ++p) dim += spec.multiplicities[p] * table.dim(p);
  CVector v(dim);
  int pos = 0;
  for (int p = 0; p < table.size(); ++p)
    for (int i = 0; i < spec.multiplicities[p]; ++i)
      for (int k = 0; k < table.dim(p); ++k) v[pos++] = spec.generators[j][p](i, k);
  return v;
}

MultiGenSpec spec_from_rep_vectors(const UnitaryRep& rep, const std::vector<CVector>& vectors,
                                   const IrrepTable& table, const Tolerances& tol) {
  const auto iso = isotypic_basis(rep, table, tol);
  MultiGenSpec spec;
  spec.multiplicities = iso.multiplicities;
  for (const auto& v : vectors) {
    if (v.size() != rep.dim()) throw Error(ErrorCode::RepMismatch, "vector length does not match the representation");
    const CVector coords = iso.unitary.adjoint() * v;
    std::vector<CMatrix> gen;
    int block = 0;
    for (int p = 0; p < table.size(); ++p) {
      const int d = table.dim(p);
      CMatrix rows(spec.multiplicities[p], d);
      for (int i = 0; i < spec.multiplicities[p]; ++i, ++block)
        rows.row(i) = coords.segment(iso.block_offsets[block], d).transpose();
      gen.push_back(std::move(rows));
    }
    spec.generators.push_back(std::move(gen));
  }
  return spec;
}

std::vector<MultiGenComponent> canonical_decomposition_general(const std::vector<int>& multiplicities,
                                                               const RangeFunction& j, const IrrepTable& table) {
  if (static_cast<int>(multiplicities.size()) != table.size() || static_cast<int>(j.fibers.size()) != table.size())
    throw Error(ErrorCode::ShapeMismatch, "need one multiplicity and one fiber per irrep");
  int dim = 0;
  std::vector<int> offset;
  for (int p = 0; p < table.size(); ++p) {
    if (j.fibers[p].rows() != multiplicities[p])
      throw Error(ErrorCode::ShapeMismatch, "fiber for '" + table.name(p) + "' has the wrong ambient dimension", {p});
    offset.push_back(dim);
    dim += multiplicities[p] * table.dim(p);
  }
  std::vector<MultiGenComponent> out;
  for (int p = 0; p < table.size(); ++p) {
    const int d = table.dim(p);
    for (Eigen::Index c = 0; c < j.fibers[p].cols(); ++c) {
      MultiGenComponent comp{p, j.fibers[p].col(c), CMatrix::Zero(dim, d)};
      for (int i = 0; i < multiplicities[p]; ++i)
        for (int k = 0; k < d; ++k) comp.basis(offset[p] + i * d + k, k) = std::conj(comp.fiber_vector[i]);
      out.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace framecraft
