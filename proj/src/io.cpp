#include "framecraft/io.hpp"

#include <fstream>
#include <sstream>

#include "framecraft/error.hpp"

namespace framecraft::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

json bounds_json(const std::optional<Bounds>& b) {
  if (!b) return nullptr;
  return json::array({b->first, b->second});
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

json to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  parse_fail("expected a number or [re, im], got " + j.dump());
}

CVector vector_from_json(const json& j) {
  if (!j.is_array()) parse_fail("expected an array of complex numbers");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  return v;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) parse_fail("expected a matrix as an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) parse_fail("ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"mult_table", g.table()}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const json& j) {
  try {
    auto table = field(j, "mult_table").get<CayleyTable>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
      throw Error(ErrorCode::NotAGroup, "order does not match the table size");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return make_group(std::move(table), std::move(labels));
  } catch (const json::exception& e) {
    parse_fail(std::string("bad group file: ") + e.what());
  }
}

json rep_to_json(const UnitaryRep& rep) {
  json mats = json::array();
  for (const auto& m : rep.matrices()) mats.push_back(to_json(m));
  return {{"dim", rep.dim()}, {"matrices", mats}};
}

UnitaryRep rep_from_json(const GroupPtr& group, const json& j) {
  const auto& mats = field(j, "matrices");
  if (!mats.is_array()) parse_fail("'matrices' must be an array");
  std::vector<CMatrix> out;
  for (const auto& m : mats) out.push_back(matrix_from_json(m));
  if (static_cast<int>(out.size()) != group->order())
    throw Error(ErrorCode::DimensionMismatch, "need one matrix per group element");
  if (j.contains("dim") && !out.empty() && j.at("dim").get<int>() != out.front().rows())
    throw Error(ErrorCode::DimensionMismatch, "'dim' does not match the matrices");
  return UnitaryRep(group, std::move(out));
}

json table_to_json(const IrrepTable& table) {
  json irreps = json::array();
  for (int p = 0; p < table.size(); ++p) {
    json entry = rep_to_json(table.irrep(p));
    entry["name"] = table.name(p);
    irreps.push_back(std::move(entry));
  }
  return {{"basis", table.basis_label()}, {"irreps", irreps}};
}

IrrepTable table_from_json(const GroupPtr& group, const json& j, const Tolerances& tol) {
  const auto& list = field(j, "irreps");
  if (!list.is_array()) parse_fail("'irreps' must be an array");
  std::vector<UnitaryRep> irreps;
  std::vector<std::string> names;
  for (const auto& entry : list) {
    irreps.push_back(rep_from_json(group, entry));
    names.push_back(entry.contains("name") ? entry.at("name").get<std::string>()
                                           : "irrep" + std::to_string(names.size()));
  }
  const std::string basis = j.contains("basis") ? j.at("basis").get<std::string>() : "user";
  return IrrepTable::create(group, std::move(irreps), std::move(names), basis, tol);
}

json function_to_json(const CVector& values) { return {{"values", to_json(values)}}; }

CVector function_from_json(const json& j) {
  if (j.is_array()) return vector_from_json(j);
  return vector_from_json(field(j, "values"));
}

json blocks_to_json(const std::vector<CMatrix>& blocks, const IrrepTable& table) {
  json out = json::object();
  for (int p = 0; p < table.size(); ++p) out[table.name(p)] = to_json(blocks[p]);
  return {{"blocks", out}};
}

json report_to_json(const FrameReport& r, const IrrepTable* table) {
  json eigs = json::object();
  for (size_t p = 0; p < r.per_pi_eigenvalues.size(); ++p)
    eigs[table ? table->name(static_cast<int>(p)) : std::to_string(p)] = r.per_pi_eigenvalues[p];
  json out = {{"span_dim", r.span_dim},
              {"is_frame", r.is_frame},
              {"is_tight", r.is_tight},
              {"is_parseval_continuous", r.is_parseval_continuous},
              {"continuous_bounds", bounds_json(r.continuous_bounds)},
              {"discrete_bounds", bounds_json(r.discrete_bounds)},
              {"per_pi_eigenvalues", eigs},
              {"tolerance", r.tolerance},
              {"group_order", r.group_order}};
  if (r.is_frame_for_whole_space) out["is_frame_for_whole_space"] = *r.is_frame_for_whole_space;
  return out;
}

json range_function_to_json(const RangeFunction& j, const IrrepTable& table) {
  json fibers = json::object();
  for (int p = 0; p < table.size(); ++p) {
    json cols = json::array();
    for (Eigen::Index c = 0; c < j.fibers[p].cols(); ++c) cols.push_back(to_json(CVector(j.fibers[p].col(c))));
    fibers[table.name(p)] = cols;
  }
  return {{"fibers", fibers}};
}

json frame_matrix_to_json(const FrameMatrix& m) {
  json vectors = json::array();
  for (Eigen::Index c = 0; c < m.vectors.cols(); ++c) vectors.push_back(to_json(CVector(m.vectors.col(c))));
  json kept = json::object();
  for (const auto& [name, rows] : m.rows_kept) kept[name] = rows;
  return {{"vectors", vectors}, {"matrix", to_json(m.vectors)}, {"rows_kept", kept}, {"basis", m.basis}};
}

json riesz_report_to_json(const RieszReport& r, const IrrepTable& table) {
  json per = json::object();
  for (int p = 0; p < table.size(); ++p) {
    if (!r.per_pi[p]) continue;
    const auto& e = *r.per_pi[p];
    per[table.name(p)] = {{"gram_eigenvalues", e.gram_eigenvalues},
                          {"lower", e.lower},
                          {"upper", e.upper},
                          {"independent", e.independent}};
  }
  json deficient = json::array();
  for (int p : r.deficient) deficient.push_back(table.name(p));
  return {{"per_pi", per},
          {"overall", report_to_json(r.overall, &table)},
          {"deficient", deficient},
          {"rows_square_summable", r.rows_square_summable}};
}

json spec_to_json(const MultiGenSpec& spec, const IrrepTable& table) {
  json mult = json::object();
  for (int p = 0; p < table.size(); ++p)
    if (spec.multiplicities[p] > 0) mult[table.name(p)] = spec.multiplicities[p];
  json gens = json::array();
  for (const auto& gen : spec.generators) {
    json g = json::object();
    for (int p = 0; p < table.size(); ++p) {
      if (spec.multiplicities[p] == 0) continue;
      json rows = json::array();
      for (Eigen::Index i = 0; i < gen[p].rows(); ++i) rows.push_back(to_json(CVector(gen[p].row(i).transpose())));
      g[table.name(p)] = rows;
    }
    gens.push_back(std::move(g));
  }
  return {{"multiplicities", mult}, {"generators", gens}};
}

MultiGenSpec spec_from_json(const json& j, const IrrepTable& table) {
  MultiGenSpec spec;
  spec.multiplicities.assign(table.size(), 0);
  const auto& mult = field(j, "multiplicities");
  if (!mult.is_object()) parse_fail("'multiplicities' must map irrep names to integers");
  for (const auto& [name, m] : mult.items()) spec.multiplicities[table.index_of(name)] = m.get<int>();
  const auto& gens = field(j, "generators");
  if (!gens.is_array()) parse_fail("'generators' must be an array");
  for (const auto& g : gens) {
    if (!g.is_object()) parse_fail("each generator maps irrep names to lists of vectors");
    std::vector<CMatrix> blocks;
    for (int p = 0; p < table.size(); ++p) blocks.push_back(CMatrix::Zero(spec.multiplicities[p], table.dim(p)));
    for (const auto& [name, rows] : g.items()) {
      const int p = table.index_of(name);
      if (!rows.is_array() || static_cast<int>(rows.size()) != spec.multiplicities[p])
        throw Error(ErrorCode::ShapeMismatch, "generator block '" + name + "' needs one vector per copy");
      for (size_t i = 0; i < rows.size(); ++i) {
        const CVector v = vector_from_json(rows[i]);
        if (v.size() != table.dim(p))
          throw Error(ErrorCode::ShapeMismatch, "vectors in block '" + name + "' must have length " +
                                                    std::to_string(table.dim(p)));
        blocks[p].row(static_cast<Eigen::Index>(i)) = v.transpose();
      }
    }
    spec.generators.push_back(std::move(blocks));
  }
  validate_spec(spec, table);
  return spec;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_fail("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace framecraft::io
