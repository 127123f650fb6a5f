#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "framecraft.hpp"
#include "framecraft/io.hpp"

namespace framecraft::cli {

namespace {

using io::json;

struct Config {
  Tolerances tol;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
  bool self_check = true;
};

struct LoadedGroup {
  GroupPtr group;
  std::optional<GroupSpec> spec;
};

LoadedGroup load_group(const std::string& text) {
  // Anything that is not a readable file is taken as a builtin name.
  if (looks_like_group_spec(text) || !std::ifstream(text)) {
    auto spec = parse_group_spec(text);
    return {builtin_group(spec), spec};
  }
  return {io::group_from_json(io::read_json_file(text)), std::nullopt};
}

Basis parse_basis(const std::string& text) {
  if (text == "complex") return Basis::Complex;
  if (text == "real") return Basis::Real;
  throw Error(ErrorCode::ParseError, "basis must be 'complex' or 'real'");
}

IrrepTable load_table(const LoadedGroup& g, const std::string& irreps_path, const std::string& basis,
                      const Tolerances& tol) {
  if (!irreps_path.empty()) return io::table_from_json(g.group, io::read_json_file(irreps_path), tol);
  if (!g.spec) throw Error(ErrorCode::ParseError, "--irreps is required for groups read from a file");
  return builtin_irrep_table(*g.spec, parse_basis(basis));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

// Inline "1.5,-1.5,0" or a JSON vector file.
CVector load_vector(const std::string& text) {
  std::ifstream probe(text);
  if (probe) return io::function_from_json(io::read_json_file(text));
  std::vector<cplx> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      values.emplace_back(std::stod(item, &used), 0.0);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "'" + text + "' is neither a file nor a list of numbers");
    }
  }
  return Eigen::Map<CVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::vector<CVector> load_family(const std::string& path) {
  const json j = io::read_json_file(path);
  const json& list = j.is_object() && j.contains("functions") ? j.at("functions") : j;
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "family file must list functions");
  std::vector<CVector> family;
  for (const auto& f : list) family.push_back(io::function_from_json(f));
  return family;
}

struct LoadedSubgroup {
  SubgroupEmbedding embedding;
  IrrepTable table;
};

LoadedSubgroup load_subgroup(const GroupPtr& parent, const std::string& path, std::string type,
                             const std::string& irreps_path, const std::string& basis, const Tolerances& tol) {
  const json j = io::read_json_file(path);
  if (!j.contains("member_indices")) throw Error(ErrorCode::ParseError, "subgroup file needs 'member_indices'");
  const auto members = j.at("member_indices").get<std::vector<Element>>();
  if (type.empty() && j.contains("type")) type = j.at("type").get<std::string>();
  if (!type.empty()) {
    const auto spec = parse_group_spec(type);
    const auto sub = builtin_group(spec);
    auto embedding = SubgroupEmbedding::from_homomorphism(parent, sub, find_isomorphism_onto(*sub, *parent, members));
    IrrepTable table = irreps_path.empty() ? builtin_irrep_table(spec, parse_basis(basis))
                                           : io::table_from_json(sub, io::read_json_file(irreps_path), tol);
    return {std::move(embedding), std::move(table)};
  }
  if (irreps_path.empty())
    throw Error(ErrorCode::ParseError, "give the subgroup a builtin 'type' or pass --subgroup-irreps");
  auto embedding = SubgroupEmbedding::from_members(parent, members);
  auto table = io::table_from_json(embedding.induced(), io::read_json_file(irreps_path), tol);
  return {std::move(embedding), std::move(table)};
}

[[noreturn]] void self_check_failed(const std::string& what) {
  throw Error(ErrorCode::NumericFailure, "self-check failed: " + what);
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

CVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = cplx(normal(rng), normal(rng));
  return v;
}

std::vector<double> sorted_spectrum(const CMatrix& m) {
  const auto eig = linalg::hermitian_eig(m);
  return {eig.values.data(), eig.values.data() + eig.values.size()};
}

// Extreme eigenvalues above tol * max, or nothing when the matrix is zero.
std::optional<Bounds> nonzero_extremes(const std::vector<double>& spectrum, double tol) {
  double top = 0;
  for (double v : spectrum) top = std::max(top, v);
  std::optional<Bounds> b;
  for (double v : spectrum)
    if (top > 0 && v > tol * top) b = b ? Bounds{std::min(b->first, v), std::max(b->second, v)} : Bounds{v, v};
  return b;
}

bool bounds_match(const std::optional<Bounds>& a, const std::optional<Bounds>& b, double tol) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (relative_gap(a->first, b->first) <= tol && relative_gap(a->second, b->second) <= tol);
}

json bounds_json(const std::optional<Bounds>& b) {
  if (!b) return nullptr;
  return json::array({b->first, b->second});
}

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  const bool structured = (j.is_object() && !j.empty()) ||
                          (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) {
                             return e.is_object() || (e.is_array() && !(e.size() == 2 && e[0].is_number()));
                           }));
  if (!structured) {
    os << prefix << ": " << j.dump() << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  }
}

void emit(const json& j, const Config& cfg, std::ostream& out) {
  std::ostringstream text;
  if (cfg.format != "json") {
    flatten(j, "", text);
  } else {
    text << j.dump(2) << "\n";
  }
  if (cfg.output.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + cfg.output + "'");
  file << text.str();
}

json named_ints(const std::vector<int>& values, const IrrepTable& table) {
  json out = json::object();
  for (int p = 0; p < table.size(); ++p) out[table.name(p)] = values[p];
  return out;
}

// --- subcommands -----------------------------------------------------------

json cmd_validate_group(const std::string& group_arg, const std::string& subgroup_path, const Config&) {
  const auto g = load_group(group_arg);
  std::vector<int> inverse;
  for (Element x = 0; x < g.group->order(); ++x) inverse.push_back(g.group->inverse(x));
  json out = {{"valid", true},
              {"order", g.group->order()},
              {"identity", g.group->identity()},
              {"inverse", inverse},
              {"labels", g.group->labels()}};
  if (!subgroup_path.empty()) {
    const auto j = io::read_json_file(subgroup_path);
    const auto cosets = right_cosets(
        SubgroupEmbedding::from_members(g.group, j.at("member_indices").get<std::vector<Element>>()));
    out["cosets"] = cosets.cosets();
    out["cross_section"] = cosets.cross_section();
  }
  return out;
}

json cmd_validate_irreps(const std::string& group_arg, const std::string& irreps, const std::string& basis,
                         const Config& cfg) {
  const auto g = load_group(group_arg);
  const auto table = load_table(g, irreps, basis, cfg.tol);
  json list = json::array();
  for (int p = 0; p < table.size(); ++p)
    list.push_back({{"name", table.name(p)}, {"dim", table.dim(p)}, {"contragredient", table.name(table.contragredient_of(p))}});
  return {{"valid", true}, {"irreps", list}, {"basis", table.basis_label()}, {"is_real", table.is_real()}};
}

json cmd_analyze(const std::string& group_arg, const std::string& rep_path, const std::string& vector_arg,
                 const std::string& irreps, const std::string& basis, const Config& cfg) {
  const auto g = load_group(group_arg);
  const auto table = load_table(g, irreps, basis, cfg.tol);
  const auto rep = io::rep_from_json(g.group, io::read_json_file(rep_path));
  const auto validation = validate_rep(rep, cfg.tol);
  if (!validation.ok()) throw Error(ErrorCode::DimensionMismatch, "invalid representation: " + validation.violations.front());
  const CVector f = load_vector(vector_arg);
  if (f.size() != rep.dim()) throw Error(ErrorCode::RepMismatch, "vector length does not match the representation");

  const auto br = bracket(rep, f, f, table);
  const auto report = frame_bounds_single(rep, f, table, cfg.tol);
  const auto cyc = is_cyclic(rep, f, table, cfg.tol);
  const auto iso = isotypical_frame_check(rep, f, table, cfg.tol);

  json components = json::object();
  for (int p = 0; p < table.size(); ++p) components[table.name(p)] = io::report_to_json(iso.components[p], &table);
  json out = {{"bracket", io::blocks_to_json(br.blocks, table)["blocks"]},
              {"report", io::report_to_json(report, &table)},
              {"cyclicity",
               {{"cyclic", cyc.cyclic},
                {"ranks", named_ints(cyc.ranks, table)},
                {"expected", named_ints(cyc.expected, table)},
                {"span_dim", cyc.span_dim},
                {"dim", cyc.dim}}},
              {"isotypical", {{"components", components}, {"consistent", iso.consistent}}}};

  if (cfg.self_check) {
    std::vector<double> expected;
    for (int p = 0; p < table.size(); ++p)
      for (double v : sorted_spectrum(br.blocks[p]))
        for (int r = 0; r < table.dim(p); ++r) expected.push_back(v);
    std::sort(expected.begin(), expected.end());
    const auto oracle = sorted_spectrum(gramian_oracle(rep, f));
    double scale = 1, gap = 0;
    for (double v : oracle) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < oracle.size(); ++i) gap = std::max(gap, std::abs(oracle[i] - expected[i]));
    if (gap > cfg.tol.spectrum * scale) self_check_failed("Gramian spectrum differs from the bracket spectrum");
    if (!iso.consistent) self_check_failed("isotypical reports disagree with the global report");

    double recon = 0;
    if (report.span_dim > 0) {
      std::mt19937_64 rng(cfg.seed);
      const CMatrix span = cyclic_span_basis(rep, f, cfg.tol);
      const CVector x = span * random_vector(rng, span.cols());
      const CVector dual = canonical_dual(rep, f, cfg.tol);
      CVector back = CVector::Zero(rep.dim());
      for (Element k = 0; k < g.group->order(); ++k) back += (rep(k) * dual).dot(x) * (rep(k) * f);
      back /= static_cast<double>(g.group->order());
      recon = (back - x).norm() / x.norm();
      if (recon > cfg.tol.spectrum) self_check_failed("canonical dual does not reconstruct");
    }
    out["self_check"] = {{"spectrum_gap", gap}, {"reconstruction_error", recon}, {"passed", true}};
  }
  return out;
}

json cmd_gramian(const std::string& group_arg, const std::string& rep_path, const std::string& vector_arg,
                 const std::string& irreps, const std::string& basis, bool compare, const Config& cfg) {
  const auto g = load_group(group_arg);
  const auto table = load_table(g, irreps, basis, cfg.tol);
  const auto rep = io::rep_from_json(g.group, io::read_json_file(rep_path));
  const CVector f = load_vector(vector_arg);
  const auto blocks = gramian_blocks(rep, f, table);
  json out = io::blocks_to_json(blocks, table);
  if (compare) {
    std::vector<double> from_blocks;
    for (const auto& b : blocks)
      for (double v : sorted_spectrum(b)) from_blocks.push_back(v);
    std::sort(from_blocks.begin(), from_blocks.end());
    const CMatrix oracle = gramian_oracle(rep, f);
    const auto oracle_spec = sorted_spectrum(oracle);
    double scale = 1, gap = 0;
    for (double v : oracle_spec) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < oracle_spec.size(); ++i) gap = std::max(gap, std::abs(oracle_spec[i] - from_blocks[i]));
    const bool match = gap <= cfg.tol.spectrum * scale;
    out["oracle"] = io::to_json(oracle);
    out["oracle_spectrum"] = oracle_spec;
    out["block_spectrum"] = from_blocks;
    out["max_deviation"] = gap;
    out["match"] = match;
    if (cfg.self_check && !match) self_check_failed("Gramian blocks disagree with the oracle");
  }
  return out;
}

json cmd_harmonic(const std::string& group_arg, const std::string& ranks_arg, const std::string& basis,
                  const std::string& irreps, const Config& cfg) {
  const auto g = load_group(group_arg);
  const auto table = load_table(g, irreps, basis, cfg.tol);
  const auto frame = harmonic_frame(table, parse_int_list(ranks_arg));
  const double n = g.group->order();
  const CMatrix s = frame.vectors * frame.vectors.adjoint() / n;
  const double defect = linalg::max_abs(s - CMatrix::Identity(s.rows(), s.cols()));
  const bool parseval = defect <= cfg.tol.numeric;
  if (cfg.self_check && !parseval) self_check_failed("harmonic frame is not Parseval");
  json out = io::frame_matrix_to_json(frame);
  out["parseval_defect"] = defect;
  out["tight"] = parseval;
  out["discrete_bound"] = n;
  out["continuous_bound"] = 1.0;
  out["labels"] = g.group->labels();
  return out;
}

json cmd_parseval(const std::string& group_arg, const std::string& ranks_arg, const std::string& basis,
                  const std::string& irreps, const Config& cfg) {
  const auto g = load_group(group_arg);
  const auto table = load_table(g, irreps, basis, cfg.tol);
  const auto ranks = parse_int_list(ranks_arg);
  const auto f = parseval_generator(table, ranks);
  const double idem = linalg::max_abs(convolve(f, f).values - f.values);
  const double adj = linalg::max_abs(involution(f).values - f.values);
  // In the regular representation the coordinates f / sqrt(|K|) carry the L2(K) norm.
  const auto reg = regular_representation(g.group);
  const auto report = frame_bounds_single(reg, f.values / std::sqrt(static_cast<double>(g.group->order())), table, cfg.tol);
  const bool ok = idem <= cfg.tol.numeric && adj <= cfg.tol.numeric &&
                  (report.span_dim == 0 || report.is_parseval_continuous);
  if (cfg.self_check && !ok) self_check_failed("generator is not a Parseval projection");
  return {{"generator", io::function_to_json(f.values)["values"]},
          {"ranks", named_ints(ranks, table)},
          {"idempotent_defect", idem},
          {"selfadjoint_defect", adj},
          {"report", io::report_to_json(report, &table)},
          {"parseval", ok}};
}

json cmd_permframe(int n, const std::string& psi_arg, const Config& cfg) {
  std::optional<CVector> psi;
  if (!psi_arg.empty()) psi = load_vector(psi_arg);
  const CVector f = permutation_frame_generator(n, psi, cfg.tol);
  const auto action = symmetric_natural_action(n);
  const auto v = two_transitive_tightness(action, f, cfg.tol);
  if (cfg.self_check && !(v.tight && v.consistent)) self_check_failed("permutation frame is not tight");
  std::string verdict = v.tight ? "tight" : "not tight";
  if (v.discrete_bound) {
    std::ostringstream s;
    s << ", discrete bound " << *v.discrete_bound;
    verdict += s.str();
  }
  const double norm = f.norm();
  return {{"generator", io::to_json(f)},
          {"unit_generator", io::to_json(CVector(f / norm))},
          {"tight", v.tight},
          {"sum_abs_sq", v.sum_abs_sq},
          {"norm_sq", v.norm_sq},
          {"frame_operator_tight", v.frame_operator_tight},
          {"discrete_bound", v.discrete_bound ? json(*v.discrete_bound) : json(nullptr)},
          {"unit_discrete_bound", v.discrete_bound ? json(*v.discrete_bound / v.norm_sq) : json(nullptr)},
          {"orbit_size", v.orbit_size},
          {"consistent", v.consistent},
          {"verdict", verdict}};
}

struct ZakInputs {
  std::string group, subgroup, subgroup_type, subgroup_irreps, basis = "complex";
};

json cmd_zak(const ZakInputs& in, const std::string& function_arg, const std::string& cross_section,
             const Config& cfg) {
  const auto g = load_group(in.group);
  const auto sub = load_subgroup(g.group, in.subgroup, in.subgroup_type, in.subgroup_irreps, in.basis, cfg.tol);
  auto cosets = right_cosets(sub.embedding);
  if (!cross_section.empty()) cosets = with_cross_section(cosets, parse_int_list(cross_section));
  const LtwoG space(cosets);
  const CVector f = load_vector(function_arg);
  const auto z = zak(f, space, sub.table);
  json out = io::blocks_to_json(z.blocks, sub.table);
  out["num_cosets"] = z.num_cosets;
  out["cosets"] = cosets.cosets();
  out["cross_section"] = cosets.cross_section();
  if (cfg.self_check) {
    double plancherel = 0;
    for (int p = 0; p < sub.table.size(); ++p) plancherel += sub.table.dim(p) * z.blocks[p].squaredNorm();
    const double norm = space.norm_sq(f);
    const double round_trip = (inverse_zak(z, space, sub.table) - f).norm();
    if (relative_gap(plancherel, norm) > cfg.tol.numeric || round_trip > cfg.tol.numeric * std::max(1.0, f.norm()))
      self_check_failed("Zak transform is not unitary on this input");
    out["self_check"] = {{"norm_sq", norm}, {"plancherel_norm_sq", plancherel}, {"round_trip_error", round_trip}};
  }
  return out;
}

json cmd_translates(const ZakInputs& in, const std::string& family_path, const Config& cfg) {
  const auto g = load_group(in.group);
  const auto sub = load_subgroup(g.group, in.subgroup, in.subgroup_type, in.subgroup_irreps, in.basis, cfg.tol);
  const LtwoG space(right_cosets(sub.embedding));
  const auto family = load_family(family_path);
  const auto report = translates_frame_bounds(family, space, sub.table, cfg.tol);
  const auto range = generated_range_function(family, space, sub.table, cfg.tol);
  json components = json::array();
  for (const auto& c : canonical_decomposition(range))
    components.push_back({{"irrep", sub.table.name(c.irrep)},
                          {"acts_as", sub.table.name(sub.table.contragredient_of(c.irrep))},
                          {"dim", sub.table.dim(c.irrep)},
                          {"fiber_vector", io::to_json(c.fiber_vector)}});
  json out = {{"report", io::report_to_json(report, &sub.table)},
              {"range_function", io::range_function_to_json(range, sub.table)},
              {"components", components},
              {"invariant_dim", invariant_dim(range, sub.table)}};
  if (cfg.self_check) {
    // Brute force: Gramian of every translate of every family member.
    const int nk = space.subgroup()->order();
    CMatrix vectors(space.size(), static_cast<Eigen::Index>(family.size()) * nk);
    for (size_t j = 0; j < family.size(); ++j)
      for (Element k = 0; k < nk; ++k) vectors.col(static_cast<Eigen::Index>(j) * nk + k) = space.left_translate(family[j], k);
    const CMatrix gram = vectors.adjoint() * vectors / static_cast<double>(nk) / static_cast<double>(nk);
    const auto oracle = nonzero_extremes(sorted_spectrum(gram), cfg.tol.rank);
    if (!bounds_match(oracle, report.continuous_bounds, cfg.tol.spectrum))
      self_check_failed("fiber bounds disagree with the translate Gramian");
    out["self_check"] = {{"oracle_bounds", bounds_json(oracle)}, {"passed", true}};
  }
  return out;
}

json cmd_duality(const std::string& spec_path, const std::string& group_arg, const std::string& irreps,
                 const std::string& basis, const std::string& range_path, const Config& cfg) {
  const json spec_json = io::read_json_file(spec_path);
  std::string group_text = group_arg;
  if (group_text.empty() && spec_json.contains("group")) group_text = spec_json.at("group").get<std::string>();
  if (group_text.empty()) throw Error(ErrorCode::ParseError, "pass --group or put a 'group' entry in the spec");
  const auto g = load_group(group_text);
  const auto table = load_table(g, irreps, basis, cfg.tol);
  const auto spec = io::spec_from_json(spec_json, table);
  std::optional<RangeFunction> range;
  if (!range_path.empty()) {
    const auto j = io::read_json_file(range_path);
    RangeFunction r;
    for (int p = 0; p < table.size(); ++p) {
      CMatrix fiber(spec.multiplicities[p], 0);
      if (j.at("fibers").contains(table.name(p))) {
        const auto& cols = j.at("fibers").at(table.name(p));
        fiber.resize(spec.multiplicities[p], static_cast<Eigen::Index>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
          const CVector v = io::vector_from_json(cols[c]);
          if (v.size() != spec.multiplicities[p]) throw Error(ErrorCode::ShapeMismatch, "fiber vector has the wrong length");
          fiber.col(static_cast<Eigen::Index>(c)) = v;
        }
        fiber = linalg::orthonormal_basis(fiber, cfg.tol.rank);
      }
      r.fibers.push_back(fiber);
    }
    range = std::move(r);
  }
  const auto report = multigen_frame_bounds(spec, table, range, cfg.tol);
  json out = io::riesz_report_to_json(report, table);
  out["is_frame"] = report.overall.is_frame_for_whole_space.value_or(false);
  if (!range) {
    const auto iso = multigen_isotypical_check(spec, table, cfg.tol);
    json per = json::object();
    for (int p = 0; p < table.size(); ++p)
      if (iso.per_pi[p]) per[table.name(p)] = io::report_to_json(*iso.per_pi[p], &table);
    out["isotypical"] = {{"components", per}, {"consistent", iso.consistent}};
    if (cfg.self_check && !iso.consistent) self_check_failed("isotypical reports disagree with the overall report");
  }
  if (cfg.self_check) {
    const auto rep = standard_model_rep(table, spec.multiplicities);
    const int nk = g.group->order();
    CMatrix orbit(rep.dim(), static_cast<Eigen::Index>(spec.num_generators()) * nk);
    for (int j = 0; j < spec.num_generators(); ++j) {
      const CVector v = model_vector(spec, j, table);
      for (Element k = 0; k < nk; ++k) orbit.col(static_cast<Eigen::Index>(j) * nk + k) = rep(k) * v;
    }
    const auto oracle = nonzero_extremes(sorted_spectrum(orbit.adjoint() * orbit / static_cast<double>(nk)), cfg.tol.rank);
    if (!bounds_match(oracle, report.overall.continuous_bounds, cfg.tol.spectrum))
      self_check_failed("row bounds disagree with the orbit Gramian");
    // c^* Q c against the defining sum on seeded random coefficients.
    std::mt19937_64 rng(cfg.seed);
    double worst = 0;
    for (int p = 0; p < table.size(); ++p) {
      if (spec.multiplicities[p] == 0) continue;
      const CVector c = random_vector(rng, spec.multiplicities[p]);
      double direct = 0;
      for (const auto& gen : spec.generators) direct += (gen[p].transpose() * c).squaredNorm();
      const double form = (c.adjoint() * row_form(spec, p) * c)(0, 0).real();
      worst = std::max(worst, relative_gap(direct, form));
    }
    if (worst > cfg.tol.numeric) self_check_failed("row form does not match its defining sum");
    out["self_check"] = {{"oracle_bounds", bounds_json(oracle)}, {"form_gap", worst}, {"passed", true}};
  }
  return out;
}

json cmd_decompose(const std::string& group_arg, const std::string& rep_path, const std::vector<std::string>& vectors,
                   const std::string& irreps, const std::string& basis, const Config& cfg) {
  const auto g = load_group(group_arg);
  const auto table = load_table(g, irreps, basis, cfg.tol);
  const auto rep = io::rep_from_json(g.group, io::read_json_file(rep_path));
  const auto iso = isotypic_basis(rep, table, cfg.tol);
  json out = {{"multiplicities", named_ints(iso.multiplicities, table)},
              {"isotypic_basis", io::to_json(iso.unitary)},
              {"block_offsets", iso.block_offsets}};
  json ranks = json::object();
  for (int p = 0; p < table.size(); ++p)
    ranks[table.name(p)] = static_cast<int>(std::lround(isotypical_projection(rep, table, p).trace().real()));
  out["component_dims"] = ranks;
  if (!vectors.empty()) {
    std::vector<CVector> vs;
    for (const auto& v : vectors) vs.push_back(load_vector(v));
    out["spec"] = io::spec_to_json(spec_from_rep_vectors(rep, vs, table, cfg.tol), table);
  }
  if (cfg.self_check) {
    const auto model = conjugated(rep, iso.unitary);
    const auto target = standard_model_rep(table, iso.multiplicities);
    double gap = 0;
    for (Element k = 0; k < g.group->order(); ++k) gap = std::max(gap, linalg::max_abs(model(k) - target(k)));
    if (gap > cfg.tol.numeric) self_check_failed("isotypic basis does not block-diagonalize the representation");
    out["self_check"] = {{"model_gap", gap}, {"passed", true}};
  }
  return out;
}

json error_json(const Error& e) {
  return {{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"witness", e.witness()}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"framecraft: group frames of finite groups"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--tol-rank", cfg.tol.rank, "relative rank threshold")->check(CLI::PositiveNumber);
  app.add_option("--tol-numeric", cfg.tol.numeric, "identity tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-psd", cfg.tol.psd, "PSD tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-tight", cfg.tol.tight, "tightness tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--output", cfg.output, "write the report here instead of stdout");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text", "pretty-text"}));
  bool no_self_check = false;
  app.add_flag("--no-self-check", no_self_check, "skip verification of outputs");

  std::string group, rep, vector, irreps, basis = "complex", ranks, subgroup_path, psi, family, spec_path, range,
                                          function, cross_section;
  std::vector<std::string> vectors;
  bool compare = false;
  int n = 0;
  ZakInputs zin;

  auto* vg = app.add_subcommand("validate-group", "check a Cayley table or builtin group");
  vg->add_option("group", group, "builtin spec or JSON file")->required();
  vg->add_option("--subgroup", subgroup_path, "subgroup JSON; prints its right cosets");

  auto* vi = app.add_subcommand("validate-irreps", "check an irrep table");
  vi->add_option("group", group)->required();
  vi->add_option("--irreps", irreps);
  vi->add_option("--basis", basis);

  auto add_rep_options = [&](CLI::App* sub) {
    sub->add_option("--group", group, "builtin spec or JSON file")->required();
    sub->add_option("--rep", rep, "representation JSON")->required();
    sub->add_option("--irreps", irreps);
    sub->add_option("--basis", basis);
  };
  auto* an = app.add_subcommand("analyze", "frame analysis of one orbit");
  add_rep_options(an);
  an->add_option("--vector", vector, "generator (JSON file or comma list)")->required();

  auto* gr = app.add_subcommand("gramian", "block-diagonal Gramian of one orbit");
  add_rep_options(gr);
  gr->add_option("--vector", vector)->required();
  gr->add_flag("--compare-oracle", compare);

  auto* ha = app.add_subcommand("harmonic", "harmonic frame from a rank selection");
  ha->add_option("group", group)->required();
  ha->add_option("--ranks", ranks, "comma list, one rank per irrep")->required();
  ha->add_option("--basis", basis);
  ha->add_option("--irreps", irreps);

  auto* pa = app.add_subcommand("parseval", "Parseval generator from a rank selection");
  pa->add_option("group", group)->required();
  pa->add_option("--ranks", ranks)->required();
  pa->add_option("--basis", basis);
  pa->add_option("--irreps", irreps);

  auto* pf = app.add_subcommand("permframe", "tight frame generator for S_n on n points");
  pf->add_option("n", n)->required()->check(CLI::Range(1, 5));
  pf->add_option("--psi", psi, "zero-sum direction (file or comma list)");

  auto add_pair_options = [&](CLI::App* sub) {
    sub->add_option("--group", zin.group)->required();
    sub->add_option("--subgroup", zin.subgroup, "JSON with member_indices and optional type")->required();
    sub->add_option("--subgroup-type", zin.subgroup_type, "builtin spec the subgroup is isomorphic to");
    sub->add_option("--subgroup-irreps", zin.subgroup_irreps);
    sub->add_option("--basis", zin.basis);
  };
  auto* za = app.add_subcommand("zak", "Zak transform of a function on G");
  add_pair_options(za);
  za->add_option("--function", function)->required();
  za->add_option("--cross-section", cross_section, "one representative per coset");

  auto* tr = app.add_subcommand("translates", "frame of translates by the subgroup");
  add_pair_options(tr);
  tr->add_option("--family", family)->required();

  auto* du = app.add_subcommand("duality", "multi-generator frame bounds from row Riesz bounds");
  du->add_option("spec", spec_path)->required();
  du->add_option("--group", group, "defaults to the spec's 'group' entry");
  du->add_option("--irreps", irreps);
  du->add_option("--basis", basis);
  du->add_option("--range", range, "range function JSON restricting to a subspace");

  auto* de = app.add_subcommand("decompose", "isotypic decomposition of a representation");
  add_rep_options(de);
  de->add_option("--vector", vectors, "vectors to express in the standard model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }
  cfg.self_check = !no_self_check;

  try {
    if (!cfg.tol.valid()) throw Error(ErrorCode::ParseError, "tolerances must be positive");
    json result;
    if (*vg) result = cmd_validate_group(group, subgroup_path, cfg);
    else if (*vi) result = cmd_validate_irreps(group, irreps, basis, cfg);
    else if (*an) result = cmd_analyze(group, rep, vector, irreps, basis, cfg);
    else if (*gr) result = cmd_gramian(group, rep, vector, irreps, basis, compare, cfg);
    else if (*ha) result = cmd_harmonic(group, ranks, basis, irreps, cfg);
    else if (*pa) result = cmd_parseval(group, ranks, basis, irreps, cfg);
    else if (*pf) result = cmd_permframe(n, psi, cfg);
    else if (*za) result = cmd_zak(zin, function, cross_section, cfg);
    else if (*tr) result = cmd_translates(zin, family, cfg);
    else if (*du) result = cmd_duality(spec_path, group, irreps, basis, range, cfg);
    else if (*de) result = cmd_decompose(group, rep, vectors, irreps, basis, cfg);
    emit(result, cfg, out);
    return 0;
  } catch (const Error& e) {
    err << error_json(e).dump(2) << "\n";
    return e.is_numeric() ? 2 : 1;
  } catch (const json::exception& e) {
    err << error_json(Error(ErrorCode::ParseError, e.what())).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << error_json(Error(ErrorCode::NumericFailure, e.what())).dump(2) << "\n";
    return 2;
  }
}

}  // namespace framecraft::cli
