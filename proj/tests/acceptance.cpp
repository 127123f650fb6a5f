// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "d3_example.hpp"
#include "fixtures.hpp"
#include "framecraft.hpp"
#include "framecraft/io.hpp"
#include "multigen_oracle.hpp"
#include "oracles.hpp"

using namespace framecraft;

namespace {

// Pinned tolerances and limits.
constexpr double kBracketTol = 1e-9;
constexpr double kHarmonicTol = 1e-12;
constexpr double kPlancherelTol = 1e-10;
constexpr double kZakTol = 1e-9;
constexpr double kTranslateTol = 1e-8;
constexpr double kSpectrumTol = 1e-8;
constexpr double kIrrepTightTol = 1e-9;
constexpr double kTwoTransitiveMargin = 1e-8;
constexpr double kDualityTol = 1e-8;
constexpr double kIdempotentTol = 1e-10;
constexpr double kParsevalTol = 1e-8;
constexpr double kBracketProjTol = 1e-8;
constexpr std::uint64_t kSeed = 20240601;

const char* const kTables[] = {"cyclic:6", "dihedral:3", "dihedral:4", "dihedral:5", "symmetric:3",
                               "symmetric:4", "product:cyclic:2xdihedral:3"};

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double rel_gap(double a, double b) { return std::abs(a - b); }

bool run_criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_s) {
    out.ok = false;
    out.detail = "runtime over limit";
  }
  std::printf("%s %2d %s (%.3fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
              out.detail.c_str());
  return out.ok;
}

io::json run_cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "framecraft");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return code == 0 ? io::json::parse(out.str()) : io::json();
}

Outcome d3_brackets() {
  Outcome o;
  const auto t = builtin_irrep_table("dihedral:3");
  const auto rep = d3::example_rep();
  const CVector f = d3::example_vector();
  const auto b = bracket(rep, f, f, t);
  CMatrix rot = CMatrix::Zero(2, 2);
  rot(1, 1) = 2;
  o.require(std::abs(b.blocks[t.index_of("trivial")](0, 0) - 4.0) <= kBracketTol, "trivial block");
  o.require(std::abs(b.blocks[t.index_of("sign")](0, 0) - 4.0) <= kBracketTol, "sign block");
  o.require(oracle::max_abs(b.blocks[t.index_of("rot1")] - rot) <= kBracketTol, "2-dimensional block");
  const auto r = frame_bounds_single(rep, f, t);
  o.require(r.continuous_bounds && rel_gap(r.continuous_bounds->first, 2) <= kBracketTol &&
                rel_gap(r.continuous_bounds->second, 4) <= kBracketTol,
            "continuous bounds");
  o.require(r.discrete_bounds && rel_gap(r.discrete_bounds->first, 12) <= kBracketTol &&
                rel_gap(r.discrete_bounds->second, 24) <= kBracketTol,
            "discrete bounds");
  return o;
}

Outcome d3_harmonic() {
  Outcome o;
  const double s2 = std::sqrt(2.0), h = 1 / s2, r = std::sqrt(1.5);
  const cplx w = std::polar(1.0, 2 * M_PI / 3);
  CMatrix complex(3, 6), real(3, 6);
  complex << 1, 1, 1, -1, -1, -1, s2, w * s2, w * w * s2, 0, 0, 0, 0, 0, 0, s2, w * s2, w * w * s2;
  real << 1, 1, 1, -1, -1, -1, s2, -h, -h, s2, -h, -h, 0, -r, r, 0, r, -r;
  for (const auto& [basis, want] : {std::pair{std::string("complex"), complex}, std::pair{std::string("real"), real}}) {
    int code = 0;
    const auto j = run_cli({"harmonic", "dihedral:3", "--ranks", "0,1,1", "--basis", basis}, code);
    o.require(code == 0, basis + " run failed");
    if (code != 0) return o;
    const CMatrix got = io::matrix_from_json(j.at("matrix"));
    o.require(got.rows() == 3 && got.cols() == 6 && oracle::max_abs(got - want) <= kHarmonicTol, basis + " matrix");
    o.require(j.at("tight").get<bool>(), basis + " not tight");
    o.require(j.at("discrete_bound").get<double>() == 6.0, basis + " bound");
    // Independent tightness check of the parsed matrix.
    o.require(oracle::max_abs(got * got.adjoint() - 6.0 * CMatrix::Identity(3, 3)) <= kHarmonicTol,
              basis + " frame operator");
  }
  return o;
}

Outcome plancherel() {
  Outcome o;
  oracle::Rng rng(kSeed + 3);
  for (const char* name : {"cyclic:6", "dihedral:3", "dihedral:4", "symmetric:3", "symmetric:4"}) {
    const auto t = builtin_irrep_table(name);
    const int n = t.group()->order();
    for (int trial = 0; trial < 100; ++trial) {
      const CVector f = rng.cvector(n);
      double total = 0;
      for (int p = 0; p < t.size(); ++p) total += t.dim(p) * fourier_block(f, t, p).squaredNorm();
      o.require(std::abs(total - f.squaredNorm() / n) <= kPlancherelTol, std::string(name) + " Plancherel");
    }
    // sqrt(d) pi_ij orthonormal in L2(K).
    std::vector<CVector> elems;
    for (int p = 0; p < t.size(); ++p)
      for (int i = 0; i < t.dim(p); ++i)
        for (int j = 0; j < t.dim(p); ++j) {
          CVector e(n);
          for (int x = 0; x < n; ++x) e[x] = std::sqrt(static_cast<double>(t.dim(p))) * t(p, x)(i, j);
          elems.push_back(e);
        }
    CMatrix m(n, static_cast<Eigen::Index>(elems.size()));
    for (size_t i = 0; i < elems.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = elems[i];
    o.require(oracle::max_abs(m.adjoint() * m / static_cast<double>(n) - CMatrix::Identity(m.cols(), m.cols())) <=
                  kPlancherelTol,
              std::string(name) + " matrix elements");
  }
  return o;
}

Outcome zak_suite() {
  Outcome o;
  oracle::Rng rng(kSeed + 4);
  for (const auto& pair : fixture::zak_pairs()) {
    const auto& space = pair.space;
    const auto& t = pair.table;
    const int nk = space.subgroup()->order();
    std::vector<Element> reps;
    for (const auto& c : space.cosets().cosets()) reps.push_back(c[rng.below(static_cast<int>(c.size()))]);
    const LtwoG other(with_cross_section(space.cosets(), reps));
    for (int trial = 0; trial < 50; ++trial) {
      const CVector f = rng.cvector(space.size()), g = rng.cvector(space.size());
      const auto zf = zak(f, space, t), zg = zak(g, space, t), zo = zak(f, other, t);
      double plan = 0;
      for (int p = 0; p < t.size(); ++p) plan += t.dim(p) * zf.blocks[p].squaredNorm();
      o.require(std::abs(plan - space.norm_sq(f)) <= kZakTol, pair.name + " unitarity");
      const Element k = rng.below(nk);
      const auto zk = zak(space.left_translate(f, k), space, t);
      CVector elem(nk);
      for (Element x = 0; x < nk; ++x) elem[x] = space.inner_product(f, space.left_translate(g, x));
      for (int p = 0; p < t.size(); ++p) {
        o.require(oracle::max_abs(zk.blocks[p] - zf.blocks[p] * t(p, k).adjoint()) <= kZakTol,
                  pair.name + " translation identity");
        o.require(oracle::max_abs(zg.blocks[p].adjoint() * zf.blocks[p] -
                                  oracle::fourier_coefficient(elem, t.irrep(p))) <= kZakTol,
                  pair.name + " bracket identity");
        Eigen::JacobiSVD<CMatrix> s1(zf.blocks[p]), s2(zo.blocks[p]);
        o.require((s1.singularValues() - s2.singularValues()).cwiseAbs().maxCoeff() <= kZakTol,
                  pair.name + " cross-section independence");
      }
    }
  }
  return o;
}

Outcome translates() {
  Outcome o;
  oracle::Rng rng(kSeed + 5);
  for (const auto& pair : fixture::zak_pairs()) {
    const int nk = pair.space.subgroup()->order();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<CVector> family;
      for (int i = 0, m = 1 + rng.below(3); i < m; ++i) family.push_back(rng.cvector(pair.space.size()));
      const auto report = translates_frame_bounds(family, pair.space, pair.table);
      CMatrix vectors(pair.space.size(), static_cast<Eigen::Index>(family.size()) * nk);
      for (size_t f = 0; f < family.size(); ++f)
        for (Element k = 0; k < nk; ++k)
          vectors.col(static_cast<Eigen::Index>(f) * nk + k) = pair.space.left_translate(family[f], k);
      const auto want = oracle::gram_bounds(vectors, 1.0 / nk / nk);
      o.require(want && report.continuous_bounds, pair.name + " missing bounds");
      if (!want || !report.continuous_bounds) return o;
      o.require(std::abs(report.continuous_bounds->first - want->first) <= kTranslateTol &&
                    std::abs(report.continuous_bounds->second - want->second) <= kTranslateTol,
                pair.name + " bounds differ");
    }
  }
  return o;
}

Outcome gramian_blocks_suite() {
  Outcome o;
  oracle::Rng rng(kSeed + 6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = builtin_irrep_table(kTables[trial % std::size(kTables)]);
    const auto rep = oracle::random_rep(t, rng, 2, 10);
    const CVector f = rng.cvector(rep.dim());
    const auto b = bracket(rep, f, f, t);
    std::vector<double> replicated;
    for (int p = 0; p < t.size(); ++p)
      for (double v : oracle::hermitian_spectrum(b.blocks[p]))
        for (int r = 0; r < t.dim(p); ++r) replicated.push_back(v);
    std::sort(replicated.begin(), replicated.end());
    const CMatrix orb = oracle::orbit(rep, f);
    const auto direct = oracle::hermitian_spectrum(orb.adjoint() * orb / static_cast<double>(t.group()->order()));
    o.require(direct.size() == replicated.size(), "spectrum sizes");
    for (size_t i = 0; i < direct.size() && i < replicated.size(); ++i)
      o.require(std::abs(direct[i] - replicated[i]) <= kSpectrumTol, "spectra differ");
  }
  return o;
}

Outcome irreducible_tightness() {
  Outcome o;
  oracle::Rng rng(kSeed + 7);
  for (const char* name : kTables) {
    const auto t = builtin_irrep_table(name);
    for (int p = 0; p < t.size(); ++p)
      for (int trial = 0; trial < 20; ++trial) {
        const CVector f = rng.cvector(t.dim(p));
        const auto r = frame_bounds_single(t.irrep(p), f, t);
        const double want = f.squaredNorm() / t.dim(p);
        o.require(r.is_tight && r.continuous_bounds && std::abs(r.continuous_bounds->first - want) <= kIrrepTightTol &&
                      std::abs(r.continuous_bounds->second - want) <= kIrrepTightTol,
                  std::string(name) + "/" + t.name(p));
      }
  }
  return o;
}

Outcome two_transitive() {
  Outcome o;
  oracle::Rng rng(kSeed + 8);
  for (int n = 2; n <= 4; ++n) {
    const auto action = symmetric_natural_action(n);
    const auto rep = permutation_representation(action);
    for (int trial = 0; trial < 100; ++trial) {
      CVector f = rng.cvector(n);
      if (trial % 2) {
        CVector psi = f.array() - f.mean();
        f = CVector::Ones(n) + psi * (std::sqrt(static_cast<double>(n * n - n)) / psi.norm());
      }
      const double sum_sq = std::norm(f.sum()), norm_sq = f.squaredNorm();
      const bool criterion = std::abs(sum_sq - norm_sq) <= kTwoTransitiveMargin * norm_sq;
      const CMatrix orb = oracle::orbit(rep, f);
      const auto b = oracle::gram_bounds(orb, 1.0);
      const bool brute = b && oracle::numeric_rank(orb) == n && (b->second - b->first) <= kTwoTransitiveMargin * b->second;
      o.require(brute == criterion, "criterion disagrees with the Gramian for S" + std::to_string(n));
      o.require(two_transitive_tightness(action, f).tight == criterion, "library verdict for S" + std::to_string(n));
    }
    for (int trial = 0; trial < 20; ++trial) {
      CVector psi = rng.cvector(n);
      psi.array() -= psi.mean();
      const CVector f = trial ? permutation_frame_generator(n, psi) : permutation_frame_generator(n);
      const CMatrix orb = oracle::orbit(rep, f);
      const auto b = oracle::gram_bounds(orb, 1.0);
      o.require(b && oracle::numeric_rank(orb) == n && (b->second - b->first) <= kTwoTransitiveMargin * b->second,
                "constructed generator not tight for S" + std::to_string(n));
    }
  }
  return o;
}

Outcome duality() {
  Outcome o;
  oracle::Rng rng(kSeed + 9);
  const char* groups[] = {"cyclic:4", "dihedral:3", "dihedral:4", "symmetric:3"};
  int frames = 0, non_frames = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = builtin_irrep_table(groups[trial % 4]);
    const auto spec = oracle::random_spec(t, rng);
    const auto report = multigen_frame_bounds(spec, t);
    const CMatrix orb = oracle::model_orbits(spec, t);
    const bool whole = oracle::numeric_rank(orb) == orb.rows();
    whole ? ++frames : ++non_frames;
    o.require(report.overall.is_frame_for_whole_space.has_value() && *report.overall.is_frame_for_whole_space == whole,
              "verdict differs on trial " + std::to_string(trial));
    const auto b = oracle::gram_bounds(orb, 1.0 / t.group()->order());
    o.require(b && report.overall.continuous_bounds && std::abs(report.overall.continuous_bounds->first - b->first) <= kDualityTol &&
                  std::abs(report.overall.continuous_bounds->second - b->second) <= kDualityTol,
              "bounds differ on trial " + std::to_string(trial));

    MultiGenSpec single{spec.multiplicities, {spec.generators.front()}};
    const auto engine = frame_bounds_single(standard_model_rep(t, spec.multiplicities), model_vector(single, 0, t), t);
    const auto multi = multigen_frame_bounds(single, t).overall;
    o.require(engine.continuous_bounds && multi.continuous_bounds &&
                  std::abs(engine.continuous_bounds->first - multi.continuous_bounds->first) <= kDualityTol &&
                  std::abs(engine.continuous_bounds->second - multi.continuous_bounds->second) <= kDualityTol,
              "single-generator bounds differ on trial " + std::to_string(trial));
  }
  o.require(frames > 0 && non_frames > 0, "sample did not exercise both verdicts");
  return o;
}

Outcome parseval_round_trip() {
  Outcome o;
  oracle::Rng rng(kSeed + 10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = builtin_irrep_table(kTables[trial % std::size(kTables)]);
    std::vector<int> ranks;
    int total = 0;
    for (int p = 0; p < t.size(); ++p) {
      ranks.push_back(rng.below(t.dim(p) + 1));
      total += ranks.back();
    }
    if (total == 0) ranks[rng.below(t.size())] = 1;
    const auto f = parseval_generator(t, ranks);
    o.require(oracle::max_abs(convolve(f, f).values - f.values) <= kIdempotentTol, "f * f != f");
    o.require(oracle::max_abs(involution(f).values - f.values) <= kIdempotentTol, "f* != f");
    const double n = t.group()->order();
    const auto b = oracle::gram_bounds(oracle::orbit(regular_representation(t.group()), f.values / std::sqrt(n)), 1 / n);
    o.require(b && std::abs(b->first - 1) <= kParsevalTol && std::abs(b->second - 1) <= kParsevalTol,
              "orbit not Parseval");
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = builtin_irrep_table(kTables[trial % std::size(kTables)]);
    const auto rep = oracle::random_rep(t, rng, 2, 8);
    const CVector g = canonical_tight(rep, rng.cvector(rep.dim()));
    const auto bnd = oracle::gram_bounds(oracle::orbit(rep, g), 1.0 / t.group()->order());
    o.require(bnd && std::abs(bnd->first - 1) <= kParsevalTol && std::abs(bnd->second - 1) <= kParsevalTol,
              "canonical tight vector is not Parseval");
    for (const auto& block : bracket(rep, g, g, t).blocks) {
      o.require(oracle::max_abs(block * block - block) <= kBracketProjTol, "bracket block not idempotent");
      o.require(oracle::max_abs(block - block.adjoint()) <= kBracketProjTol, "bracket block not Hermitian");
    }
  }
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "worked D3 brackets and bounds", 1, d3_brackets);
  ok &= run_criterion(2, "D3 harmonic frames in both bases", 1, d3_harmonic);
  ok &= run_criterion(3, "Plancherel and matrix-element orthonormality", 10, plancherel);
  ok &= run_criterion(4, "Zak transform identities", 30, zak_suite);
  ok &= run_criterion(5, "translate frames from fibers", 60, translates);
  ok &= run_criterion(6, "Gramian block diagonalization", 30, gramian_blocks_suite);
  ok &= run_criterion(7, "irreducible orbits are tight", 30, irreducible_tightness);
  ok &= run_criterion(8, "2-transitive tightness criterion", 30, two_transitive);
  ok &= run_criterion(9, "multi-generator duality", 60, duality);
  ok &= run_criterion(10, "Parseval classification round trip", 30, parseval_round_trip);
  return ok ? 0 : 1;
}
