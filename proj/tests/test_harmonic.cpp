#include <doctest.h>

#include "framecraft.hpp"
#include "oracles.hpp"

using namespace framecraft;

namespace {

const char* const kGroups[] = {"cyclic:6", "dihedral:3", "dihedral:4", "symmetric:3", "symmetric:4",
                               "product:cyclic:2xdihedral:3"};

// Term-by-term convolution with the normalized measure.
CVector convolve_direct(const FiniteGroup& g, const CVector& f, const CVector& h) {
  const int n = g.order();
  CVector out = CVector::Zero(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x] += f[y] * h[g.mul(g.inverse(y), x)];
  return out / static_cast<double>(n);
}

}  // namespace

TEST_SUITE("harmonic") {

TEST_CASE("Plancherel and inversion on random functions") {
  oracle::Rng rng(101);
  for (const char* name : kGroups) {
    CAPTURE(name);
    const auto t = builtin_irrep_table(name);
    for (int trial = 0; trial < 20; ++trial) {
      const GroupFunction f(t.group(), rng.cvector(t.group()->order()));
      const auto coeffs = fourier(f, t);
      const double direct = f.values.squaredNorm() / t.group()->order();
      CHECK(std::abs(plancherel_norm_sq(coeffs, t) - direct) < 1e-10 * std::max(1.0, direct));
      CHECK(std::abs(norm_sq(f) - direct) < 1e-12 * std::max(1.0, direct));
      CHECK(oracle::max_abs(inverse_fourier(coeffs, t).values - f.values) < 1e-10);
      for (int p = 0; p < t.size(); ++p)
        CHECK(oracle::max_abs(coeffs.blocks[p] - oracle::fourier_coefficient(f.values, t.irrep(p))) < 1e-12);
    }
  }
}

TEST_CASE("convolution, involution and translation rules") {
  oracle::Rng rng(7);
  for (const char* name : kGroups) {
    CAPTURE(name);
    const auto t = builtin_irrep_table(name);
    const auto& g = *t.group();
    const int n = g.order();
    const GroupFunction f(t.group(), rng.cvector(n)), h(t.group(), rng.cvector(n));
    const auto fh = convolve(f, h);
    CHECK(oracle::max_abs(fh.values - convolve_direct(g, f.values, h.values)) < 1e-10);

    const auto ff = fourier(f, t), hh = fourier(h, t), cc = fourier(fh, t);
    const auto fs = fourier(involution(f), t);
    const Element x = rng.below(n);
    const auto lf = fourier(left_translate(f, x), t);
    const auto rf = fourier(right_translate(f, x), t);
    for (int p = 0; p < t.size(); ++p) {
      CHECK(oracle::max_abs(cc.blocks[p] - hh.blocks[p] * ff.blocks[p]) < 1e-10);
      CHECK(oracle::max_abs(fs.blocks[p] - ff.blocks[p].adjoint()) < 1e-10);
      CHECK(oracle::max_abs(lf.blocks[p] - ff.blocks[p] * t(p, x).adjoint()) < 1e-10);
      CHECK(oracle::max_abs(rf.blocks[p] - t(p, x) * ff.blocks[p]) < 1e-10);
    }
    for (int y = 0; y < n; ++y) {
      CHECK(std::abs(involution(f).values[y] - std::conj(f.values[g.inverse(y)])) < 1e-15);
      CHECK(std::abs(left_translate(f, x).values[y] - f.values[g.mul(g.inverse(x), y)]) < 1e-15);
      CHECK(std::abs(right_translate(f, x).values[y] - f.values[g.mul(y, x)]) < 1e-15);
    }
    CHECK(oracle::max_abs(convolve(GroupFunction::unit(t.group()), f).values - f.values) < 1e-12);
  }
}

TEST_CASE("inner product convention") {
  const auto g = builtin_group("cyclic:4");
  GroupFunction f(g, CVector::Ones(4)), h(g, CVector::Zero(4));
  h.values[1] = cplx(0, 2);
  CHECK(std::abs(inner_product(f, h) - cplx(0, -0.5)) < 1e-15);
  CHECK(norm_sq(f) == doctest::Approx(1.0));
}

TEST_CASE("matrix elements are of positive type") {
  oracle::Rng rng(19);
  for (const char* name : kGroups) {
    const auto t = builtin_irrep_table(name);
    const auto rep = oracle::random_rep(t, rng);
    const CVector f = rng.cvector(rep.dim());
    CVector vals(t.group()->order());
    for (int x = 0; x < t.group()->order(); ++x) vals[x] = (rep(x) * f).dot(f);
    const auto verdict = is_positive_type(GroupFunction(t.group(), vals), t);
    CHECK(verdict.positive);
    CHECK_FALSE(verdict.failing_irrep.has_value());
  }
}

TEST_CASE("negative definite function is not of positive type") {
  const auto t = builtin_irrep_table("dihedral:3");
  const auto v = is_positive_type(GroupFunction(t.group(), -CVector::Ones(6)), t);
  CHECK_FALSE(v.positive);
  REQUIRE(v.failing_irrep.has_value());
  CHECK(*v.failing_irrep == t.index_of("trivial"));
  CHECK(v.min_eigenvalue < 0);

  CVector odd = CVector::Zero(6);
  odd[1] = cplx(0, 1);  // f* != f
  CHECK(is_positive_type(GroupFunction(t.group(), odd), t).involution_defect > 0.5);
}

}  // TEST_SUITE
