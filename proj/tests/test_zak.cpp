#include <doctest.h>

#include "fixtures.hpp"
#include "framecraft.hpp"
#include "oracles.hpp"

using namespace framecraft;

namespace {

std::vector<double> singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace

TEST_SUITE("zak") {

TEST_CASE("unitarity and inversion") {
  oracle::Rng rng(41);
  for (const auto& pair : fixture::zak_pairs()) {
    CAPTURE(pair.name);
    for (int trial = 0; trial < 10; ++trial) {
      const CVector f = rng.cvector(pair.space.size());
      const auto z = zak(f, pair.space, pair.table);
      double plancherel = 0;
      for (int p = 0; p < pair.table.size(); ++p) {
        CHECK(z.blocks[p].rows() == z.num_cosets * pair.table.dim(p));
        plancherel += pair.table.dim(p) * z.blocks[p].squaredNorm();
      }
      const double direct = f.squaredNorm() / pair.space.subgroup()->order();
      CHECK(std::abs(plancherel - direct) < 1e-10 * direct);
      CHECK(oracle::max_abs(inverse_zak(z, pair.space, pair.table) - f) < 1e-10);
    }
  }
}

TEST_CASE("blocks are Fourier coefficients of coset restrictions") {
  oracle::Rng rng(43);
  for (const auto& pair : fixture::zak_pairs()) {
    const auto& cos = pair.space.cosets();
    const auto& emb = cos.embedding();
    const auto& g = *pair.space.parent();
    const CVector f = rng.cvector(pair.space.size());
    const auto z = zak(f, pair.space, pair.table);
    const int nk = pair.space.subgroup()->order();
    for (int c = 0; c < cos.num_cosets(); ++c) {
      CVector restricted(nk);
      for (Element k = 0; k < nk; ++k) restricted[k] = f[g.mul(emb.parent_of(k), cos.representative(c))];
      for (int p = 0; p < pair.table.size(); ++p) {
        const int d = pair.table.dim(p);
        CHECK(oracle::max_abs(z.blocks[p].middleRows(c * d, d) -
                              oracle::fourier_coefficient(restricted, pair.table.irrep(p))) < 1e-12);
      }
    }
  }
}

TEST_CASE("translation identity") {
  oracle::Rng rng(47);
  for (const auto& pair : fixture::zak_pairs()) {
    const CVector f = rng.cvector(pair.space.size());
    const auto z = zak(f, pair.space, pair.table);
    for (Element k = 0; k < pair.space.subgroup()->order(); ++k) {
      const auto zk = zak(pair.space.left_translate(f, k), pair.space, pair.table);
      for (int p = 0; p < pair.table.size(); ++p)
        CHECK(oracle::max_abs(zk.blocks[p] - z.blocks[p] * pair.table(p, k).adjoint()) < 1e-10);
    }
  }
}

TEST_CASE("bracket of translates from the transform") {
  oracle::Rng rng(53);
  for (const auto& pair : fixture::zak_pairs()) {
    CAPTURE(pair.name);
    const auto rep = fixture::translation_rep(pair.space);
    const double scale = std::sqrt(static_cast<double>(pair.space.subgroup()->order()));
    const int n = pair.space.size();
    const CVector f = rng.cvector(n), g = rng.cvector(n);
    const auto zf = zak(f, pair.space, pair.table), zg = zak(g, pair.space, pair.table);
    // Reference bracket: Fourier coefficients of x -> <f, L_x g> computed directly.
    CVector elem(pair.space.subgroup()->order());
    for (Element k = 0; k < elem.size(); ++k) elem[k] = pair.space.inner_product(f, pair.space.left_translate(g, k));
    for (int p = 0; p < pair.table.size(); ++p) {
      const CMatrix want = oracle::fourier_coefficient(elem, pair.table.irrep(p));
      CHECK(oracle::max_abs(zg.blocks[p].adjoint() * zf.blocks[p] - want) < 1e-10);
      CHECK(oracle::max_abs(bracket(rep, f / scale, g / scale, pair.table).blocks[p] - want) < 1e-10);
    }
  }
}

TEST_CASE("cross-section independence") {
  oracle::Rng rng(59);
  for (const auto& pair : fixture::zak_pairs()) {
    const auto& base = pair.space.cosets();
    std::vector<Element> reps;
    for (const auto& c : base.cosets()) reps.push_back(c[rng.below(static_cast<int>(c.size()))]);
    const auto moved = with_cross_section(base, reps);
    const LtwoG other(moved);
    const auto shift = cross_section_shift(base, moved);
    for (int trial = 0; trial < 5; ++trial) {
      const CVector f = rng.cvector(pair.space.size());
      const auto z1 = zak(f, pair.space, pair.table);
      const auto z2 = zak(f, other, pair.table);
      const auto z3 = apply_cross_section_change(z1, shift, pair.table);
      for (int p = 0; p < pair.table.size(); ++p) {
        CHECK(oracle::max_abs(z2.blocks[p] - z3.blocks[p]) < 1e-10);
        const auto s1 = singular_values(z1.blocks[p]), s2 = singular_values(z2.blocks[p]);
        for (size_t i = 0; i < s1.size(); ++i) CHECK(std::abs(s1[i] - s2[i]) < 1e-10);
      }
    }
  }
}

TEST_CASE("range functions classify invariant subspaces") {
  oracle::Rng rng(61);
  for (const auto& pair : fixture::zak_pairs()) {
    CAPTURE(pair.name);
    const int n = pair.space.size();
    const std::vector<CVector> family = {rng.cvector(n)};
    const auto j = generated_range_function(family, pair.space, pair.table);
    const auto rep = fixture::translation_rep(pair.space);
    // Dimension of V_J equals the rank of the orbit.
    CHECK(invariant_dim(j, pair.table) == oracle::numeric_rank(oracle::orbit(rep, family[0])));
    CHECK(invariant_dim(j, pair.table) + invariant_dim(complement(j), pair.table) == n);
    CHECK(is_member(family[0], j, pair.space, pair.table));
    for (Element k = 0; k < pair.space.subgroup()->order(); ++k)
      CHECK(is_member(pair.space.left_translate(family[0], k), j, pair.space, pair.table));

    const CVector g = rng.cvector(n);
    const CVector pg = project_onto(g, j, pair.space, pair.table);
    CHECK(is_member(pg, j, pair.space, pair.table));
    CHECK(oracle::max_abs(project_onto(pg, j, pair.space, pair.table) - pg) < 1e-10);
    // g - Pg is orthogonal to every translate of the generator.
    for (Element k = 0; k < pair.space.subgroup()->order(); ++k)
      CHECK(std::abs(pair.space.inner_product(g - pg, pair.space.left_translate(family[0], k))) < 1e-10);
    if (invariant_dim(j, pair.table) < n) CHECK_FALSE(is_member(g, j, pair.space, pair.table));
  }
}

TEST_CASE("canonical components are orthonormal irreducible pieces") {
  oracle::Rng rng(67);
  for (const auto& pair : fixture::zak_pairs()) {
    const int n = pair.space.size();
    const auto j = generated_range_function({rng.cvector(n), rng.cvector(n)}, pair.space, pair.table);
    const auto parts = canonical_decomposition(j);
    std::vector<CVector> all;
    for (const auto& c : parts) {
      const auto basis = component_basis(c, pair.space, pair.table);
      CHECK(static_cast<int>(basis.size()) == pair.table.dim(c.irrep));
      CMatrix b(n, static_cast<Eigen::Index>(basis.size()));
      for (size_t i = 0; i < basis.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = basis[i];
      // K acts on the span through the contragredient of the labelled irrep.
      const int q = pair.table.contragredient_of(c.irrep);
      for (Element k = 0; k < pair.space.subgroup()->order(); ++k) {
        CMatrix moved(n, b.cols());
        for (Eigen::Index i = 0; i < b.cols(); ++i) moved.col(i) = pair.space.left_translate(b.col(i), k);
        const CMatrix action = b.adjoint() * moved / static_cast<double>(pair.space.subgroup()->order());
        CHECK(std::abs(action.trace() - pair.table(q, k).trace()) < 1e-9);
        CHECK(oracle::max_abs(b * action - moved) < 1e-9);
      }
      for (const auto& v : basis) {
        CHECK(is_member(v, j, pair.space, pair.table));
        all.push_back(v);
      }
    }
    CHECK(static_cast<int>(all.size()) == invariant_dim(j, pair.table));
    for (size_t a = 0; a < all.size(); ++a)
      for (size_t b = 0; b < all.size(); ++b)
        CHECK(std::abs(pair.space.inner_product(all[a], all[b]) - (a == b ? 1.0 : 0.0)) < 1e-9);
  }
}

TEST_CASE("translate frame bounds against the orbit Gramian") {
  oracle::Rng rng(71);
  for (const auto& pair : fixture::zak_pairs()) {
    CAPTURE(pair.name);
    const int nk = pair.space.subgroup()->order();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<CVector> family;
      for (int i = 0, m = 1 + rng.below(3); i < m; ++i) family.push_back(rng.cvector(pair.space.size()));
      const auto report = translates_frame_bounds(family, pair.space, pair.table);
      CMatrix vectors(pair.space.size(), static_cast<Eigen::Index>(family.size()) * nk);
      for (size_t f = 0; f < family.size(); ++f)
        for (Element k = 0; k < nk; ++k)
          vectors.col(static_cast<Eigen::Index>(f) * nk + k) = pair.space.left_translate(family[f], k);
      const auto want = oracle::gram_bounds(vectors, 1.0 / nk / nk);
      REQUIRE(want.has_value());
      REQUIRE(report.continuous_bounds.has_value());
      CHECK(report.continuous_bounds->first == doctest::Approx(want->first).epsilon(1e-8));
      CHECK(report.continuous_bounds->second == doctest::Approx(want->second).epsilon(1e-8));
      CHECK(report.span_dim == oracle::numeric_rank(vectors));
    }
  }
}

TEST_CASE("empty families are rejected") {
  const auto pair = fixture::zak_pairs().front();
  CHECK_THROWS_AS(translates_frame_bounds({}, pair.space, pair.table), Error);
}

}  // TEST_SUITE
