#include <doctest.h>

#include "framecraft.hpp"
#include "oracles.hpp"

using namespace framecraft;

namespace {

const char* const kTables[] = {"cyclic:1", "cyclic:5", "dihedral:3", "dihedral:4", "dihedral:5",
                               "symmetric:3", "symmetric:4", "product:cyclic:2xdihedral:3",
                               "product:cyclic:2xcyclic:3"};

// (1/|K|) sum pi_ij(x) conj(sigma_kl(x)) should be delta / d_pi.
double schur_defect(const IrrepTable& t) {
  const int n = t.group()->order();
  double worst = 0;
  for (int p = 0; p < t.size(); ++p)
    for (int q = 0; q < t.size(); ++q)
      for (int i = 0; i < t.dim(p); ++i)
        for (int j = 0; j < t.dim(p); ++j)
          for (int k = 0; k < t.dim(q); ++k)
            for (int l = 0; l < t.dim(q); ++l) {
              cplx acc = 0;
              for (int x = 0; x < n; ++x) acc += t(p, x)(i, j) * std::conj(t(q, x)(k, l));
              acc /= static_cast<double>(n);
              const double want = (p == q && i == k && j == l) ? 1.0 / t.dim(p) : 0.0;
              worst = std::max(worst, std::abs(acc - want));
            }
  return worst;
}

}  // namespace

TEST_SUITE("representation") {

TEST_CASE("builtin tables: dimensions, orthogonality, unitarity") {
  for (const char* name : kTables)
    for (Basis basis : {Basis::Complex, Basis::Real}) {
      CAPTURE(name);
      const auto t = builtin_irrep_table(name, basis);
      int sum_sq = 0;
      for (int p = 0; p < t.size(); ++p) {
        sum_sq += t.dim(p) * t.dim(p);
        CHECK(validate_rep(t.irrep(p)).ok());
      }
      CHECK(sum_sq == t.group()->order());
      CHECK(schur_defect(t) < 1e-10);
    }
}

TEST_CASE("irrep counts") {
  CHECK(builtin_irrep_table("cyclic:5").size() == 5);
  CHECK(builtin_irrep_table("dihedral:3").size() == 3);
  CHECK(builtin_irrep_table("dihedral:4").size() == 5);
  CHECK(builtin_irrep_table("dihedral:5").size() == 4);
  CHECK(builtin_irrep_table("symmetric:4").size() == 5);
  CHECK(builtin_irrep_table("product:cyclic:2xdihedral:3").size() == 6);
  CHECK(builtin_irrep_table("dihedral:3").names() == std::vector<std::string>{"trivial", "sign", "rot1"});
}

TEST_CASE("real bases are real") {
  CHECK(builtin_irrep_table("dihedral:3", Basis::Real).is_real());
  CHECK(builtin_irrep_table("symmetric:4").is_real());
  CHECK_FALSE(builtin_irrep_table("dihedral:3", Basis::Complex).is_real());
  CHECK_FALSE(builtin_irrep_table("cyclic:3").is_real());
}

TEST_CASE("symmetric:5 has no irrep table") {
  CHECK_THROWS_AS(builtin_irrep_table("symmetric:5"), Error);
}

TEST_CASE("contragredients have conjugate characters") {
  for (const char* name : kTables) {
    const auto t = builtin_irrep_table(name);
    for (int p = 0; p < t.size(); ++p) {
      const auto a = character(t.irrep(p));
      const auto b = character(t.irrep(t.contragredient_of(p)));
      for (size_t x = 0; x < a.size(); ++x) CHECK(std::abs(std::conj(a[x]) - b[x]) < 1e-10);
    }
  }
  const auto z5 = builtin_irrep_table("cyclic:5");
  CHECK(z5.contragredient_of(1) == 4);
  CHECK(z5.contragredient_of(0) == 0);
}

TEST_CASE("regular representation contains each irrep d times") {
  for (const char* name : kTables) {
    const auto t = builtin_irrep_table(name);
    const auto m = multiplicities(regular_representation(t.group()), t);
    for (int p = 0; p < t.size(); ++p) CHECK(m[p] == t.dim(p));
  }
}

TEST_CASE("multiplicities of random representations") {
  oracle::Rng rng(5);
  for (const char* name : kTables) {
    const auto t = builtin_irrep_table(name);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> counts;
      const auto rep = oracle::random_rep(t, rng, 2, 10, &counts);
      REQUIRE(validate_rep(rep).ok());
      CHECK(multiplicities(rep, t) == counts);
    }
  }
}

TEST_CASE("isotypic basis block-diagonalizes") {
  oracle::Rng rng(8);
  for (const char* name : {"dihedral:4", "symmetric:4", "product:cyclic:2xdihedral:3"}) {
    const auto t = builtin_irrep_table(name);
    for (int trial = 0; trial < 4; ++trial) {
      const auto rep = oracle::random_rep(t, rng);
      const auto iso = isotypic_basis(rep, t);
      const CMatrix& u = iso.unitary;
      CHECK(oracle::max_abs(u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())) < 1e-9);
      // Expected block diagonal form assembled here from the table.
      for (Element x = 0; x < t.group()->order(); ++x) {
        CMatrix want = CMatrix::Zero(rep.dim(), rep.dim());
        int at = 0;
        for (int p = 0; p < t.size(); ++p)
          for (int c = 0; c < iso.multiplicities[p]; ++c) {
            want.block(at, at, t.dim(p), t.dim(p)) = t(p, x);
            at += t.dim(p);
          }
        CHECK(oracle::max_abs(u.adjoint() * rep(x) * u - want) < 1e-9);
      }
    }
  }
}

TEST_CASE("isotypical projections are orthogonal projections summing to I") {
  oracle::Rng rng(2);
  const auto t = builtin_irrep_table("symmetric:3");
  const auto rep = oracle::random_rep(t, rng);
  CMatrix total = CMatrix::Zero(rep.dim(), rep.dim());
  for (int p = 0; p < t.size(); ++p) {
    const CMatrix pp = isotypical_projection(rep, t, p);
    CHECK(oracle::max_abs(pp * pp - pp) < 1e-10);
    CHECK(oracle::max_abs(pp - pp.adjoint()) < 1e-10);
    total += pp;
  }
  CHECK(oracle::max_abs(total - CMatrix::Identity(rep.dim(), rep.dim())) < 1e-10);
}

TEST_CASE("validation flags broken representations") {
  const auto t = builtin_irrep_table("dihedral:3");
  auto mats = t.irrep(2).matrices();
  mats[1] *= 2.0;
  const auto r1 = validate_rep(UnitaryRep(t.group(), mats));
  CHECK_FALSE(r1.ok());
  CHECK(r1.unitarity_defect > 1);

  auto swapped = t.irrep(2).matrices();
  std::swap(swapped[1], swapped[3]);
  CHECK(validate_rep(UnitaryRep(t.group(), swapped)).homomorphism_defect > 1e-3);
}

TEST_CASE("malformed tables are rejected") {
  const auto t = builtin_irrep_table("dihedral:3");
  // Missing the 2-dimensional irrep.
  CHECK_THROWS_AS(IrrepTable::create(t.group(), {t.irrep(0), t.irrep(1)}, {"a", "b"}, "user"), Error);
  // Duplicate entries.
  CHECK_THROWS_AS(IrrepTable::create(t.group(), {t.irrep(0), t.irrep(0), t.irrep(2)}, {"a", "b", "c"}, "user"), Error);
  // Reducible entry.
  const auto twice = direct_sum({t.irrep(0), t.irrep(1)});
  CHECK_THROWS_AS(IrrepTable::create(t.group(), {twice, t.irrep(2)}, {"a", "b"}, "user"), Error);
  // Valid when permuted.
  const auto ok = IrrepTable::create(t.group(), {t.irrep(2), t.irrep(0), t.irrep(1)}, {"x", "y", "z"}, "user");
  CHECK(ok.index_of("y") == 1);
  CHECK_THROWS_AS(ok.index_of("nope"), Error);
}

TEST_CASE("conjugated representations keep characters") {
  oracle::Rng rng(1);
  const auto t = builtin_irrep_table("dihedral:4");
  const auto rep = oracle::random_rep(t, rng);
  const auto moved = conjugated(rep, rng.unitary(rep.dim()));
  const auto a = character(rep), b = character(moved);
  for (size_t x = 0; x < a.size(); ++x) CHECK(std::abs(a[x] - b[x]) < 1e-10);
  CHECK(std::abs(character_inner(a, a) - character_inner(b, b)) < 1e-10);
}

TEST_CASE("permutation representation of S3 is trivial + standard") {
  const auto t = builtin_irrep_table("symmetric:3");
  const auto m = multiplicities(permutation_representation(symmetric_natural_action(3)), t);
  CHECK(m[t.index_of("trivial")] == 1);
  CHECK(m[t.index_of("standard")] == 1);
  CHECK(m[t.index_of("sign")] == 0);
}

}  // TEST_SUITE
