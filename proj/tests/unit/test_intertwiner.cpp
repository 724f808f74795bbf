#include "qrep/intertwiner.hpp"

#include "qrep/kronecker.hpp"
#include "qrep/operators.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace qrep;

TEST(Hom, AgreesWithBruteForceOnRandomPairs) {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    Quiver q = gen::random_quiver(rng);
    Representation a = gen::random_rep(rng, q, 3, true);
    Representation b = gen::random_rep(rng, q, 3, true);
    HomBasis h = hom(a, b);
    EXPECT_EQ(h.dimension(), oracle::hom_dim(a, b)) << "trial " << trial;
    for (const auto& t : h.basis) EXPECT_LT(intertwining_residual(a, b, t), 1e-10);
  }
}

TEST(Hom, BasisIsOrthonormal) {
  Representation rep = example_rep("ex2", {{"N", 4}});
  HomBasis e = end(rep);
  ASSERT_EQ(e.dimension(), 4);
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    for (std::size_t j = 0; j < e.basis.size(); ++j) {
      Complex ip = 0.0;
      for (std::size_t v = 0; v < e.basis[i].size(); ++v)
        ip += e.basis[j][v].cwiseProduct(e.basis[i][v].conjugate()).sum();
      EXPECT_NEAR(std::abs(ip), i == j ? 1.0 : 0.0, 1e-12);
    }
}

TEST(Hom, EndOfJordanBlockIsPolynomialsInIt) {
  for (Index n = 1; n <= 4; ++n) {
    Representation rep = loop_representation({jordan_block(0.3, n)});
    EXPECT_EQ(end(rep).dimension(), n);
  }
}

TEST(Hom, CommutantOfDistinctDiagonalIsDiagonal) {
  Vector d(3);
  d << 1.0, 2.0, 3.0;
  EXPECT_EQ(end(loop_representation({diagonal(d)})).dimension(), 3);
  d << 1.0, 1.0, 3.0;
  EXPECT_EQ(end(loop_representation({diagonal(d)})).dimension(), 5);
}

TEST(Hom, ZeroSpacesGiveEmptyHom) {
  Quiver q = Quiver::kronecker(1);
  Representation z = Representation::zero(q, {0, 0});
  Representation r = kronecker_representation({Matrix::Ones(1, 1)});
  EXPECT_EQ(hom(z, r).dimension(), 0);
  EXPECT_EQ(hom(r, z).dimension(), 0);
}

TEST(Hom, SizeLimitIsEnforced) {
  Tolerances tol;
  tol.size_limit = 10;
  EXPECT_THROW(end(example_rep("ex2", {{"N", 4}}), tol), SizeLimitError);
}

TEST(Hom, RejectsDifferentQuivers) {
  EXPECT_THROW(hom(example_rep("ex2", {}), example_rep("ex9", {})), ValidationError);
}

TEST(Iso, WitnessIntertwinesAndIsInvertible) {
  Rng rng(7);
  Representation rep = gen::gaussian_rep(rng, Quiver::kronecker(2), {2, 2});
  Representation moved = change_basis(rep, gen::random_basis_change(rng, rep, false));
  IsoResult r = are_isomorphic(rep, moved);
  ASSERT_EQ(r.verdict, IsoVerdict::yes);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_LT(intertwining_residual(rep, moved, *r.witness), 1e-9);
  for (const auto& block : *r.witness) EXPECT_GT(smallest_singular_value(block), 1e-8);
}

TEST(Iso, JordanFamiliesAreNotIsomorphic) {
  Representation a = build_family({KroneckerKind::jordan_first, 0.0, 2});
  Representation b = build_family({KroneckerKind::jordan_second, 0.0, 2});
  EXPECT_EQ(hom(a, b).dimension(), 0);
  EXPECT_EQ(hom(b, a).dimension(), 0);
  EXPECT_EQ(are_isomorphic(a, b).verdict, IsoVerdict::no);
}

TEST(Iso, DifferentDimensionVectors) {
  IsoResult r = are_isomorphic(build_family({KroneckerKind::wide, 0.0, 1}),
                               build_family({KroneckerKind::tall, 0.0, 1}));
  EXPECT_EQ(r.verdict, IsoVerdict::no);
  EXPECT_EQ(r.reason, "dimension vectors differ");
}

TEST(Iso, NonzeroHomWithoutInvertibleElementIsProbablyNo) {
  // J_2(0) vs zero 2x2: Hom nonzero, nothing invertible.
  Representation j = loop_representation({jordan_block(0.0, 2)});
  Representation z = loop_representation({Matrix::Zero(2, 2)});
  IsoResult r = are_isomorphic(j, z);
  EXPECT_GT(r.hom_dimension, 0);
  EXPECT_EQ(r.verdict, IsoVerdict::probably_no);
}

TEST(Iso, SeedIsRecorded) {
  Tolerances tol;
  tol.seed = 42;
  Representation rep = example_rep("ex3", {{"N", 3}});
  EXPECT_EQ(are_isomorphic(rep, rep, tol).seed, 42u);
}

TEST(RelativelyPrime, ShiftedJordanPencils) {
  Representation a = example_rep("ex8", {{"N", 3}, {"lambda", 1.0}});
  Representation b = example_rep("ex8", {{"N", 3}, {"lambda", 2.0}});
  EXPECT_TRUE(relatively_prime(a, b));
  EXPECT_FALSE(relatively_prime(a, a));
}
