#include "qrep/structure.hpp"

#include "qrep/kronecker.hpp"
#include "qrep/operators.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace qrep;

TEST(Radical, JordanBlockRadicalIsNilpotentPart) {
  Representation rep = loop_representation({jordan_block(2.0, 3)});
  HomBasis e = end(rep);
  RadicalInfo rad = jacobson_radical(end_algebra(rep, e));
  EXPECT_EQ(rad.dimension, 2);
}

TEST(Radical, SemisimpleAlgebraHasZeroRadical) {
  Vector d(3);
  d << 1.0, 2.0, 3.0;
  Representation rep = loop_representation({diagonal(d)});
  EXPECT_EQ(jacobson_radical(end_algebra(rep, end(rep))).dimension, 0);
}

TEST(Indecomposable, TwoInclusionsExample) {
  IndecomposabilityResult r = is_indecomposable(example_rep("ex1", {}));
  EXPECT_FALSE(r.indecomposable);
  EXPECT_EQ(r.end_dim, 2);
  EXPECT_EQ(r.radical_dim, 0);
  ASSERT_TRUE(r.idempotent.has_value());
  EXPECT_LT(r.idempotent_defect, 1e-9);
}

TEST(Indecomposable, ZeroRepresentationIsRejected) {
  EXPECT_THROW(is_indecomposable(Representation::zero(Quiver::loop(1), {0})), ValidationError);
}

TEST(Indecomposable, IdempotentIsAnEndomorphism) {
  Representation rep = example_rep("ex9", {{"N", 4}});
  IndecomposabilityResult r = is_indecomposable(rep);
  ASSERT_FALSE(r.indecomposable);
  EXPECT_LT(intertwining_residual(rep, rep, *r.idempotent), 1e-9);
  for (const auto& p : *r.idempotent) EXPECT_LT(max_abs(p * p - p), 1e-8);
}

TEST(Indecomposable, SeedChangesOnlyTheWitness) {
  Representation rep = example_rep("ex1", {});
  for (std::uint64_t s : {0u, 1u, 99u}) {
    Tolerances tol;
    tol.seed = s;
    EXPECT_FALSE(is_indecomposable(rep, tol).indecomposable);
  }
}

TEST(Simple, WorkedExamples) {
  SimplicityResult ex6 = is_simple(example_rep("ex6", {}));
  EXPECT_FALSE(ex6.simple);
  EXPECT_EQ(ex6.algebra_dim, 3);
  ASSERT_TRUE(ex6.witness_rep.has_value());
  EXPECT_EQ(ex6.witness_rep->dim(0), 1);

  SimplicityResult ex7 = is_simple(example_rep("ex7", {}));
  EXPECT_TRUE(ex7.simple);
  EXPECT_EQ(ex7.algebra_dim, 4);

  for (Index n = 2; n <= 4; ++n) EXPECT_TRUE(is_simple(example_rep("ex3", {{"N", double(n)}})).simple);
}

TEST(Simple, GeneratedAlgebraMatchesOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    Representation rep = gen::random_rep(rng, gen::random_quiver(rng));
    std::vector<Matrix> gens;
    const auto off = rep.offsets();
    for (std::size_t v = 0; v < rep.dims().size(); ++v) {
      Matrix e = Matrix::Zero(rep.total_dim(), rep.total_dim());
      e.block(off[v], off[v], rep.dim(v), rep.dim(v)).setIdentity();
      gens.push_back(e);
    }
    for (std::size_t a = 0; a < rep.maps().size(); ++a) gens.push_back(rep.embedded_map(a));
    EXPECT_EQ(generated_algebra(rep).dimension(), oracle::generated_algebra_dim(gens, rep.total_dim()))
        << "trial " << trial;
  }
}

TEST(Simple, WitnessIsProperAndInvariant) {
  Representation rep = example_rep("ex4", {{"N", 3}});
  SimplicityResult r = is_simple(rep);
  ASSERT_FALSE(r.simple);
  ASSERT_TRUE(r.witness.has_value());
  Index total = 0;
  for (const auto& m : *r.witness) total += m.cols();
  EXPECT_GT(total, 0);
  EXPECT_LT(total, rep.total_dim());
}

TEST(CanonicallySimple, OnlyOneDimensionalVertexWithZeroMaps) {
  Quiver q = Quiver::kronecker(2);
  EXPECT_TRUE(is_canonically_simple(canonically_simple(q, "1")));
  EXPECT_FALSE(is_canonically_simple(build_family({KroneckerKind::wide, 0.0, 1})));
  EXPECT_TRUE(is_canonically_simple(build_family({KroneckerKind::wide, 0.0, 0})));
  // a one-dimensional loop representation with nonzero map is simple but not canonically simple
  Representation l = loop_representation({Matrix::Constant(1, 1, 2.0)});
  EXPECT_TRUE(is_simple(l).simple);
  EXPECT_FALSE(is_canonically_simple(l));
}

TEST(Irreducible, WorkedExamples) {
  IrreducibilityResult ex1 = is_irreducible(example_rep("ex1", {}));
  EXPECT_TRUE(ex1.irreducible);
  EXPECT_EQ(ex1.end_dim, 2);
  IrreducibilityResult ex9 = is_irreducible(example_rep("ex9", {{"N", 4}}));
  EXPECT_FALSE(ex9.irreducible);
}

TEST(Transitive, KroneckerFamilies) {
  for (int n = 0; n <= 5; ++n) {
    EXPECT_TRUE(is_transitive(build_family({KroneckerKind::wide, 0.0, n})));
    EXPECT_TRUE(is_transitive(build_family({KroneckerKind::tall, 0.0, n})));
  }
  EXPECT_FALSE(is_transitive(build_family({KroneckerKind::jordan_first, 1.0, 2})));
}

TEST(Decompose, ExampleNineSplitsInHalves) {
  for (Index n : {2, 4, 6}) {
    Representation rep = example_rep("ex9", {{"N", double(n)}});
    DecompositionTree tree = decompose(rep);
    auto leaves = tree.leaves();
    ASSERT_EQ(leaves.size(), 2u);
    for (const auto& leaf : leaves) {
      EXPECT_EQ(leaf.dim(0), n / 2);
      EXPECT_EQ(leaf.dim(1), n / 2);
      EXPECT_TRUE(is_indecomposable(leaf).indecomposable);
    }
    EXPECT_EQ(are_isomorphic(tree.reassemble(), rep).verdict, IsoVerdict::yes);
  }
}

TEST(Decompose, DiagonalSplitsIntoEigenspaces) {
  Vector d(4);
  d << 1.0, 1.0, 2.0, 3.0;
  DecompositionTree tree = decompose(loop_representation({diagonal(d)}));
  EXPECT_EQ(tree.leaves().size(), 4u);
}

TEST(StrongIrreducibility, JordanBlocksAndDiagonals) {
  for (Index n = 1; n <= 4; ++n) {
    auto r = is_strongly_irreducible(jordan_block(Complex(0.5, -1.0), n));
    EXPECT_TRUE(r.strongly_irreducible);
    EXPECT_EQ(r.commutant_dim, n);
    EXPECT_EQ(r.geometric_multiplicity, 1);
  }
  Vector d(3);
  d << 2.0, 2.0, 5.0;
  EXPECT_FALSE(is_strongly_irreducible(diagonal(d)).strongly_irreducible);
  EXPECT_FALSE(is_strongly_irreducible(Matrix::Identity(2, 2)).strongly_irreducible);
  EXPECT_TRUE(is_strongly_irreducible(Matrix::Identity(1, 1)).strongly_irreducible);
}

TEST(StrongIrreducibility, SimilarityInvariant) {
  Rng rng(31);
  Matrix s = gen::random_invertible(rng, 3);
  Matrix j = jordan_block(1.0, 3);
  EXPECT_TRUE(is_strongly_irreducible(s * j * s.inverse()).strongly_irreducible);
  Matrix blocks = block_diagonal({jordan_block(1.0, 2), jordan_block(1.0, 1)});
  EXPECT_FALSE(is_strongly_irreducible(s * blocks * s.inverse()).strongly_irreducible);
}

TEST(StrongIrreducibility, WeightedShifts) {
  Vector w(3);
  w << 1.0, 2.0, 0.5;
  EXPECT_TRUE(is_strongly_irreducible(weighted_shift(w)).strongly_irreducible);
  w << 1.0, 0.0, 0.5;
  EXPECT_FALSE(is_strongly_irreducible(weighted_shift(w)).strongly_irreducible);
}
