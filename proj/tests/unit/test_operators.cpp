#include "qrep/operators.hpp"

#include "qrep/structure.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qrep;

TEST(Operators, ShiftIsSubdiagonal) {
  Matrix s = shift(3);
  EXPECT_EQ(s(1, 0), Complex(1.0));
  EXPECT_EQ(s(2, 1), Complex(1.0));
  EXPECT_EQ(s.cwiseAbs().sum(), 2.0);
  EXPECT_EQ(bilateral_shift(2).rows(), 5);
  EXPECT_THROW(shift(0), ValidationError);
}

TEST(Operators, RankOneFirstRowIsW) {
  Vector e1 = Vector::Unit(3, 0);
  Vector w(3);
  w << 1.0, 2.0, 3.0;
  Matrix r = rank_one(e1, w.conjugate());
  EXPECT_EQ(r(0, 0), Complex(1.0));
  EXPECT_EQ(r(0, 2), Complex(3.0));
  EXPECT_EQ(r.bottomRows(2).cwiseAbs().sum(), 0.0);
  // complex weights: first row carries w itself
  w(1) = Complex(0.0, 1.0);
  EXPECT_EQ(rank_one(e1, w.conjugate())(0, 1), Complex(0.0, 1.0));
}

TEST(Operators, ShiftTimesDiagonalPutsLambdaOnSubdiagonal) {
  Vector d(2);
  d << 7.0, 9.0;
  Matrix m = shift(2) * diagonal(d);
  EXPECT_EQ(m(1, 0), Complex(7.0));
}

TEST(PerturbationModel, MatrixLayout) {
  Representation rep = perturbation_model(4);
  const Matrix& t = rep.map(1);
  for (Index k = 0; k < 4; ++k) EXPECT_NEAR(t(0, k).real(), 1.0 / double(k + 1), 1e-15);
  EXPECT_NEAR(t(1, 0).real(), 1.0 + 1.0 / 4.0, 1e-15);  // lambda_1
  EXPECT_NEAR(t(2, 1).real(), 1.0 + 2.0 / 4.0, 1e-15);
}

TEST(PerturbationModel, RejectsRepeatedLambdaAndZeroWeight) {
  Vector lambda(2), w(2);
  lambda << 1.0, 1.0;
  w << 1.0, 1.0;
  EXPECT_THROW(perturbation_model(2, lambda, w), ValidationError);
  lambda << 1.0, 2.0;
  w << 1.0, 0.0;
  EXPECT_THROW(perturbation_model(2, lambda, w), ValidationError);
}

TEST(PerturbationModel, EndDimensionIsN) {
  // brute-force oracle at N = 3, 4; pinned for the rest
  for (Index n : {3, 4}) {
    Representation rep = perturbation_model(n);
    EXPECT_EQ(oracle::hom_dim(rep, rep), n);
  }
  for (Index n = 1; n <= 8; ++n) EXPECT_EQ(end(perturbation_model(n)).dimension(), n) << n;
}

TEST(PerturbationModel, StructureProjectionsVanish) {
  for (Index n = 2; n <= 8; ++n) {
    Representation rep = perturbation_model(n);
    for (const auto& t : end(rep).basis)
      EXPECT_LE(perturbation_structure_residual(t), 1e-8 * rep.scale()) << n;
  }
}

TEST(PerturbationModel, StructureHoldsForRandomAdmissibleParameters) {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = rng.integer(2, 6);
    Vector lambda(n), w(n);
    for (Index k = 0; k < n; ++k) {
      lambda(k) = Complex(double(k) + rng.uniform(0.1, 0.9), rng.uniform(-1, 1));
      w(k) = Complex(rng.uniform(0.5, 2.0), rng.uniform(-1, 1));
    }
    Representation rep = perturbation_model(n, lambda, w);
    HomBasis e = end(rep);
    EXPECT_EQ(e.dimension(), n);
    for (const auto& t : e.basis) EXPECT_LE(perturbation_structure_residual(t), 1e-8 * rep.scale());
  }
}

TEST(PerturbationModel, SingleEntryCase) {
  Representation rep = perturbation_model(1);
  EXPECT_EQ(rep.map(0)(0, 0), Complex(0.0));
  EXPECT_EQ(rep.map(1)(0, 0), Complex(1.0));
  EXPECT_EQ(end(rep).dimension(), 1);
}

TEST(HrrModel, WeightsInLogDomain) {
  HrrWeights w = hrr_weights(4, 1.1);
  EXPECT_DOUBLE_EQ(w.log_w(1), -1.1);
  EXPECT_NEAR(w.log_w(2), 1.21, 1e-14);
  EXPECT_NEAR(w.log_w(3), -1.331, 1e-14);
  EXPECT_DOUBLE_EQ(w.log_w(0), 0.0);
  EXPECT_DOUBLE_EQ(w.log_w(-3), 0.0);
  EXPECT_DOUBLE_EQ(w.a(1), 1.0);
  EXPECT_NEAR(w.b(1), std::exp(-1.1), 1e-15);
}

TEST(HrrModel, AdmissibilityGate) {
  // 1.1^20 = 6.73 <= ln(1e8) = 18.42; the smallest weight is about 1.2e-3
  HrrModel m = hrr_model(20, 1.1);
  double smallest = 1.0;
  for (Index k = -20; k <= 20; ++k) smallest = std::min({smallest, m.weights.a(k), m.weights.b(k)});
  EXPECT_NEAR(smallest, std::exp(-std::pow(1.1, 20)), 1e-12);
  EXPECT_GT(smallest, 1e-3);

  EXPECT_EQ(hrr_max_admissible_n(1.1), 30);
  EXPECT_EQ(hrr_max_admissible_n(1.05), 59);
  try {
    hrr_model(31, 1.1);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("max admissible N is 30"), std::string::npos);
  }
  EXPECT_THROW(hrr_model(4, 1.0), ValidationError);
}

TEST(HrrModel, RangeSurrogateIsSmallestWeight) {
  HrrModel m = hrr_model(6, 1.1);
  // a(n) is small at even n >= 2; the largest such index is 6
  EXPECT_NEAR(range_surrogate(m.rep), std::exp(-std::pow(1.1, 6)), 1e-12);
}

TEST(HrrModel, RecursionChecksPass) {
  const std::map<std::pair<double, Index>, Index> pinned{
      {{1.05, 4}, 9}, {{1.05, 6}, 13}, {{1.05, 8}, 17}, {{1.1, 4}, 9}, {{1.1, 6}, 13}, {{1.1, 8}, 17}};
  for (const auto& [key, dim] : pinned) {
    HrrModel m = hrr_model(key.second, key.first);
    RecursionReport r = end_recursion_check(m);
    EXPECT_EQ(r.end_dim, dim);
    EXPECT_TRUE(r.all_passed());
    EXPECT_DOUBLE_EQ(r.pass_rate(), 1.0);
  }
}

TEST(HrrModel, EndDimensionOracle) {
  HrrModel m = hrr_model(4, 1.1);
  EXPECT_EQ(oracle::hom_dim(m.rep, m.rep), 9);
}

TEST(HrrModel, IdentityPassesChecks) {
  HrrModel m = hrr_model(3, 1.1);
  HomBasis id;
  id.basis.push_back({Matrix::Identity(7, 7), Matrix::Identity(7, 7)});
  RecursionReport r = end_recursion_check(m, id);
  ASSERT_EQ(r.elements.size(), 1u);
  EXPECT_TRUE(r.elements[0].passed);
  EXPECT_EQ(r.elements[0].diagonal_residual, 0.0);
}

TEST(HrrModel, CrossHom) {
  const double lambda = 1.1;
  for (auto [mu, n, dim] : {std::tuple{1.2, Index(4), Index(9)}, {1.2, 6, 13}, {1.2, 8, 17},
                            {1.05, 4, 9}, {1.05, 6, 13}}) {
    CrossHomReport r = cross_model_hom(lambda, mu, n);
    EXPECT_EQ(r.hom_dim, dim) << mu << " " << n;
    EXPECT_TRUE(r.recursion_holds);
  }
  CrossHomReport same = cross_model_hom(1.1, 1.1, 4);
  EXPECT_GE(same.hom_dim, 1);
  EXPECT_EQ(oracle::hom_dim(hrr_model(4, 1.1).rep, hrr_model(4, 1.2).rep), 9);
}

TEST(WeightedShiftSimilarity, Examples) {
  std::vector<Complex> ones(10, 1.0), twos(10, 2.0), slow(10);
  for (int k = 0; k < 10; ++k) slow[k] = 1.0 + 1.0 / double((k + 1) * (k + 1));

  SimilarityEvidence same = weighted_shift_similarity(ones, ones, 10);
  EXPECT_DOUBLE_EQ(same.ratio_min, 1.0);
  EXPECT_DOUBLE_EQ(same.ratio_max, 1.0);
  EXPECT_TRUE(same.bounded_so_far);

  SimilarityEvidence geo = weighted_shift_similarity(twos, ones, 10);
  EXPECT_NEAR(geo.ratio_min, 2.0, 1e-12);
  EXPECT_NEAR(geo.ratio_max / geo.ratio_min, std::pow(2.0, 9), 1e-9);

  SimilarityEvidence conv = weighted_shift_similarity(slow, ones, 10);
  double partial = 1.0;
  for (int k = 0; k < 10; ++k) partial *= 1.0 + 1.0 / double((k + 1) * (k + 1));
  EXPECT_NEAR(conv.ratio_max, partial, 1e-12);
  EXPECT_NEAR(conv.ratio_min, 2.0, 1e-12);
  EXPECT_LT(conv.ratio_max, 3.7);  // infinite product is sinh(pi)/pi = 3.676...

  std::vector<Complex> with_zero(ones);
  with_zero[3] = 0.0;
  EXPECT_THROW(weighted_shift_similarity(ones, with_zero, 10), ValidationError);
  EXPECT_FALSE(weighted_shift_similarity(with_zero, ones, 10).bounded_so_far);
}

TEST(Examples, Catalogue) {
  EXPECT_EQ(example_rep("ex3", {{"N", 3}}).maps().size(), 2u);
  Representation ex3 = example_rep("ex3", {{"N", 3}});
  EXPECT_EQ(max_abs(ex3.map(1) - ex3.map(0).adjoint()), 0.0);
  EXPECT_EQ(example_rep("ex4", {{"N", 2}}).quiver().arrow_count(), 3u);
  EXPECT_THROW(example_rep("ex5", {}), ValidationError);
  EXPECT_TRUE(example_is_truncation("ex9"));
  EXPECT_FALSE(example_is_truncation("ex7"));
}

TEST(Examples, EightIsIndecomposableNotTransitive) {
  for (Index n : {3, 4, 5}) {
    Representation rep = example_rep("ex8", {{"N", double(n)}, {"lambda", 0.5}});
    EXPECT_TRUE(is_indecomposable(rep).indecomposable);
    EXPECT_EQ(end(rep).dimension(), n);
  }
  EXPECT_TRUE(relatively_prime(example_rep("ex8", {{"N", 4}, {"lambda", 0.5}}),
                               example_rep("ex8", {{"N", 4}, {"lambda", -0.5}})));
}

TEST(Examples, ThreeIsSimpleAtEveryN) {
  for (Index n = 2; n <= 5; ++n) {
    Representation rep = example_rep("ex3", {{"N", double(n)}});
    EXPECT_TRUE(is_simple(rep).simple);
    EXPECT_TRUE(is_transitive(rep));
  }
}
