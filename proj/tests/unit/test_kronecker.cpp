#include "qrep/kronecker.hpp"

#include "qrep/intertwiner.hpp"
#include "qrep/structure.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace qrep;

TEST(KroneckerFamily, Shapes) {
  Representation w = build_family({KroneckerKind::wide, 0.0, 3});
  EXPECT_EQ(w.dims(), (std::vector<Index>{4, 3}));
  Representation t = build_family({KroneckerKind::tall, 0.0, 3});
  EXPECT_EQ(t.dims(), (std::vector<Index>{3, 4}));
  Representation w0 = build_family({KroneckerKind::wide, 0.0, 0});
  EXPECT_EQ(w0.dims(), (std::vector<Index>{1, 0}));
  EXPECT_THROW(build_family({KroneckerKind::jordan_first, 0.0, 0}), ValidationError);
}

TEST(KroneckerFamily, EndDimensionsMatchOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (auto kind : {KroneckerKind::wide, KroneckerKind::tall}) {
      Representation r = build_family({kind, 0.0, n});
      EXPECT_EQ(end(r).dimension(), 1);
      EXPECT_EQ(oracle::hom_dim(r, r), 1);
    }
    for (auto kind : {KroneckerKind::jordan_first, KroneckerKind::jordan_second}) {
      Representation r = build_family({kind, Complex(0.7, 0.2), n});
      EXPECT_EQ(end(r).dimension(), n);
      EXPECT_EQ(oracle::hom_dim(r, r), n);
      EXPECT_TRUE(is_indecomposable(r).indecomposable);
    }
  }
}

TEST(KroneckerFamily, DistinctFamiliesHaveNoIsomorphisms) {
  Representation a = build_family({KroneckerKind::jordan_second, 1.0, 2});
  Representation b = build_family({KroneckerKind::jordan_second, 2.0, 2});
  EXPECT_TRUE(relatively_prime(a, b));
}

TEST(Reduction, InvertibleFirstWitness) {
  Rng rng(4);
  Matrix a = gen::random_invertible(rng, 3);
  Matrix b = rng.matrix(3, 3);
  KroneckerReduction red = reduce_invertible_first(a, b);
  Representation original = kronecker_representation({a, b});
  EXPECT_LT(intertwining_residual(original, red.rep, red.witness), 1e-10);
  EXPECT_LT(max_abs(red.rep.map(0) - Matrix::Identity(3, 3)), 1e-12);
  EXPECT_EQ(are_isomorphic(original, red.rep).verdict, IsoVerdict::yes);
}

TEST(Reduction, SingularFirstMapIsRejected) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  EXPECT_THROW(reduce_invertible_first(a, Matrix::Identity(2, 2)), ValidationError);
}

TEST(Reduction, PencilWitness) {
  Rng rng(6);
  Matrix a = rng.matrix(3, 3), b = rng.matrix(3, 3);
  const Complex x(0.5, 1.0), y(2.0, -0.3);
  KroneckerReduction red = reduce_pencil(a, b, x, y);
  Representation original = kronecker_representation({a, b});
  EXPECT_LT(intertwining_residual(original, red.rep, red.witness), 1e-9);
  // second map is (1/y) I - (x/y) T
  Matrix t = red.rep.map(0);
  EXPECT_LT(max_abs(red.rep.map(1) - (Matrix::Identity(3, 3) / y - (x / y) * t)), 1e-12);
  EXPECT_THROW(reduce_pencil(a, b, x, 0.0), ValidationError);
}

TEST(PolynomialModel, ShapeAndFirstMap) {
  Matrix t = jordan_block(0.0, 3);
  std::vector<Complex> c{2.0, 0.0, 1.0};
  Representation rep = polynomial_model(t, c);
  EXPECT_EQ(rep.quiver().arrow_count(), 3u);
  EXPECT_LT(max_abs(rep.map(0) - (2.0 * Matrix::Identity(3, 3) + t * t)), 1e-15);
  EXPECT_LT(max_abs(rep.map(2) - t * t), 1e-15);
  // c_0 != 0 makes the first map invertible; End is then the commutant of T
  EXPECT_EQ(end(rep).dimension(), 3);
  std::vector<Complex> bad{0.0, 1.0};
  EXPECT_THROW(polynomial_model(t, bad), ValidationError);
}
