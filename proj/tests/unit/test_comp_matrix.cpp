#include <gtest/gtest.h>

#include "compalg/comp_matrix.hpp"
#include "expect_errc.hpp"
#include "generators.hpp"

using namespace compalg;

namespace {

Algebra hamilton() { return QuatAlgebra::make(FieldSpec::rationals(), -1, -1); }
Algebra mat2() { return QuatAlgebra::split_matrix(FieldSpec::rationals()); }

}  // namespace

TEST(CompMatrix, ProductIsAssociativeAndDistributive) {
  SplitMix64 rng(301);
  Algebra alg = QuatAlgebra::make(FieldSpec::rationals(), 2, 5);
  for (int t = 0; t < 50; ++t) {
    auto a = random_comp_matrix(alg, 2, 3, rng, 3);
    auto b = random_comp_matrix(alg, 3, 2, rng, 3);
    auto c = random_comp_matrix(alg, 2, 2, rng, 3);
    auto b2 = random_comp_matrix(alg, 3, 2, rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + b2), a * b + a * b2);
  }
}

TEST(CompMatrix, ShapeChecks) {
  Algebra alg = hamilton();
  CompMatrix a(alg, 2, 3), b(alg, 2, 3);
  EXPECT_ERRC(a * b, Errc::DimensionMismatch);
  CompMatrix c(QuatAlgebra::make(FieldSpec::rationals(), 2, 5), 2, 3);
  EXPECT_ERRC(a + c, Errc::AlgebraMismatch);
}

TEST(CompMatrix, SymplecticRepShapeAndIdentity) {
  Algebra alg = hamilton();
  FieldMatrix s = symplectic_rep(CompMatrix::identity(alg, 3));
  EXPECT_EQ(s.rows(), 6u);
  EXPECT_EQ(s, FieldMatrix::identity(alg->subfield(), 6));
  EXPECT_TRUE(study_det(CompMatrix::identity(alg, 3)).is_one());
}

TEST(CompMatrix, SymplecticRepOfOneByOne) {
  // x + vy -> [[x, -tau(y)], [-b y, tau(x)]]
  Algebra alg = QuatAlgebra::make(FieldSpec::rationals(), 2, 5);
  auto z = QuaternionElement::from_ints(alg, 1, 2, 3, 4);
  FieldMatrix s = symplectic_rep(CompMatrix::from_elements(alg, 1, 1, {z}));
  auto [x, y] = cayley_dickson_coords(z);
  EXPECT_EQ(s(0, 0), x);
  EXPECT_EQ(s(0, 1), -tau(y));
  EXPECT_EQ(s(1, 0), -(embed(alg->subfield(), alg->b()) * y));
  EXPECT_EQ(s(1, 1), tau(x));
}

TEST(CompMatrix, StudyDeterminantDetectsInvertibility) {
  SplitMix64 rng(302);
  Algebra alg = hamilton();
  for (int t = 0; t < 50; ++t) {
    auto z = random_comp_matrix(alg, 2, 2, rng, 2);
    // rank deficient: second column is the first times a quaternion
    auto q = random_element(alg, rng, 2);
    for (std::size_t i = 0; i < 2; ++i) z(i, 1) = z(i, 0) * q;
    EXPECT_TRUE(study_det(z).is_zero());
    EXPECT_FALSE(is_invertible(z));
  }
}

TEST(CompMatrix, InvertibilityRoutesAgreeOnOneMinusOne) {
  SplitMix64 rng(303);
  Algebra alg = QuatAlgebra::make(FieldSpec::rationals(), 1, -1);
  int singular = 0;
  for (int t = 0; t < 200; ++t) {
    auto z = random_comp_matrix(alg, 2, 2, rng, 1);
    auto routes = invertibility_routes(z);
    ASSERT_TRUE(routes.study && routes.flattened);
    EXPECT_EQ(*routes.study, *routes.flattened);
    singular += !*routes.study;
  }
  EXPECT_GT(singular, 0);
}

TEST(CompMatrix, FlattenRoundTripAndBlocks) {
  SplitMix64 rng(304);
  Algebra alg = mat2();
  for (int t = 0; t < 50; ++t) {
    auto z = random_comp_matrix(alg, 2, 3, rng);
    FieldMatrix f = flatten_split(z);
    EXPECT_EQ(f.rows(), 4u);
    EXPECT_EQ(f.cols(), 6u);
    EXPECT_EQ(f(2, 1), z(1, 0)[1]);
    EXPECT_EQ(f(3, 4), z(1, 2)[2]);
    EXPECT_EQ(unflatten_split(f, alg), z);
  }
  EXPECT_ERRC(flatten_split(CompMatrix(hamilton(), 1, 1)), Errc::NotSplitForm);
}

TEST(CompMatrix, SplitPairRequiresDiagonalBlocks) {
  Algebra alg = mat2();
  auto z = CompMatrix::from_elements(alg, 1, 1, {QuaternionElement::from_ints(alg, 1, 1, 0, 2)});
  EXPECT_ERRC(split_pair(z), Errc::NotDiagonalBlock);
  SplitMix64 rng(305);
  auto d = gen::diagonal_entry_matrix(alg, 2, 2, rng);
  auto [z1, z2] = split_pair(d);
  EXPECT_EQ(z1(1, 0), d(1, 0)[0]);
  EXPECT_EQ(z2(0, 1), d(0, 1)[3]);
}

TEST(CompMatrix, SkewSolveFindsRightRelation) {
  SplitMix64 rng(306);
  for (Algebra alg : {hamilton(), QuatAlgebra::make(FieldSpec::rationals(), -2, -5)}) {
    for (int t = 0; t < 40; ++t) {
      auto a = random_comp_matrix(alg, 2, 3, rng, 3);
      auto x = skew_solve(a);
      ASSERT_TRUE(x.has_value());
      for (std::size_t i = 0; i < 2; ++i) {
        auto s = QuaternionElement::zero(alg);
        for (std::size_t j = 0; j < 3; ++j) s += a(i, j) * (*x)[j];
        EXPECT_TRUE(s.is_zero());
      }
      bool nonzero = false;
      for (const auto& c : *x) nonzero |= !c.is_zero();
      EXPECT_TRUE(nonzero);
    }
    EXPECT_FALSE(skew_solve(CompMatrix::identity(alg, 3)).has_value());
  }
}

TEST(CompMatrix, SkewRankIsSubmultiplicative) {
  SplitMix64 rng(307);
  Algebra alg = hamilton();
  for (int t = 0; t < 40; ++t) {
    auto a = random_comp_matrix(alg, 3, 2, rng, 2);
    auto b = random_comp_matrix(alg, 2, 3, rng, 2);
    std::size_t r = skew_column_rank(a * b);
    EXPECT_LE(r, std::min(skew_column_rank(a), skew_column_rank(b)));
    EXPECT_LE(r, 2u);
  }
}
