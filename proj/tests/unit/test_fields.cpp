#include <gtest/gtest.h>

#include "compalg/field.hpp"
#include "compalg/field_matrix.hpp"
#include "expect_errc.hpp"
#include "generators.hpp"

using namespace compalg;

TEST(Fields, RationalArithmeticIsExact) {
  Field q = FieldSpec::rationals();
  Scalar third = Scalar::from_rational(q, mpq_class(1, 3));
  Scalar sum = third + third + third;
  EXPECT_TRUE(sum.is_one());
  EXPECT_EQ((third * Scalar::from_int(q, 6)).re(), 2);
  EXPECT_EQ(third.inverse(), Scalar::from_int(q, 3));
}

TEST(Fields, PrimeResiduesAreCanonical) {
  Field f7 = FieldSpec::prime(7);
  EXPECT_EQ(Scalar::from_int(f7, -1).re(), 6);
  EXPECT_EQ(Scalar::from_int(f7, 15).re(), 1);
  EXPECT_EQ(Scalar::from_rational(f7, mpq_class(1, 2)).re(), 4);
  EXPECT_ERRC(Scalar::from_rational(f7, mpq_class(1, 7)), Errc::ZeroDivisor);
}

TEST(Fields, PrimeInverseMatchesBruteForce) {
  for (long p : {2L, 3L, 5L, 11L, 13L}) {
    Field f = FieldSpec::prime(p);
    for (long x = 1; x < p; ++x) {
      long brute = 1;
      while ((brute * x) % p != 1) ++brute;
      EXPECT_EQ(Scalar::from_int(f, x).inverse().re(), brute) << p << " " << x;
    }
  }
}

TEST(Fields, RejectsInvalidDescriptors) {
  EXPECT_ERRC(FieldSpec::prime(4), Errc::InvalidField);
  EXPECT_ERRC(FieldSpec::prime(1), Errc::InvalidField);
  Field f2 = FieldSpec::prime(2);
  EXPECT_ERRC(FieldSpec::quad_ext(f2, Scalar::one(f2)), Errc::InvalidField);
  Field q = FieldSpec::rationals();
  EXPECT_ERRC(FieldSpec::quad_ext(q, Scalar::zero(q)), Errc::InvalidField);
  Field ext = FieldSpec::quad_ext(q, Scalar::from_int(q, 2));
  EXPECT_ERRC(FieldSpec::quad_ext(ext, Scalar::one(ext)), Errc::InvalidField);
}

TEST(Fields, ZeroHasNoInverse) {
  Field q = FieldSpec::rationals();
  EXPECT_ERRC(Scalar::zero(q).inverse(), Errc::ZeroInput);
}

TEST(Fields, QuadraticExtensionArithmetic) {
  Field q = FieldSpec::rationals();
  Field ext = FieldSpec::quad_ext(q, Scalar::from_int(q, 2));
  Scalar x = Scalar::quad(ext, 1, 1);  // 1 + sqrt 2
  Scalar y = x * x;                    // 3 + 2 sqrt 2
  EXPECT_EQ(y, Scalar::quad(ext, 3, 2));
  EXPECT_EQ(tau(x), Scalar::quad(ext, 1, -1));
  EXPECT_EQ(quad_norm(x), Scalar::from_int(q, -1));
  EXPECT_EQ(x * x.inverse(), Scalar::one(ext));
  EXPECT_ERRC(tau(Scalar::one(q)), Errc::NotQuadExt);
}

TEST(Fields, SplitQuadraticAlgebraHasZeroDivisors) {
  Field q = FieldSpec::rationals();
  Field ext = FieldSpec::quad_ext(q, Scalar::from_int(q, 4));
  Scalar x = Scalar::quad(ext, 2, 1);  // 2 + sqrt 4
  Scalar y = Scalar::quad(ext, 2, -1);
  EXPECT_TRUE((x * y).is_zero());
  EXPECT_FALSE(x.is_unit());
  EXPECT_ERRC(x.inverse(), Errc::ZeroDivisor);
  EXPECT_TRUE(is_split_quadratic(ext));
}

TEST(Fields, SquarenessOverQIsExact) {
  Field q = FieldSpec::rationals();
  EXPECT_EQ(is_square(Scalar::from_rational(q, mpq_class(9, 4))), Tri::Yes);
  EXPECT_EQ(is_square(Scalar::from_int(q, 2)), Tri::No);
  EXPECT_EQ(is_square(Scalar::from_int(q, -4)), Tri::No);
  EXPECT_EQ(sqrt_in_base(Scalar::from_rational(q, mpq_class(9, 4)))->re(), mpq_class(3, 2));
}

TEST(Fields, EulerCriterionMatchesSquaresList) {
  for (long p : {3L, 5L, 7L, 13L}) {
    Field f = FieldSpec::prime(p);
    std::vector<bool> sq(p, false);
    for (long x = 0; x < p; ++x) sq[(x * x) % p] = true;
    for (long a = 1; a < p; ++a)
      EXPECT_EQ(is_square(Scalar::from_int(f, a)), sq[a] ? Tri::Yes : Tri::No);
  }
}

TEST(Fields, FieldAxiomsOnRandomSamples) {
  SplitMix64 rng(101);
  Field q = FieldSpec::rationals();
  std::vector<Field> fields = {q, FieldSpec::prime(5), FieldSpec::prime(101),
                               FieldSpec::quad_ext(q, Scalar::from_int(q, -3)),
                               FieldSpec::quad_ext(FieldSpec::prime(7),
                                                   Scalar::from_int(FieldSpec::prime(7), 3))};
  for (const auto& f : fields)
    for (int i = 0; i < 200; ++i) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, Scalar::zero(f));
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar::one(f));
    }
}

TEST(Fields, MixingFieldsIsRejected) {
  Scalar a = Scalar::one(FieldSpec::rationals());
  Scalar b = Scalar::one(FieldSpec::prime(3));
  EXPECT_ERRC(a + b, Errc::SpecMismatch);
}

TEST(FieldMatrix, DeterminantMatchesCofactorExpansion) {
  SplitMix64 rng(102);
  Field q = FieldSpec::rationals();
  for (int t = 0; t < 100; ++t) {
    FieldMatrix m = random_field_matrix(q, 3, 3, rng);
    auto e = [&](int i, int j) { return m(i, j); };
    Scalar cof = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                 e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                 e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    EXPECT_EQ(det_field(m), cof);
  }
}

TEST(FieldMatrix, DeterminantOverSplitAlgebra) {
  SplitMix64 rng(103);
  Field q = FieldSpec::rationals();
  Field ext = FieldSpec::quad_ext(q, Scalar::from_int(q, 9));
  for (int t = 0; t < 50; ++t) {
    FieldMatrix a = random_field_matrix(ext, 2, 2, rng);
    Scalar cof = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    EXPECT_EQ(det_field(a), cof);
  }
}

TEST(FieldMatrix, RankAndNullVector) {
  Field q = FieldSpec::rationals();
  FieldMatrix m = FieldMatrix::from_rows(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  auto x = first_null_vector(m);
  ASSERT_TRUE(x.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar s = Scalar::zero(q);
    for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * (*x)[j];
    EXPECT_TRUE(s.is_zero());
  }
  EXPECT_FALSE(first_null_vector(FieldMatrix::identity(q, 3)).has_value());
}

TEST(FieldMatrix, SolveSatisfiesSystem) {
  SplitMix64 rng(104);
  Field f = FieldSpec::prime(11);
  for (int t = 0; t < 50; ++t) {
    FieldMatrix a = random_field_matrix(f, 3, 4, rng);
    std::vector<Scalar> rhs = {random_scalar(f, rng), random_scalar(f, rng),
                               random_scalar(f, rng)};
    auto x = solve(a, rhs);
    if (!x) {
      EXPECT_LT(rank(a), 3u);
      continue;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      Scalar s = Scalar::zero(f);
      for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * (*x)[j];
      EXPECT_EQ(s, rhs[i]);
    }
  }
}
