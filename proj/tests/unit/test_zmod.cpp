#include <gtest/gtest.h>

#include "compalg/field_matrix.hpp"
#include "compalg/int_matrix.hpp"
#include "compalg/localization.hpp"
#include "expect_errc.hpp"
#include "generators.hpp"

using namespace compalg;

namespace {

std::size_t rational_rank(const IntMatrix& a) {
  Field q = FieldSpec::rationals();
  FieldMatrix m(q, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Scalar::from_integer(q, a(i, j));
  return rank(m);
}

}  // namespace

TEST(IntMatrix, BareissMatchesCofactor) {
  SplitMix64 rng(701);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = gen::int_matrix(3, 3, rng);
    mpz_class cof = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                    a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                    a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    EXPECT_EQ(det(a), cof);
  }
  EXPECT_TRUE(is_unimodular(IntMatrix::from_rows({{2, 1}, {1, 1}})));
  EXPECT_FALSE(is_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})));
}

TEST(Smith, KnownExample) {
  IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto f = smith_normal_form(a).invariant_factors();
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], 2);
  EXPECT_EQ(f[1], 6);
  EXPECT_EQ(f[2], 12);
}

TEST(Smith, PropertiesOnRandomMatrices) {
  SplitMix64 rng(702);
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    IntMatrix a = gen::int_matrix(r, c, rng);
    if (t % 4 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_TRUE(is_unimodular(s.u));
    EXPECT_TRUE(is_unimodular(s.v));
    EXPECT_TRUE(s.d.is_diagonal());
    auto f = s.invariant_factors();
    EXPECT_EQ(f.size(), rational_rank(a));
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_GT(f[i], 0);
      if (i + 1 < f.size()) EXPECT_EQ(f[i + 1] % f[i], 0);
    }
    if (r == c && f.size() == r) {
      mpz_class prod = 1;
      for (const auto& x : f) prod *= x;
      EXPECT_EQ(prod, abs(det(a)));
    }
  }
}

TEST(Smith, ZeroMatrix) {
  SmithForm s = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(s.rank(), 0u);
  EXPECT_TRUE(s.d.is_zero());
}

TEST(Sequence, SplitAndNonsplit) {
  IntMatrix f = IntMatrix::from_rows({{1}, {0}});
  IntMatrix g = IntMatrix::from_rows({{0, 1}});
  EXPECT_TRUE(sequence_checks(f, g).all());

  // 0 -> Z --2--> Z -> 0 is not exact at the end
  auto v = sequence_checks(IntMatrix::from_rows({{2}}), IntMatrix(0, 1));
  EXPECT_TRUE(v.injective_f);
  EXPECT_FALSE(v.splits);
  EXPECT_FALSE(v.all());

  auto w = sequence_checks(IntMatrix::from_rows({{1}, {1}}), IntMatrix::from_rows({{1, 0}}));
  EXPECT_FALSE(w.composite_zero);
  EXPECT_ERRC(sequence_checks(IntMatrix(2, 1), IntMatrix(1, 3)), Errc::ShapeMismatch);
}

TEST(Localization, CharacterIndex) {
  EXPECT_EQ(character_index(1), 0u);
  EXPECT_EQ(character_index(-1), 1u);
  EXPECT_EQ(character_index(2), 2u);
  EXPECT_EQ(character_index(-3), 5u);
}

TEST(Localization, ModelShapeAndErrors) {
  auto m = build_localization_model(2, 5, parse_signs("+-+"));
  EXPECT_EQ(m.delta.rows(), 10u);
  EXPECT_EQ(m.delta.cols(), 3u);
  EXPECT_EQ(m.delta(character_index(-2), 1), 1);
  EXPECT_EQ(m.g.rows(), 7u);
  EXPECT_ERRC(build_localization_model(2, 2, all_plus_signs(2)), Errc::TruncationTooSmall);
  EXPECT_ERRC(build_localization_model(2, 5, parse_signs("++-+")), Errc::DimensionMismatch);
  EXPECT_ERRC(parse_signs("+x"), Errc::ParseError);
  EXPECT_EQ(alternating_signs(2), (std::vector<int>{1, -1, 1}));
}

TEST(Localization, VerdictsAcrossTruncations) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t s = 2 * n - 1; s <= 2 * n + 3; ++s)
      for (const auto& signs : {all_plus_signs(n), alternating_signs(n)}) {
        auto v = verify_localization(build_localization_model(n, s, signs));
        EXPECT_TRUE(v.all()) << n << " " << s;
        EXPECT_EQ(v.middle_rank, 2 * s);
        EXPECT_EQ(v.delta_invariants.size(), 2 * n - 1);
      }
}
