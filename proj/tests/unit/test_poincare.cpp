#include <gtest/gtest.h>

#include "compalg/poincare.hpp"
#include "compalg/poly.hpp"
#include "expect_errc.hpp"
#include "generators.hpp"

using namespace compalg;

namespace {

UniPoly poly(std::vector<long> c) { return UniPoly(std::vector<mpz_class>(c.begin(), c.end())); }

// q-Pascal recurrence in q = t^step.
UniPoly q_pascal(std::size_t n, std::size_t k, std::size_t step) {
  if (k == 0 || k == n) return UniPoly::constant(1);
  return q_pascal(n - 1, k - 1, step) +
         UniPoly::monomial(1, k * step) * q_pascal(n - 1, k, step);
}

mpz_class degree_product(const WeylDegrees& w) {
  mpz_class r = 1;
  for (auto d : w.degrees()) r *= d;
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

UniPoly random_poly(SplitMix64& rng) {
  std::vector<mpz_class> c(1 + rng.below(6));
  for (auto& x : c) x = rng.between(-5, 5);
  return UniPoly(c);
}

}  // namespace

TEST(Poly, ArithmeticAgreesWithEvaluation) {
  SplitMix64 rng(501);
  for (int i = 0; i < 200; ++i) {
    UniPoly f = random_poly(rng), g = random_poly(rng);
    mpz_class t = rng.between(-4, 4);
    EXPECT_EQ((f * g).eval(t), f.eval(t) * g.eval(t));
    EXPECT_EQ((f + g).eval(t), f.eval(t) + g.eval(t));
    EXPECT_EQ((f - g).eval(t), f.eval(t) - g.eval(t));
  }
}

TEST(Poly, DivisionRecoversFactors) {
  SplitMix64 rng(502);
  for (int i = 0; i < 100; ++i) {
    UniPoly f = random_poly(rng);
    UniPoly g = UniPoly::one_minus(1 + rng.below(5));
    EXPECT_EQ(exact_div(f * g, g), f);
    auto dr = divmod(f, g);
    EXPECT_EQ(dr.quotient * g + dr.remainder, f);
    EXPECT_LT(dr.remainder.degree(), g.degree());
  }
}

TEST(Poly, InexactDivisionCarriesRemainder) {
  try {
    (void)exact_div(poly({1, 0, 1}), poly({1, 1}));
    FAIL() << "no throw";
  } catch (const InexactDivisionError& e) {
    EXPECT_EQ(e.code(), Errc::InexactDivision);
    EXPECT_EQ(e.remainder(), UniPoly::constant(2));
  }
}

TEST(Poly, Formatting) {
  EXPECT_EQ(poly({1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1}).to_text(), "1 + t^4 + t^6 + t^10");
  EXPECT_EQ(poly({1, -2, 3}).to_text(), "1 - 2t + 3t^2");
  EXPECT_EQ(poly({0, 0, 0, 0, 1, 0, 2}).to_latex(), "t^{4} + 2t^{6}");
  EXPECT_EQ(UniPoly().to_text(), "0");
}

TEST(Weyl, DegreeTables) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(weyl_degrees(WeylType::A, 4), (V{2, 3, 4}));
  EXPECT_EQ(weyl_degrees(WeylType::BC, 3), (V{2, 4, 6}));
  EXPECT_EQ(weyl_degrees(WeylType::D, 4), (V{2, 4, 4, 6}));
  EXPECT_EQ(weyl_degrees(WeylType::U1SU, 3), (V{2, 2, 3}));
  EXPECT_EQ(WeylDegrees::parse("A:2*BC:2").degrees(), (V{2, 2, 4}));
  EXPECT_ERRC(WeylDegrees::parse("E:8"), Errc::ParseError);
  EXPECT_ERRC(WeylDegrees::parse("BC"), Errc::ParseError);
}

TEST(Hirsch, WorkedExamples) {
  EXPECT_EQ(hirsch(WeylDegrees::parse("BC:3"), WeylDegrees::parse("U1SU:3")),
            UniPoly::one_plus(4) * UniPoly::one_plus(6));
  EXPECT_EQ(hirsch(WeylDegrees::parse("D:3"), WeylDegrees::parse("U1SU:3")),
            UniPoly::one_plus(4));
}

TEST(Hirsch, RankMismatch) {
  EXPECT_ERRC(hirsch(WeylDegrees::parse("BC:3"), WeylDegrees::parse("A:2")),
              Errc::RankMismatch);
}

TEST(Hirsch, EulerCharacteristicIsIndex) {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto g = WeylDegrees::single(WeylType::BC, n);
    auto u = WeylDegrees::single(WeylType::U1SU, n);
    UniPoly p = hirsch(g, u);
    EXPECT_EQ(p.eval(1), degree_product(g) / degree_product(u));
    EXPECT_TRUE(p.is_palindromic());
    EXPECT_TRUE(p.has_nonnegative_coeffs());
  }
}

TEST(ProductForm, MatchesHirsch) {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto u = WeylDegrees::single(WeylType::U1SU, n);
    EXPECT_EQ(hirsch(WeylDegrees::single(WeylType::BC, n), u), product_form(ProductSpace::Y, n));
    if (n >= 3)
      EXPECT_EQ(hirsch(WeylDegrees::single(WeylType::D, n), u), product_form(ProductSpace::Z, n));
  }
}

TEST(Gaussian, MatchesQPascal) {
  for (std::size_t step : {1u, 2u})
    for (std::size_t n = 0; n <= 8; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        UniPoly g = gaussian_binomial(n, k, step);
        EXPECT_EQ(g, q_pascal(n, k, step)) << n << " " << k;
        EXPECT_EQ(g.eval(1), binomial(n, k));
        EXPECT_TRUE(g.is_palindromic());
      }
  EXPECT_EQ(gaussian_binomial(4, 2, 1), poly({1, 1, 2, 1, 1}));
}

TEST(Grassmann, IsGaussianBinomial) {
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = 1; q <= 5; ++q)
      EXPECT_EQ(grassmann_poincare(p, q), q_pascal(p + q, p, 1));
}

TEST(Oriented, SmallCases) {
  EXPECT_EQ(oriented_grassmann_poincare(1, 1), UniPoly::one_plus(2));
  EXPECT_ERRC(oriented_grassmann_poincare(2, 3), Errc::OutOfRange);
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t k = 1; k <= m; ++k) {
      UniPoly f = oriented_grassmann_poincare(m, k);
      EXPECT_TRUE(f.has_nonnegative_coeffs());
      EXPECT_TRUE(f.is_palindromic());
    }
}

TEST(CliffordGamma, BranchesAndExample) {
  EXPECT_EQ(clifford_gamma_poincare(3, 2, 1), UniPoly::one_plus(1) * UniPoly::one_plus(2));
  EXPECT_ERRC(clifford_gamma_poincare(3, 1, 2), Errc::BranchUnavailable);
  EXPECT_ERRC(clifford_gamma_poincare(3, 1, 1), Errc::OutOfRange);
  EXPECT_EQ(clifford_gamma_poincare(4, 2, 2), UniPoly::one_plus(1) * q_pascal(4, 2, 1));
}
