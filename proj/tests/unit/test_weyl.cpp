#include <gtest/gtest.h>

#include <set>

#include "compalg/laurent.hpp"
#include "compalg/weyl.hpp"
#include "expect_errc.hpp"
#include "generators.hpp"

using namespace compalg;

namespace {

mpz_class factorial(unsigned n) {
  mpz_class r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<SignedPermGroup> groups(std::size_t n) {
  return {SignedPermGroup::sym(n), SignedPermGroup::hyperoctahedral(n),
          SignedPermGroup::even_signed(n), SignedPermGroup::trivial_signs(n)};
}

}  // namespace

TEST(Laurent, ParseAndPrint) {
  LaurentPoly f = LaurentPoly::parse("x1^3 + x1^-3", 1);
  EXPECT_EQ(f.to_string(), "x1^3 + x1^-3");
  LaurentPoly g = LaurentPoly::parse("x1^2*x2^-1 + 3 - 1/2*x3");
  EXPECT_EQ(g.nvars(), 3u);
  EXPECT_EQ(g.coeff({0, 0, 1}), mpq_class(-1, 2));
  EXPECT_EQ(g.coeff({2, -1, 0}), 1);
  EXPECT_ERRC(LaurentPoly::parse("x3", 2), Errc::ParseError);
  EXPECT_ERRC(LaurentPoly::parse("x1 +", 1), Errc::ParseError);
}

TEST(Laurent, RingAxioms) {
  SplitMix64 rng(601);
  for (int i = 0; i < 100; ++i) {
    auto a = gen::laurent(2, rng), b = gen::laurent(2, rng), c = gen::laurent(2, rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
  auto x = LaurentPoly::variable(1, 0);
  EXPECT_EQ(x * LaurentPoly::variable(1, 0, -1), LaurentPoly::constant(1, 1));
  EXPECT_EQ((x + LaurentPoly::constant(1, 1)).pow(2),
            LaurentPoly::parse("x1^2 + 2*x1 + 1", 1));
}

TEST(SignedPermGroup, OrdersAndEnumeration) {
  for (std::size_t n = 1; n <= 4; ++n) {
    mpz_class two_n = mpz_class(1) << n;
    EXPECT_EQ(SignedPermGroup::sym(n).order(), factorial(n));
    EXPECT_EQ(SignedPermGroup::hyperoctahedral(n).order(), two_n * factorial(n));
    EXPECT_EQ(SignedPermGroup::even_signed(n).order(), two_n / 2 * factorial(n));
    EXPECT_EQ(SignedPermGroup::trivial_signs(n).order(), two_n);
    for (const auto& g : groups(n)) {
      auto elems = g.elements();
      EXPECT_EQ(mpz_class(elems.size()), g.order()) << g.to_string();
      std::set<std::pair<std::vector<std::size_t>, std::vector<int>>> seen;
      for (const auto& e : elems) seen.insert({e.perm, e.sign});
      EXPECT_EQ(seen.size(), elems.size());
    }
  }
}

TEST(SignedPermGroup, ClosedUnderProduct) {
  for (const auto& g : groups(3)) {
    auto elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); i += 3)
      for (std::size_t j = 0; j < elems.size(); j += 5)
        EXPECT_TRUE(g.contains(elems[i] * elems[j])) << g.to_string();
  }
}

TEST(SignedPermGroup, ProductGroup) {
  auto g = SignedPermGroup::product({SignedPermGroup::sym(2), SignedPermGroup::hyperoctahedral(1)});
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.elements().size(), 4u);
  EXPECT_EQ(SignedPermGroup::from_name("BC", 3).order(), 48);
  EXPECT_ERRC(SignedPermGroup::from_name("E", 3), Errc::ParseError);
}

TEST(Action, IsAHomomorphism) {
  SplitMix64 rng(602);
  for (int i = 0; i < 100; ++i) {
    auto g = gen::signed_perm(3, rng), h = gen::signed_perm(3, rng);
    auto f = gen::laurent(3, rng);
    EXPECT_EQ(act(g * h, f), act(g, act(h, f)));
  }
  SignedPerm swap{{1, 0}, {1, -1}};
  // x1 -> x2, x2 -> x1^-1
  EXPECT_EQ(act(swap, LaurentPoly::parse("x1^2*x2", 2)), LaurentPoly::parse("x2^2*x1^-1", 2));
}

TEST(Reynolds, ProjectsOntoInvariants) {
  SplitMix64 rng(603);
  for (const auto& g : groups(3)) {
    for (int i = 0; i < 10; ++i) {
      auto f = gen::laurent(3, rng);
      auto r = reynolds(g, f);
      EXPECT_TRUE(is_invariant(g, r));
      EXPECT_EQ(reynolds(g, r), r);
    }
  }
  auto sym2 = SignedPermGroup::sym(2);
  EXPECT_EQ(reynolds(sym2, LaurentPoly::parse("x1", 2)), LaurentPoly::parse("1/2*x1 + 1/2*x2", 2));
}

TEST(FundamentalGenerators, AreInvariant) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& f : fundamental_generators(GroupFlavor::Sym, n))
      EXPECT_TRUE(is_invariant(SignedPermGroup::sym(n), f));
    for (const auto& f : fundamental_generators(GroupFlavor::Hyperoctahedral, n))
      EXPECT_TRUE(is_invariant(SignedPermGroup::hyperoctahedral(n), f));
  }
  auto e = fundamental_generators(GroupFlavor::Sym, 2);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], LaurentPoly::parse("x1 + x2", 2));
  EXPECT_EQ(e[1], LaurentPoly::parse("x1*x2", 2));
}

TEST(WeylIndex, QuotientsAndDivisibility) {
  auto s4 = SignedPermGroup::sym(4);
  auto s22 = SignedPermGroup::product({SignedPermGroup::sym(2), SignedPermGroup::sym(2)});
  EXPECT_EQ(weyl_index(s4, s22), 6);
  EXPECT_EQ(weyl_index(SignedPermGroup::hyperoctahedral(3), SignedPermGroup::even_signed(3)), 2);
  EXPECT_ERRC(weyl_index(SignedPermGroup::sym(3), SignedPermGroup::hyperoctahedral(2)),
              Errc::NotDividing);
}

TEST(KTheory, RanksAgainstFactorials) {
  EXPECT_EQ(ktheory_rank(KPair::OneDimSplit), 2);
  EXPECT_EQ(ktheory_rank(KPair::Quaternionic, 1), 2);
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(ktheory_rank(KPair::Quaternionic, n), factorial(2 * n) / factorial(n));
    EXPECT_EQ(ktheory_rank(KPair::Split, n), factorial(2 * n) / (factorial(n) * factorial(n)));
  }
}

TEST(Generation, HyperoctahedralSmallCasesAreExpressible) {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto report = verify_generation(GroupFlavor::Hyperoctahedral, n, 4);
    EXPECT_FALSE(report.entries.empty());
    EXPECT_EQ(report.inconclusive(), 0u) << n;
  }
  EXPECT_TRUE(expressible_within(GroupFlavor::Hyperoctahedral,
                                 LaurentPoly::parse("x1^3 + x1^-3", 1), 3));
}

TEST(Generation, SymBoundsAreReportedNotRefuted) {
  EXPECT_TRUE(expressible_within(GroupFlavor::Sym, LaurentPoly::parse("x1 + x2", 2), 2));
  EXPECT_FALSE(expressible_within(GroupFlavor::Sym,
                                  LaurentPoly::parse("x1*x2 + x1^-1*x2^-1", 2), 1));
  EXPECT_TRUE(expressible_within(GroupFlavor::Sym,
                                 LaurentPoly::parse("x1*x2 + x1^-1*x2^-1", 2), 4));
  auto report = verify_generation(GroupFlavor::Sym, 1, 4);
  EXPECT_EQ(report.inconclusive(), 0u);
  auto wide = verify_generation(GroupFlavor::Sym, 2, 4);
  for (const auto& e : wide.entries) {
    bool polynomial = true;
    for (const auto& [exp, c] : e.invariant.terms())
      for (int a : exp) polynomial &= a >= 0;
    if (polynomial) EXPECT_TRUE(e.expressible) << e.invariant.to_string();
  }
}

TEST(Generation, Limits) {
  EXPECT_ERRC(verify_generation(GroupFlavor::Sym, 4, 2), Errc::BudgetExceeded);
  EXPECT_ERRC(verify_generation(GroupFlavor::Sym, 2, 7), Errc::BudgetExceeded);
}
