#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <thread>

#include "compalg/crank.hpp"
#include "compalg/io.hpp"
#include "expect_errc.hpp"
#include "generators.hpp"

using namespace compalg;

namespace {

Algebra hamilton() { return QuatAlgebra::make(FieldSpec::rationals(), -1, -1); }

CompMatrix fixture(const std::string& name, std::size_t* expected) {
  std::ifstream in(std::string(COMPALG_FIXTURE_DIR) + "/" + name);
  auto j = io::json::parse(in);
  *expected = j["expected"]["c_rank"].get<std::size_t>();
  return io::comp_matrix_from_json(j["matrix"]);
}

// Over Mat(2,k): a 1x1 matrix is invertible iff its 2x2 block is.
bool block_invertible(const QuaternionElement& z) {
  return !(z[0] * z[3] - z[1] * z[2]).is_zero();
}

}  // namespace

TEST(CRank, ShippedFixtures) {
  for (const char* name : {"z1.json", "z2.json", "z3.json"}) {
    std::size_t want = 0;
    CompMatrix z = fixture(name, &want);
    EXPECT_EQ(c_rank(z), want) << name;
  }
}

TEST(CRank, FixtureOneHasSingularCornerButFullRank) {
  std::size_t want = 0;
  CompMatrix z1 = fixture("z1.json", &want);
  EXPECT_FALSE(block_invertible(z1(0, 0)));
  EXPECT_TRUE(is_invertible(z1));
  CompMatrix z2 = fixture("z2.json", &want);
  EXPECT_TRUE(block_invertible(z2(0, 0)));
}

TEST(CRank, OneByOneMatchesBlockDeterminant) {
  SplitMix64 rng(401);
  Algebra alg = QuatAlgebra::split_matrix(FieldSpec::prime(3));
  for (int t = 0; t < 200; ++t) {
    auto z = random_comp_matrix(alg, 1, 1, rng);
    std::size_t want = block_invertible(z(0, 0)) ? 1 : 0;
    EXPECT_EQ(c_rank(z), want);
  }
}

TEST(CRank, NonsplitAgreesWithSkewElimination) {
  SplitMix64 rng(402);
  Algebra alg = hamilton();
  for (int t = 0; t < 60; ++t) {
    std::size_t m = 1 + rng.below(3), n = 1 + rng.below(3);
    auto z = random_comp_matrix(alg, m, n, rng, 1);
    if (t % 3 == 0 && n > 1)
      for (std::size_t i = 0; i < m; ++i) z(i, n - 1) = z(i, 0) * random_element(alg, rng, 1);
    EXPECT_EQ(c_rank(z), c_rank_nonsplit(z));
    EXPECT_LE(c_rank(z), std::min(m, n));
  }
}

TEST(CRank, ZeroAndIdentity) {
  Algebra alg = hamilton();
  EXPECT_EQ(c_rank(CompMatrix(alg, 3, 2)), 0u);
  EXPECT_EQ(c_rank(CompMatrix::identity(alg, 3)), 3u);
}

TEST(MZero, SplitAndNonsplit) {
  Field q = FieldSpec::rationals();
  EXPECT_EQ(m_zero(hamilton(), 3, 2), 2u);
  EXPECT_EQ(m_zero(QuatAlgebra::make(q, 1, -1), 3, 2), 8u);
  EXPECT_EQ(m_zero(QuatAlgebra::split_matrix(FieldSpec::prime(2)), 1, 1), 4u);
  EXPECT_ERRC(m_zero(hamilton(), 2, 3), Errc::OutOfRange);
  EXPECT_ERRC(m_zero(hamilton(), 2, 0), Errc::OutOfRange);
}

TEST(RankInstance, Validation) {
  Algebra alg = hamilton();
  RankInstance inst;
  inst.d = 1;
  EXPECT_ERRC(inst.validate(), Errc::PreconditionViolated);
  inst.matrices = {CompMatrix::identity(alg, 2), CompMatrix::identity(alg, 2)};
  EXPECT_ERRC(inst.validate(), Errc::PreconditionViolated);
  inst.matrices[1] = CompMatrix(alg, 2, 2);
  EXPECT_NO_THROW(inst.validate());
  inst.d = 3;
  EXPECT_ERRC(inst.validate(), Errc::OutOfRange);
  inst.d = 1;
  inst.matrices[1] = CompMatrix(alg, 2, 3);
  EXPECT_ERRC(inst.validate(), Errc::DimensionMismatch);
  inst.matrices = {CompMatrix(alg, 3, 2)};
  EXPECT_ERRC(inst.validate(), Errc::PreconditionViolated);
}

TEST(LowRankCombination, RandomFamiliesMeetTheBound) {
  SplitMix64 rng(403);
  Field q = FieldSpec::rationals();
  struct Case { Algebra alg; std::size_t m, n, d; };
  std::vector<Case> cases = {{hamilton(), 2, 2, 2}, {hamilton(), 2, 3, 1},
                             {QuatAlgebra::make(q, -2, -5), 3, 3, 2},
                             {QuatAlgebra::split_matrix(q), 1, 2, 1},
                             {QuatAlgebra::make(q, 1, -1), 2, 2, 2},
                             {QuatAlgebra::split_matrix(FieldSpec::prime(3)), 2, 2, 1}};
  for (const auto& c : cases)
    for (int t = 0; t < 5; ++t) {
      RankInstance inst;
      inst.d = c.d;
      std::size_t count = 1 + c.n * m_zero(c.alg, c.m, c.d);
      while (inst.matrices.size() < count) {
        auto z = random_comp_matrix(c.alg, c.m, c.n, rng, 2);
        if (std::find(inst.matrices.begin(), inst.matrices.end(), z) == inst.matrices.end())
          inst.matrices.push_back(z);
      }
      auto out = find_low_rank_combination(inst);
      EXPECT_LE(out.rank + 1, c.d) << c.alg->to_string();
      EXPECT_TRUE(out.combination.truncated(c.m - c.d + 1).is_zero());
      bool nonzero = false;
      for (const auto& k : out.coeffs) nonzero |= !k.is_zero();
      EXPECT_TRUE(nonzero);
    }
}

TEST(LowRankCombination, TooFewMatricesIsRejected) {
  RankInstance inst;
  inst.d = 1;
  inst.matrices = {CompMatrix::identity(hamilton(), 1)};
  EXPECT_ERRC(find_low_rank_combination(inst), Errc::PreconditionViolated);
}

TEST(VerifyBound, SmallRunsSucceedAndAreDeterministic) {
  BoundParams p;
  p.algebra = QuatAlgebra::split_matrix(FieldSpec::prime(2));
  p.trials = 20;
  p.seed = 9;
  auto r1 = verify_bound(p);
  auto r2 = verify_bound(p);
  EXPECT_EQ(r1.family_size, 5u);
  EXPECT_EQ(r1.successes, 20u);
  EXPECT_FALSE(r1.counterexample.has_value());
  EXPECT_EQ(io::to_json(r1), io::to_json(r2));
}

TEST(VerifyBound, InfeasibleScaleGate) {
  BoundParams p;
  p.algebra = hamilton();
  p.m = p.n = 2;
  p.trials = 10;
  p.work_limit = 1;
  EXPECT_ERRC(verify_bound(p), Errc::InfeasibleScale);
  p.work_limit = 5e9;
  p.m = 3;
  EXPECT_ERRC(verify_bound(p), Errc::PreconditionViolated);
}

TEST(VerifyBound, ExpiredBudgetRaises) {
  BoundParams p;
  p.algebra = hamilton();
  p.m = p.n = p.d = 2;
  p.trials = 10;
  Budget b(std::chrono::milliseconds(0));
  std::this_thread::sleep_for(std::chrono::milliseconds(2));
  EXPECT_ERRC(verify_bound(p, b), Errc::BudgetExceeded);
}
