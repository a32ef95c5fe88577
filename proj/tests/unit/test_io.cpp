#include <gtest/gtest.h>

#include <fstream>

#include "compalg/crank.hpp"
#include "compalg/io.hpp"
#include "expect_errc.hpp"
#include "generators.hpp"

using namespace compalg;
using io::json;

TEST(Io, Rationals) {
  EXPECT_EQ(io::rational_to_string(mpq_class(-3, 4)), "-3/4");
  EXPECT_EQ(io::rational_to_string(mpq_class(5)), "5");
  EXPECT_EQ(io::rational_from_json(json("6/8")), mpq_class(3, 4));
  EXPECT_EQ(io::rational_from_json(json(-7)), -7);
  EXPECT_ERRC(io::rational_from_json(json("1/0")), Errc::ParseError);
  EXPECT_ERRC(io::rational_from_json(json("abc")), Errc::ParseError);
}

TEST(Io, Fields) {
  EXPECT_EQ(io::parse_field("Q")->kind(), FieldKind::Rationals);
  EXPECT_EQ(io::parse_field("Fp:5")->modulus(), 5);
  EXPECT_EQ(io::parse_field("Q[sqrt(2)]")->radicand(), 2);
  EXPECT_ERRC(io::parse_field("Fp:4"), Errc::InvalidField);
  EXPECT_ERRC(io::parse_field("R"), Errc::ParseError);
}

TEST(Io, AlgebraAndMatrixRoundTrip) {
  SplitMix64 rng(901);
  Field q = FieldSpec::rationals();
  for (Algebra alg : {QuatAlgebra::make(q, -1, -1), QuatAlgebra::make(FieldSpec::prime(7), 3, 5),
                      QuatAlgebra::split_matrix(FieldSpec::prime(2)), QuatAlgebra::split_matrix(q)}) {
    EXPECT_TRUE(same_algebra(io::algebra_from_json(io::to_json(alg)), alg));
    for (int i = 0; i < 10; ++i) {
      auto z = random_comp_matrix(alg, 2, 3, rng);
      EXPECT_EQ(io::comp_matrix_from_json(io::to_json(z)), z);
      auto x = random_element(alg, rng);
      EXPECT_EQ(io::element_from_json(io::to_json(x), alg), x);
    }
  }
}

TEST(Io, BlocksForm) {
  json j = json::parse(R"({"algebra":{"field":"Q","form":"mat2"},
                           "blocks":[[1,2],[3,4]]})");
  CompMatrix z = io::comp_matrix_from_json(j);
  EXPECT_EQ(z.rows(), 1u);
  EXPECT_EQ(z(0, 0), QuaternionElement::from_ints(z.algebra(), 1, 2, 3, 4));
  json bad = json::parse(R"({"algebra":{"field":"Q","a":"-1","b":"-1"},"blocks":[[1,2],[3,4]]})");
  EXPECT_ERRC(io::comp_matrix_from_json(bad), Errc::NotSplitForm);
  json odd = json::parse(R"({"algebra":{"field":"Q","form":"mat2"},"blocks":[[1,2,3]]})");
  EXPECT_ERRC(io::comp_matrix_from_json(odd), Errc::DimensionMismatch);
}

TEST(Io, FieldMatrixAndPolys) {
  SplitMix64 rng(902);
  Field q = FieldSpec::rationals();
  Field ext = FieldSpec::quad_ext(q, Scalar::from_int(q, -3));
  auto m = random_field_matrix(ext, 2, 2, rng);
  EXPECT_EQ(io::field_matrix_from_json(io::to_json(m)), m);
  UniPoly p(std::vector<mpz_class>{1, 0, -2, 0, 5});
  EXPECT_EQ(io::poly_from_json(io::to_json(p)), p);
  EXPECT_EQ(io::to_json(p).dump(), R"({"0":"1","2":"-2","4":"5"})");
  for (int i = 0; i < 20; ++i) {
    auto f = gen::laurent(3, rng);
    EXPECT_EQ(io::laurent_from_json(io::to_json(f)), f);
  }
  EXPECT_EQ(io::laurent_from_json(json("x1 + x1^-1")), LaurentPoly::parse("x1 + x1^-1", 1));
}

TEST(Io, IntMatrixMultivectorGroup) {
  SplitMix64 rng(903);
  auto a = gen::int_matrix(3, 2, rng);
  EXPECT_EQ(io::int_matrix_from_json(io::to_json(a)), a);
  auto alg = CliffordAlgebra::make(2, 2);
  for (int i = 0; i < 10; ++i) {
    auto x = gen::multivector(alg, rng);
    EXPECT_EQ(io::multivector_from_json(io::to_json(x)), x);
  }
  auto g = SignedPermGroup::product({SignedPermGroup::sym(2), SignedPermGroup::even_signed(3)});
  auto back = io::group_from_json(io::to_json(g));
  EXPECT_EQ(back.order(), g.order());
  EXPECT_EQ(back.to_string(), g.to_string());
  Classification c{CliffordBase::H, 2, true};
  EXPECT_EQ(io::classification_from_json(io::to_json(c)), c);
}

TEST(Io, ErrorObject) {
  json e = io::error_json(Error(Errc::RankMismatch, "ranks differ"));
  EXPECT_EQ(e["error"]["code"], "RankMismatch");
  EXPECT_EQ(e["error"]["message"], "ranks differ");
}

TEST(Io, FixturesCarryVersion) {
  for (const char* name : {"z1.json", "z2.json", "z3.json", "cl01.json", "cl10.json",
                           "cl02.json", "cl11.json", "cl20.json"}) {
    std::ifstream in(std::string(COMPALG_FIXTURE_DIR) + "/" + name);
    ASSERT_TRUE(in.good()) << name;
    EXPECT_EQ(json::parse(in)["version"], io::kFormatVersion) << name;
  }
}

TEST(Io, BoundReport) {
  BoundParams p;
  p.algebra = QuatAlgebra::split_matrix(FieldSpec::prime(2));
  p.trials = 2;
  json r = io::to_json(verify_bound(p));
  EXPECT_EQ(r["successes"], 2);
  EXPECT_TRUE(r["counterexample"].is_null());
}
