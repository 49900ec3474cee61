#include "test_util.hpp"

using namespace testing_util;

namespace {

Field ext(std::string_view spec) { return Field::parse(spec); }

}  // namespace

TEST(Field, ParsesSpecs) {
  EXPECT_TRUE(Field::parse("q").is_rationals());
  EXPECT_EQ(Field::parse("fp:101").characteristic(), 101u);
  EXPECT_EQ(Field::parse("fp:101"), F(101));
  const Field k = ext("ext:fp:7:1,0,1");
  EXPECT_TRUE(k.is_extension());
  EXPECT_EQ(k.extension_degree(), 2u);
  EXPECT_EQ(k.cardinality(), 49u);
  EXPECT_EQ(k.characteristic(), 7u);
  EXPECT_TRUE(k.irreducibility_verified());
  EXPECT_EQ(k.spec(), "ext:fp:7:1,0,1");
  EXPECT_EQ(Field::parse(k.spec()), k);
  EXPECT_FALSE(Q().cardinality().has_value());
}

TEST(Field, RejectsBadSpecs) {
  EXPECT_EQ(code_of([] { Field::parse("fp:4"); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { Field::parse("fp:1"); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { Field::parse("fp:x"); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { Field::parse("r"); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { Field::parse("fp:4611686018427387904"); }), ErrorCode::InvalidField);
  // x^2 - 1 has the root 1.
  EXPECT_EQ(code_of([] { Field::parse("ext:q:-1,0,1"); }), ErrorCode::InvalidField);
  // Not monic.
  EXPECT_EQ(code_of([] { Field::parse("ext:q:1,0,2"); }), ErrorCode::InvalidField);
  // x^2 + 1 splits over F_5.
  EXPECT_EQ(code_of([] { Field::parse("ext:fp:5:1,0,1"); }), ErrorCode::InvalidField);
}

TEST(Field, HighDegreeModulusIsFlaggedUnverified) {
  const Field k = ext("ext:q:2,0,0,0,1");
  EXPECT_EQ(k.extension_degree(), 4u);
  EXPECT_FALSE(k.irreducibility_verified());
}

TEST(Field, PrimeFieldArithmetic) {
  const Field f = F(7);
  EXPECT_EQ(f.from_int(3) * f.from_int(5), f.one());
  EXPECT_EQ(f.from_int(3).inverse(), f.from_int(5));
  EXPECT_EQ((-f.one()).to_string(), "6");
  EXPECT_EQ(f.from_int(-15).to_string(), "6");
  EXPECT_EQ(f.parse_scalar("1/2").to_string(), "4");
  EXPECT_EQ(f.from_int(3).pow(6), f.one());
  EXPECT_EQ(f.from_int(3).pow(-1), f.from_int(5));
}

TEST(Field, RationalArithmetic) {
  const Field q = Q();
  EXPECT_EQ((q.parse_scalar("1/2") + q.parse_scalar("1/3")).to_string(), "5/6");
  EXPECT_EQ(q.parse_scalar("4/6").to_string(), "2/3");
  EXPECT_EQ(q.parse_scalar("-3").to_string(), "-3");
  EXPECT_EQ(q.from_int(2).pow(100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(code_of([&] { q.parse_scalar("1/0"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { q.parse_scalar("1.5"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { q.parse_scalar(""); }), ErrorCode::ParseError);
}

TEST(Field, LargePrimeMultiplicationMatchesGmp) {
  const std::uint64_t p = 2305843009213693951ull;  // 2^61 - 1
  const Field f = F(p);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = uniform_below(rng, p), b = uniform_below(rng, p);
    mpz_class expected = mpz_class(std::to_string(a)) * mpz_class(std::to_string(b)) % mpz_class(std::to_string(p));
    EXPECT_EQ((f.element_at(a) * f.element_at(b)).to_string(), expected.get_str());
  }
}

TEST(Field, DivisionByZeroAndMixedFields) {
  EXPECT_EQ(code_of([] { F(7).zero().inverse(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Q().one() / Q().zero(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { F(7).one() + F(11).one(); }), ErrorCode::SpecMismatch);
  EXPECT_EQ(code_of([] { Q().one() * F(11).one(); }), ErrorCode::SpecMismatch);
}

TEST(Field, ExtensionInverseAgreesWithExhaustiveSearch) {
  // F_7[t]/(t^2+1) has 49 elements; find the inverse of t+1 by trying all
  // of them instead of running the extended gcd.
  const Field k = ext("ext:fp:7:1,0,1");
  const Scalar a = k.generator() + k.one();
  std::vector<Scalar> inverses;
  for (std::uint64_t i = 0; i < 49; ++i)
    if ((a * k.element_at(i)).is_one()) inverses.push_back(k.element_at(i));
  ASSERT_EQ(inverses.size(), 1u);
  EXPECT_EQ(inverses[0].to_string(), "[4,3]");  // 3t + 4
  EXPECT_EQ(a.inverse(), inverses[0]);
  EXPECT_EQ(ext_inverse(a), inverses[0]);
  // The tentative 4t + 3 is not the inverse: (t+1)(4t+3) = 7t + 3 - 4 = 6.
  EXPECT_EQ((a * k.parse_scalar("[3,4]")).to_string(), "[6,0]");
}

TEST(Field, ExtensionInverseOverRationals) {
  const Field k = ext("ext:q:-2,0,1");
  const Scalar t = k.generator();
  EXPECT_EQ(t.inverse().to_string(), "[0,1/2]");
  EXPECT_EQ(t * t, k.from_int(2));
  EXPECT_EQ(k.one().inverse(), k.one());
}

TEST(Field, ExtensionScalarTextRoundTrips) {
  const Field k = ext("ext:q:-2,0,1");
  for (const char* text : {"[0,0]", "[1,0]", "[-1/2,3]", "[0,7]"}) EXPECT_EQ(k.parse_scalar(text).to_string(), text);
  EXPECT_EQ(k.parse_scalar("5").to_string(), "[5,0]");
  EXPECT_EQ(k.parse_scalar("[5]").to_string(), "[5,0]");
  EXPECT_EQ(code_of([&] { k.parse_scalar("[1,2,3]"); }), ErrorCode::ParseError);
  const Field tower = Field::parse("ext:ext:q:1,0,1:[-2,0],[0,0],[1,0]");
  EXPECT_EQ(tower.extension_degree(), 2u);
  const Scalar s = tower.generator();
  EXPECT_EQ(s * s, tower.from_int(2));
  EXPECT_EQ(s.to_string(), "[[0,0],[1,0]]");
  EXPECT_EQ(tower.parse_scalar(s.to_string()), s);
}

TEST(Field, CanonicalFormIsIdempotentAndDecidesEquality) {
  const Field q = Q();
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_scalar(q, rng) / random_nonzero_scalar(q, rng);
    const std::string canon = a.to_string();
    EXPECT_EQ(q.parse_scalar(canon).to_string(), canon);
    const Scalar b = random_scalar(q, rng);
    EXPECT_EQ(a == b, canon == b.to_string());
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const Field f = Field::parse(GetParam());
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, f.zero());
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one()) << a;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, FieldAxioms, ::testing::Values("q", "fp:101", "fp:2", "ext:fp:7:1,0,1", "ext:q:-2,0,1", "ext:fp:2:1,1,0,1"),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& ch : name)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return name;
                         });
