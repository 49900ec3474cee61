#include "oracle.hpp"
#include "test_util.hpp"

using namespace testing_util;

namespace {

std::vector<Scalar> scalars(const Field& f, std::initializer_list<long long> values) {
  std::vector<Scalar> out;
  for (long long v : values) out.push_back(f.from_int(v));
  return out;
}

WitnessParams explicit_params(CommutatorKind kind, std::size_t n, std::vector<Scalar> a, std::vector<Scalar> b) {
  WitnessParams p;
  p.kind = kind;
  p.n = n;
  p.a = std::move(a);
  p.b = std::move(b);
  p.origin = "test";
  return p;
}

}  // namespace

TEST(Witness, BuildAMatchesDisplay) {
  const Field q = Q();
  EXPECT_EQ(build_A(2, scalars(q, {3})), M(q, {{0, 3}, {1, 0}}));
  EXPECT_EQ(build_A(3, scalars(q, {1, 1})), M(q, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(code_of([&] { build_A(3, scalars(q, {1})); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([&] { build_A(1, {}); }), ErrorCode::BadParams);
}

TEST(Witness, DeterminantOfAIsPlusMinusA1) {
  const Field q = Q();
  Rng rng(4);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Scalar> a;
    for (std::size_t i = 0; i + 1 < n; ++i) a.push_back(random_nonzero_scalar(q, rng));
    const Scalar d = oracle::det(build_A(n, a));
    EXPECT_TRUE(d == a[0] || d == -a[0]) << "n=" << n << " det=" << d;
  }
}

TEST(Witness, InverseOfTwoByTwoA) {
  const Field q = Q();
  const Matrix a = build_A(2, scalars(q, {3}));
  EXPECT_EQ(inverse(a), Matrix::parse(q, "2 2\n0 1\n1/3 0\n"));
}

TEST(Witness, ChooseParamsDeterministic) {
  const Field q = Q();
  const auto add = choose_params(3, CommutatorKind::Additive, q);
  EXPECT_EQ(add.b, scalars(q, {-1, -3}));
  EXPECT_EQ(expected_add_diagonal(add.b), scalars(q, {1, 2, -3}));
  const auto mult = choose_params(3, CommutatorKind::Multiplicative, q);
  EXPECT_EQ(mult.b, scalars(q, {1, 2, 8}));
  const auto ratios = expected_mult_diagonal(mult.b);
  EXPECT_EQ(ratios, (std::vector<Scalar>{q.from_int(8), q.parse_scalar("1/2"), q.parse_scalar("1/4")}));
  EXPECT_TRUE(pairwise_distinct(ratios));
  EXPECT_TRUE(choose_params(2, CommutatorKind::Additive, q).fixed_pair);
}

TEST(Witness, MultiplicativeTwoByTwo) {
  const Field q = Q();
  const auto r = build_witness(explicit_params(CommutatorKind::Multiplicative, 2, scalars(q, {1}), scalars(q, {1, 2})), q);
  EXPECT_EQ(r.C, Matrix::diagonal({q.from_int(2), q.parse_scalar("1/2")}));
  EXPECT_EQ(r.minpoly, P(q, {-2, 1}) * Polynomial(q, {q.parse_scalar("-1/2"), q.one()}));
  EXPECT_EQ(r.degree, 2u);
}

TEST(Witness, AdditiveThreeByThree) {
  const Field q = Q();
  const auto r = build_witness(explicit_params(CommutatorKind::Additive, 3, scalars(q, {1, 1}), scalars(q, {1, 3})), q);
  EXPECT_EQ(r.C, M(q, {{-1, 0, -1}, {0, -2, 0}, {0, 0, 3}}));
  EXPECT_EQ(r.diagonal, scalars(q, {-1, -2, 3}));
  EXPECT_TRUE(r.diagonal_matches);
  EXPECT_EQ(r.degree, 3u);
}

TEST(Witness, FixedPairOverF2) {
  const Field f = F(2);
  const auto r = build_add_witness(2, f);
  EXPECT_TRUE(r.params.fixed_pair);
  EXPECT_EQ(r.A, Matrix::unit(f, 2, 0, 1));
  EXPECT_EQ(r.B, M(f, {{0, 0}, {1, 1}}));
  EXPECT_EQ(r.C, M(f, {{1, 1}, {0, 1}}));
  EXPECT_EQ(r.minpoly, P(f, {1, -2, 1}));
  EXPECT_EQ(r.degree, 2u);
}

class WitnessSweep : public ::testing::TestWithParam<std::string> {};

TEST_P(WitnessSweep, MultiplicativeDegreeShapeAndDiagonal) {
  const Field f = Field::parse(GetParam());
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = build_mult_witness(n, f);
    EXPECT_EQ(r.degree, n);
    EXPECT_EQ(oracle::minpoly_degree(r.C), n);
    EXPECT_TRUE(r.C.is_lower_triangular());
    EXPECT_TRUE(r.diagonal_matches);
    EXPECT_EQ(r.C.diagonal_entries(), expected_mult_diagonal(r.params.b));
    EXPECT_TRUE(r.determinant.is_one());
    EXPECT_TRUE(oracle::det(r.C).is_one());
    EXPECT_EQ(r.minpoly, r.charpoly);
    // Both directions of the g_n criterion on the constructed element.
    EXPECT_TRUE(gn_vanishes_on(r.C, n, 20, 0).vanished);
    EXPECT_FALSE(gn_vanishes_on(r.C, n - 1, 20, 0).vanished);
  }
}

TEST_P(WitnessSweep, AdditiveDegreeShapeAndTrace) {
  const Field f = Field::parse(GetParam());
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = build_add_witness(n, f);
    EXPECT_EQ(r.degree, n);
    EXPECT_EQ(oracle::minpoly_degree(r.C), n);
    EXPECT_TRUE(r.C.is_upper_triangular());
    EXPECT_TRUE(r.trace.is_zero());
    EXPECT_TRUE(r.diagonal_matches);
    EXPECT_EQ(r.minpoly, r.charpoly);
    EXPECT_TRUE(gn_vanishes_on(r.C, n, 20, 0).vanished);
    EXPECT_FALSE(gn_vanishes_on(r.C, n - 1, 20, 0).vanished);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, WitnessSweep, ::testing::Values("q", "fp:101"), [](const auto& info) { return info.param == "q" ? std::string("Q") : std::string("F101"); });

TEST(Witness, SmallFields) {
  EXPECT_EQ(code_of([] { build_add_witness(3, F(2)); }), ErrorCode::FieldTooSmall);
  EXPECT_EQ(code_of([] { build_mult_witness(2, F(2)); }), ErrorCode::FieldTooSmall);
  EXPECT_EQ(code_of([] { build_mult_witness(3, F(3)); }), ErrorCode::FieldTooSmall);
  // F_3 has room for (-b, 0, b) with b != 0.
  EXPECT_EQ(build_add_witness(3, F(3)).degree, 3u);
  EXPECT_EQ(code_of([] { build_add_witness(4, F(3)); }), ErrorCode::FieldTooSmall);
  // Over F_5 the five diagonal entries must exhaust the field; a random
  // retry finds such an arrangement.
  const auto r = build_add_witness(5, F(5));
  EXPECT_EQ(r.degree, 5u);
  EXPECT_NE(r.params.origin, "deterministic");
}

TEST(Witness, RetryIsSeededAndRecorded) {
  const Field f = F(7);
  const auto a = build_mult_witness(3, f, 5);
  const auto b = build_mult_witness(3, f, 5);
  EXPECT_EQ(report::witness_json(a, 5).dump(), report::witness_json(b, 5).dump());
  EXPECT_EQ(a.degree, 3u);
}

TEST(Witness, RejectsInadmissibleExplicitParams) {
  const Field q = Q();
  EXPECT_EQ(code_of([&] { build_witness(explicit_params(CommutatorKind::Multiplicative, 2, scalars(q, {0}), scalars(q, {1, 2})), q); }),
            ErrorCode::BadParams);
  EXPECT_EQ(code_of([&] { build_witness(explicit_params(CommutatorKind::Multiplicative, 2, scalars(q, {1}), scalars(q, {1, 1})), q); }),
            ErrorCode::BadParams);
  EXPECT_EQ(code_of([&] { build_witness(explicit_params(CommutatorKind::Additive, 2, scalars(q, {1}), scalars(q, {1})), q); }),
            ErrorCode::BadParams);
}
