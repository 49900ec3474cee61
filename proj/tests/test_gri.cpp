#include "ast_gen.hpp"
#include "test_util.hpp"

using namespace testing_util;
namespace gri = maxsub::gri;

namespace {

gri::Substitution subst(const Field& f, std::size_t size, std::map<std::string, Matrix> vars) {
  return gri::Substitution{f, size, std::move(vars), {}};
}

std::pair<std::size_t, std::size_t> syntax_position(std::string_view text) {
  try {
    gri::parse(text);
  } catch (const SyntaxError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "parsed: " << text;
  return {0, 0};
}

}  // namespace

TEST(Gri, ParsesCommutators) {
  const auto add = gri::parse("x1*x2 - x2*x1");
  EXPECT_TRUE(gri::structurally_equal(add, gri::sub(gri::mul(gri::var("x1"), gri::var("x2")), gri::mul(gri::var("x2"), gri::var("x1")))));
  const auto mult = gri::parse("x1*x2*x1^-1*x2^-1");
  const auto expected =
      gri::mul(gri::mul(gri::mul(gri::var("x1"), gri::var("x2")), gri::pow(gri::var("x1"), -1)), gri::pow(gri::var("x2"), -1));
  EXPECT_TRUE(gri::structurally_equal(mult, expected));
  EXPECT_EQ(gri::print(mult), "x1*x2*x1^-1*x2^-1");
}

TEST(Gri, ParsesGnNode) {
  const auto e = gri::parse("gn2(x1; y1, y2)");
  ASSERT_EQ(e->kind, gri::NodeKind::Gn);
  EXPECT_EQ(e->gn_n, 2u);
  ASSERT_EQ(e->children.size(), 3u);
  EXPECT_EQ(gri::print(e), "gn2(x1; y1, y2)");
  EXPECT_EQ(gri::variables(e), (std::set<std::string>{"x1", "y1", "y2"}));
}

TEST(Gri, PrecedenceAndCanonicalText) {
  EXPECT_EQ(gri::print(gri::parse("a+b*c")), "a + b*c");
  EXPECT_EQ(gri::print(gri::parse("(a+b)*c")), "(a + b)*c");
  EXPECT_EQ(gri::print(gri::parse("a-(b-c)")), "a - (b - c)");
  EXPECT_EQ(gri::print(gri::parse("(a-b)-c")), "a - b - c");
  EXPECT_EQ(gri::print(gri::parse("-x1^2")), "-x1^2");
  EXPECT_EQ(gri::print(gri::parse("(-x1)^2")), "(-x1)^2");
  EXPECT_EQ(gri::print(gri::parse("(x1^2)^3")), "(x1^2)^3");
  EXPECT_EQ(gri::print(gri::parse("007*x1")), "7*x1");
  EXPECT_EQ(gri::print(gri::parse("inv( x1 + I )")), "inv(x1 + I)");
  EXPECT_EQ(gri::print(gri::parse("x1 - -x2")), "x1 - -x2");
  EXPECT_EQ(gri::parse("x1^-2")->exponent, -2);
}

TEST(Gri, SyntaxErrorsCarryPosition) {
  EXPECT_EQ(syntax_position("x1 +"), (std::pair<std::size_t, std::size_t>{1, 5}));
  EXPECT_EQ(syntax_position("x1 * $"), (std::pair<std::size_t, std::size_t>{1, 6}));
  EXPECT_EQ(syntax_position("x1\n  + )"), (std::pair<std::size_t, std::size_t>{2, 5}));
  EXPECT_EQ(syntax_position("x1 x2"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(syntax_position("gn2(x1; y1)"), (std::pair<std::size_t, std::size_t>{1, 11}));
  EXPECT_EQ(syntax_position("gn0(x1; y1)").first, 1u);
  EXPECT_EQ(syntax_position("x1^y1"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(syntax_position("(x1"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(syntax_position(""), (std::pair<std::size_t, std::size_t>{1, 1}));
}

TEST(Gri, RoundTripsRandomTrees) {
  Rng rng(123);
  for (int i = 0; i < 500; ++i) {
    const auto e = astgen::random_expr(rng, 6);
    ASSERT_LE(astgen::depth_of(e), 6u);
    const std::string text = gri::print(e);
    const auto back = gri::parse(text);
    ASSERT_TRUE(gri::structurally_equal(e, back)) << text << " reprinted as " << gri::print(back);
    ASSERT_EQ(gri::print(back), text);
  }
}

TEST(Gri, EvaluatesAdditiveCommutatorOfUnits) {
  const Field q = Q();
  const auto out = gri::evaluate(gri::parse("x1*x2 - x2*x1"), subst(q, 2, {{"x1", Matrix::unit(q, 2, 0, 1)}, {"x2", Matrix::unit(q, 2, 1, 0)}}));
  ASSERT_TRUE(out.permissible());
  EXPECT_EQ(*out.value, M(q, {{1, 0}, {0, -1}}));
}

TEST(Gri, QuaternionImagesGiveMinusIdentity) {
  const auto h = quaternion_algebra(Q().from_int(-1), Q().from_int(-1));
  const Matrix li = h->left_multiplication(AlgebraElement::basis(h, 1).coords());
  const Matrix lj = h->left_multiplication(AlgebraElement::basis(h, 2).coords());
  const auto out = gri::evaluate(gri::parse("x1*x2*x1^-1*x2^-1"), subst(Q(), 4, {{"x1", li}, {"x2", lj}}));
  ASSERT_TRUE(out.permissible());
  EXPECT_EQ(*out.value, Matrix::scalar(Q().from_int(-1), 4));
}

TEST(Gri, SingularInverseIsNotPermissible) {
  const Field q = Q();
  const Matrix e12 = Matrix::unit(q, 2, 0, 1);
  auto out = gri::evaluate(gri::parse("x1^-1"), subst(q, 2, {{"x1", e12}}));
  ASSERT_FALSE(out.permissible());
  EXPECT_EQ(out.not_permissible->subexpression, "x1^-1");
  EXPECT_TRUE(out.not_permissible->path.empty());
  out = gri::evaluate(gri::parse("x2 + x2*inv(x1 + 2*x1)"), subst(q, 2, {{"x1", e12}, {"x2", Matrix::identity(q, 2)}}));
  ASSERT_FALSE(out.permissible());
  EXPECT_EQ(out.not_permissible->subexpression, "inv(x1 + 2*x1)");
  EXPECT_EQ(out.not_permissible->path, (std::vector<std::size_t>{1, 1}));
  out = gri::evaluate(gri::parse("inv(x1 - x1)"), subst(q, 2, {{"x1", Matrix::identity(q, 2)}}));
  EXPECT_FALSE(out.permissible());
}

TEST(Gri, ZeroPowerAndLiterals) {
  const Field f = F(101);
  const Matrix x = M(f, {{0, 1}, {0, 0}});
  auto out = gri::evaluate(gri::parse("x1^0"), subst(f, 2, {{"x1", x}}));
  EXPECT_EQ(*out.value, Matrix::identity(f, 2));
  out = gri::evaluate(gri::parse("3*x1 - x1*3 + 5 - I*5"), subst(f, 2, {{"x1", x}}));
  EXPECT_TRUE(out.value->is_zero());
  out = gri::evaluate(gri::parse("102"), subst(f, 2, {}));
  EXPECT_EQ(*out.value, Matrix::identity(f, 2));
}

TEST(Gri, MissingBindingsAndShapes) {
  const Field q = Q();
  EXPECT_EQ(code_of([&] { gri::evaluate(gri::parse("x1*x2"), subst(q, 2, {{"x1", Matrix::identity(q, 2)}})); }), ErrorCode::MissingVariable);
  EXPECT_EQ(code_of([&] { gri::evaluate(gri::parse("x1 + A"), subst(q, 2, {{"x1", Matrix::identity(q, 2)}})); }), ErrorCode::MissingVariable);
  EXPECT_EQ(code_of([&] { gri::evaluate(gri::parse("x1"), subst(q, 2, {{"x1", Matrix::identity(q, 3)}})); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([&] { gri::evaluate(gri::parse("x1"), subst(q, 2, {{"x1", Matrix::identity(F(5), 2)}})); }), ErrorCode::SpecMismatch);
}

TEST(Gri, NamedConstantsAndIdentityOverride) {
  const Field q = Q();
  gri::Substitution s = subst(q, 2, {{"x1", Matrix::unit(q, 2, 0, 1)}});
  s.constants.emplace("A", M(q, {{1, 2}, {3, 4}}));
  auto out = gri::evaluate(gri::parse("A*x1"), s);
  EXPECT_EQ(*out.value, M(q, {{0, 1}, {0, 3}}));
  s.constants.emplace("I", Matrix::scalar(q.from_int(2), 2));
  out = gri::evaluate(gri::parse("I"), s);
  EXPECT_EQ(*out.value, Matrix::scalar(q.from_int(2), 2));
}

TEST(Gri, EvaluationIsTotalOnRandomTrees) {
  const Field f = F(3);
  Rng rng(99);
  std::size_t not_permissible = 0;
  for (int i = 0; i < 300; ++i) {
    const auto e = astgen::random_expr(rng, 5);
    gri::Substitution s{f, 2, {}, {}};
    for (auto v : {"x1", "x2", "x3"}) s.variables.emplace(v, random_matrix(f, 2, rng));
    s.constants.emplace("A", Matrix::unit(f, 2, 0, 1));
    s.constants.emplace("B", Matrix(f, 2, 2));
    s.constants.emplace("alpha", random_matrix(f, 2, rng));
    const auto out = gri::evaluate(e, s);
    if (!out.permissible()) ++not_permissible;
  }
  EXPECT_GT(not_permissible, 0u);
}

TEST(Gri, IdentityTestOnGn) {
  for (std::size_t m : {2u, 3u}) {
    std::string expr = "gn" + std::to_string(m) + "(x1;";
    for (std::size_t i = 1; i <= m; ++i) expr += (i == 1 ? " y" : ", y") + std::to_string(i);
    expr += ")";
    const auto r = gri::identity_test(gri::parse(expr), m + 1, m, F(101), 100, 0);
    EXPECT_EQ(r.nonzero, 0u) << expr;
    EXPECT_EQ(r.zero, 100u);
    EXPECT_EQ(r.verdict(), "plausible identity");
  }
  // g_2 separates M_3 from algebras of degree 2.
  const auto r3 = gri::identity_test(gri::parse("gn2(x1; y1, y2)"), 3, 3, F(101), 20, 0);
  EXPECT_GT(r3.nonzero, 0u);
}

TEST(Gri, IdentityTestFindsNoncommutativity) {
  const auto r = gri::identity_test(gri::parse("x1*x2-x2*x1"), 2, 2, F(101), 100, 0);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->trial, 0u);
  EXPECT_EQ(r.verdict(), "not an identity");
  const auto& b = r.certificate->bindings;
  const Matrix x1 = b.at("x1"), x2 = b.at("x2");
  EXPECT_EQ(x1 * x2 - x2 * x1, r.certificate->value);
  EXPECT_FALSE(r.certificate->value.is_zero());
}

TEST(Gri, IdentityTestTrivialAndInconclusive) {
  const auto r = gri::identity_test(gri::parse("x1 - x1"), 1, 2, F(101), 5, 0);
  EXPECT_EQ(r.zero, 5u);
  EXPECT_EQ(r.nonzero, 0u);
  EXPECT_EQ(r.not_permissible, 0u);
  const auto none = gri::identity_test(gri::parse("inv(x1 - x1)"), 1, 2, F(101), 5, 0);
  EXPECT_EQ(none.not_permissible, 5u);
  EXPECT_EQ(none.verdict(), "inconclusive");
  EXPECT_EQ(code_of([] { gri::identity_test(gri::parse("x1*x2"), 1, 2, F(101), 5, 0); }), ErrorCode::BadParams);
}

TEST(Gri, IdentityTestIsReproducible) {
  const auto e = gri::parse("x1*inv(x2)*x1 - x2");
  const auto a = gri::identity_test(e, 2, 2, F(5), 50, 17);
  const auto b = gri::identity_test(e, 2, 2, F(5), 50, 17);
  EXPECT_EQ(report::identity_json(a).dump(), report::identity_json(b).dump());
  EXPECT_GT(a.not_permissible, 0u);
  const auto c = gri::identity_test(e, 2, 2, F(5), 50, 18);
  EXPECT_NE(report::identity_json(a).dump(), report::identity_json(c).dump());
}
