#include "test_util.hpp"

using namespace testing_util;

TEST(Polynomial, ProductOfLinearFactors) {
  const Field q = Q();
  EXPECT_EQ(P(q, {-1, 1}) * P(q, {-2, 1}), P(q, {2, -3, 1}));
  EXPECT_EQ((P(q, {-1, 1}) * P(q, {-2, 1})).to_string(), "2 -3 1");
}

TEST(Polynomial, GcdIsMonic) {
  const Field q = Q();
  EXPECT_EQ(gcd(P(q, {-1, 0, 1}), P(q, {-1, 1})), P(q, {-1, 1}));
  EXPECT_EQ(gcd(P(q, {-2, 0, 2}), P(q, {-3, 3})), P(q, {-1, 1}));
  EXPECT_EQ(gcd(P(q, {1, 0, 1}), P(q, {-1, 1})), P(q, {1}));
}

TEST(Polynomial, Divmod) {
  const Field q = Q();
  auto [quot, rem] = divmod(P(q, {0, 0, 0, 1}), P(q, {0, 0, 1}));
  EXPECT_EQ(quot, P(q, {0, 1}));
  EXPECT_TRUE(rem.is_zero());
  auto [q2, r2] = divmod(P(q, {1, 2, 3}), P(q, {1, 2}));
  EXPECT_EQ(q2 * P(q, {1, 2}) + r2, P(q, {1, 2, 3}));
  EXPECT_LT(r2.degree(), 1);
  EXPECT_EQ(code_of([&] { divmod(P(q, {1}), Polynomial(q)); }), ErrorCode::DivisionByZero);
}

TEST(Polynomial, GcdDividesBothOnRandomInputs) {
  for (const char* spec : {"q", "fp:101", "fp:2"}) {
    const Field f = Field::parse(spec);
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
      std::vector<Scalar> a, b, c;
      for (int k = 0; k < 4; ++k) a.push_back(random_scalar(f, rng));
      for (int k = 0; k < 3; ++k) b.push_back(random_scalar(f, rng));
      for (int k = 0; k < 3; ++k) c.push_back(random_scalar(f, rng));
      const Polynomial common(f, c);
      const Polynomial x = Polynomial(f, a) * common, y = Polynomial(f, b) * common;
      const Polynomial g = gcd(x, y);
      if (x.is_zero() && y.is_zero()) continue;
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE(divides(g, x));
      EXPECT_TRUE(divides(g, y));
      if (!common.is_zero()) {
        EXPECT_TRUE(divides(common.monic(), g));
      }
    }
  }
}

TEST(Polynomial, EvaluationAndText) {
  const Field q = Q();
  const Polynomial p = P(q, {2, -3, 1});
  EXPECT_TRUE(p(q.from_int(1)).is_zero());
  EXPECT_TRUE(p(q.from_int(2)).is_zero());
  EXPECT_EQ(p(q.from_int(3)), q.from_int(2));
  EXPECT_EQ(Polynomial::parse(q, "2 -3 1"), p);
  EXPECT_EQ(Polynomial::parse(q, "1/2 0 0"), P(q, {1}) * Polynomial::constant(q.parse_scalar("1/2")));
  EXPECT_EQ(Polynomial(q).to_string(), "0");
  EXPECT_EQ(Polynomial(q).degree(), -1);
  EXPECT_EQ(P(q, {4, 0, 2}).monic(), P(q, {2, 0, 1}));
}
