/*
   Copyright 2026 The hopfimg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

namespace hopfimg {
namespace {

using testing::embed;
using testing::near;

TEST(Field, ZetaSquaredIsMinusOneForConductorFour) {
  auto ctx = make_context(4);
  Cyclotomic z = Cyclotomic::zeta(ctx);
  EXPECT_EQ(z * z, Cyclotomic(ctx, -1L));
}

TEST(Field, PrimitiveCubeRootsSumToMinusOne) {
  auto ctx = make_context(3);
  EXPECT_EQ(Cyclotomic::zeta(ctx) + Cyclotomic::zeta(ctx, 2), Cyclotomic(ctx, -1L));
}

TEST(Field, InverseOfZetaTwelve) {
  auto ctx = make_context(12);
  Cyclotomic z = Cyclotomic::zeta(ctx);
  Cyclotomic inv = Cyclotomic::one(ctx) / z;
  EXPECT_TRUE((inv * z).is_one());
  EXPECT_EQ(inv, Cyclotomic::zeta(ctx, 11));
  EXPECT_TRUE(near(embed(inv), std::polar(1.0, -2 * std::numbers::pi / 12)));
}

TEST(Field, DivisionByZeroThrows) {
  auto ctx = make_context(5);
  EXPECT_THROW(Cyclotomic::one(ctx) / Cyclotomic::zero(ctx), DivisionByZero);
  EXPECT_THROW(Cyclotomic::zero(ctx).inverse(), DivisionByZero);
}

TEST(Field, MixedConductorsThrow) {
  auto a = Cyclotomic::zeta(make_context(4));
  auto b = Cyclotomic::zeta(make_context(3));
  EXPECT_THROW(a + b, ContextMismatch);
  EXPECT_THROW(a * b, ContextMismatch);
}

TEST(Field, SameConductorFromDistinctContextsMixes) {
  auto a = Cyclotomic::zeta(make_context(6));
  auto b = Cyclotomic::zeta(make_context(6));
  EXPECT_EQ(a, b);
  EXPECT_NO_THROW(a * b);
}

TEST(Field, RootOfUnityOrder) {
  auto c4 = make_context(4);
  auto c12 = make_context(12);
  EXPECT_EQ(root_of_unity_order(Cyclotomic::one(c12)), 1u);
  EXPECT_EQ(root_of_unity_order(Cyclotomic::zeta(c4)), 4u);
  Cyclotomic w = Cyclotomic::zeta(c12, 4);
  EXPECT_EQ(root_of_unity_order(w), 3u);
  EXPECT_TRUE((w * w * w).is_one());
  EXPECT_FALSE(w.is_one());
  EXPECT_FALSE((w * w).is_one());
}

TEST(Field, OddConductorStillSeesSignFlips) {
  auto ctx = make_context(3);
  EXPECT_EQ(root_of_unity_order(Cyclotomic(ctx, -1L)), 2u);
  EXPECT_EQ(root_of_unity_order(-Cyclotomic::zeta(ctx)), 6u);
}

TEST(Field, NonRootsHaveNoOrder) {
  auto ctx = make_context(8);
  EXPECT_FALSE(root_of_unity_order(Cyclotomic(ctx, 2L)));
  EXPECT_FALSE(root_of_unity_order(Cyclotomic::zero(ctx)));
  EXPECT_FALSE(root_of_unity_order(Cyclotomic::one(ctx) + Cyclotomic::zeta(ctx)));
}

TEST(Field, ParseZero) {
  auto ctx = make_context(7);
  EXPECT_TRUE(parse_scalar("0", ctx).is_zero());
  EXPECT_EQ(format_scalar(parse_scalar("0", ctx)), "0");
}

TEST(Field, ParseReadsCoefficientsDirectly) {
  auto ctx = make_context(8);
  Cyclotomic a = parse_scalar("1/2*z^3 - 2", ctx);
  ASSERT_EQ(a.coefficients().size(), 4u);
  EXPECT_EQ(a.coefficients()[0], Rational(-2));
  EXPECT_EQ(a.coefficients()[1], Rational(0));
  EXPECT_EQ(a.coefficients()[2], Rational(0));
  EXPECT_EQ(a.coefficients()[3], Rational(1, 2));
}

TEST(Field, ParseReducesHighPowers) {
  auto ctx = make_context(8);
  EXPECT_EQ(parse_scalar("z^9", ctx), parse_scalar("z", ctx));
  EXPECT_EQ(parse_scalar("z^4", ctx), Cyclotomic(ctx, -1L));
}

TEST(Field, CanonicalFormatOrdersByPower) {
  auto ctx = make_context(12);
  EXPECT_EQ(format_scalar(parse_scalar("-1/2*z^2 + 3", ctx)), "3 - 1/2*z^2");
  EXPECT_EQ(format_scalar(parse_scalar("2/4*z + z - z", ctx)), "1/2*z");
  EXPECT_EQ(format_scalar(parse_scalar("-z", ctx)), "-z");
  EXPECT_EQ(format_scalar(parse_scalar("  +3  ", ctx)), "3");
}

TEST(Field, ParseErrorsCarryPositions) {
  auto ctx = make_context(4);
  for (const char* bad : {"", "1 +", "z^", "z^-1", "1/0", "2*", "x", "1 2"}) {
    EXPECT_THROW(parse_scalar(bad, ctx), ParseError) << bad;
  }
  try {
    parse_scalar("1 + q", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(FieldProperty, AxiomsOnRandomTriples) {
  std::mt19937 rng(20261015);
  for (unsigned n : {1u, 3u, 4u, 5u, 8u, 12u}) {
    auto ctx = make_context(n);
    for (int trial = 0; trial < 40; ++trial) {
      Cyclotomic a = testing::random_scalar(rng, ctx), b = testing::random_scalar(rng, ctx),
                 c = testing::random_scalar(rng, ctx);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a.inverse() * a).is_one());
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(FieldProperty, ArithmeticMatchesComplexEmbedding) {
  std::mt19937 rng(7);
  for (unsigned n : {5u, 7u, 9u, 12u, 15u}) {
    auto ctx = make_context(n);
    for (int trial = 0; trial < 25; ++trial) {
      Cyclotomic a = testing::random_scalar(rng, ctx, 3), b = testing::random_scalar(rng, ctx, 3);
      EXPECT_TRUE(near(embed(a + b), embed(a) + embed(b)));
      EXPECT_TRUE(near(embed(a * b), embed(a) * embed(b), 1e-8));
      if (!b.is_zero()) EXPECT_TRUE(near(embed(a / b), embed(a) / embed(b), 1e-6));
    }
  }
}

TEST(FieldProperty, ParseFormatRoundTrip) {
  std::mt19937 rng(11);
  for (unsigned n : {1u, 2u, 6u, 10u, 12u}) {
    auto ctx = make_context(n);
    for (int trial = 0; trial < 50; ++trial) {
      Cyclotomic a = testing::random_scalar(rng, ctx, 9);
      EXPECT_EQ(parse_scalar(format_scalar(a), ctx), a);
    }
  }
}

TEST(FieldProperty, CyclotomicPolynomialDividesXnMinusOne) {
  for (unsigned n = 1; n <= 120; ++n) {
    RationalPoly phi = cyclotomic_polynomial(n);
    unsigned totient = 0;
    for (unsigned k = 1; k <= n; ++k) totient += std::gcd(k, n) == 1;
    ASSERT_EQ(phi.size(), totient + 1) << n;
    EXPECT_EQ(phi.back(), Rational(1)) << n;
    RationalPoly xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    auto [q, r] = poly_divmod(xn, phi);
    for (const auto& c : r) EXPECT_EQ(c, Rational(0)) << n;
  }
}

TEST(FieldProperty, ZetaIsPrimitive) {
  for (unsigned n = 1; n <= 40; ++n) {
    auto ctx = make_context(n);
    EXPECT_EQ(root_of_unity_order(Cyclotomic::zeta(ctx)), n == 1 ? 1u : n);
    EXPECT_TRUE(near(embed(Cyclotomic::zeta(ctx)), std::polar(1.0, 2 * std::numbers::pi / n)));
  }
}

}  // namespace
}  // namespace hopfimg
