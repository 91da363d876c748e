// Copyright 2026 The Cyclotorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "cyclotorus/errors.hpp"
#include "cyclotorus/exactalg.hpp"
#include "oracles.hpp"

namespace cyclotorus::exactalg {
namespace {

TEST(IntPoly, TrimsTrailingZeros) {
  IntPoly a{1, 2, 0, 0};
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.degree(), 1);
  EXPECT_TRUE(IntPoly{}.is_zero());
  EXPECT_EQ((IntPoly{0, 0}).degree(), kNegInfDegree);
  EXPECT_EQ(a.coeff(7), 0);
}

TEST(IntPoly, ArithmeticBasics) {
  const IntPoly x_minus_1{-1, 1}, x_plus_1{1, 1};
  EXPECT_EQ(x_minus_1 * x_plus_1, (IntPoly{-1, 0, 1}));
  EXPECT_EQ(x_minus_1 + x_plus_1, (IntPoly{0, 2}));
  EXPECT_TRUE((x_minus_1 - x_minus_1).is_zero());
  EXPECT_EQ(-x_minus_1, (IntPoly{1, -1}));
  EXPECT_EQ(scale(x_plus_1, 3), (IntPoly{3, 3}));
  EXPECT_EQ(IntPoly::x_pow_minus_one(3), (IntPoly{-1, 0, 0, 1}));
  EXPECT_EQ(IntPoly::monomial(5, 2), (IntPoly{0, 0, 5}));
}

TEST(IntPoly, ShiftedRejectsDroppedTerms) {
  EXPECT_EQ((IntPoly{0, 0, 1}).shifted(-2), IntPoly{1});
  EXPECT_EQ((IntPoly{1}).shifted(2), (IntPoly{0, 0, 1}));
  EXPECT_THROW((IntPoly{1, 1}).shifted(-1), InvalidArgument);
}

TEST(IntPoly, EvalAndContent) {
  EXPECT_EQ(eval(IntPoly{1, 1, 1}, 2), 7);
  EXPECT_EQ(eval(IntPoly{1, 1, 1}, -3), 7);
  EXPECT_EQ(content(IntPoly{6, -4, 10}), 2);
  EXPECT_EQ(content(IntPoly{}), 0);
  EXPECT_EQ(min_coeff(IntPoly{3, -7, 2}), -7);
  EXPECT_EQ(max_coeff(IntPoly{3, -7, 2}), 3);
}

TEST(Divrem, ReconstructsDividendOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int da = static_cast<int>(rng() % 12), db = 1 + static_cast<int>(rng() % 6);
    const IntPoly a = oracle::random_poly(rng, da, 20);
    std::vector<Integer> bc = oracle::random_poly(rng, db, 20).coeffs();
    bc.back() = 1;
    const IntPoly b(bc);
    auto [q, r] = divrem_exact(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_EQ(reduce_mod(a, b), r);
  }
}

TEST(Divrem, RejectsNonMonicAndZeroDivisors) {
  EXPECT_THROW(divrem_exact(IntPoly{1, 1}, IntPoly{1, 2}), InvalidArgument);
  EXPECT_THROW(divrem_exact(IntPoly{1, 1}, IntPoly{}), InvalidArgument);
}

TEST(Resultant, SmallKnownValues) {
  EXPECT_EQ(resultant(IntPoly{-2, 1}, (IntPoly{-3, 1})), -1);
  EXPECT_EQ(resultant(IntPoly{-1, 0, 1}, (IntPoly{-1, 1})), 0);
  EXPECT_EQ(resultant(IntPoly{5}, (IntPoly{1, 0, 1})), 25);
  EXPECT_EQ(resultant(IntPoly{3}, (IntPoly{7})), 1);
  EXPECT_EQ(resultant(IntPoly{}, (IntPoly{1, 1})), 0);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const IntPoly a = oracle::random_poly(rng, static_cast<int>(rng() % 7), 6);
    const IntPoly b = oracle::random_poly(rng, static_cast<int>(rng() % 7), 6);
    ASSERT_EQ(resultant(a, b), oracle::sylvester_determinant(a, b)) << a << " , " << b;
  }
}

TEST(Resultant, SwapSignFollowsDegreeParity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly a = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);
    const IntPoly b = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);
    const bool odd = (a.degree() * b.degree()) % 2 != 0;
    EXPECT_EQ(resultant(b, a), odd ? Integer(-resultant(a, b)) : resultant(a, b));
  }
}

TEST(Resultant, VanishesOnSharedFactor) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 5);
    const IntPoly a = g * oracle::random_poly(rng, static_cast<int>(rng() % 4), 5);
    const IntPoly b = g * oracle::random_poly(rng, static_cast<int>(rng() % 4), 5);
    EXPECT_EQ(resultant(a, b), 0);
  }
}

TEST(ScaledPoly, NormalizesContentAndSign) {
  const ScaledPoly s(IntPoly{4, 2}, 6);
  EXPECT_EQ(s.num(), (IntPoly{2, 1}));
  EXPECT_EQ(s.den(), 3);
  const ScaledPoly t(IntPoly{1, 1}, -2);
  EXPECT_EQ(t.num(), (IntPoly{-1, -1}));
  EXPECT_EQ(t.den(), 2);
  EXPECT_EQ(ScaledPoly(IntPoly{}, 5).den(), 1);
  EXPECT_THROW(ScaledPoly(IntPoly{1}, 0), DivisionByZero);
  EXPECT_EQ(s.coeff(0), Rational(2, 3));
}

TEST(ScaledPoly, FromRationalsUsesLcmOfDenominators) {
  const ScaledPoly s = ScaledPoly::from_rationals({Rational(1, 2), Rational(1, 3), Rational(0)});
  EXPECT_EQ(s.num(), (IntPoly{3, 2}));
  EXPECT_EQ(s.den(), 6);
}

TEST(Xgcd, BezoutIdentityAndDegreeBounds) {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 150) {
    const IntPoly a = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 7), 8);
    const IntPoly b = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 7), 8);
    if (resultant(a, b) == 0) continue;
    ++checked;
    auto [u, v] = xgcd_rational(a, b);
    EXPECT_LT(u.degree(), b.degree());
    EXPECT_LT(v.degree(), a.degree());
    const IntPoly lhs = scale(a * u.num(), v.den()) + scale(b * v.num(), u.den());
    EXPECT_EQ(lhs, IntPoly::constant(u.den() * v.den())) << a << " , " << b;
  }
}

TEST(Xgcd, RejectsCommonFactor) {
  EXPECT_THROW(xgcd_rational(IntPoly{-1, 0, 1}, IntPoly{1, 1}), NotCoprime);
}

TEST(Xgcd, ConstantInputs) {
  auto [u, v] = xgcd_rational(IntPoly{2}, IntPoly{1, 1});
  EXPECT_EQ(u, ScaledPoly(IntPoly{1}, 2));
  EXPECT_TRUE(v.num().is_zero());
}

TEST(MulMod, ReducesScaledProduct) {
  // (X + 1) * (1/2) X mod X^2 + 1 = (X^2 + X) / 2 = (X - 1) / 2.
  const ScaledPoly r = mul_mod(IntPoly{1, 1}, ScaledPoly(IntPoly{0, 1}, 2), IntPoly{1, 0, 1});
  EXPECT_EQ(r, ScaledPoly(IntPoly{-1, 1}, 2));
}

TEST(Printing, HumanReadableForm) {
  EXPECT_EQ(to_string(IntPoly{1, -1, 0, 2}), "2*X^3 - X + 1");
  EXPECT_EQ(to_string(IntPoly{}), "0");
}

}  // namespace
}  // namespace cyclotorus::exactalg
