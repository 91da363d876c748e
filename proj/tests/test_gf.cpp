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
#include <tuple>

#include "cyclotorus/cyclo.hpp"
#include "cyclotorus/errors.hpp"
#include "cyclotorus/gf.hpp"
#include "oracles.hpp"

namespace cyclotorus::gf {
namespace {

Integer I(unsigned long v) { return Integer(v); }

TEST(PrimeField, ValidatesModulus) {
  EXPECT_THROW(PrimeField::make(4), InvalidArgument);
  EXPECT_THROW(PrimeField::make(1), InvalidArgument);
  EXPECT_THROW(PrimeField::make(Integer("4294967311")), InvalidArgument);
  const PrimeField f = PrimeField::make(7);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_THROW(f.inv(0), DivisionByZero);
}

TEST(ExtField, ModulusIsFirstIrreducibleInOrder) {
  EXPECT_EQ(make_ext_field(2, 1)->modulus(), (std::vector<Residue>{0, 1}));
  EXPECT_EQ(make_ext_field(2, 2)->modulus(), (std::vector<Residue>{1, 1, 1}));
  EXPECT_EQ(make_ext_field(2, 3)->modulus(), (std::vector<Residue>{1, 0, 1, 1}));
  EXPECT_EQ(make_ext_field(3, 2)->modulus(), (std::vector<Residue>{1, 0, 1}));
  EXPECT_EQ(make_ext_field(7, 15)->size(), Integer("4747561509943"));
  EXPECT_THROW(make_ext_field(7, 0), InvalidArgument);
}

TEST(ExtField, ConstructionIsDeterministic) {
  EXPECT_EQ(*make_ext_field(7, 15), *make_ext_field(7, 15));
  EXPECT_EQ(*make_ext_field(11, 5), *make_ext_field(11, 5));
}

TEST(Irreducibility, KnownPolynomials) {
  const PrimeField f3 = PrimeField::make(3), f5 = PrimeField::make(5);
  EXPECT_TRUE(is_irreducible({1, 0, 1}, f3));
  EXPECT_FALSE(is_irreducible({1, 0, 1}, f5));
  // (X^2 + 1)^2 over F_3 has no root but is reducible.
  EXPECT_FALSE(is_irreducible({1, 0, 2, 0, 1}, f3));
}

class FieldAxioms : public ::testing::TestWithParam<std::tuple<unsigned long, unsigned>> {};

TEST_P(FieldAxioms, HoldOnRandomElements) {
  const auto [q, n] = GetParam();
  const FieldPtr f = make_ext_field(q, n);
  std::mt19937_64 rng(q * 1000 + n);
  const auto zero = ExtFieldElement::zero(f), one = ExtFieldElement::one(f);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ((a - b) + b, a);
    EXPECT_EQ((a * b).coeffs(), oracle::naive_mulmod(a.coeffs(), b.coeffs(), f->modulus(), q));
    if (!a.is_zero()) EXPECT_TRUE((a * inv(a)).is_one());
  }
}

TEST_P(FieldAxioms, PowerLaws) {
  const auto [q, n] = GetParam();
  const FieldPtr f = make_ext_field(q, n);
  std::mt19937_64 rng(q * 7 + n);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_nonzero(f, rng);
    EXPECT_TRUE(pow(x, f->group_order()).is_one());
    EXPECT_EQ(pow(x, f->size()), x);
    EXPECT_EQ(pow(x, -1), inv(x));
    EXPECT_EQ(pow(x, 5) * pow(x, -3), pow(x, 2));
    EXPECT_TRUE(pow(x, 0).is_one());
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Combine(::testing::Values(2ul, 7ul, 11ul), ::testing::Values(1u, 3u, 5u, 15u)),
                         [](const auto& info) {
                           return "q" + std::to_string(std::get<0>(info.param)) + "_n" +
                                  std::to_string(std::get<1>(info.param));
                         });

TEST(ExtFieldElement, RejectsMixingFieldsAndZeroInverse) {
  const FieldPtr a = make_ext_field(7, 3), b = make_ext_field(7, 5);
  EXPECT_THROW(ExtFieldElement::one(a) * ExtFieldElement::one(b), FieldMismatch);
  EXPECT_THROW(inv(ExtFieldElement::zero(a)), DivisionByZero);
  EXPECT_THROW(pow(ExtFieldElement::zero(a), -1), DivisionByZero);
  EXPECT_THROW(ExtFieldElement(a, {1, 2, 3, 4}), InvalidArgument);
  // Same (q, n) built twice is the same field.
  EXPECT_EQ(ExtFieldElement::one(a), ExtFieldElement::one(make_ext_field(7, 3)));
}

TEST(ExtFieldElement, GeneratorXSatisfiesModulus) {
  for (unsigned n : {1u, 2u, 4u, 6u}) {
    const FieldPtr f = make_ext_field(5, n);
    const auto x = ExtFieldElement::generator_x(f);
    auto acc = ExtFieldElement::zero(f);
    for (std::size_t i = f->modulus().size(); i-- > 0;) acc = acc * x + ExtFieldElement::constant(f, f->modulus()[i]);
    EXPECT_TRUE(acc.is_zero()) << n;
  }
}

TEST(Order, GeneratorOfF2To15) {
  const FieldPtr f = make_ext_field(2, 15);
  const auto g = find_generator(f);
  EXPECT_EQ(f->group_order(), 32767);
  EXPECT_EQ(prime_divisors(32767), (std::vector<Integer>{7, 31, 151}));
  EXPECT_TRUE(has_exact_order(g, 32767, {7, 31, 151}));
  EXPECT_FALSE(pow(g, 32767 / 7).is_one());
}

TEST(Order, HasExactOrderRejectsProperDivisors) {
  const FieldPtr f = make_ext_field(7, 1);
  const auto three = ExtFieldElement::constant(f, 3);  // generates F_7^x
  EXPECT_TRUE(has_exact_order(three, 6, {2, 3}));
  EXPECT_FALSE(has_exact_order(pow(three, 2), 6, {2, 3}));
  EXPECT_TRUE(has_exact_order(pow(three, 2), 3, {3}));
}

TEST(Norms, ExponentIsQuotientByCyclotomicValue) {
  for (unsigned long q : {2ul, 5ul, 7ul, 13ul}) {
    Integer top;
    mpz_pow_ui(top.get_mpz_t(), I(q).get_mpz_t(), 15);
    top -= 1;
    for (std::uint64_t k : {1u, 3u, 5u, 15u}) {
      EXPECT_EQ(norm_exponent(q, 15, k), top / exactalg::eval(cyclo::cyclotomic(k), q));
    }
  }
  EXPECT_THROW(norm_exponent(7, 15, 2), InvalidArgument);
  EXPECT_THROW(norm_exponent(7, 9, 3), InvalidArgument);
}

TEST(Norms, ImagesLandInTheirSubgroups) {
  const FieldPtr f = make_ext_field(7, 15);
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_nonzero(f, rng);
    for (std::uint64_t k : {1u, 3u, 5u, 15u}) EXPECT_TRUE(torus_membership(pow(x, norm_exponent(7, 15, k)), k));
  }
  const auto g = find_generator(make_ext_field(7, 3));
  EXPECT_FALSE(torus_membership(g, 3));
  EXPECT_THROW(torus_membership(ExtFieldElement::zero(f), 15), MembershipError);
}

TEST(Ordering, CanonicalLessIsLexicographicFromConstantTerm) {
  const FieldPtr f = make_ext_field(5, 3);
  EXPECT_TRUE(canonical_less(ExtFieldElement(f, {0, 4}), ExtFieldElement(f, {1})));
  EXPECT_TRUE(canonical_less(ExtFieldElement(f, {1, 0, 1}), ExtFieldElement(f, {1, 1})));
  EXPECT_FALSE(canonical_less(ExtFieldElement(f, {2}), ExtFieldElement(f, {2})));
}

TEST(Random, SeededStreamsRepeat) {
  const FieldPtr f = make_ext_field(11, 5);
  std::mt19937_64 a(3), b(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(random_nonzero(f, a), random_nonzero(f, b));
}

}  // namespace
}  // namespace cyclotorus::gf
