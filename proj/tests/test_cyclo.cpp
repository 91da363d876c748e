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

#include <numeric>
#include <thread>

#include "cyclotorus/cyclo.hpp"
#include "cyclotorus/errors.hpp"
#include "cyclotorus/modinv.hpp"
#include "oracles.hpp"

namespace cyclotorus::cyclo {
namespace {

using exactalg::IntPoly;

TEST(NumberTheory, SmallValues) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(31));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(15), 8u);
  EXPECT_EQ(euler_phi(105), 48u);
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(15), 1);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(moebius(12), 0);
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(primes_up_to(13), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}));
  EXPECT_EQ(prime_power_base(27), std::optional<std::uint64_t>(3));
  EXPECT_EQ(prime_power_base(12), std::nullopt);
  EXPECT_EQ(prime_power_base(1), std::nullopt);
  EXPECT_EQ(factorize(360).value(), 360u);
}

TEST(NumberTheory, MoebiusSumsVanish) {
  for (std::uint64_t n = 2; n <= 500; ++n) {
    int sum = 0;
    for (auto d : divisors(n)) sum += moebius(d);
    EXPECT_EQ(sum, 0) << n;
  }
}

TEST(NumberTheory, TotientSumsRecoverN) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t sum = 0;
    for (auto d : divisors(n)) sum += euler_phi(d);
    EXPECT_EQ(sum, n);
  }
}

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (IntPoly{1, 1}));
  EXPECT_EQ(cyclotomic(3), (IntPoly{1, 1, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(15), (IntPoly{1, -1, 0, 1, -1, 1, 0, -1, 1}));
  EXPECT_THROW(cyclotomic(0), InvalidArgument);
}

TEST(Cyclotomic, DivisorProductIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (auto d : divisors(n)) prod = prod * cyclotomic(d);
    ASSERT_EQ(prod, IntPoly::x_pow_minus_one(n)) << n;
  }
}

TEST(Cyclotomic, DegreeIsTotientAndPolynomialIsMonic) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    EXPECT_EQ(cyclotomic(n).degree(), static_cast<exactalg::Degree>(euler_phi(n)));
    EXPECT_TRUE(cyclotomic(n).is_monic());
  }
}

TEST(Cyclotomic, MatchesMoebiusProductFormula) {
  for (std::uint64_t n = 1; n <= 150; ++n) ASSERT_EQ(cyclotomic(n), oracle::moebius_cyclotomic(n)) << n;
}

TEST(Cyclotomic, Index105HasCoefficientMinusTwo) {
  const IntPoly& phi = cyclotomic(105);
  EXPECT_EQ(phi.coeff(7), -2);
  EXPECT_EQ(phi.coeff(41), -2);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i != 7 && i != 41) EXPECT_TRUE(phi.coeff(i) >= -1 && phi.coeff(i) <= 1) << i;
  }
  for (std::uint64_t n = 1; n < 105; ++n) {
    EXPECT_TRUE(modinv::coefficients_within(cyclotomic(n), -1, 1)) << n;
  }
}

TEST(Cyclotomic, ConcurrentAccessIsConsistent) {
  std::vector<std::jthread> pool;
  std::vector<IntPoly> seen(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &seen] {
      for (std::uint64_t n = 300 + t; n < 420; n += 8) (void)cyclotomic(n);
      seen[t] = cyclotomic(420);
    });
  }
  pool.clear();
  for (const auto& s : seen) EXPECT_EQ(s, seen.front());
}

TEST(PrimePair, SplitSatisfiesBounds) {
  for (const auto& pair : ordered_prime_pairs(31)) {
    EXPECT_EQ(pair.s() * pair.p() + pair.t() * pair.r(), pair.phi_pr());
    EXPECT_LE(pair.s(), pair.r() - 2);
    EXPECT_LE(pair.t(), pair.p() - 2);
  }
  EXPECT_EQ(ordered_prime_pairs(31).size(), 110u);
}

TEST(PrimePair, RejectsBadInput) {
  EXPECT_THROW(PrimePair::make(4, 5), InvalidArgument);
  EXPECT_THROW(PrimePair::make(3, 3), InvalidArgument);
  EXPECT_THROW(PrimePair::make(1, 3), InvalidArgument);
  EXPECT_EQ(PrimePair::make(3, 5).swapped(), PrimePair::make(5, 3));
}

TEST(LamLeung, MatchesCyclotomicForPrimePairs) {
  for (const auto& pair : ordered_prime_pairs(31)) {
    const IntPoly ll = lam_leung_phi_pr(pair);
    EXPECT_EQ(ll, cyclotomic(pair.pr())) << pair.p() << "," << pair.r();
    EXPECT_TRUE(modinv::coefficients_within(ll, -1, 1));
  }
}

TEST(Apostol, KnownValues) {
  EXPECT_EQ(resultant_apostol(6, 3), 4);
  EXPECT_EQ(resultant_apostol(8, 1), 2);
  EXPECT_EQ(resultant_apostol(9, 1), 3);
  EXPECT_EQ(resultant_apostol(6, 1), 1);
  EXPECT_EQ(resultant_apostol(2, 1), 2);
  EXPECT_EQ(resultant_apostol(15, 4), 1);
  EXPECT_THROW(resultant_apostol(3, 3), InvalidArgument);
  EXPECT_THROW(resultant_apostol(3, 5), InvalidArgument);
}

TEST(Apostol, AgreesWithGenericResultant) {
  for (std::uint64_t m = 2; m <= 40; ++m) {
    for (std::uint64_t n = 1; n < m; ++n) {
      const Integer generic = exactalg::resultant(cyclotomic(m), cyclotomic(n));
      ASSERT_EQ(resultant_apostol(m, n), abs(generic)) << m << "," << n;
    }
  }
}

TEST(Apostol, GenericResultantAgreesWithSylvesterOracle) {
  for (std::uint64_t m = 2; m <= 16; ++m) {
    for (std::uint64_t n = 1; n < m; ++n) {
      EXPECT_EQ(exactalg::resultant(cyclotomic(m), cyclotomic(n)),
                oracle::sylvester_determinant(cyclotomic(m), cyclotomic(n)));
    }
  }
}

TEST(NontrivialResultant, MatchesResultantValue) {
  EXPECT_TRUE(lemma1_nontrivial(6, 3));
  EXPECT_TRUE(lemma1_nontrivial(15, 3));
  EXPECT_TRUE(lemma1_nontrivial(8, 2));
  EXPECT_FALSE(lemma1_nontrivial(12, 2));
  EXPECT_FALSE(lemma1_nontrivial(15, 1));
  for (std::uint64_t m = 2; m <= 40; ++m) {
    for (std::uint64_t n = 1; n < m; ++n) {
      EXPECT_EQ(lemma1_nontrivial(m, n), resultant_apostol(m, n) != 1) << m << "," << n;
      EXPECT_EQ(coprime_evaluations(m, n), !lemma1_nontrivial(m, n));
    }
  }
}

TEST(NontrivialResultant, CoprimeEvaluationsHoldAtIntegers) {
  for (std::uint64_t m = 2; m <= 30; ++m) {
    for (std::uint64_t n = 1; n < m; ++n) {
      if (!coprime_evaluations(m, n)) continue;
      for (long q = -10; q <= 30; ++q) {
        const Integer a = exactalg::eval(cyclotomic(m), q), b = exactalg::eval(cyclotomic(n), q);
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        EXPECT_EQ(g, 1) << m << "," << n << " at " << q;
      }
    }
  }
}

}  // namespace
}  // namespace cyclotorus::cyclo
