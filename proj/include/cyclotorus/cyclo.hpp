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

// Cyclotomic polynomials and the small number theory around them.

#ifndef CYCLOTORUS_CYCLO_HPP_
#define CYCLOTORUS_CYCLO_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclotorus/exactalg.hpp"

namespace cyclotorus::cyclo {

using exactalg::IntPoly;

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes.
struct Factorization {
  std::vector<PrimePower> pairs;

  std::uint64_t value() const;
  bool is_prime_power() const { return pairs.size() == 1; }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic trial division.
bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// If n = p^a with a >= 1, returns p.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

struct CycloIndex {
  std::uint64_t n;
  Factorization factorization;
  std::uint64_t phi;

  static CycloIndex make(std::uint64_t n);
};

// Phi_n, built by dividing X^n - 1 by Phi_d for every proper divisor d.
// Results are memoized in a process-wide cache; the reference stays valid
// for the life of the process.
const IntPoly& cyclotomic(std::uint64_t n);

// An ordered pair of distinct primes together with the split
// (p-1)(r-1) = s*p + t*r, 0 <= s <= r-2, 0 <= t <= p-2.
class PrimePair {
 public:
  // Throws InvalidArgument if p == r or either is not prime.
  static PrimePair make(std::uint64_t p, std::uint64_t r);

  std::uint64_t p() const { return p_; }
  std::uint64_t r() const { return r_; }
  std::uint64_t pr() const { return p_ * r_; }
  std::uint64_t phi_pr() const { return (p_ - 1) * (r_ - 1); }
  std::uint64_t s() const { return s_; }
  std::uint64_t t() const { return t_; }
  PrimePair swapped() const { return make(r_, p_); }

  friend bool operator==(const PrimePair&, const PrimePair&) = default;

 private:
  PrimePair(std::uint64_t p, std::uint64_t r, std::uint64_t s, std::uint64_t t)
      : p_(p), r_(r), s_(s), t_(t) {}
  std::uint64_t p_, r_, s_, t_;
};

// All ordered pairs (p, r) of distinct primes <= bound.
std::vector<PrimePair> ordered_prime_pairs(std::uint64_t bound);

// Phi_pr from the two-product expression
//   (sum_{i<=s} X^{ip})(sum_{j<=t} X^{jr})
//     - X^{-pr} (sum_{s<i<r} X^{ip})(sum_{t<j<p} X^{jr}).
IntPoly lam_leung_phi_pr(const PrimePair& pair);

// |Res(Phi_m, Phi_n)| for m > n >= 1 from the closed form over the divisors
// d of n with m/(m,d) a prime power. Throws InvalidArgument if m <= n.
Integer resultant_apostol(std::uint64_t m, std::uint64_t n);

// True iff m = n * p^a with p prime and a >= 1, i.e. iff
// Res(Phi_m, Phi_n) != 1. Throws InvalidArgument if m <= n.
bool lemma1_nontrivial(std::uint64_t m, std::uint64_t n);

// Sufficient condition for gcd(Phi_m(q), Phi_n(q)) = 1 at every integer q:
// the negation of lemma1_nontrivial. Throws InvalidArgument if m <= n.
bool coprime_evaluations(std::uint64_t m, std::uint64_t n);

}  // namespace cyclotorus::cyclo

#endif  // CYCLOTORUS_CYCLO_HPP_
