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

// Inverses of cyclotomic polynomials modulo one another, for indices dividing
// a product pr of two distinct primes.
//
// Every inverse exists in two forms here: the generic one (inverse_mod, an
// extended gcd over Q) and an explicit formula (closed_form_*). The formulas
// never call the generic route, so comparing the two is a real check.
//
// Case labels used in reports:
//   i-a    Phi_p^{-1}  mod Phi_1    = 1/p
//   i-b    Phi_1^{-1}  mod Phi_p    = -(1/p)(X^{p-2} + 2X^{p-3} + ... + (p-1))
//   ii-a   Phi_pr^{-1} mod Phi_1    = 1
//   ii-b   Phi_1^{-1}  mod Phi_pr   coefficients in {-1, 0, 1}
//   iii-a  Phi_pr^{-1} mod Phi_p    = (1/r)(1 + X + ... + X^d), d = (r-1) mod p
//   iii-b  Phi_p^{-1}  mod Phi_pr   = (1/r) sum v_i X^i with v_i < r
//   iv     Phi_p^{-1}  mod Phi_r    coefficients in {-1, 0, 1}

#ifndef CYCLOTORUS_MODINV_HPP_
#define CYCLOTORUS_MODINV_HPP_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclotorus/cyclo.hpp"
#include "cyclotorus/exactalg.hpp"

namespace cyclotorus::modinv {

using cyclo::PrimePair;
using exactalg::IntPoly;
using exactalg::ScaledPoly;

// Canonical Phi_m^{-1} mod Phi_n (degree < phi(n)). Throws NotCoprime when
// Phi_m and Phi_n share a factor, which among cyclotomics means m == n.
ScaledPoly inverse_mod(std::uint64_t m, std::uint64_t n);

enum class Direction {
  kForward,  // Phi_p^{-1} mod Phi_1
  kReverse,  // Phi_1^{-1} mod Phi_p
};

ScaledPoly closed_form_i(std::uint64_t p, Direction direction);

// (Phi_pr^{-1} mod Phi_1, Phi_1^{-1} mod Phi_pr). The second comes from the
// prefix sums of the coefficients of Phi_pr: (X-1)V = 1 - Phi_pr.
std::pair<ScaledPoly, ScaledPoly> closed_form_ii(const PrimePair& pair);

ScaledPoly closed_form_iii_forward(const PrimePair& pair);

// Integer numerator v of Phi_p^{-1} mod Phi_pr = v/r, obtained by dividing
// r - Phi_pr * (1 + ... + X^d) by Phi_p. Not normalized, no bound checks.
IntPoly iii_reverse_numerator(const PrimePair& pair);

// iii_reverse_numerator / r. Throws TheoremViolation if some v_i >= r.
ScaledPoly closed_form_iii_reverse(const PrimePair& pair);

// Phi_p^{-1} mod Phi_r for distinct primes, from the index formula
//   r * ut_i = k_1(i) - 2 k_2(i) + k_3(i),  k_l(i) = (i - l) / p mod r,
// for the coefficients ut_i (i = 1..r) of Ut = (X-1)U, followed by
// u = -(prefix sums of ut).
IntPoly closed_form_iv(std::uint64_t p, std::uint64_t r);

// (X-1) * closed_form_iv(p, r). Throws TheoremViolation unless every
// coefficient is in {-1, 0, 1} and the nonzero ones alternate in sign.
IntPoly tilde_u(std::uint64_t p, std::uint64_t r);

bool coefficients_within(const IntPoly& a, long lo, long hi);
// Nonzero coefficients, read by increasing index, strictly alternate in sign.
bool signs_alternate(const IntPoly& a);

// True iff Phi_m * U reduces to the constant 1 modulo Phi_n.
bool is_inverse(std::uint64_t m, std::uint64_t n, const ScaledPoly& u);

enum class CaseId { kIa, kIb, kIIa, kIIb, kIIIa, kIIIb, kIV };

std::string_view case_label(CaseId id);

struct InverseReport {
  PrimePair pair;
  CaseId case_id;
  std::uint64_t m;  // inverted polynomial is Phi_m
  std::uint64_t n;  // modulus is Phi_n
  ScaledPoly inverse;
  bool matches_oracle;
  bool defining_identity;
  bool degree_ok;
  bool bound_ok;
  bool bound_satisfied;  // conjunction of the four checks above
  // Extremes of the numerator coefficients over the case's natural
  // denominator (p for i-b, r for iii-a/iii-b, 1 otherwise).
  Integer observed_min;
  Integer observed_max;
};

// Runs the seven cases for the pair. Failed checks are reported, not thrown.
std::vector<InverseReport> verify_theorem1(const PrimePair& pair);

}  // namespace cyclotorus::modinv

#endif  // CYCLOTORUS_MODINV_HPP_
