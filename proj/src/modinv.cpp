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

#include "cyclotorus/modinv.hpp"

#include <string>

#include "cyclotorus/errors.hpp"

namespace cyclotorus::modinv {
namespace {

using cyclo::cyclotomic;

void require_prime(std::uint64_t p, const char* what) {
  if (!cyclo::is_prime(p)) throw InvalidArgument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

void require_distinct_primes(std::uint64_t p, std::uint64_t r, const char* what) {
  require_prime(p, what);
  require_prime(r, what);
  if (p == r) throw InvalidArgument(std::string(what) + ": primes must be distinct");
}

Integer to_int(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// 1 + X + ... + X^d
IntPoly all_ones(std::uint64_t d) {
  return IntPoly(std::vector<Integer>(d + 1, Integer(1)));
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t r) {
  a %= r;
  for (std::uint64_t x = 1; x < r; ++x) {
    if (a * x % r == 1) return x;
  }
  throw std::logic_error("inverse_mod_prime: not invertible");
}

// Numerator of `u` rescaled to denominator `den`, if den is a multiple of the
// stored denominator.
IntPoly numerator_over(const ScaledPoly& u, const Integer& den) {
  if (den % u.den() != 0) return u.num();
  return exactalg::scale(u.num(), den / u.den());
}

}  // namespace

ScaledPoly inverse_mod(std::uint64_t m, std::uint64_t n) {
  return exactalg::xgcd_rational(cyclotomic(m), cyclotomic(n)).first;
}

ScaledPoly closed_form_i(std::uint64_t p, Direction direction) {
  require_prime(p, "closed_form_i");
  if (direction == Direction::kForward) return ScaledPoly(IntPoly::constant(1), to_int(p));
  // X^{p-2} + 2X^{p-3} + ... + (p-1): the coefficient of X^k is p-1-k.
  std::vector<Integer> v(p - 1);
  for (std::uint64_t k = 0; k + 1 < p; ++k) v[k] = -to_int(p - 1 - k);
  return ScaledPoly(IntPoly(std::move(v)), to_int(p));
}

std::pair<ScaledPoly, ScaledPoly> closed_form_ii(const PrimePair& pair) {
  const IntPoly& phi = cyclotomic(pair.pr());
  // (X-1)V = 1 - Phi_pr  gives  v_i = a_0 + ... + a_i - 1.
  std::vector<Integer> v(pair.phi_pr());
  Integer running = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    running += phi.coeff(i);
    v[i] = running;
  }
  return {ScaledPoly(IntPoly::constant(1)), ScaledPoly(IntPoly(std::move(v)))};
}

ScaledPoly closed_form_iii_forward(const PrimePair& pair) {
  const std::uint64_t d = (pair.r() - 1) % pair.p();
  return ScaledPoly(all_ones(d), to_int(pair.r()));
}

IntPoly iii_reverse_numerator(const PrimePair& pair) {
  const std::uint64_t d = (pair.r() - 1) % pair.p();
  IntPoly target = IntPoly::constant(to_int(pair.r())) - cyclotomic(pair.pr()) * all_ones(d);
  auto [quot, rem] = exactalg::divrem_exact(target, cyclotomic(pair.p()));
  if (!rem.is_zero()) {
    throw TheoremViolation("iii_reverse_numerator: Phi_p does not divide r - Phi_pr*U for (" +
                           std::to_string(pair.p()) + ", " + std::to_string(pair.r()) + ")");
  }
  return quot;
}

ScaledPoly closed_form_iii_reverse(const PrimePair& pair) {
  IntPoly v = iii_reverse_numerator(pair);
  if (exactalg::max_coeff(v) >= to_int(pair.r())) {
    throw TheoremViolation("closed_form_iii_reverse: coefficient >= r for (" + std::to_string(pair.p()) + ", " +
                           std::to_string(pair.r()) + ")");
  }
  return ScaledPoly(std::move(v), to_int(pair.r()));
}

IntPoly closed_form_iv(std::uint64_t p, std::uint64_t r) {
  require_distinct_primes(p, r, "closed_form_iv");
  const std::uint64_t pinv = inverse_mod_prime(p, r);
  auto k_of = [&](std::uint64_t i, std::uint64_t l) {
    const std::uint64_t diff = (i + r - l % r) % r;
    return static_cast<long>(diff * pinv % r);
  };
  const long rr = static_cast<long>(r);
  std::vector<long> tilde(r);
  for (std::uint64_t i = 1; i <= r; ++i) {
    const long num = k_of(i, 1) - 2 * k_of(i, 2) + k_of(i, 3);
    if (num % rr != 0) throw TheoremViolation("closed_form_iv: index formula not divisible by r");
    tilde[i - 1] = num / rr;
  }
  // Ut = (X-1)U  =>  u_i = -(ut_0 + ... + ut_i), and the full sum must vanish.
  std::vector<Integer> u(r - 1);
  long running = 0;
  for (std::uint64_t i = 0; i < r; ++i) {
    running -= tilde[i];
    if (i + 1 < r) u[i] = running;
  }
  if (running != 0) throw TheoremViolation("closed_form_iv: (X-1) does not divide Ut");
  return IntPoly(std::move(u));
}

IntPoly tilde_u(std::uint64_t p, std::uint64_t r) {
  IntPoly t = IntPoly{-1, 1} * closed_form_iv(p, r);
  if (!coefficients_within(t, -1, 1) || !signs_alternate(t)) {
    throw TheoremViolation("tilde_u: coefficient set or sign alternation fails for (" + std::to_string(p) + ", " +
                           std::to_string(r) + "): " + exactalg::to_string(t));
  }
  return t;
}

bool coefficients_within(const IntPoly& a, long lo, long hi) {
  for (const auto& c : a.coeffs()) {
    if (c < lo || c > hi) return false;
  }
  return true;
}

bool signs_alternate(const IntPoly& a) {
  int last = 0;
  for (const auto& c : a.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (s == last) return false;
    last = s;
  }
  return true;
}

bool is_inverse(std::uint64_t m, std::uint64_t n, const ScaledPoly& u) {
  return exactalg::mul_mod(cyclotomic(m), u, cyclotomic(n)) == ScaledPoly(IntPoly::constant(1));
}

std::string_view case_label(CaseId id) {
  switch (id) {
    case CaseId::kIa: return "i-a";
    case CaseId::kIb: return "i-b";
    case CaseId::kIIa: return "ii-a";
    case CaseId::kIIb: return "ii-b";
    case CaseId::kIIIa: return "iii-a";
    case CaseId::kIIIb: return "iii-b";
    case CaseId::kIV: return "iv";
  }
  return "?";
}

std::vector<InverseReport> verify_theorem1(const PrimePair& pair) {
  const std::uint64_t p = pair.p(), r = pair.r(), pr = pair.pr();
  const Integer P = to_int(p), R = to_int(r);

  struct Case {
    CaseId id;
    std::uint64_t m, n;
    Integer natural_den;
  };
  const Case cases[] = {
      {CaseId::kIa, p, 1, P},     {CaseId::kIb, 1, p, P},    {CaseId::kIIa, pr, 1, 1}, {CaseId::kIIb, 1, pr, 1},
      {CaseId::kIIIa, pr, p, R}, {CaseId::kIIIb, p, pr, R}, {CaseId::kIV, p, r, 1},
  };

  std::vector<InverseReport> out;
  out.reserve(std::size(cases));
  for (const Case& c : cases) {
    InverseReport rep{pair, c.id, c.m, c.n, ScaledPoly{}, false, false, false, false, false, 0, 0};
    try {
      ScaledPoly closed;
      bool bound = false;
      switch (c.id) {
        case CaseId::kIa:
          closed = closed_form_i(p, Direction::kForward);
          bound = closed == ScaledPoly(IntPoly::constant(1), P);
          break;
        case CaseId::kIb: {
          closed = closed_form_i(p, Direction::kReverse);
          bound = closed.den() == P;
          for (std::uint64_t k = 0; k + 1 < p; ++k) bound = bound && closed.num().coeff(k) == -to_int(p - 1 - k);
          break;
        }
        case CaseId::kIIa:
          closed = closed_form_ii(pair).first;
          bound = closed == ScaledPoly(IntPoly::constant(1));
          break;
        case CaseId::kIIb:
          closed = closed_form_ii(pair).second;
          bound = closed.is_integral() && coefficients_within(closed.num(), -1, 1);
          break;
        case CaseId::kIIIa: {
          closed = closed_form_iii_forward(pair);
          bound = closed == ScaledPoly(all_ones((r - 1) % p), R);
          break;
        }
        case CaseId::kIIIb: {
          IntPoly v = iii_reverse_numerator(pair);
          bound = exactalg::max_coeff(v) < R;
          closed = ScaledPoly(std::move(v), R);
          bound = bound && R % closed.den() == 0;
          break;
        }
        case CaseId::kIV:
          closed = ScaledPoly(closed_form_iv(p, r));
          bound = coefficients_within(closed.num(), -1, 1);
          break;
      }
      const ScaledPoly oracle = inverse_mod(c.m, c.n);
      rep.matches_oracle = closed == oracle;
      rep.defining_identity = is_inverse(c.m, c.n, closed);
      rep.degree_ok = closed.degree() < static_cast<exactalg::Degree>(cyclo::euler_phi(c.n));
      rep.bound_ok = bound;
      const IntPoly scaled = numerator_over(closed, c.natural_den);
      rep.observed_min = exactalg::min_coeff(scaled);
      rep.observed_max = exactalg::max_coeff(scaled);
      rep.inverse = std::move(closed);
    } catch (const TheoremViolation&) {
      // Leave every flag false: the closed form could not even be built.
    }
    rep.bound_satisfied = rep.matches_oracle && rep.defining_identity && rep.degree_ok && rep.bound_ok;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace cyclotorus::modinv
