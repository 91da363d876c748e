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

#include "cyclotorus/exactalg.hpp"

#include <algorithm>
#include <sstream>

#include "cyclotorus/errors.hpp"

namespace cyclotorus::exactalg {
namespace {

Integer pow_int(const Integer& base, std::uint64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

IntPoly divexact_scalar(const IntPoly& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = exact_div(x, c);
  return IntPoly(std::move(out));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  const Degree db = b.degree();
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  Degree dr = a.degree();
  std::int64_t unused = dr - db + 1;
  const Integer& lb = b.leading();
  while (dr >= db && dr != kNegInfDegree) {
    const Integer lr = r[dr];
    for (auto& x : r) x *= lb;
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b.coeffs()[j];
    --unused;
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = r.empty() ? kNegInfDegree : static_cast<Degree>(r.size()) - 1;
  }
  IntPoly out(std::move(r));
  if (unused > 0) out = scale(out, pow_int(lb, static_cast<std::uint64_t>(unused)));
  return out;
}

// Dense rational polynomials, only used inside the Bezout computation.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Degree rdeg(const RatPoly& a) {
  return a.empty() ? kNegInfDegree : static_cast<Degree>(a.size()) - 1;
}

RatPoly to_rat(const IntPoly& a) {
  RatPoly out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.emplace_back(c);
  return out;
}

RatPoly rsub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RatPoly rmul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

void rscale(RatPoly& a, const Rational& c) {
  for (auto& x : a) x *= c;
}

std::pair<RatPoly, RatPoly> rdivrem(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  const Degree db = rdeg(b);
  if (rdeg(r) < db) return {{}, r};
  RatPoly q(static_cast<std::size_t>(rdeg(r) - db + 1));
  const Rational inv_lb = 1 / b.back();
  while (rdeg(r) >= db) {
    const std::size_t shift = static_cast<std::size_t>(rdeg(r) - db);
    const Rational c = r.back() * inv_lb;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.back() = 0;
    trim(r);
  }
  trim(q);
  return {q, r};
}

// Cofactor c of `big` in big*c + small*d = 1, with deg c < deg small.
// Runs the monic remainder sequence and only tracks the low-degree cofactor.
RatPoly bezout_cofactor(const RatPoly& big, const RatPoly& small) {
  RatPoly r0 = big, r1 = small;
  RatPoly c0{Rational(1)}, c1;
  while (!r1.empty()) {
    auto [q, rem] = rdivrem(r0, r1);
    RatPoly c2 = rsub(c0, rmul(q, c1));
    if (!rem.empty()) {
      const Rational inv_lc = 1 / rem.back();
      rscale(rem, inv_lc);
      rscale(c2, inv_lc);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    c0 = std::move(c1);
    c1 = std::move(c2);
  }
  if (rdeg(r0) > 0) {
    throw NotCoprime("xgcd_rational: inputs share a factor of degree " +
                     std::to_string(rdeg(r0)));
  }
  rscale(c0, 1 / r0[0]);
  return c0;
}

void append_term(std::ostringstream& os, const Integer& c, std::size_t i,
                 bool first) {
  Integer mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (i == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << "*";
  os << "X";
  if (i > 1) os << "^" << i;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

IntPoly IntPoly::shifted(std::int64_t k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<Integer> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(v));
  }
  const std::size_t drop = static_cast<std::size_t>(-k);
  for (std::size_t i = 0; i < std::min(drop, coeffs_.size()); ++i) {
    if (coeffs_[i] != 0) throw InvalidArgument("IntPoly::shifted: nonzero coefficient below X^" + std::to_string(drop));
  }
  if (drop >= coeffs_.size()) return {};
  return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end()));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly neg(const IntPoly& a) { return scale(a, -1); }

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Integer& ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly scale(const IntPoly& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> divrem_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("divrem_exact: division by the zero polynomial");
  if (!b.is_monic()) throw InvalidArgument("divrem_exact: divisor must be monic");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.size() - 1;
  std::vector<Integer> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    const Integer c = r[k];
    if (c == 0) continue;
    const std::size_t shift = k - db;
    q[shift] = c;
    for (std::size_t j = 0; j < db; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    r[k] = 0;
  }
  r.resize(db);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly reduce_mod(const IntPoly& a, const IntPoly& b) { return divrem_exact(a, b).second; }

Integer eval(const IntPoly& a, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc *= x;
    acc += a.coeffs()[i];
  }
  return acc;
}

Integer content(const IntPoly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer min_coeff(const IntPoly& a) {
  if (a.is_zero()) return 0;
  return *std::min_element(a.coeffs().begin(), a.coeffs().end());
}

Integer max_coeff(const IntPoly& a) {
  if (a.is_zero()) return 0;
  return *std::max_element(a.coeffs().begin(), a.coeffs().end());
}

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  if (a_in.degree() == 0) return pow_int(a_in.leading(), static_cast<std::uint64_t>(b_in.degree()));
  if (b_in.degree() == 0) return pow_int(b_in.leading(), static_cast<std::uint64_t>(a_in.degree()));

  // Subresultant PRS (Collins / Brown), after Cohen, Algorithm 3.3.7.
  const Integer ca = content(a_in);
  const Integer cb = content(b_in);
  IntPoly a = divexact_scalar(a_in, ca);
  IntPoly b = divexact_scalar(b_in, cb);
  Integer g = 1, h = 1;
  int sign = 1;
  const Integer t = pow_int(ca, static_cast<std::uint64_t>(b.degree())) *
                    pow_int(cb, static_cast<std::uint64_t>(a.degree()));
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
  }
  for (;;) {
    const auto delta = static_cast<std::uint64_t>(a.degree() - b.degree());
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divexact_scalar(r, g * pow_int(h, delta));
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(pow_int(g, delta), pow_int(h, delta - 1));
    }
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<std::uint64_t>(a.degree());
  h = exact_div(pow_int(b.leading(), da), pow_int(h, da - 1));
  return sign * t * h;
}

ScaledPoly::ScaledPoly(IntPoly num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DivisionByZero("ScaledPoly: zero denominator");
  normalize();
}

ScaledPoly ScaledPoly::from_rationals(const std::vector<Rational>& coeffs) {
  Integer l = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(exact_div(l, c.get_den()) * c.get_num());
  return ScaledPoly(IntPoly(std::move(num)), l);
}

Rational ScaledPoly::coeff(std::size_t i) const {
  Rational r(num_.coeff(i), den_);
  r.canonicalize();
  return r;
}

void ScaledPoly::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = neg(num_);
  }
  Integer g = content(num_);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ = divexact_scalar(num_, g);
    den_ = exact_div(den_, g);
  }
}

std::pair<ScaledPoly, ScaledPoly> xgcd_rational(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("xgcd_rational: zero input");
  const bool a_is_big = a.degree() >= b.degree();
  const IntPoly& big = a_is_big ? a : b;
  const IntPoly& small = a_is_big ? b : a;
  const RatPoly rbig = to_rat(big);
  const RatPoly rsmall = to_rat(small);

  RatPoly c_big = bezout_cofactor(rbig, rsmall);
  // big*c_big + small*c_small = 1, so c_small = (1 - big*c_big) / small.
  RatPoly numer = rsub(RatPoly{Rational(1)}, rmul(rbig, c_big));
  auto [c_small, rem] = rdivrem(numer, rsmall);
  if (!rem.empty()) throw std::logic_error("xgcd_rational: cofactor division left a remainder");

  ScaledPoly sb = ScaledPoly::from_rationals(c_big);
  ScaledPoly ss = ScaledPoly::from_rationals(c_small);
  if (a_is_big) return {std::move(sb), std::move(ss)};
  return {std::move(ss), std::move(sb)};
}

ScaledPoly mul_mod(const IntPoly& a, const ScaledPoly& s, const IntPoly& m) {
  return ScaledPoly(reduce_mod(mul(a, s.num()), m), s.den());
}

std::string to_string(const IntPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.coeffs()[i] == 0) continue;
    append_term(os, a.coeffs()[i], i, first);
    first = false;
  }
  return os.str();
}

std::string to_string(const ScaledPoly& a) {
  if (a.is_integral()) return to_string(a.num());
  return "(" + to_string(a.num()) + ")/" + a.den().get_str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const ScaledPoly& a) { return os << to_string(a); }

}  // namespace cyclotorus::exactalg
