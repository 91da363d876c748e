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

#include "cyclotorus/gf.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "cyclotorus/cyclo.hpp"
#include "cyclotorus/errors.hpp"

namespace cyclotorus::gf {
namespace {

// Polynomials over F_q, little-endian, trimmed.
using FpPoly = std::vector<Residue>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b, const PrimeField& f) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  trim(out);
  return out;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  FpPoly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Residue>(acc[i] % f.modulus());
  trim(out);
  return out;
}

// In-place remainder modulo a nonzero b.
void poly_rem_inplace(FpPoly& a, const FpPoly& b, const PrimeField& f) {
  const std::size_t db = b.size() - 1;
  const Residue inv_lb = f.inv(b.back());
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Residue c = f.mul(a.back(), inv_lb);
    if (c != 0) {
      for (std::size_t j = 0; j < db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    }
    a.back() = 0;
    trim(a);
  }
}

std::pair<FpPoly, FpPoly> poly_divrem(const FpPoly& a, const FpPoly& b, const PrimeField& f) {
  FpPoly r = a;
  if (r.size() < b.size()) return {{}, r};
  const std::size_t db = b.size() - 1;
  FpPoly q(r.size() - db, 0);
  const Residue inv_lb = f.inv(b.back());
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const Residue c = f.mul(r.back(), inv_lb);
    q[shift] = c;
    for (std::size_t j = 0; j < db; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    r.back() = 0;
    trim(r);
  }
  trim(q);
  return {q, r};
}

FpPoly poly_gcd(FpPoly a, FpPoly b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly_rem_inplace(a, b, f);
    std::swap(a, b);
  }
  return a;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, const PrimeField& f) {
  FpPoly out = poly_mul(a, b, f);
  poly_rem_inplace(out, m, f);
  return out;
}

FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m, const PrimeField& f) {
  poly_rem_inplace(base, m, f);
  FpPoly acc{1};
  poly_rem_inplace(acc, m, f);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = mulmod(acc, acc, m, f);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, base, m, f);
  }
  return acc;
}

const FieldPtr& same_field(const ExtFieldElement& a, const ExtFieldElement& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) {
    throw FieldMismatch("operands belong to different fields");
  }
  return a.field();
}

// Product of two reduced elements modulo the field modulus.
std::vector<Residue> field_mul(const std::vector<Residue>& a, const std::vector<Residue>& b, const ExtField& field) {
  const PrimeField& f = field.base();
  const std::size_t n = field.degree();
  const Residue q = f.modulus();
  std::vector<unsigned __int128> acc(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  std::vector<Residue> t(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) t[i] = static_cast<Residue>(acc[i] % q);
  const auto& m = field.modulus();
  for (std::size_t k = t.size(); k-- > n;) {
    const Residue c = t[k];
    if (c == 0) continue;
    const std::size_t shift = k - n;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[j] != 0) t[shift + j] = f.sub(t[shift + j], f.mul(c, m[j]));
    }
  }
  t.resize(n);
  return t;
}

// Next candidate in lexicographic order of (c_0, ..., c_{n-1}); false on wrap.
bool next_candidate(std::vector<Residue>& c, Residue q) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < q) return true;
    c[i] = 0;
  }
  return false;
}

bool has_root_in_base(const std::vector<Residue>& f, const PrimeField& base) {
  for (Residue a = 0; a < base.modulus(); ++a) {
    Residue acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = base.add(base.mul(acc, a), f[i]);
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

PrimeField PrimeField::make(const Integer& q) {
  if (q < 2 || !q.fits_ulong_p() || q >= (Integer(1) << 32) || !cyclo::is_prime(q.get_ui())) {
    throw InvalidArgument("PrimeField: modulus " + q.get_str() + " is not a prime below 2^32");
  }
  return PrimeField(q, q.get_ui());
}

Residue PrimeField::reduce(const Integer& v) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), word_);
  return r.get_ui();
}

Residue PrimeField::inv(Residue a) const {
  a %= word_;
  if (a == 0) throw DivisionByZero("PrimeField::inv: zero has no inverse");
  // Extended Euclid on machine words.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(word_), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(word_);
  return static_cast<Residue>(t);
}

Integer ExtField::size() const {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base_.q().get_mpz_t(), degree_);
  return out;
}

Integer ExtField::group_order() const { return size() - 1; }

bool is_irreducible(const std::vector<Residue>& f, const PrimeField& base) {
  if (f.size() < 2 || f.back() != 1) throw InvalidArgument("is_irreducible: expected a monic polynomial of degree >= 1");
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  const FpPoly x{0, 1};
  // frob[i] = X^{q^i} mod f
  std::vector<FpPoly> frob{x};
  for (std::size_t i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), base.q(), f, base));
  FpPoly xr = x;
  poly_rem_inplace(xr, f, base);
  if (frob[n] != xr) return false;
  for (const auto& [ell, e] : cyclo::factorize(n).pairs) {
    FpPoly g = poly_gcd(f, poly_sub(frob[n / ell], x, base), base);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldPtr make_ext_field(const Integer& q, unsigned n) {
  if (n == 0) throw InvalidArgument("make_ext_field: degree must be positive");
  PrimeField base = PrimeField::make(q);
  // Candidates c_0 .. c_{n-1} in lexicographic order. For n >= 2 every
  // candidate with c_0 = 0 is divisible by X, so the search starts at c_0 = 1.
  std::vector<Residue> low(n, 0);
  if (n >= 2) low[0] = 1;
  do {
    std::vector<Residue> f = low;
    f.push_back(1);
    if (n >= 2 && has_root_in_base(f, base)) continue;
    if (is_irreducible(f, base)) return FieldPtr(new ExtField(std::move(base), n, std::move(f)));
  } while (next_candidate(low, base.modulus()));
  throw std::logic_error("make_ext_field: no irreducible polynomial found");
}

ExtFieldElement::ExtFieldElement(FieldPtr field, std::vector<Residue> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw InvalidArgument("ExtFieldElement: null field");
  const std::size_t n = field_->degree();
  if (coeffs_.size() > n) {
    throw InvalidArgument("ExtFieldElement: " + std::to_string(coeffs_.size()) + " coefficients for degree " +
                          std::to_string(n));
  }
  coeffs_.resize(n, 0);
  for (auto& c : coeffs_) c %= field_->base().modulus();
}

ExtFieldElement ExtFieldElement::zero(FieldPtr field) { return ExtFieldElement(std::move(field), {}); }

ExtFieldElement ExtFieldElement::one(FieldPtr field) { return ExtFieldElement(std::move(field), {1}); }

ExtFieldElement ExtFieldElement::constant(FieldPtr field, Residue c) {
  return ExtFieldElement(std::move(field), {c});
}

ExtFieldElement ExtFieldElement::generator_x(FieldPtr field) {
  if (field->degree() == 1) {
    // X = -c_0 modulo X + c_0.
    const Residue c = field->base().neg(field->modulus()[0]);
    return ExtFieldElement(std::move(field), {c});
  }
  return ExtFieldElement(std::move(field), {0, 1});
}

bool ExtFieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool ExtFieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Residue c) { return c == 0; });
}

bool operator==(const ExtFieldElement& a, const ExtFieldElement& b) {
  same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

ExtFieldElement add(const ExtFieldElement& a, const ExtFieldElement& b) {
  const FieldPtr& field = same_field(a, b);
  const PrimeField& f = field->base();
  std::vector<Residue> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], b.coeffs()[i]);
  return ExtFieldElement(field, std::move(out));
}

ExtFieldElement sub(const ExtFieldElement& a, const ExtFieldElement& b) {
  const FieldPtr& field = same_field(a, b);
  const PrimeField& f = field->base();
  std::vector<Residue> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(out[i], b.coeffs()[i]);
  return ExtFieldElement(field, std::move(out));
}

ExtFieldElement mul(const ExtFieldElement& a, const ExtFieldElement& b) {
  const FieldPtr& field = same_field(a, b);
  return ExtFieldElement(field, field_mul(a.coeffs(), b.coeffs(), *field));
}

ExtFieldElement inv(const ExtFieldElement& a) {
  if (a.is_zero()) throw DivisionByZero("inv: zero has no inverse");
  const ExtField& field = *a.field();
  const PrimeField& f = field.base();
  // Extended Euclid: track s with s * a = r (mod modulus).
  FpPoly r0 = field.modulus(), r1 = a.coeffs();
  trim(r1);
  FpPoly s0, s1{1};
  while (r1.size() > 1) {
    auto [q, rem] = poly_divrem(r0, r1, f);
    FpPoly s2 = poly_sub(s0, poly_mul(q, s1, f), f);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because the modulus is irreducible.
  const Residue c = f.inv(r1.at(0));
  for (auto& x : s1) x = f.mul(x, c);
  poly_rem_inplace(s1, field.modulus(), f);
  return ExtFieldElement(a.field(), std::move(s1));
}

ExtFieldElement pow(const ExtFieldElement& x, const Integer& e) {
  if (e == 0) return ExtFieldElement::one(x.field());
  if (x.is_zero()) {
    if (e < 0) throw DivisionByZero("pow: negative power of zero");
    return x;
  }
  const Integer mag = abs(e);
  const ExtField& field = *x.field();
  std::vector<Residue> acc(field.degree(), 0);
  acc[0] = 1;
  const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = field_mul(acc, acc, field);
    if (mpz_tstbit(mag.get_mpz_t(), i)) acc = field_mul(acc, x.coeffs(), field);
  }
  ExtFieldElement out(x.field(), std::move(acc));
  return e < 0 ? inv(out) : out;
}

bool canonical_less(const ExtFieldElement& a, const ExtFieldElement& b) {
  same_field(a, b);
  return a.coeffs() < b.coeffs();
}

ExtFieldElement random_element(const FieldPtr& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> dist(0, field->base().modulus() - 1);
  std::vector<Residue> c(field->degree());
  for (auto& x : c) x = dist(rng);
  return ExtFieldElement(field, std::move(c));
}

ExtFieldElement random_nonzero(const FieldPtr& field, std::mt19937_64& rng) {
  for (;;) {
    ExtFieldElement x = random_element(field, rng);
    if (!x.is_zero()) return x;
  }
}

std::vector<Integer> prime_divisors(const Integer& n_in) {
  if (n_in < 1) throw InvalidArgument("prime_divisors: expected a positive integer");
  Integer n = n_in;
  std::vector<Integer> out;
  for (unsigned long d = 2; Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool has_exact_order(const ExtFieldElement& x, const Integer& order, const std::vector<Integer>& order_primes) {
  if (x.is_zero() || !pow(x, order).is_one()) return false;
  for (const auto& ell : order_primes) {
    if (pow(x, order / ell).is_one()) return false;
  }
  return true;
}

ExtFieldElement find_generator(const FieldPtr& field) {
  const Integer order = field->group_order();
  const auto primes = prime_divisors(order);
  std::vector<Residue> c(field->degree(), 0);
  while (next_candidate(c, field->base().modulus())) {
    ExtFieldElement x(field, c);
    if (has_exact_order(x, order, primes)) return x;
  }
  throw std::logic_error("find_generator: exhausted the field");
}

Integer norm_exponent(const Integer& q, std::uint64_t pr, std::uint64_t k) {
  const cyclo::Factorization f = cyclo::factorize(pr);
  if (f.pairs.size() != 2 || f.pairs[0].exponent != 1 || f.pairs[1].exponent != 1) {
    throw InvalidArgument("norm_exponent: " + std::to_string(pr) + " is not a product of two distinct primes");
  }
  const std::uint64_t p = f.pairs[0].prime, r = f.pairs[1].prime;
  if (k != 1 && k != p && k != r && k != pr) {
    throw InvalidArgument("norm_exponent: k=" + std::to_string(k) + " is not one of 1, p, r, pr");
  }
  auto [cofactor, rem] = exactalg::divrem_exact(exactalg::IntPoly::x_pow_minus_one(pr), cyclo::cyclotomic(k));
  return exactalg::eval(cofactor, q);
}

bool torus_membership(const ExtFieldElement& x, std::uint64_t k) {
  if (x.is_zero()) throw MembershipError("torus_membership: zero is not in the multiplicative group");
  return pow(x, exactalg::eval(cyclo::cyclotomic(k), x.field()->base().q())).is_one();
}

}  // namespace cyclotorus::gf
