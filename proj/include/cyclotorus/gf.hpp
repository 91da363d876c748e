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

// Prime fields F_q and extensions F_{q^n} in a polynomial basis.
//
// The modulus of F_{q^n} is the first monic irreducible polynomial of degree
// n when coefficient vectors (c_0, ..., c_{n-1}) are compared
// lexicographically from the constant term up. So the field is a pure
// function of (q, n) and test vectors are reproducible.
//
// Residues are machine words; q must be below 2^32 so products fit in 64
// bits. Exponents are arbitrary precision and may be negative.

#ifndef CYCLOTORUS_GF_HPP_
#define CYCLOTORUS_GF_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "cyclotorus/exactalg.hpp"

namespace cyclotorus::gf {

using Residue = std::uint64_t;

class PrimeField {
 public:
  // Throws InvalidArgument if q is not a prime below 2^32.
  static PrimeField make(const Integer& q);

  const Integer& q() const { return q_; }
  Residue modulus() const { return word_; }

  Residue reduce(const Integer& v) const;
  Residue add(Residue a, Residue b) const { return a + b >= word_ ? a + b - word_ : a + b; }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + word_ - b; }
  Residue mul(Residue a, Residue b) const { return a * b % word_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : word_ - a; }
  // Throws DivisionByZero on 0.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.word_ == b.word_; }

 private:
  PrimeField(Integer q, Residue word) : q_(std::move(q)), word_(word) {}
  Integer q_;
  Residue word_;
};

class ExtField {
 public:
  const PrimeField& base() const { return base_; }
  unsigned degree() const { return degree_; }
  // Monic, little-endian, degree() + 1 entries.
  const std::vector<Residue>& modulus() const { return modulus_; }
  // q^n
  Integer size() const;
  // q^n - 1
  Integer group_order() const;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  friend std::shared_ptr<const ExtField> make_ext_field(const Integer& q, unsigned n);
  ExtField(PrimeField base, unsigned degree, std::vector<Residue> modulus)
      : base_(std::move(base)), degree_(degree), modulus_(std::move(modulus)) {}
  PrimeField base_;
  unsigned degree_;
  std::vector<Residue> modulus_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

// Throws InvalidArgument if q fails the primality check or n == 0.
FieldPtr make_ext_field(const Integer& q, unsigned n);

// Rabin's test: X^{q^n} = X mod f, and gcd(X^{q^{n/l}} - X, f) = 1 for every
// prime l | n. `f` must be monic with residues below q.
bool is_irreducible(const std::vector<Residue>& f, const PrimeField& base);

class ExtFieldElement {
 public:
  // Residues are reduced mod q; a shorter vector is zero-padded. Throws
  // InvalidArgument if more than n coefficients are given.
  ExtFieldElement(FieldPtr field, std::vector<Residue> coeffs);

  static ExtFieldElement zero(FieldPtr field);
  static ExtFieldElement one(FieldPtr field);
  static ExtFieldElement constant(FieldPtr field, Residue c);
  // The class of X.
  static ExtFieldElement generator_x(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  friend bool operator==(const ExtFieldElement& a, const ExtFieldElement& b);

 private:
  FieldPtr field_;
  std::vector<Residue> coeffs_;
};

// Throws FieldMismatch when the operands live in different fields.
ExtFieldElement add(const ExtFieldElement& a, const ExtFieldElement& b);
ExtFieldElement sub(const ExtFieldElement& a, const ExtFieldElement& b);
ExtFieldElement mul(const ExtFieldElement& a, const ExtFieldElement& b);
// Throws DivisionByZero on zero.
ExtFieldElement inv(const ExtFieldElement& a);
// Square-and-multiply on |e|, then inversion if e < 0. pow(x, 0) = 1.
ExtFieldElement pow(const ExtFieldElement& x, const Integer& e);

inline ExtFieldElement operator+(const ExtFieldElement& a, const ExtFieldElement& b) { return add(a, b); }
inline ExtFieldElement operator-(const ExtFieldElement& a, const ExtFieldElement& b) { return sub(a, b); }
inline ExtFieldElement operator*(const ExtFieldElement& a, const ExtFieldElement& b) { return mul(a, b); }

// Lexicographic order on coefficient vectors, constant term first.
bool canonical_less(const ExtFieldElement& a, const ExtFieldElement& b);

ExtFieldElement random_element(const FieldPtr& field, std::mt19937_64& rng);
ExtFieldElement random_nonzero(const FieldPtr& field, std::mt19937_64& rng);

// Distinct prime divisors by trial division.
std::vector<Integer> prime_divisors(const Integer& n);

// True iff x has multiplicative order exactly `order`, given the distinct
// prime divisors of `order`.
bool has_exact_order(const ExtFieldElement& x, const Integer& order, const std::vector<Integer>& order_primes);

// First generator of the multiplicative group in the canonical order.
ExtFieldElement find_generator(const FieldPtr& field);

// U_k(q) with U_k = (X^{pr} - 1) / Phi_k. pr must be a product of two distinct
// primes p, r and k one of 1, p, r, pr; otherwise InvalidArgument.
Integer norm_exponent(const Integer& q, std::uint64_t pr, std::uint64_t k);

// pow(x, Phi_k(q)) == 1 where q is the characteristic of x's field.
// Throws MembershipError on x = 0.
bool torus_membership(const ExtFieldElement& x, std::uint64_t k);

}  // namespace cyclotorus::gf

#endif  // CYCLOTORUS_GF_HPP_
