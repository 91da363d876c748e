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

// Exact integer and dense univariate polynomial arithmetic.
//
// IntPoly stores coefficients little-endian (index i is the coefficient of
// X^i) and is always trimmed: the zero polynomial is the empty sequence and
// has degree kNegInfDegree, which compares below every real degree.

#ifndef CYCLOTORUS_EXACTALG_HPP_
#define CYCLOTORUS_EXACTALG_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cyclotorus {

using Integer = mpz_class;
using Rational = mpq_class;

namespace exactalg {

using Degree = std::int64_t;
inline constexpr Degree kNegInfDegree = std::numeric_limits<Degree>::min();

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);
  // X^n - 1.
  static IntPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return coeffs_.empty() ? kNegInfDegree
                           : static_cast<Degree>(coeffs_.size()) - 1;
  }
  // Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const { return coeffs_.size(); }
  // Coefficient of X^i; zero past the end.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  // Multiplies by X^k (k >= 0) or divides by X^{-k}; the latter requires the
  // low coefficients to vanish.
  IntPoly shifted(std::int64_t k) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const Integer& c);

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return sub(a, b); }
inline IntPoly operator-(const IntPoly& a) { return neg(a); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }

// Euclidean division by a monic divisor: a = q*b + s with deg s < deg b.
// Throws InvalidArgument if b is zero or not monic.
std::pair<IntPoly, IntPoly> divrem_exact(const IntPoly& a, const IntPoly& b);

// Remainder of a modulo a monic b.
IntPoly reduce_mod(const IntPoly& a, const IntPoly& b);

// Horner evaluation.
Integer eval(const IntPoly& a, const Integer& x);

// gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPoly& a);

Integer min_coeff(const IntPoly& a);
Integer max_coeff(const IntPoly& a);

// Resultant of a and b (the Sylvester determinant, rows of a first), by
// the subresultant pseudo-remainder sequence. Zero if either input is zero.
Integer resultant(const IntPoly& a, const IntPoly& b);

// A rational polynomial num/den with den >= 1 and gcd(content(num), den) = 1.
class ScaledPoly {
 public:
  ScaledPoly() : den_(1) {}
  explicit ScaledPoly(IntPoly num, Integer den = 1);
  // Builds the normalized form of sum coeffs[i] X^i.
  static ScaledPoly from_rationals(const std::vector<Rational>& coeffs);

  const IntPoly& num() const { return num_; }
  const Integer& den() const { return den_; }
  Degree degree() const { return num_.degree(); }
  bool is_integral() const { return den_ == 1; }
  Rational coeff(std::size_t i) const;

  friend bool operator==(const ScaledPoly& a, const ScaledPoly& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

 private:
  void normalize();
  IntPoly num_;
  Integer den_;
};

// The canonical Bezout pair (U, V) with a*U + b*V = 1, deg U < deg b and
// deg V < deg a. Throws NotCoprime if gcd(a, b) has positive degree.
std::pair<ScaledPoly, ScaledPoly> xgcd_rational(const IntPoly& a,
                                                const IntPoly& b);

// (a * s) mod m for a monic modulus m, kept as num/den.
ScaledPoly mul_mod(const IntPoly& a, const ScaledPoly& s, const IntPoly& m);

std::string to_string(const IntPoly& a);
std::string to_string(const ScaledPoly& a);
std::ostream& operator<<(std::ostream& os, const IntPoly& a);
std::ostream& operator<<(std::ostream& os, const ScaledPoly& a);

}  // namespace exactalg
}  // namespace cyclotorus

#endif  // CYCLOTORUS_EXACTALG_HPP_
