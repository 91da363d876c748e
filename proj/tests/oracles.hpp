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

// Slow, independent reference implementations used only by the tests.

#ifndef CYCLOTORUS_TESTS_ORACLES_HPP_
#define CYCLOTORUS_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cyclotorus/cyclo.hpp"
#include "cyclotorus/exactalg.hpp"
#include "cyclotorus/gf.hpp"

namespace cyclotorus::oracle {

using exactalg::IntPoly;

// Determinant of the Sylvester matrix (rows of a first) by fraction-free
// Bareiss elimination. Res of two constants is 1; Res with zero is 0.
inline Integer sylvester_determinant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  // Row i holds the coefficients of X^{size-1-col}, highest power first.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a.coeff(m - k);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b.coeff(n - k);
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < size && s[piv][k] == 0) ++piv;
      if (piv == size) return 0;
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

// Phi_n as prod_{d | n} (X^d - 1)^{mu(n/d)}: multiply out the positive
// factors, then divide by the negative ones.
inline IntPoly moebius_cyclotomic(std::uint64_t n) {
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (std::uint64_t d : cyclo::divisors(n)) {
    const int mu = cyclo::moebius(n / d);
    if (mu > 0) num = num * IntPoly::x_pow_minus_one(d);
    if (mu < 0) den = den * IntPoly::x_pow_minus_one(d);
  }
  return exactalg::divrem_exact(num, den).first;
}

inline IntPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return IntPoly(std::move(c));
}

// Schoolbook product in F_q[X]/(f), independent of the gf module's kernels.
inline std::vector<gf::Residue> naive_mulmod(const std::vector<gf::Residue>& a, const std::vector<gf::Residue>& b,
                                             const std::vector<gf::Residue>& f, std::uint64_t q) {
  const std::size_t n = f.size() - 1;
  std::vector<Integer> prod(2 * n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += Integer(static_cast<unsigned long>(a[i])) * b[j];
  }
  for (std::size_t k = prod.size(); k-- > n;) {
    const Integer c = prod[k];
    for (std::size_t j = 0; j <= n; ++j) prod[k - n + j] -= c * Integer(static_cast<unsigned long>(f[j]));
  }
  std::vector<gf::Residue> out(n);
  const Integer Q(static_cast<unsigned long>(q));
  for (std::size_t i = 0; i < n; ++i) {
    Integer r = prod[i] % Q;
    if (r < 0) r += Q;
    out[i] = r.get_ui();
  }
  return out;
}

}  // namespace cyclotorus::oracle

#endif  // CYCLOTORUS_TESTS_ORACLES_HPP_
