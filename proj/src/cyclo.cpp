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

#include "cyclotorus/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "cyclotorus/errors.hpp"

namespace cyclotorus::cyclo {
namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + ": index must be positive");
}

void require_ordered(std::uint64_t m, std::uint64_t n, const char* what) {
  require_positive(n, what);
  if (m <= n) {
    throw InvalidArgument(std::string(what) + ": requires m > n, got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
  }
}

// sum_{i=lo}^{hi} X^{i*step}
IntPoly geometric(std::uint64_t lo, std::uint64_t hi, std::uint64_t step) {
  if (lo > hi) return {};
  std::vector<Integer> v(hi * step + 1);
  for (std::uint64_t i = lo; i <= hi; ++i) v[i * step] = 1;
  return IntPoly(std::move(v));
}

class CyclotomicCache {
 public:
  const IntPoly* find(std::uint64_t n) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(n);
    return it == table_.end() ? nullptr : it->second.get();
  }

  const IntPoly& insert(std::uint64_t n, IntPoly poly) {
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.try_emplace(n, nullptr);
    if (inserted) it->second = std::make_unique<const IntPoly>(std::move(poly));
    return *it->second;
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::uint64_t, std::unique_ptr<const IntPoly>> table_;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : pairs) {
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
  }
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization f;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.pairs.push_back({d, e});
  }
  if (n > 1) f.pairs.push_back({n, 1});
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n).pairs) {
    const std::size_t count = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  Factorization f = factorize(n);
  if (!f.is_prime_power()) return std::nullopt;
  return f.pairs.front().prime;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factorize(n).pairs) {
    phi *= p - 1;
    for (std::uint32_t i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  int mu = 1;
  for (const auto& [p, e] : factorize(n).pairs) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

CycloIndex CycloIndex::make(std::uint64_t n) {
  require_positive(n, "CycloIndex");
  return CycloIndex{n, factorize(n), euler_phi(n)};
}

const IntPoly& cyclotomic(std::uint64_t n) {
  require_positive(n, "cyclotomic");
  if (const IntPoly* hit = cache().find(n)) return *hit;

  IntPoly poly = IntPoly::x_pow_minus_one(n);
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    auto [q, rem] = exactalg::divrem_exact(poly, cyclotomic(d));
    if (!rem.is_zero()) throw std::logic_error("cyclotomic: inexact division by Phi_" + std::to_string(d));
    poly = std::move(q);
  }
  return cache().insert(n, std::move(poly));
}

PrimePair PrimePair::make(std::uint64_t p, std::uint64_t r) {
  if (!is_prime(p) || !is_prime(r)) {
    throw InvalidArgument("PrimePair: both entries must be prime, got (" + std::to_string(p) +
                          ", " + std::to_string(r) + ")");
  }
  if (p == r) throw InvalidArgument("PrimePair: primes must be distinct");
  const std::uint64_t phi = (p - 1) * (r - 1);
  // The scan over s is also the existence proof of the split.
  for (std::uint64_t s = 0; s + 2 <= r; ++s) {
    if (s * p > phi) break;
    const std::uint64_t rest = phi - s * p;
    if (rest % r == 0 && rest / r + 2 <= p) return PrimePair(p, r, s, rest / r);
  }
  throw std::logic_error("PrimePair: no split (p-1)(r-1) = sp + tr found");
}

std::vector<PrimePair> ordered_prime_pairs(std::uint64_t bound) {
  std::vector<PrimePair> out;
  const auto primes = primes_up_to(bound);
  for (auto p : primes) {
    for (auto r : primes) {
      if (p != r) out.push_back(PrimePair::make(p, r));
    }
  }
  return out;
}

IntPoly lam_leung_phi_pr(const PrimePair& pair) {
  const std::uint64_t p = pair.p(), r = pair.r(), s = pair.s(), t = pair.t();
  IntPoly head = geometric(0, s, p) * geometric(0, t, r);
  IntPoly tail = geometric(s + 1, r - 1, p) * geometric(t + 1, p - 1, r);
  return head - tail.shifted(-static_cast<std::int64_t>(p * r));
}

Integer resultant_apostol(std::uint64_t m, std::uint64_t n) {
  require_ordered(m, n, "resultant_apostol");
  if (n == 1) {
    auto base = prime_power_base(m);
    return base ? Integer(static_cast<unsigned long>(*base)) : Integer(1);
  }
  // Exponents are accumulated per prime as exact rationals; each total must
  // come out a nonnegative integer.
  std::map<std::uint64_t, Rational> exponents;
  const std::uint64_t phi_m = euler_phi(m);
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    const std::uint64_t k = m / std::gcd(m, d);
    auto base = prime_power_base(k);
    if (!base) continue;
    Rational term(static_cast<long>(mu) * static_cast<long>(phi_m), static_cast<unsigned long>(euler_phi(k)));
    term.canonicalize();
    exponents[*base] += term;
  }
  Integer out = 1;
  for (const auto& [p, e] : exponents) {
    if (e.get_den() != 1 || e < 0) {
      throw std::logic_error("resultant_apostol: non-integral exponent " + e.get_str() + " for prime " +
                             std::to_string(p));
    }
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t(), e.get_num().get_ui());
    out *= pe;
  }
  return out;
}

bool lemma1_nontrivial(std::uint64_t m, std::uint64_t n) {
  require_ordered(m, n, "lemma1_nontrivial");
  return m % n == 0 && prime_power_base(m / n).has_value();
}

bool coprime_evaluations(std::uint64_t m, std::uint64_t n) {
  require_ordered(m, n, "coprime_evaluations");
  return !lemma1_nontrivial(m, n);
}

}  // namespace cyclotorus::cyclo
