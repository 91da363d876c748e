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

// Splitting F_{q^{pr}}^x into the subgroups T_1, T_p, T_r, T_pr (orders
// Phi_k(q)) and putting it back together up to the pr-th power map.
//
// With U_k = (X^{pr} - 1) / Phi_k the four norms are x -> x^{U_k(q)}. The way
// back goes through two integer Bezout relations and one scaled one:
//
//   Phi_pr u1  + Phi_1 u_pr = 1        y1 = t1^{u1(q)}  tpr^{u_pr(q)}
//   Phi_r  u_p + Phi_p u_r  = 1        y2 = tp^{u_p(q)} tr^{u_r(q)}
//   Phi_p Phi_r V1 + Phi_1 Phi_pr V2 = pr     x' = y1^{V1(q)} y2^{V2(q)}
//
// and x' = x^{pr} whenever (t1, tp, tr, tpr) came from x.

#ifndef CYCLOTORUS_TORUS_HPP_
#define CYCLOTORUS_TORUS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotorus/cyclo.hpp"
#include "cyclotorus/exactalg.hpp"
#include "cyclotorus/gf.hpp"

namespace cyclotorus::torus {

using cyclo::PrimePair;
using exactalg::IntPoly;
using gf::ExtFieldElement;
using gf::FieldPtr;

// Largest admissible q^{pr} is below 2^128.
inline constexpr unsigned kFieldSizeCeilingBits = 128;

struct TorusParams {
  struct Values {
    Integer u1, u_pr, u_p, u_r, v1, v2;
    Integer cof_1, cof_p, cof_r, cof_pr;  // U_k(q)
    Integer phi_1, phi_p, phi_r, phi_pr;  // Phi_k(q)
  };

  Integer q;  // 0 means symbolic: polynomials only, no evaluations
  PrimePair pair;
  IntPoly u1, u_pr, u_p, u_r, v1, v2;
  IntPoly cof_1, cof_p, cof_r, cof_pr;  // U_k = (X^{pr} - 1) / Phi_k
  std::optional<Values> at_q;

  bool symbolic() const { return !at_q.has_value(); }
};

// q = 0 selects symbolic mode. Throws InvalidArgument for a non-prime q or
// bad pair, CeilingExceeded if q^{pr} >= 2^128, TheoremViolation if one of
// the three identities fails or V1, V2 are not integral.
TorusParams derive_params(const Integer& q, std::uint64_t p, std::uint64_t r);

struct TorusComponents {
  ExtFieldElement t1, tp, tr, tpr;
};

// x must be a nonzero element of F_{q^{pr}} for the params' q.
TorusComponents decompose(const ExtFieldElement& x, const TorusParams& params);

// Throws MembershipError if a component is outside its subgroup.
ExtFieldElement recombine(const TorusComponents& c, const TorusParams& params);

// The one-prime version on F_{q^p}: x -> (x^{Phi_p(q)}, x^{q-1}) and back
// with t1^a tp^b where Phi_p(q) a + (q-1) b = p.
struct SingleComponents {
  ExtFieldElement t1, tp;
};

struct SingleExponents {
  Integer a, b;
};

// a and b are p times the two inverses between Phi_p and Phi_1, at q.
SingleExponents single_exponents(const Integer& q, std::uint64_t p);

// The field of x must have prime degree p.
SingleComponents decompose_single(const ExtFieldElement& x);
ExtFieldElement recombine_single(const SingleComponents& c);

// Ring embedding F_{q^d} -> F_{q^n} for d | n. The class of X is sent to the
// smallest root (canonical order) of the source modulus in the target.
class SubfieldEmbedding {
 public:
  static SubfieldEmbedding make(FieldPtr source, FieldPtr target);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  const ExtFieldElement& image_of_x() const { return rho_; }

  ExtFieldElement apply(const ExtFieldElement& x) const;
  // Inverse on the image. Throws MembershipError if z is not in the image.
  ExtFieldElement project(const ExtFieldElement& z) const;

 private:
  SubfieldEmbedding(FieldPtr source, FieldPtr target, ExtFieldElement rho, std::vector<ExtFieldElement> powers)
      : source_(std::move(source)), target_(std::move(target)), rho_(std::move(rho)), powers_(std::move(powers)) {}
  FieldPtr source_, target_;
  ExtFieldElement rho_;
  std::vector<ExtFieldElement> powers_;  // rho^0, ..., rho^{d-1}
};

ExtFieldElement subfield_embed(const ExtFieldElement& x, const FieldPtr& target);

// Everything the parametrization needs for one (q, p, r): params, the four
// fields F_q, F_{q^p}, F_{q^r}, F_{q^{pr}}, and the two embeddings.
class TorusContext {
 public:
  static TorusContext make(const Integer& q, std::uint64_t p, std::uint64_t r);

  const TorusParams& params() const { return params_; }
  const FieldPtr& field_1() const { return field_1_; }
  const FieldPtr& field_p() const { return field_p_; }
  const FieldPtr& field_r() const { return field_r_; }
  const FieldPtr& field_pr() const { return field_pr_; }
  const SubfieldEmbedding& embed_p() const { return embed_p_; }
  const SubfieldEmbedding& embed_r() const { return embed_r_; }

 private:
  TorusContext(TorusParams params, FieldPtr f1, FieldPtr fp, FieldPtr fr, FieldPtr fpr, SubfieldEmbedding ep,
               SubfieldEmbedding er)
      : params_(std::move(params)),
        field_1_(std::move(f1)),
        field_p_(std::move(fp)),
        field_r_(std::move(fr)),
        field_pr_(std::move(fpr)),
        embed_p_(std::move(ep)),
        embed_r_(std::move(er)) {}
  TorusParams params_;
  FieldPtr field_1_, field_p_, field_r_, field_pr_;
  SubfieldEmbedding embed_p_, embed_r_;
};

struct ThetaOutput {
  ExtFieldElement x1;   // in F_q
  ExtFieldElement xpr;  // in F_{q^{pr}}
};

struct ThetaInput {
  ExtFieldElement x;   // in T_pr, inside F_{q^{pr}}
  ExtFieldElement xp;  // in F_{q^p}
  ExtFieldElement xr;  // in F_{q^r}
};

// theta: T_pr x F_{q^p}^x x F_{q^r}^x -> F_q^x x F_{q^{pr}}^x,
//   x1  = xp^{Phi_p(q)}
//   xpr = recombine(xr^{Phi_r(q)}, xp^{q-1}, xr^{q-1}, x)
// with xp, xr embedded in F_{q^{pr}}. Throws MembershipError if x is not in
// T_pr, DivisionByZero on zero inputs.
ThetaOutput theta(const ThetaInput& in, const TorusContext& ctx);

// The way back: decompose xpr, rebuild xp from (x1, tp) and xr from (t1, tr)
// with the one-prime maps, then raise each coordinate so that
// theta_reverse(theta(s)) = s^{(pr)^2} coordinatewise.
ThetaInput theta_reverse(const ThetaOutput& out, const TorusContext& ctx);

// Smallest k <= max_k with theta_reverse(theta(s)) = s^{(pr)^k} for every
// sample, or nullopt.
std::optional<unsigned> measure_kernel_power(const std::vector<ThetaInput>& samples, const TorusContext& ctx,
                                             unsigned max_k = 6);

// Seeded valid theta input: x = y^{U_pr(q)} for random y, random nonzero xp, xr.
ThetaInput random_theta_input(const TorusContext& ctx, std::mt19937_64& rng);

struct ThetaDimensions {
  std::vector<std::uint64_t> domain_fields;    // d | pr with mu(pr/d) = -1
  std::vector<std::uint64_t> codomain_fields;  // d | pr with mu(pr/d) = +1
  std::uint64_t domain_dim;                    // phi(pr) + sum of domain d
  std::uint64_t codomain_dim;                  // sum of codomain d
};

ThetaDimensions theta_dimensions(const PrimePair& pair);

}  // namespace cyclotorus::torus

#endif  // CYCLOTORUS_TORUS_HPP_
