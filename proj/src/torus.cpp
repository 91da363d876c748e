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

#include "cyclotorus/torus.hpp"

#include <gmp.h>

#include <string>
#include <utility>

#include "cyclotorus/errors.hpp"
#include "cyclotorus/modinv.hpp"

namespace cyclotorus::torus {
namespace {

using cyclo::cyclotomic;
using exactalg::ScaledPoly;
using gf::Residue;

Integer to_int(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

std::string triple(const Integer& q, std::uint64_t p, std::uint64_t r) {
  return "(q=" + q.get_str() + ", p=" + std::to_string(p) + ", r=" + std::to_string(r) + ")";
}

// p * s as an integer polynomial; s's denominator must divide p.
IntPoly times(const ScaledPoly& s, const Integer& p, const char* what) {
  if (p % s.den() != 0) throw TheoremViolation(std::string(what) + ": scaled Bezout pair is not integral");
  return exactalg::scale(s.num(), p / s.den());
}

Integer field_char(const ExtFieldElement& x) { return x.field()->base().q(); }

void require_field(const ExtFieldElement& x, const FieldPtr& f, const char* what) {
  if (!(*x.field() == *f)) throw FieldMismatch(std::string(what) + ": element lives in the wrong field");
}

void require_nonzero(const ExtFieldElement& x, const char* what) {
  if (x.is_zero()) throw DivisionByZero(std::string(what) + ": zero element");
}

void require_member(const ExtFieldElement& x, std::uint64_t k, const char* what) {
  if (!gf::torus_membership(x, k)) {
    throw MembershipError(std::string(what) + ": component is not in T_" + std::to_string(k));
  }
}

// Polynomials over an extension field, little-endian, for root finding.
using EPoly = std::vector<ExtFieldElement>;

void trim(EPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

long deg(const EPoly& a) { return static_cast<long>(a.size()) - 1; }

// a mod m for monic m.
void rem_inplace(EPoly& a, const EPoly& m) {
  trim(a);
  const long dm = deg(m);
  for (long i = deg(a); i >= dm; --i) {
    const ExtFieldElement c = a[i];
    if (c.is_zero()) continue;
    for (long j = 0; j <= dm; ++j) a[i - dm + j] = a[i - dm + j] - c * m[j];
  }
  trim(a);
}

EPoly mulmod(const EPoly& a, const EPoly& b, const EPoly& m, const FieldPtr& f) {
  if (a.empty() || b.empty()) return {};
  EPoly out(a.size() + b.size() - 1, ExtFieldElement::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  rem_inplace(out, m);
  return out;
}

EPoly powmod(EPoly base, Integer e, const EPoly& m, const FieldPtr& f) {
  EPoly acc{ExtFieldElement::one(f)};
  rem_inplace(base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mulmod(acc, base, m, f);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m, f);
  }
  return acc;
}

void make_monic(EPoly& a) {
  const ExtFieldElement li = gf::inv(a.back());
  for (auto& c : a) c = c * li;
}

EPoly gcd(EPoly a, EPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    make_monic(b);
    rem_inplace(a, b);
    std::swap(a, b);
  }
  if (!a.empty()) make_monic(a);
  return a;
}

// Exact quotient a / b for monic b.
EPoly quotient(EPoly a, const EPoly& b, const FieldPtr& f) {
  const long db = deg(b);
  EPoly q(static_cast<std::size_t>(deg(a) - db + 1), ExtFieldElement::zero(f));
  for (long i = deg(a); i >= db; --i) {
    const ExtFieldElement c = a[i];
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) a[i - db + j] = a[i - db + j] - c * b[j];
  }
  return q;
}

// Deterministic walk through the nonzero elements of f: digits of k in base q.
ExtFieldElement nth_element(const FieldPtr& f, std::uint64_t k) {
  const Residue q = f->base().modulus();
  std::vector<Residue> c;
  while (k > 0 && c.size() < f->degree()) {
    c.push_back(k % q);
    k /= q;
  }
  return ExtFieldElement(f, std::move(c));
}

// One root of the monic f, which must split into distinct linear factors
// over the field f lives in. Equal-degree splitting with the random shifts
// replaced by a fixed enumeration.
ExtFieldElement split_root(EPoly f, const FieldPtr& field) {
  const Integer Q = field->size();
  const bool even = field->base().modulus() == 2;
  for (std::uint64_t k = 1; deg(f) > 1; ++k) {
    const ExtFieldElement delta = nth_element(field, k);
    EPoly h;
    if (even) {
      // Absolute trace of delta*X modulo f.
      EPoly s{ExtFieldElement::zero(field), delta};
      h = s;
      for (unsigned i = 1; i < field->degree(); ++i) {
        s = mulmod(s, s, f, field);
        h.resize(std::max(h.size(), s.size()), ExtFieldElement::zero(field));
        for (std::size_t j = 0; j < s.size(); ++j) h[j] = h[j] + s[j];
      }
    } else {
      h = powmod(EPoly{delta, ExtFieldElement::one(field)}, (Q - 1) / 2, f, field);
      if (h.empty()) h.push_back(ExtFieldElement::zero(field));
      h[0] = h[0] - ExtFieldElement::one(field);
    }
    trim(h);
    EPoly g = gcd(f, h);
    if (deg(g) <= 0 || deg(g) >= deg(f)) continue;
    EPoly other = quotient(f, g, field);
    f = deg(g) <= deg(other) ? std::move(g) : std::move(other);
    make_monic(f);
  }
  return gf::sub(ExtFieldElement::zero(field), f[0]);
}

}  // namespace

TorusParams derive_params(const Integer& q, std::uint64_t p, std::uint64_t r) {
  const PrimePair pair = PrimePair::make(p, r);
  if (q < 0 || q == 1 || (q != 0 && mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)) {
    throw InvalidArgument("derive_params: q must be prime or 0 (symbolic), got " + q.get_str());
  }
  if (q != 0) {
    Integer size;
    mpz_pow_ui(size.get_mpz_t(), q.get_mpz_t(), pair.pr());
    if (mpz_sizeinbase(size.get_mpz_t(), 2) > kFieldSizeCeilingBits) {
      throw CeilingExceeded("derive_params: q^{pr} >= 2^" + std::to_string(kFieldSizeCeilingBits) + " for " +
                            triple(q, p, r));
    }
  }

  const IntPoly& phi_1 = cyclotomic(1);
  const IntPoly& phi_p = cyclotomic(p);
  const IntPoly& phi_r = cyclotomic(r);
  const IntPoly& phi_pr = cyclotomic(pair.pr());
  const Integer PR = to_int(pair.pr());

  TorusParams out{q, pair, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, std::nullopt};
  auto [u1, u_pr] = modinv::closed_form_ii(pair);
  if (!u1.is_integral() || !u_pr.is_integral()) throw TheoremViolation("derive_params: u1 or u_pr not integral");
  out.u1 = u1.num();
  out.u_pr = u_pr.num();
  out.u_p = modinv::closed_form_iv(r, p);
  out.u_r = modinv::closed_form_iv(p, r);

  auto [w1, w2] = exactalg::xgcd_rational(phi_p * phi_r, phi_1 * phi_pr);
  out.v1 = times(w1, PR, "derive_params");
  out.v2 = times(w2, PR, "derive_params");

  const IntPoly one = IntPoly::constant(1);
  if (phi_pr * out.u1 + phi_1 * out.u_pr != one) throw TheoremViolation("derive_params: first Bezout identity fails");
  if (phi_r * out.u_p + phi_p * out.u_r != one) throw TheoremViolation("derive_params: second Bezout identity fails");
  if (phi_p * phi_r * out.v1 + phi_1 * phi_pr * out.v2 != IntPoly::constant(PR)) {
    throw TheoremViolation("derive_params: scaled Bezout identity fails");
  }

  const IntPoly top = IntPoly::x_pow_minus_one(pair.pr());
  out.cof_1 = exactalg::divrem_exact(top, phi_1).first;
  out.cof_p = exactalg::divrem_exact(top, phi_p).first;
  out.cof_r = exactalg::divrem_exact(top, phi_r).first;
  out.cof_pr = exactalg::divrem_exact(top, phi_pr).first;

  if (q != 0) {
    using exactalg::eval;
    out.at_q = TorusParams::Values{
        eval(out.u1, q),     eval(out.u_pr, q),  eval(out.u_p, q),   eval(out.u_r, q),
        eval(out.v1, q),     eval(out.v2, q),    eval(out.cof_1, q), eval(out.cof_p, q),
        eval(out.cof_r, q),  eval(out.cof_pr, q), eval(phi_1, q),    eval(phi_p, q),
        eval(phi_r, q),      eval(phi_pr, q),
    };
  }
  return out;
}

namespace {

const TorusParams::Values& values(const TorusParams& params, const char* what) {
  if (params.symbolic()) throw InvalidArgument(std::string(what) + ": params are symbolic (q = 0)");
  return *params.at_q;
}

void require_big_field(const ExtFieldElement& x, const TorusParams& params, const char* what) {
  if (field_char(x) != params.q || x.field()->degree() != params.pair.pr()) {
    throw FieldMismatch(std::string(what) + ": element is not in F_{q^{pr}} for " +
                        triple(params.q, params.pair.p(), params.pair.r()));
  }
}

}  // namespace

TorusComponents decompose(const ExtFieldElement& x, const TorusParams& params) {
  const auto& v = values(params, "decompose");
  require_big_field(x, params, "decompose");
  require_nonzero(x, "decompose");
  return {gf::pow(x, v.cof_1), gf::pow(x, v.cof_p), gf::pow(x, v.cof_r), gf::pow(x, v.cof_pr)};
}

ExtFieldElement recombine(const TorusComponents& c, const TorusParams& params) {
  const auto& v = values(params, "recombine");
  const std::uint64_t p = params.pair.p(), r = params.pair.r();
  for (const ExtFieldElement* t : {&c.t1, &c.tp, &c.tr, &c.tpr}) require_big_field(*t, params, "recombine");
  require_member(c.t1, 1, "recombine");
  require_member(c.tp, p, "recombine");
  require_member(c.tr, r, "recombine");
  require_member(c.tpr, p * r, "recombine");
  const ExtFieldElement y1 = gf::pow(c.t1, v.u1) * gf::pow(c.tpr, v.u_pr);
  const ExtFieldElement y2 = gf::pow(c.tp, v.u_p) * gf::pow(c.tr, v.u_r);
  return gf::pow(y1, v.v1) * gf::pow(y2, v.v2);
}

SingleExponents single_exponents(const Integer& q, std::uint64_t p) {
  const Integer P = to_int(p);
  const Integer a = exactalg::eval(times(modinv::closed_form_i(p, modinv::Direction::kForward), P, "single"), q);
  const Integer b = exactalg::eval(times(modinv::closed_form_i(p, modinv::Direction::kReverse), P, "single"), q);
  if (exactalg::eval(cyclotomic(p), q) * a + (q - 1) * b != P) {
    throw TheoremViolation("single_exponents: Phi_p(q) a + (q-1) b != p at q = " + q.get_str());
  }
  return {a, b};
}

namespace {

std::uint64_t prime_degree(const ExtFieldElement& x, const char* what) {
  const std::uint64_t p = x.field()->degree();
  if (!cyclo::is_prime(p)) throw InvalidArgument(std::string(what) + ": field degree must be prime");
  return p;
}

}  // namespace

SingleComponents decompose_single(const ExtFieldElement& x) {
  const std::uint64_t p = prime_degree(x, "decompose_single");
  require_nonzero(x, "decompose_single");
  const Integer q = field_char(x);
  return {gf::pow(x, exactalg::eval(cyclotomic(p), q)), gf::pow(x, q - 1)};
}

ExtFieldElement recombine_single(const SingleComponents& c) {
  const std::uint64_t p = prime_degree(c.t1, "recombine_single");
  require_field(c.tp, c.t1.field(), "recombine_single");
  require_member(c.t1, 1, "recombine_single");
  require_member(c.tp, p, "recombine_single");
  const SingleExponents e = single_exponents(field_char(c.t1), p);
  return gf::pow(c.t1, e.a) * gf::pow(c.tp, e.b);
}

SubfieldEmbedding SubfieldEmbedding::make(FieldPtr source, FieldPtr target) {
  const unsigned d = source->degree(), n = target->degree();
  if (!(source->base() == target->base())) throw FieldMismatch("subfield embedding: different characteristics");
  if (n % d != 0) {
    throw InvalidArgument("subfield embedding: degree " + std::to_string(d) + " does not divide " + std::to_string(n));
  }
  EPoly m;
  for (Residue c : source->modulus()) m.push_back(ExtFieldElement::constant(target, c));
  ExtFieldElement rho = split_root(m, target);

  // Smallest of the d conjugates rho^{q^i}.
  const Integer& q = source->base().q();
  ExtFieldElement conj = rho;
  for (unsigned i = 1; i < d; ++i) {
    conj = gf::pow(conj, q);
    if (gf::canonical_less(conj, rho)) rho = conj;
  }

  std::vector<ExtFieldElement> powers{ExtFieldElement::one(target)};
  for (unsigned i = 1; i < d; ++i) powers.push_back(powers.back() * rho);
  return SubfieldEmbedding(std::move(source), std::move(target), std::move(rho), std::move(powers));
}

ExtFieldElement SubfieldEmbedding::apply(const ExtFieldElement& x) const {
  require_field(x, source_, "subfield embedding");
  ExtFieldElement acc = ExtFieldElement::zero(target_);
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (x.coeffs()[i] != 0) acc = acc + ExtFieldElement::constant(target_, x.coeffs()[i]) * powers_[i];
  }
  return acc;
}

ExtFieldElement SubfieldEmbedding::project(const ExtFieldElement& z) const {
  require_field(z, target_, "subfield projection");
  const gf::PrimeField& fq = target_->base();
  const std::size_t n = target_->degree(), d = powers_.size();
  // Solve sum_j c_j rho^j = z: n equations, d unknowns, augmented column d.
  std::vector<std::vector<Residue>> a(n, std::vector<Residue>(d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = powers_[j].coeffs()[i];
    a[i][d] = z.coeffs()[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw TheoremViolation("subfield projection: powers of the root are dependent");
    std::swap(a[piv], a[row]);
    const Residue li = fq.inv(a[row][col]);
    for (auto& e : a[row]) e = fq.mul(e, li);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Residue f = a[i][col];
      for (std::size_t j = 0; j <= d; ++j) a[i][j] = fq.sub(a[i][j], fq.mul(f, a[row][j]));
    }
    pivot_row[col] = row++;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (a[i][d] != 0) throw MembershipError("subfield projection: element is not in the subfield");
  }
  std::vector<Residue> c(d);
  for (std::size_t col = 0; col < d; ++col) c[col] = a[pivot_row[col]][d];
  return ExtFieldElement(source_, std::move(c));
}

ExtFieldElement subfield_embed(const ExtFieldElement& x, const FieldPtr& target) {
  return SubfieldEmbedding::make(x.field(), target).apply(x);
}

TorusContext TorusContext::make(const Integer& q, std::uint64_t p, std::uint64_t r) {
  if (q == 0) throw InvalidArgument("TorusContext: needs a concrete prime q");
  TorusParams params = derive_params(q, p, r);
  FieldPtr f1 = gf::make_ext_field(q, 1);
  FieldPtr fp = gf::make_ext_field(q, static_cast<unsigned>(p));
  FieldPtr fr = gf::make_ext_field(q, static_cast<unsigned>(r));
  FieldPtr fpr = gf::make_ext_field(q, static_cast<unsigned>(p * r));
  SubfieldEmbedding ep = SubfieldEmbedding::make(fp, fpr);
  SubfieldEmbedding er = SubfieldEmbedding::make(fr, fpr);
  return TorusContext(std::move(params), std::move(f1), std::move(fp), std::move(fr), std::move(fpr), std::move(ep),
                      std::move(er));
}

ThetaOutput theta(const ThetaInput& in, const TorusContext& ctx) {
  const auto& v = *ctx.params().at_q;
  const Integer& q = ctx.params().q;
  require_field(in.x, ctx.field_pr(), "theta");
  require_field(in.xp, ctx.field_p(), "theta");
  require_field(in.xr, ctx.field_r(), "theta");
  require_nonzero(in.x, "theta");
  require_nonzero(in.xp, "theta");
  require_nonzero(in.xr, "theta");
  require_member(in.x, ctx.params().pair.pr(), "theta");

  const ExtFieldElement norm_p = gf::pow(in.xp, v.phi_p);
  for (std::size_t i = 1; i < norm_p.coeffs().size(); ++i) {
    if (norm_p.coeffs()[i] != 0) throw TheoremViolation("theta: Phi_p(q)-th power is not in F_q");
  }
  ExtFieldElement x1(ctx.field_1(), {norm_p.coeffs()[0]});

  const ExtFieldElement ep = ctx.embed_p().apply(in.xp);
  const ExtFieldElement er = ctx.embed_r().apply(in.xr);
  TorusComponents c{gf::pow(er, v.phi_r), gf::pow(ep, q - 1), gf::pow(er, q - 1), in.x};
  return {std::move(x1), recombine(c, ctx.params())};
}

ThetaInput theta_reverse(const ThetaOutput& out, const TorusContext& ctx) {
  require_field(out.x1, ctx.field_1(), "theta_reverse");
  require_field(out.xpr, ctx.field_pr(), "theta_reverse");
  const std::uint64_t p = ctx.params().pair.p(), r = ctx.params().pair.r();
  const Integer PR = to_int(p * r);

  const TorusComponents t = decompose(out.xpr, ctx.params());
  ExtFieldElement x = gf::pow(t.tpr, PR);

  const ExtFieldElement x1p = gf::pow(ExtFieldElement::constant(ctx.field_p(), out.x1.coeffs()[0]), PR);
  ExtFieldElement xp = gf::pow(recombine_single({x1p, ctx.embed_p().project(t.tp)}), to_int(r));

  const ExtFieldElement t1r = ctx.embed_r().project(t.t1);
  ExtFieldElement xr = gf::pow(recombine_single({t1r, ctx.embed_r().project(t.tr)}), to_int(p));
  return {std::move(x), std::move(xp), std::move(xr)};
}

std::optional<unsigned> measure_kernel_power(const std::vector<ThetaInput>& samples, const TorusContext& ctx,
                                             unsigned max_k) {
  std::vector<ThetaInput> back;
  back.reserve(samples.size());
  for (const auto& s : samples) back.push_back(theta_reverse(theta(s, ctx), ctx));
  const Integer PR = to_int(ctx.params().pair.pr());
  Integer e = 1;
  for (unsigned k = 0; k <= max_k; ++k, e *= PR) {
    bool all = true;
    for (std::size_t i = 0; i < samples.size() && all; ++i) {
      all = back[i].x == gf::pow(samples[i].x, e) && back[i].xp == gf::pow(samples[i].xp, e) &&
            back[i].xr == gf::pow(samples[i].xr, e);
    }
    if (all) return k;
  }
  return std::nullopt;
}

ThetaInput random_theta_input(const TorusContext& ctx, std::mt19937_64& rng) {
  ExtFieldElement y = gf::random_nonzero(ctx.field_pr(), rng);
  ExtFieldElement xp = gf::random_nonzero(ctx.field_p(), rng);
  ExtFieldElement xr = gf::random_nonzero(ctx.field_r(), rng);
  return {gf::pow(y, ctx.params().at_q->cof_pr), std::move(xp), std::move(xr)};
}

ThetaDimensions theta_dimensions(const PrimePair& pair) {
  const std::uint64_t n = pair.pr();
  ThetaDimensions out{{}, {}, cyclo::euler_phi(n), 0};
  for (std::uint64_t d : cyclo::divisors(n)) {
    const int mu = cyclo::moebius(n / d);
    if (mu < 0) {
      out.domain_fields.push_back(d);
      out.domain_dim += d;
    } else if (mu > 0) {
      out.codomain_fields.push_back(d);
      out.codomain_dim += d;
    }
  }
  return out;
}

}  // namespace cyclotorus::torus
