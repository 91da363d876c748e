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

#include "cyclotorus/serialize.hpp"

#include <string>

#include "cyclotorus/errors.hpp"

namespace cyclotorus::serialize {

Json to_json(const Integer& v) { return v.get_str(); }

Json to_json(const exactalg::IntPoly& a) {
  Json out = Json::array();
  for (const auto& c : a.coeffs()) out.push_back(c.get_str());
  return out;
}

Json to_json(const exactalg::ScaledPoly& a) { return {{"num", to_json(a.num())}, {"den", to_json(a.den())}}; }

Json to_json(const gf::ExtFieldElement& x) {
  const gf::ExtField& f = *x.field();
  Json modulus = Json::array();
  for (gf::Residue c : f.modulus()) modulus.push_back(std::to_string(c));
  Json coeffs = Json::array();
  for (gf::Residue c : x.coeffs()) coeffs.push_back(std::to_string(c));
  return {{"field", {{"q", to_json(f.base().q())}, {"n", f.degree()}, {"modulus", modulus}}}, {"coeffs", coeffs}};
}

Json to_json(const modinv::InverseReport& r) {
  return {
      {"p", r.pair.p()},
      {"r", r.pair.r()},
      {"case", std::string(modinv::case_label(r.case_id))},
      {"m", r.m},
      {"n", r.n},
      {"inverse", to_json(r.inverse)},
      {"matches_oracle", r.matches_oracle},
      {"defining_identity", r.defining_identity},
      {"degree_ok", r.degree_ok},
      {"bound_ok", r.bound_ok},
      {"observed_min", to_json(r.observed_min)},
      {"observed_max", to_json(r.observed_max)},
      {"pass", r.bound_satisfied},
  };
}

Json to_json(const torus::TorusParams& p) {
  Json polys = {
      {"u1", to_json(p.u1)},         {"u_pr", to_json(p.u_pr)},     {"u_p", to_json(p.u_p)},
      {"u_r", to_json(p.u_r)},       {"v1", to_json(p.v1)},         {"v2", to_json(p.v2)},
      {"U_1", to_json(p.cof_1)},     {"U_p", to_json(p.cof_p)},     {"U_r", to_json(p.cof_r)},
      {"U_pr", to_json(p.cof_pr)},
  };
  Json out = {
      {"q", to_json(p.q)},
      {"symbolic", p.symbolic()},
      {"p", p.pair.p()},
      {"r", p.pair.r()},
      {"polynomials", std::move(polys)},
  };
  if (p.at_q) {
    const auto& v = *p.at_q;
    out["evaluations"] = {
        {"u1", to_json(v.u1)},         {"u_pr", to_json(v.u_pr)},     {"u_p", to_json(v.u_p)},
        {"u_r", to_json(v.u_r)},       {"v1", to_json(v.v1)},         {"v2", to_json(v.v2)},
        {"U_1", to_json(v.cof_1)},     {"U_p", to_json(v.cof_p)},     {"U_r", to_json(v.cof_r)},
        {"U_pr", to_json(v.cof_pr)},   {"Phi_1", to_json(v.phi_1)},   {"Phi_p", to_json(v.phi_p)},
        {"Phi_r", to_json(v.phi_r)},   {"Phi_pr", to_json(v.phi_pr)},
    };
  } else {
    out["evaluations"] = nullptr;
  }
  return out;
}

Json to_json(const torus::TorusComponents& c) {
  return {{"t1", to_json(c.t1)}, {"tp", to_json(c.tp)}, {"tr", to_json(c.tr)}, {"tpr", to_json(c.tpr)}};
}

Json to_json(const torus::ThetaDimensions& d) {
  return {
      {"domain_fields", d.domain_fields},
      {"codomain_fields", d.codomain_fields},
      {"domain_dim", d.domain_dim},
      {"codomain_dim", d.codomain_dim},
  };
}

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("expected a decimal string, got " + j.dump());
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("not a decimal integer: " + j.dump());
  return v;
}

exactalg::IntPoly int_poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a coefficient array, got " + j.dump());
  std::vector<Integer> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(integer_from_json(e));
  return exactalg::IntPoly(std::move(c));
}

exactalg::ScaledPoly scaled_poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw InvalidArgument("expected {\"num\", \"den\"}, got " + j.dump());
  }
  return exactalg::ScaledPoly(int_poly_from_json(j["num"]), integer_from_json(j["den"]));
}

}  // namespace cyclotorus::serialize
