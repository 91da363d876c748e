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

// JSON forms of the library types. Integers of unbounded size are decimal
// strings; polynomials are little-endian arrays of them, so Phi_3 is
// ["1","1","1"].

#ifndef CYCLOTORUS_SERIALIZE_HPP_
#define CYCLOTORUS_SERIALIZE_HPP_

#include <json.hpp>

#include "cyclotorus/exactalg.hpp"
#include "cyclotorus/gf.hpp"
#include "cyclotorus/modinv.hpp"
#include "cyclotorus/torus.hpp"

namespace cyclotorus::serialize {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v);
Json to_json(const exactalg::IntPoly& a);
// {"num": [...], "den": "d"}
Json to_json(const exactalg::ScaledPoly& a);
// {"field": {"q": "7", "n": 15, "modulus": [...]}, "coeffs": [...]}
Json to_json(const gf::ExtFieldElement& x);
Json to_json(const modinv::InverseReport& r);
Json to_json(const torus::TorusParams& p);
Json to_json(const torus::TorusComponents& c);
Json to_json(const torus::ThetaDimensions& d);

// Throw InvalidArgument on malformed input.
Integer integer_from_json(const Json& j);
exactalg::IntPoly int_poly_from_json(const Json& j);
exactalg::ScaledPoly scaled_poly_from_json(const Json& j);

}  // namespace cyclotorus::serialize

#endif  // CYCLOTORUS_SERIALIZE_HPP_
