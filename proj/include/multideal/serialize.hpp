// Copyright 2026 The multideal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MULTIDEAL_SERIALIZE_HPP_
#define MULTIDEAL_SERIALIZE_HPP_

#include <json.hpp>

#include "multideal/ideal.hpp"
#include "multideal/polyhedron.hpp"
#include "multideal/rational.hpp"
#include "multideal/threshold.hpp"

// JSON encodings. Rationals travel as strings "p/q" (or "p"); integers as
// JSON numbers when they fit in int64 and as decimal strings otherwise.
namespace multideal::json {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& value);
Json to_json(const BigRational& value);
Json to_json(const Exponent& exponent);
Json to_json(const RatVec& point);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const Facet& facet);
// {"nvars": n, "facets": [...], "vertices": [...]}
Json to_json(const NewtonPolyhedron& polyhedron);
// {"t": "p/q" | "inf", "remoteness": "p/q", "witness_facet": {...} | null,
//  "trivial_at_one": bool, "witness_vertices": [...]}
Json to_json(const LctResult& result);
// {"threshold": "p/q", "witness_ideal": {...}}
Json to_json(const ThresholdRecord& record);

// {"nvars": n, "generators": [[e1, ..., en], ...]}. Throws ParseError.
MonomialIdeal ideal_from_json(const Json& document);

}  // namespace multideal::json

#endif  // MULTIDEAL_SERIALIZE_HPP_
