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

#include "multideal/serialize.hpp"

#include "multideal/error.hpp"

namespace multideal::json {

Json to_json(const BigInt& value) {
  if (auto v = to_int64(value)) return *v;
  return to_string(value);
}

Json to_json(const BigRational& value) { return to_string(value); }

Json to_json(const Exponent& exponent) {
  Json out = Json::array();
  for (auto c : exponent.coords()) out.push_back(c);
  return out;
}

Json to_json(const RatVec& point) {
  Json out = Json::array();
  for (const auto& c : point.coords()) {
    if (c.get_den() == 1)
      out.push_back(to_json(BigInt(c.get_num())));
    else
      out.push_back(to_string(c));
  }
  return out;
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"nvars", ideal.dim()}, {"generators", std::move(gens)}};
}

Json to_json(const Facet& facet) {
  Json normal = Json::array();
  for (const auto& v : facet.normal) normal.push_back(to_json(v));
  return Json{{"normal", std::move(normal)}, {"offset", to_json(facet.offset)}};
}

Json to_json(const NewtonPolyhedron& polyhedron) {
  Json facets = Json::array();
  for (const auto& f : polyhedron.facets()) facets.push_back(to_json(f));
  Json vertices = Json::array();
  for (const auto& v : polyhedron.vertices()) vertices.push_back(to_json(v));
  return Json{{"nvars", polyhedron.dim()},
              {"facets", std::move(facets)},
              {"vertices", std::move(vertices)}};
}

Json to_json(const LctResult& result) {
  Json vertices = Json::array();
  for (const auto& v : result.witness_vertices) vertices.push_back(to_json(v));
  return Json{
      {"t", result.threshold ? to_json(*result.threshold) : Json("inf")},
      {"remoteness", to_json(result.remoteness)},
      {"witness_facet", result.witness ? to_json(*result.witness) : Json()},
      {"trivial_at_one", result.trivial_at_one},
      {"witness_vertices", std::move(vertices)}};
}

Json to_json(const ThresholdRecord& record) {
  return Json{{"threshold", to_json(record.threshold)},
              {"witness_ideal", to_json(record.witness)}};
}

MonomialIdeal ideal_from_json(const Json& document) {
  if (!document.is_object() || !document.contains("nvars") ||
      !document.contains("generators")) {
    throw ParseError(
        "ideal JSON must be an object with \"nvars\" and \"generators\"");
  }
  const Json& nvars = document["nvars"];
  if (!nvars.is_number_integer() || nvars.get<std::int64_t>() < 1)
    throw ParseError("\"nvars\" must be a positive integer");
  const auto dim = static_cast<std::size_t>(nvars.get<std::int64_t>());
  const Json& gens = document["generators"];
  if (!gens.is_array()) throw ParseError("\"generators\" must be an array");

  std::vector<Exponent> exps;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != dim)
      throw ParseError("each generator must be an array of " +
                       std::to_string(dim) + " integers");
    std::vector<Exponent::value_type> coords;
    for (const auto& c : g) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0)
        throw ParseError("exponents must be nonnegative integers");
      coords.push_back(c.get<std::int64_t>());
    }
    exps.emplace_back(std::move(coords));
  }
  return MonomialIdeal(dim, std::move(exps));
}

}  // namespace multideal::json
