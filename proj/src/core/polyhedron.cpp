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

#include "multideal/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "double_description.hpp"
#include "multideal/error.hpp"

namespace multideal {
namespace {

// Descending lexicographic order on normals.
bool facet_before(const Facet& a, const Facet& b) {
  for (std::size_t i = 0; i < a.normal.size(); ++i) {
    if (a.normal[i] != b.normal[i]) return a.normal[i] > b.normal[i];
  }
  return a.offset > b.offset;
}

void check_dim(const NewtonPolyhedron& p, std::size_t dim) {
  if (p.dim() != dim)
    throw DimensionError("point has " + std::to_string(dim) +
                         " coordinates, polyhedron lives in dimension " +
                         std::to_string(p.dim()));
}

}  // namespace

BigRational Facet::slack(const RatVec& p) const {
  BigRational sum = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) sum += normal[i] * p[i];
  return sum - offset;
}

BigInt Facet::slack(const Exponent& p) const {
  BigInt sum = -offset;
  for (std::size_t i = 0; i < normal.size(); ++i)
    sum += normal[i] * static_cast<long>(p[i]);
  return sum;
}

BigInt Facet::normal_sum() const {
  BigInt sum = 0;
  for (const auto& v : normal) sum += v;
  return sum;
}

const char* to_string(PointClass cls) {
  switch (cls) {
    case PointClass::Interior: return "interior";
    case PointClass::Boundary: return "boundary";
    case PointClass::Exterior: return "exterior";
  }
  return "?";
}

NewtonPolyhedron::NewtonPolyhedron(std::size_t dim, std::vector<Facet> facets,
                                   std::vector<RatVec> vertices)
    : dim_(dim), facets_(std::move(facets)), vertices_(std::move(vertices)) {
  std::sort(facets_.begin(), facets_.end(), facet_before);
}

std::vector<RatVec> NewtonPolyhedron::vertices_on(const Facet& facet) const {
  std::vector<RatVec> out;
  for (const auto& v : vertices_) {
    if (facet.slack(v) == 0) out.push_back(v);
  }
  return out;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError();
  const std::size_t n = ideal.dim();

  // Homogenize: P = {x : (x, 1) in C} with
  // C = cone{(g, 1)} + cone{(e_i, 0)}. A facet <v, x> >= c of P is an
  // extreme ray (v, -c) of the dual cone {y : <y, row> >= 0}.
  std::vector<detail::IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    detail::IntVector e(n + 1, 0);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  for (const auto& g : ideal.generators()) {
    detail::IntVector row;
    row.reserve(n + 1);
    for (auto c : g.coords()) row.emplace_back(static_cast<long>(c));
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }

  std::vector<Facet> facets;
  for (auto& ray : detail::extreme_rays(rows)) {
    Facet f;
    f.offset = -ray[n];
    ray.pop_back();
    f.normal = std::move(ray);
    // The ray (0, ..., 0, 1) is the face at infinity t >= 0.
    if (std::all_of(f.normal.begin(), f.normal.end(),
                    [](const BigInt& v) { return v == 0; })) {
      continue;
    }
    if (f.offset < 0)
      throw std::logic_error("newton_polyhedron: facet with negative offset");
    facets.push_back(std::move(f));
  }

  // A generator is a vertex iff the facets through it pin it down.
  std::vector<RatVec> vertices;
  for (const auto& g : ideal.generators()) {
    std::vector<detail::IntVector> tight;
    for (const auto& f : facets) {
      if (f.slack(g) == 0) tight.push_back(f.normal);
    }
    if (detail::rank(tight) == n) vertices.emplace_back(g);
  }
  return NewtonPolyhedron(n, std::move(facets), std::move(vertices));
}

PointClass classify(const NewtonPolyhedron& polyhedron, const RatVec& point) {
  check_dim(polyhedron, point.dim());
  bool boundary = false;
  for (const auto& f : polyhedron.facets()) {
    const int s = sgn(f.slack(point));
    if (s < 0) return PointClass::Exterior;
    if (s == 0) boundary = true;
  }
  return boundary ? PointClass::Boundary : PointClass::Interior;
}

PointClass classify(const NewtonPolyhedron& polyhedron, const Exponent& point) {
  check_dim(polyhedron, point.dim());
  bool boundary = false;
  for (const auto& f : polyhedron.facets()) {
    const int s = sgn(f.slack(point));
    if (s < 0) return PointClass::Exterior;
    if (s == 0) boundary = true;
  }
  return boundary ? PointClass::Boundary : PointClass::Interior;
}

NewtonPolyhedron scale(const NewtonPolyhedron& polyhedron,
                       const BigRational& r) {
  if (r <= 0) throw InvalidArgument("scale factor must be positive");
  const BigInt& p = r.get_num();
  const BigInt& q = r.get_den();
  std::vector<Facet> facets;
  facets.reserve(polyhedron.facets().size());
  for (const auto& f : polyhedron.facets()) {
    // <v, x> >= r c  <=>  <q v, x> >= p c
    detail::IntVector data;
    for (const auto& v : f.normal) data.push_back(q * v);
    data.push_back(p * f.offset);
    data = detail::make_primitive(std::move(data));
    Facet scaled;
    scaled.offset = data.back();
    data.pop_back();
    scaled.normal = std::move(data);
    facets.push_back(std::move(scaled));
  }
  std::vector<RatVec> vertices;
  vertices.reserve(polyhedron.vertices().size());
  for (const auto& v : polyhedron.vertices()) vertices.push_back(r * v);
  return NewtonPolyhedron(polyhedron.dim(), std::move(facets),
                          std::move(vertices));
}

BigRational diagonal_intersection(const NewtonPolyhedron& polyhedron) {
  BigRational m = 0;
  for (const auto& f : polyhedron.facets()) {
    if (f.offset <= 0) continue;
    BigRational candidate = make_rational(f.offset, f.normal_sum());
    if (candidate > m) m = candidate;
  }
  return m;
}

}  // namespace multideal
