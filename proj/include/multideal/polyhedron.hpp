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

#ifndef MULTIDEAL_POLYHEDRON_HPP_
#define MULTIDEAL_POLYHEDRON_HPP_

#include <cstddef>
#include <vector>

#include "multideal/exponent.hpp"
#include "multideal/ideal.hpp"
#include "multideal/rational.hpp"

namespace multideal {

// The inequality <normal, x> >= offset. Normals are nonnegative and the
// tuple (normal, offset) is primitive.
struct Facet {
  std::vector<BigInt> normal;
  BigInt offset;

  // <normal, p> - offset
  BigRational slack(const RatVec& p) const;
  BigInt slack(const Exponent& p) const;
  BigInt normal_sum() const;  // <normal, 1>

  friend bool operator==(const Facet&, const Facet&) = default;
};

enum class PointClass { Interior, Boundary, Exterior };

const char* to_string(PointClass cls);

// conv(generators) + R^n_{>=0} as an irredundant system of facets plus its
// vertices. Facets are ordered by descending normal (lexicographic);
// vertices in descending lexicographic order. Scaled polyhedra carry
// rational vertices.
class NewtonPolyhedron {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }

  // Vertices lying on `facet` (in vertex order).
  std::vector<RatVec> vertices_on(const Facet& facet) const;

  friend bool operator==(const NewtonPolyhedron&,
                         const NewtonPolyhedron&) = default;

 private:
  friend NewtonPolyhedron newton_polyhedron(const MonomialIdeal&);
  friend NewtonPolyhedron scale(const NewtonPolyhedron&, const BigRational&);

  NewtonPolyhedron(std::size_t dim, std::vector<Facet> facets,
                   std::vector<RatVec> vertices);

  std::size_t dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<RatVec> vertices_;
};

// Throws ZeroIdealError for the zero ideal.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

PointClass classify(const NewtonPolyhedron& polyhedron, const RatVec& point);
PointClass classify(const NewtonPolyhedron& polyhedron, const Exponent& point);

// r * P, renormalized to primitive integer facet data. r > 0.
NewtonPolyhedron scale(const NewtonPolyhedron& polyhedron,
                       const BigRational& r);

// The m >= 0 with m*(1,...,1) on the boundary of P; 0 when the origin lies
// in P.
BigRational diagonal_intersection(const NewtonPolyhedron& polyhedron);

}  // namespace multideal

#endif  // MULTIDEAL_POLYHEDRON_HPP_
