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

#ifndef MULTIDEAL_CORE_LATTICE_BOX_HPP_
#define MULTIDEAL_CORE_LATTICE_BOX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "multideal/exponent.hpp"
#include "multideal/polyhedron.hpp"

namespace multideal::detail {

// Number of lattice points of [0, box_1] x ... x [0, box_n]; throws
// InvalidArgument above `limit`.
std::size_t box_size(const Exponent& box, std::size_t limit);

// Visits every point of the box in increasing mixed-radix order (last
// coordinate fastest); `visit(point, index)`.
template <class Visit>
void for_each_in_box(const Exponent& box, Visit&& visit) {
  const std::size_t n = box.dim();
  std::vector<std::int64_t> point(n, 0);
  std::size_t index = 0;
  while (true) {
    visit(std::span<const std::int64_t>(point), index++);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (point[i] < box[i]) {
        ++point[i];
        break;
      }
      point[i] = 0;
      if (i == 0) return;
    }
  }
}

// Minimal elements of an up-set S, restricted to the box, given by its
// membership predicate. An element of S is minimal iff none of its
// immediate predecessors lambda - e_i lies in S.
template <class Member>
std::vector<Exponent> box_upset_minimal(const Exponent& box, std::size_t limit,
                                        Member&& member) {
  const std::size_t total = box_size(box, limit);
  const std::size_t n = box.dim();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n - 1; i > 0; --i)
    stride[i - 1] = stride[i] * static_cast<std::size_t>(box[i] + 1);

  std::vector<bool> in(total, false);
  std::vector<Exponent> minimal;
  for_each_in_box(box, [&](std::span<const std::int64_t> p, std::size_t idx) {
    if (!member(p)) return;
    in[idx] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] > 0 && in[idx - stride[i]]) return;
    }
    minimal.emplace_back(std::vector<std::int64_t>(p.begin(), p.end()));
  });
  return minimal;
}

// Sign tests of many lattice points against one facet system. Uses 128-bit
// accumulation when every facet coefficient fits in int64 and falls back to
// GMP for a point whenever a sum overflows.
class FacetTester {
 public:
  explicit FacetTester(const std::vector<Facet>& facets);

  // All <v, x> > c (strict) or all <v, x> >= c.
  bool satisfies(std::span<const std::int64_t> x, bool strict) const;
  // Same for x + (1, ..., 1).
  bool satisfies_shifted(std::span<const std::int64_t> x, bool strict) const;

 private:
  bool slow_satisfies(std::span<const std::int64_t> x, std::int64_t shift,
                      bool strict) const;

  const std::vector<Facet>* facets_;
  bool fast_ = false;
  std::size_t dim_ = 0;
  std::vector<std::int64_t> normals_;  // row-major, one row per facet
  std::vector<std::int64_t> offsets_;
};

}  // namespace multideal::detail

#endif  // MULTIDEAL_CORE_LATTICE_BOX_HPP_
