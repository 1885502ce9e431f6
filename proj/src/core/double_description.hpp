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

#ifndef MULTIDEAL_CORE_DOUBLE_DESCRIPTION_HPP_
#define MULTIDEAL_CORE_DOUBLE_DESCRIPTION_HPP_

#include <cstddef>
#include <vector>

#include "multideal/rational.hpp"

namespace multideal::detail {

using IntVector = std::vector<BigInt>;

BigInt dot(const IntVector& a, const IntVector& b);

// Divides out the gcd of all entries. The zero vector is returned as is.
IntVector make_primitive(IntVector v);

std::size_t rank(const std::vector<IntVector>& rows);

// Extreme rays, as primitive integer vectors, of the cone
// { y : <a, y> >= 0 for every row a }. The rows must span R^d so that the
// cone is pointed. Incremental double description: start from the simplicial
// cone of d independent rows and intersect with one half-space at a time,
// combining only combinatorially adjacent ray pairs. Output order is
// deterministic for a given row order.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows);

}  // namespace multideal::detail

#endif  // MULTIDEAL_CORE_DOUBLE_DESCRIPTION_HPP_
