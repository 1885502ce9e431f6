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

#ifndef MULTIDEAL_THRESHOLD_HPP_
#define MULTIDEAL_THRESHOLD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "multideal/ideal.hpp"
#include "multideal/polyhedron.hpp"
#include "multideal/rational.hpp"

namespace multideal {

// Log canonical threshold t = sup{r : J(r * a) != (1)} together with the
// remoteness m = 1/t, the point where the diagonal leaves P.
struct LctResult {
  // nullopt means +infinity (unit ideal).
  std::optional<BigRational> threshold;
  BigRational remoteness;
  // First facet, in the polyhedron's order, attaining
  // t = <v, 1> / c. Absent for the unit ideal.
  std::optional<Facet> witness;
  // Vertices of P on the witness facet.
  std::vector<Exponent> witness_vertices;
  // J(1 * a) is the unit ideal.
  bool trivial_at_one = false;
};

// The threshold is not capped at 1; see trivial_at_one. Throws
// ZeroIdealError.
LctResult lct(const MonomialIdeal& ideal);
LctResult lct(const MonomialIdeal& ideal, const NewtonPolyhedron& polyhedron);

// 1/a_1 + ... + 1/a_n, the threshold of (x_1^a_1, ..., x_n^a_n).
BigRational lct_diagonal(std::span<const std::int64_t> exponents);

// a_1 = 2, a_{k+1} = a_k^2 + a_k, paired with t_k = (a_k - 1)/a_k.
std::vector<std::pair<BigInt, BigRational>> extremal_sequence(std::size_t n);

enum class SearchFamily {
  // Every monomial ideal with at most max_generators generators whose
  // exponents lie in [0, max_exponent]^dim.
  kAll,
  // Diagonal ideals (x_1^a_1, ..., x_n^a_n), 1 <= a_i <= max_exponent;
  // max_generators is not consulted.
  kDiagonal,
};

struct SearchOptions {
  std::size_t dim = 2;
  std::int64_t max_exponent = 1;
  std::size_t max_generators = 1;
  SearchFamily family = SearchFamily::kAll;
  unsigned jobs = 1;
};

struct ThresholdRecord {
  BigRational threshold;
  // First ideal in enumeration order reaching the threshold.
  MonomialIdeal witness;
};

// Distinct thresholds below 1, increasing. Ideals are enumerated once per
// orbit of the coordinate permutations. The result does not depend on
// `jobs`.
std::vector<ThresholdRecord> threshold_search(const SearchOptions& options);
std::vector<ThresholdRecord> threshold_search(std::size_t dim,
                                              std::int64_t max_exponent,
                                              std::size_t max_generators);

// Lexicographically least generator list over all coordinate permutations.
MonomialIdeal canonical_permutation(const MonomialIdeal& ideal);

}  // namespace multideal

#endif  // MULTIDEAL_THRESHOLD_HPP_
