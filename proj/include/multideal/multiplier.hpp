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

#ifndef MULTIDEAL_MULTIPLIER_HPP_
#define MULTIDEAL_MULTIPLIER_HPP_

#include "multideal/ideal.hpp"
#include "multideal/polyhedron.hpp"
#include "multideal/rational.hpp"

namespace multideal {

// Multiplier ideal of a monomial ideal:
//
//   J(r * a) = { x^lambda : lambda + 1 in Int(r P(a)) }.
//
// Minimal generators are searched in the box 0 <= lambda_i <= ceil(r A_i)+1
// (A_i = largest i-th exponent of a generator). Any lambda beyond the box
// has lambda - e_i in the ideal as well: write lambda + 1 = c + w with c in
// conv(r * vertices), so c_i <= r A_i and w_i > 1, and lowering w_i by one
// keeps every facet inequality strict since all normals are nonnegative.
//
// Throws ZeroIdealError for the zero ideal and InvalidArgument for r <= 0 or
// when the box exceeds kMaxBoxPoints.
MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal,
                               const BigRational& r);
MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal,
                               const NewtonPolyhedron& polyhedron,
                               const BigRational& r);

// Membership of a single monomial: lambda + 1 in Int(rP).
bool multiplier_contains(const NewtonPolyhedron& polyhedron,
                         const BigRational& r, const Exponent& lambda);

// The search box ceil(r A_i) + 1 used by multiplier_ideal.
Exponent multiplier_box(const MonomialIdeal& ideal, const BigRational& r);

// Monomials with exponent in P, searched in 0 <= lambda_i <= A_i + 1.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

// The round-down of rP: the ideal generated by floor(mu) over mu in rP.
// Each lattice point lambda of the box is tested by exhibiting a point of
// rP inside the half-open cube [lambda, lambda + 1) and taking its floor.
MonomialIdeal floor_ideal(const NewtonPolyhedron& polyhedron,
                          const BigRational& r);

inline constexpr std::size_t kMaxBoxPoints = std::size_t{1} << 27;

}  // namespace multideal

#endif  // MULTIDEAL_MULTIPLIER_HPP_
