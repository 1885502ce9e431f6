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

#ifndef MULTIDEAL_PLOT_HPP_
#define MULTIDEAL_PLOT_HPP_

#include <string>

#include "multideal/ideal.hpp"
#include "multideal/rational.hpp"

namespace multideal {

// Static pictures of a two-variable ideal: the boundary of rP, the lattice
// points of a window around it, and the exponents lambda of J(r * a)
// (lambda + 1 in Int(rP)) drawn distinctly. Throws DimensionError unless
// dim == 2.
std::string plot2d_svg(const MonomialIdeal& ideal, const BigRational& r);

// One row per lattice point of the same window:
// x,y,in_ideal,in_polyhedron,on_boundary,in_multiplier
std::string plot2d_csv(const MonomialIdeal& ideal, const BigRational& r);

}  // namespace multideal

#endif  // MULTIDEAL_PLOT_HPP_
