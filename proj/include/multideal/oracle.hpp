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

#ifndef MULTIDEAL_ORACLE_HPP_
#define MULTIDEAL_ORACLE_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multideal/exponent.hpp"
#include "multideal/ideal.hpp"
#include "multideal/polyhedron.hpp"
#include "multideal/rational.hpp"

// Independent check of the facet-based computations. Nothing here looks at
// a facet: membership in r * (conv(G) + orthant) is decided by an exact
// linear program over convex weights on the generators G.
namespace multideal::oracle {

struct LpVerdict {
  PointClass cls = PointClass::Exterior;
  // Largest eps with p - eps * 1 in rP. Zero on the boundary and reported
  // as zero when the point is exterior.
  BigRational slack;
};

//   maximize eps  s.t.  sum_g w_g r g + s + eps 1 = p,  sum_g w_g = 1,
//                       w, s >= 0, eps free.
// Interior iff eps* > 0, Boundary iff eps* = 0, Exterior iff eps* < 0.
// Solved by integer-preserving simplex pivots with Bland's rule, on int64
// with overflow detection and a GMP fallback. Throws DimensionError or
// InvalidArgument (empty generator set, r <= 0).
LpVerdict lp_classify(std::span<const Exponent> generators, const RatVec& p);
LpVerdict lp_classify(std::span<const Exponent> generators,
                      const BigRational& r, const RatVec& p);

// Called for every box point lambda with the verdict for lambda + 1.
using PointVisitor =
    std::function<void(const Exponent& lambda, const LpVerdict& verdict)>;

// minimalize { lambda <= box : lambda + 1 in Int(r conv(G) + orthant) }.
MonomialIdeal brute_multiplier(std::span<const Exponent> generators,
                               const BigRational& r, const Exponent& box,
                               const PointVisitor& visit = {});

// minimalize { lambda <= box : lambda in conv(G) + orthant }.
MonomialIdeal brute_closure(std::span<const Exponent> generators,
                            const Exponent& box);

struct VerifyReport {
  std::size_t points_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Runs the facet-based and LP-based paths side by side for `ideal` and
// coefficient r (default 1): point classification on generators, vertices
// and every box point, the multiplier ideal, the integral closure, and a
// separating-facet certificate for each exterior point.
VerifyReport verify(const MonomialIdeal& ideal,
                    const std::optional<BigRational>& r = std::nullopt);

}  // namespace multideal::oracle

#endif  // MULTIDEAL_ORACLE_HPP_
