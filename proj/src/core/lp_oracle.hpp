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

#ifndef MULTIDEAL_CORE_LP_ORACLE_HPP_
#define MULTIDEAL_CORE_LP_ORACLE_HPP_

#include <span>
#include <vector>

#include "multideal/exponent.hpp"
#include "multideal/rational.hpp"

namespace multideal::detail {

// Optimal value of
//
//   maximize eps
//   s.t.  sum_g w_g (r_num/r_den) g_i + s_i + eps = point_i / point_den
//         sum_g w_g = 1,   w >= 0, s >= 0, eps free.
//
// The caller guarantees a nonempty generator list of matching dimension,
// r_num, r_den > 0 and point_den > 0.
BigRational max_diagonal_margin(std::span<const Exponent> generators,
                                const BigInt& r_num, const BigInt& r_den,
                                const std::vector<BigInt>& point,
                                const BigInt& point_den);

}  // namespace multideal::detail

#endif  // MULTIDEAL_CORE_LP_ORACLE_HPP_
