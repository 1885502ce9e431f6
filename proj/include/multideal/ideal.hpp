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

#ifndef MULTIDEAL_IDEAL_HPP_
#define MULTIDEAL_IDEAL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "multideal/exponent.hpp"

namespace multideal {

// True iff x^mu divides x^lambda, i.e. mu <= lambda componentwise.
bool divides(const Exponent& mu, const Exponent& lambda);

// A monomial ideal in n variables, held as its unique minimal generating
// set. Generators are kept in descending lexicographic order (x^8 before
// y^6), so two ideals are equal iff their generator lists are equal.
//
// No generators: the zero ideal. The single generator 0: the unit ideal.
class MonomialIdeal {
 public:
  // Minimalizes `exponents`. Throws DimensionError if an exponent does not
  // have `dim` coordinates and InvalidArgument if dim == 0.
  MonomialIdeal(std::size_t dim, std::vector<Exponent> exponents);

  static MonomialIdeal zero(std::size_t dim);
  static MonomialIdeal unit(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  // A_i = max over generators of the i-th coordinate (zero for the zero
  // ideal).
  Exponent max_exponents() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t dim_;
  std::vector<Exponent> generators_;
};

MonomialIdeal minimalize(std::size_t dim, std::vector<Exponent> exponents);

bool contains(const MonomialIdeal& ideal, const Exponent& lambda);

// ideal ⊆ other
bool is_subideal(const MonomialIdeal& ideal, const MonomialIdeal& other);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// m-fold product; m >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned m);

// Applies x_i -> x_{perm[i]} to every generator.
MonomialIdeal permute(const MonomialIdeal& ideal,
                      std::span<const std::size_t> perm);

}  // namespace multideal

#endif  // MULTIDEAL_IDEAL_HPP_
