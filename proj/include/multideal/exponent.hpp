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

#ifndef MULTIDEAL_EXPONENT_HPP_
#define MULTIDEAL_EXPONENT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "multideal/rational.hpp"

namespace multideal {

// A lattice point of N^n, i.e. the exponent of the monomial x^lambda.
class Exponent {
 public:
  using value_type = std::int64_t;

  Exponent() = default;
  // The zero vector (the monomial 1) in `dim` variables.
  explicit Exponent(std::size_t dim);
  // Throws InvalidArgument on an empty vector or a negative entry.
  explicit Exponent(std::vector<value_type> coords);
  Exponent(std::initializer_list<value_type> coords);

  // (1, ..., 1), the exponent of x_1 x_2 ... x_n.
  static Exponent ones(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  std::span<const value_type> coords() const { return coords_; }
  value_type total_degree() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  // Lexicographic on coordinate tuples.
  friend std::strong_ordering operator<=>(const Exponent&,
                                          const Exponent&) = default;

 private:
  std::vector<value_type> coords_;
};

// Componentwise sum; throws InvalidArgument on int64 overflow.
Exponent operator+(const Exponent& a, const Exponent& b);

// A point of Q^n.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::vector<BigRational> coords);
  explicit RatVec(const Exponent& lattice_point);

  std::size_t dim() const { return coords_.size(); }
  const BigRational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const BigRational> coords() const { return coords_; }
  bool is_integral() const;

  friend bool operator==(const RatVec&, const RatVec&) = default;

 private:
  std::vector<BigRational> coords_;
};

RatVec operator*(const BigRational& scalar, const RatVec& v);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
// Integer vector with the same direction: p = scaled / denominator.
struct IntegerForm {
  std::vector<BigInt> scaled;
  BigInt denominator;
};
IntegerForm clear_denominators(const RatVec& v);

}  // namespace multideal

#endif  // MULTIDEAL_EXPONENT_HPP_
