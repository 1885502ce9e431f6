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

#include "multideal/exponent.hpp"

#include <algorithm>

#include "multideal/error.hpp"

namespace multideal {

Exponent::Exponent(std::size_t dim) : coords_(dim, 0) {
  if (dim == 0) throw InvalidArgument("exponent of dimension 0");
}

Exponent::Exponent(std::vector<value_type> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("exponent of dimension 0");
  for (auto c : coords_) {
    if (c < 0) throw InvalidArgument("negative exponent");
  }
}

Exponent::Exponent(std::initializer_list<value_type> coords)
    : Exponent(std::vector<value_type>(coords)) {}

Exponent Exponent::ones(std::size_t dim) {
  return Exponent(std::vector<value_type>(dim, 1));
}

Exponent::value_type Exponent::total_degree() const {
  value_type sum = 0;
  for (auto c : coords_) {
    if (__builtin_add_overflow(sum, c, &sum))
      throw InvalidArgument("exponent overflow");
  }
  return sum;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.dim() != b.dim()) throw DimensionError("exponent dimension mismatch");
  std::vector<Exponent::value_type> sum(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &sum[i]))
      throw InvalidArgument("exponent overflow");
  }
  return Exponent(std::move(sum));
}

RatVec::RatVec(std::vector<BigRational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("point of dimension 0");
}

RatVec::RatVec(const Exponent& lattice_point) {
  coords_.reserve(lattice_point.dim());
  for (auto c : lattice_point.coords()) {
    coords_.emplace_back(static_cast<long>(c));
  }
}

bool RatVec::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const BigRational& q) { return q.get_den() == 1; });
}

RatVec operator*(const BigRational& scalar, const RatVec& v) {
  std::vector<BigRational> out;
  out.reserve(v.dim());
  for (const auto& c : v.coords()) out.emplace_back(scalar * c);
  return RatVec(std::move(out));
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) throw DimensionError("point dimension mismatch");
  std::vector<BigRational> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.emplace_back(a[i] + b[i]);
  return RatVec(std::move(out));
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) throw DimensionError("point dimension mismatch");
  std::vector<BigRational> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.emplace_back(a[i] - b[i]);
  return RatVec(std::move(out));
}

IntegerForm clear_denominators(const RatVec& v) {
  BigInt den = 1;
  for (const auto& c : v.coords()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  IntegerForm out{{}, den};
  out.scaled.reserve(v.dim());
  for (const auto& c : v.coords()) {
    out.scaled.emplace_back(c.get_num() * (den / c.get_den()));
  }
  return out;
}

}  // namespace multideal
