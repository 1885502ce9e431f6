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

#include "lattice_box.hpp"

#include <limits>

#include "multideal/error.hpp"

namespace multideal::detail {

std::size_t box_size(const Exponent& box, std::size_t limit) {
  std::size_t total = 1;
  for (auto b : box.coords()) {
    const auto side = static_cast<std::size_t>(b) + 1;
    if (total > limit / side)
      throw InvalidArgument("enumeration box exceeds " + std::to_string(limit) +
                            " lattice points");
    total *= side;
  }
  return total;
}

FacetTester::FacetTester(const std::vector<Facet>& facets) : facets_(&facets) {
  if (facets.empty()) {
    fast_ = true;
    return;
  }
  dim_ = facets.front().normal.size();
  fast_ = true;
  for (const auto& f : facets) {
    for (const auto& v : f.normal) {
      auto x = to_int64(v);
      if (!x) fast_ = false;
      normals_.push_back(x.value_or(0));
    }
    auto c = to_int64(f.offset);
    if (!c) fast_ = false;
    offsets_.push_back(c.value_or(0));
  }
}

bool FacetTester::satisfies(std::span<const std::int64_t> x,
                            bool strict) const {
  if (!fast_) return slow_satisfies(x, 0, strict);
  const std::size_t count = offsets_.size();
  for (std::size_t f = 0; f < count; ++f) {
    const std::int64_t* v = normals_.data() + f * dim_;
    __int128 sum = -static_cast<__int128>(offsets_[f]);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (__builtin_add_overflow(sum, static_cast<__int128>(v[i]) * x[i], &sum))
        return slow_satisfies(x, 0, strict);
    }
    if (strict ? sum <= 0 : sum < 0) return false;
  }
  return true;
}

bool FacetTester::satisfies_shifted(std::span<const std::int64_t> x,
                                    bool strict) const {
  std::int64_t buffer[16];
  std::vector<std::int64_t> heap;
  std::int64_t* shifted = buffer;
  if (x.size() > 16) {
    heap.resize(x.size());
    shifted = heap.data();
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == std::numeric_limits<std::int64_t>::max())
      return slow_satisfies(x, 1, strict);
    shifted[i] = x[i] + 1;
  }
  return satisfies(std::span<const std::int64_t>(shifted, x.size()), strict);
}

bool FacetTester::slow_satisfies(std::span<const std::int64_t> x,
                                 std::int64_t shift, bool strict) const {
  for (const auto& f : *facets_) {
    BigInt sum = -f.offset;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum += f.normal[i] * (BigInt(static_cast<long>(x[i])) + shift);
    }
    const int s = sgn(sum);
    if (strict ? s <= 0 : s < 0) return false;
  }
  return true;
}

}  // namespace multideal::detail
