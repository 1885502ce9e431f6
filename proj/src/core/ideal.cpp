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

#include "multideal/ideal.hpp"

#include <algorithm>
#include <functional>

#include "multideal/error.hpp"

namespace multideal {

bool divides(const Exponent& mu, const Exponent& lambda) {
  if (mu.dim() != lambda.dim())
    throw DimensionError("divides: exponents of different dimension");
  for (std::size_t i = 0; i < mu.dim(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Exponent> exponents)
    : dim_(dim) {
  if (dim == 0) throw InvalidArgument("ideal in zero variables");
  for (const auto& e : exponents) {
    if (e.dim() != dim)
      throw DimensionError("generator has " + std::to_string(e.dim()) +
                           " coordinates, expected " + std::to_string(dim));
  }
  // A divisor is componentwise <=, hence lexicographically <=: after an
  // ascending sort every element only needs checking against the minimal
  // elements already kept.
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()),
                  exponents.end());
  for (auto& e : exponents) {
    bool redundant = std::any_of(
        generators_.begin(), generators_.end(),
        [&](const Exponent& kept) { return divides(kept, e); });
    if (!redundant) generators_.push_back(std::move(e));
  }
  std::reverse(generators_.begin(), generators_.end());
}

MonomialIdeal MonomialIdeal::zero(std::size_t dim) { return {dim, {}}; }

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  return {dim, {Exponent(dim)}};
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().total_degree() == 0;
}

Exponent MonomialIdeal::max_exponents() const {
  std::vector<Exponent::value_type> out(dim_, 0);
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < dim_; ++i) out[i] = std::max(out[i], g[i]);
  }
  return Exponent(std::move(out));
}

MonomialIdeal minimalize(std::size_t dim, std::vector<Exponent> exponents) {
  return MonomialIdeal(dim, std::move(exponents));
}

bool contains(const MonomialIdeal& ideal, const Exponent& lambda) {
  if (lambda.dim() != ideal.dim())
    throw DimensionError("contains: exponent of different dimension");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Exponent& g) { return divides(g, lambda); });
}

bool is_subideal(const MonomialIdeal& ideal, const MonomialIdeal& other) {
  if (ideal.dim() != other.dim())
    throw DimensionError("is_subideal: ideals of different dimension");
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Exponent& g) { return contains(other, g); });
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim())
    throw DimensionError("product: ideals of different dimension");
  std::vector<Exponent> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) sums.push_back(g + h);
  }
  return MonomialIdeal(a.dim(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned m) {
  if (m == 0) throw InvalidArgument("power: exponent must be >= 1");
  MonomialIdeal result = ideal;
  for (unsigned k = 1; k < m; ++k) result = product(result, ideal);
  return result;
}

MonomialIdeal permute(const MonomialIdeal& ideal,
                      std::span<const std::size_t> perm) {
  const std::size_t n = ideal.dim();
  if (perm.size() != n) throw DimensionError("permute: wrong permutation size");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("permute: not a permutation");
    seen[p] = true;
  }
  std::vector<Exponent> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent::value_type> c(n);
    for (std::size_t i = 0; i < n; ++i) c[perm[i]] = g[i];
    out.emplace_back(std::move(c));
  }
  return MonomialIdeal(n, std::move(out));
}

}  // namespace multideal
