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

#include "multideal/multiplier.hpp"

#include <stdexcept>

#include "lattice_box.hpp"
#include "multideal/error.hpp"

namespace multideal {
namespace {

void require_positive(const BigRational& r) {
  if (r <= 0) throw InvalidArgument("coefficient r must be positive");
}

std::int64_t checked_int64(const BigInt& value) {
  auto v = to_int64(value);
  if (!v) throw InvalidArgument("enumeration box coordinate out of range");
  return *v;
}

}  // namespace

Exponent multiplier_box(const MonomialIdeal& ideal, const BigRational& r) {
  require_positive(r);
  const Exponent a = ideal.max_exponents();
  std::vector<Exponent::value_type> box(ideal.dim());
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    box[i] = checked_int64(ceil_of(r * static_cast<long>(a[i])) + 1);
  }
  return Exponent(std::move(box));
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal,
                               const BigRational& r) {
  if (ideal.is_zero()) throw ZeroIdealError();
  return multiplier_ideal(ideal, newton_polyhedron(ideal), r);
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal,
                               const NewtonPolyhedron& polyhedron,
                               const BigRational& r) {
  if (ideal.is_zero()) throw ZeroIdealError();
  require_positive(r);
  if (polyhedron.dim() != ideal.dim())
    throw DimensionError("polyhedron and ideal differ in dimension");
  const NewtonPolyhedron scaled = scale(polyhedron, r);
  const detail::FacetTester tester(scaled.facets());
  auto minimal = detail::box_upset_minimal(
      multiplier_box(ideal, r), kMaxBoxPoints,
      [&](std::span<const std::int64_t> lambda) {
        return tester.satisfies_shifted(lambda, /*strict=*/true);
      });
  return MonomialIdeal(ideal.dim(), std::move(minimal));
}

bool multiplier_contains(const NewtonPolyhedron& polyhedron,
                         const BigRational& r, const Exponent& lambda) {
  require_positive(r);
  if (lambda.dim() != polyhedron.dim())
    throw DimensionError("exponent and polyhedron differ in dimension");
  // <v, lambda + 1> > r c  <=>  q <v, lambda + 1> > p c
  for (const auto& f : polyhedron.facets()) {
    BigInt lhs = f.slack(lambda) + f.offset + f.normal_sum();
    if (r.get_den() * lhs <= r.get_num() * f.offset) return false;
  }
  return true;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError();
  const NewtonPolyhedron polyhedron = newton_polyhedron(ideal);
  const detail::FacetTester tester(polyhedron.facets());
  const Exponent a = ideal.max_exponents();
  std::vector<Exponent::value_type> box(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) box[i] = a[i] + 1;
  auto minimal = detail::box_upset_minimal(
      Exponent(std::move(box)), kMaxBoxPoints,
      [&](std::span<const std::int64_t> lambda) {
        return tester.satisfies(lambda, /*strict=*/false);
      });
  return MonomialIdeal(ideal.dim(), std::move(minimal));
}

MonomialIdeal floor_ideal(const NewtonPolyhedron& polyhedron,
                          const BigRational& r) {
  require_positive(r);
  const std::size_t n = polyhedron.dim();
  const NewtonPolyhedron scaled = scale(polyhedron, r);

  std::vector<Exponent::value_type> box(n, 0);
  for (const auto& v : scaled.vertices()) {
    for (std::size_t i = 0; i < n; ++i)
      box[i] = std::max(box[i], checked_int64(ceil_of(v[i]) + 1));
  }

  const Exponent bounds(std::move(box));
  const std::size_t total = detail::box_size(bounds, kMaxBoxPoints);
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n - 1; i > 0; --i)
    stride[i - 1] = stride[i] * static_cast<std::size_t>(bounds[i] + 1);

  // covered[idx]: the point is a multiple of a floor already recorded.
  std::vector<bool> covered(total, false);
  const detail::FacetTester tester(scaled.facets());
  const BigRational one = 1;
  std::vector<Exponent> floors;
  detail::for_each_in_box(
      bounds, [&](std::span<const std::int64_t> lambda, std::size_t idx) {
        for (std::size_t i = 0; i < n; ++i) {
          if (lambda[i] > 0 && covered[idx - stride[i]]) {
            covered[idx] = true;
            return;
          }
        }
        if (!tester.satisfies_shifted(lambda, /*strict=*/true)) return;
        // Slide down the diagonal from the corner lambda + 1 as far as rP
        // allows, staying inside the cube [lambda, lambda + 1].
        std::vector<BigRational> corner;
        corner.reserve(n);
        for (auto c : lambda) corner.emplace_back(static_cast<long>(c) + 1);
        const RatVec top(corner);
        BigRational depth = one;
        for (const auto& f : scaled.facets()) {
          BigRational room = f.slack(top) / f.normal_sum();
          if (room < depth) depth = room;
        }
        if (depth <= 0)
          throw std::logic_error("floor_ideal: corner outside the interior");
        std::vector<BigRational> mu = std::move(corner);
        for (auto& c : mu) c -= depth;
        RatVec witness(std::move(mu));
        if (classify(scaled, witness) == PointClass::Exterior)
          throw std::logic_error("floor_ideal: witness outside rP");
        std::vector<Exponent::value_type> rounded(n);
        for (std::size_t i = 0; i < n; ++i)
          rounded[i] = checked_int64(floor_of(witness[i]));
        covered[idx] = true;
        floors.emplace_back(std::move(rounded));
      });
  return MonomialIdeal(n, std::move(floors));
}

}  // namespace multideal
