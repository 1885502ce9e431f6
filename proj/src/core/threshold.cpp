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

#include "multideal/threshold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "multideal/error.hpp"
#include "multideal/multiplier.hpp"

namespace multideal {

LctResult lct(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdealError();
  return lct(ideal, newton_polyhedron(ideal));
}

LctResult lct(const MonomialIdeal& ideal, const NewtonPolyhedron& polyhedron) {
  if (ideal.is_zero()) throw ZeroIdealError();
  LctResult result;
  for (const auto& f : polyhedron.facets()) {
    if (f.offset <= 0) continue;
    BigRational t = make_rational(f.normal_sum(), f.offset);
    if (!result.threshold || t < *result.threshold) {
      result.threshold = t;
      result.witness = f;
    }
  }
  result.remoteness = diagonal_intersection(polyhedron);
  if (result.witness) {
    for (const auto& v : polyhedron.vertices_on(*result.witness)) {
      std::vector<Exponent::value_type> c;
      for (const auto& x : v.coords()) {
        auto value = to_int64(floor_of(x));
        if (x.get_den() != 1 || !value)
          throw InvalidArgument("lct: polyhedron has non-lattice vertices");
        c.push_back(*value);
      }
      result.witness_vertices.emplace_back(std::move(c));
    }
  }
  result.trivial_at_one =
      multiplier_contains(polyhedron, BigRational(1), Exponent(ideal.dim()));
  return result;
}

BigRational lct_diagonal(std::span<const std::int64_t> exponents) {
  if (exponents.empty()) throw InvalidArgument("lct_diagonal: no exponents");
  BigRational sum = 0;
  for (auto a : exponents) {
    if (a < 1) throw InvalidArgument("lct_diagonal: exponents must be >= 1");
    sum += make_rational(1, static_cast<long>(a));
  }
  return sum;
}

std::vector<std::pair<BigInt, BigRational>> extremal_sequence(std::size_t n) {
  if (n < 1) throw InvalidArgument("extremal_sequence: n must be >= 1");
  std::vector<std::pair<BigInt, BigRational>> out;
  BigInt a = 2;
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(a, make_rational(a - 1, a));
    a = a * a + a;
  }
  return out;
}

MonomialIdeal canonical_permutation(const MonomialIdeal& ideal) {
  std::vector<std::size_t> perm(ideal.dim());
  std::iota(perm.begin(), perm.end(), 0);
  MonomialIdeal best = ideal;
  while (std::next_permutation(perm.begin(), perm.end())) {
    MonomialIdeal candidate = permute(ideal, perm);
    if (candidate.generators() < best.generators()) best = std::move(candidate);
  }
  return best;
}

namespace {

using Coords = std::vector<Exponent::value_type>;

bool comparable(const Exponent& a, const Exponent& b) {
  return divides(a, b) || divides(b, a);
}

void collect_antichains(const std::vector<Exponent>& points, std::size_t dim,
                        std::size_t max_size, std::size_t start,
                        std::vector<Exponent>& chosen,
                        std::vector<MonomialIdeal>& out) {
  for (std::size_t i = start; i < points.size(); ++i) {
    const Exponent& p = points[i];
    if (std::any_of(chosen.begin(), chosen.end(),
                    [&](const Exponent& c) { return comparable(c, p); })) {
      continue;
    }
    chosen.push_back(p);
    MonomialIdeal ideal(dim, chosen);
    if (canonical_permutation(ideal) == ideal) out.push_back(std::move(ideal));
    if (chosen.size() < max_size)
      collect_antichains(points, dim, max_size, i + 1, chosen, out);
    chosen.pop_back();
  }
}

void collect_diagonal(std::size_t dim, std::int64_t max_exponent,
                      Coords& a, std::vector<MonomialIdeal>& out) {
  if (a.size() == dim) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < dim; ++i) {
      Coords c(dim, 0);
      c[i] = a[i];
      gens.emplace_back(std::move(c));
    }
    out.emplace_back(dim, std::move(gens));
    return;
  }
  for (std::int64_t v = a.empty() ? 1 : a.back(); v <= max_exponent; ++v) {
    a.push_back(v);
    collect_diagonal(dim, max_exponent, a, out);
    a.pop_back();
  }
}

std::vector<MonomialIdeal> search_candidates(const SearchOptions& options) {
  std::vector<MonomialIdeal> out;
  if (options.family == SearchFamily::kDiagonal) {
    Coords a;
    collect_diagonal(options.dim, options.max_exponent, a, out);
    return out;
  }
  // Every nonzero exponent of the box, ascending; the unit ideal has an
  // infinite threshold and is skipped.
  std::vector<Exponent> points;
  Coords c(options.dim, 0);
  while (true) {
    std::size_t i = options.dim;
    while (i > 0 && c[i - 1] == options.max_exponent) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
    points.emplace_back(c);
  }
  std::vector<Exponent> chosen;
  collect_antichains(points, options.dim, options.max_generators, 0, chosen,
                     out);
  return out;
}

}  // namespace

std::vector<ThresholdRecord> threshold_search(const SearchOptions& options) {
  if (options.dim == 0 || options.max_exponent < 1 ||
      (options.family == SearchFamily::kAll && options.max_generators == 0)) {
    return {};
  }
  const std::vector<MonomialIdeal> candidates = search_candidates(options);

  std::vector<std::optional<BigRational>> thresholds(candidates.size());
  const unsigned jobs = std::max(1u, options.jobs);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < candidates.size(); i += jobs) {
      thresholds[i] = lct(candidates[i]).threshold;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  std::map<BigRational, std::size_t> first_seen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& t = thresholds[i];
    if (t && *t < 1) first_seen.emplace(*t, i);
  }
  std::vector<ThresholdRecord> out;
  out.reserve(first_seen.size());
  for (const auto& [t, i] : first_seen) out.push_back({t, candidates[i]});
  return out;
}

std::vector<ThresholdRecord> threshold_search(std::size_t dim,
                                              std::int64_t max_exponent,
                                              std::size_t max_generators) {
  SearchOptions options;
  options.dim = dim;
  options.max_exponent = max_exponent;
  options.max_generators = max_generators;
  return threshold_search(options);
}

}  // namespace multideal
