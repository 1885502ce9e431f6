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


#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "multideal/error.hpp"
#include "multideal/ideal_io.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/polyhedron.hpp"
#include "multideal/threshold.hpp"
#include "support/test_support.hpp"

namespace {

using namespace multideal;
using namespace multideal::testing;

BigRational q(long p, long d = 1) { return make_rational(p, d); }

// Where the diagonal enters conv(gens) + R^2_{>=0}: each generator alone
// reaches it at max(g), each segment between two generators crosses it at
// most once.
BigRational remoteness_2d(const std::vector<Coords>& gens) {
  BigRational best = std::max(gens[0][0], gens[0][1]);
  for (const auto& g : gens) best = std::min(best, BigRational(std::max(g[0], g[1])));
  for (const auto& g : gens)
    for (const auto& h : gens) {
      const long dg = g[1] - g[0], dh = h[1] - h[0];
      if (dg <= 0 || dh >= 0) continue;
      const BigRational s = make_rational(dg, dg - dh);
      best = std::min(best, BigRational(g[0] + s * (h[0] - g[0])));
    }
  return best;
}

}  // namespace

TEST_CASE("thresholds of known ideals") {
  const LctResult a = lct(parse_ideal("x^8, y^6"));
  CHECK(*a.threshold == q(7, 24));
  CHECK(a.remoteness == q(24, 7));
  CHECK_FALSE(a.trivial_at_one);

  const LctResult b = lct(parse_ideal("x*y^4*z^6, x^5*y, y^7*z, x^8*z^8"));
  CHECK(*b.threshold == q(68, 191));
  REQUIRE(b.witness);
  CHECK(b.witness->offset == 191);
  CHECK(b.witness->normal == std::vector<BigInt>{33, 26, 9});
  CHECK(b.witness_vertices.size() == 3);

  const LctResult c = lct(parse_ideal("x, y"));
  CHECK(*c.threshold == 2);
  CHECK(c.trivial_at_one);

  const LctResult d = lct(parse_ideal("x^2, y^3"));
  CHECK(*d.threshold == q(5, 6));
  CHECK_FALSE(d.trivial_at_one);

  const LctResult e = lct(parse_ideal("x", 3));
  CHECK(*e.threshold == 1);
  CHECK_FALSE(e.trivial_at_one);

  const LctResult u = lct(MonomialIdeal::unit(2));
  CHECK_FALSE(u.threshold);
  CHECK(u.remoteness == 0);
  CHECK_FALSE(u.witness);
  CHECK(u.trivial_at_one);

  CHECK_THROWS_AS(lct(MonomialIdeal::zero(2)), ZeroIdealError);
}

TEST_CASE("two-variable thresholds against the segment oracle") {
  IdealGenerator gen(51);
  for (int trial = 0; trial < 300; ++trial) {
    const MonomialIdeal a = gen(2, 2, 6, 15);
    const LctResult res = lct(a);
    CHECK(res.remoteness == remoteness_2d(generator_coords(a)));
    CHECK(*res.threshold * res.remoteness == 1);
  }
}

TEST_CASE("diagonal closed form") {
  const std::vector<std::int64_t> a = {2, 3, 7};
  CHECK(lct_diagonal(a) == q(41, 42));
  const std::vector<std::int64_t> b = {4};
  CHECK(lct_diagonal(b) == q(1, 4));
  const std::vector<std::int64_t> bad = {0, 2};
  CHECK_THROWS_AS(lct_diagonal(bad), InvalidArgument);
}

TEST_CASE("extremal sequence") {
  const auto seq = extremal_sequence(6);
  REQUIRE(seq.size() == 6);
  CHECK(seq[0].first == 2);
  for (std::size_t k = 0; k + 1 < seq.size(); ++k)
    CHECK(seq[k + 1].first == seq[k].first * seq[k].first + seq[k].first);
  CHECK(seq[5].first == BigInt("10650056950806"));
  // t_k is the threshold of the diagonal ideal with exponents
  // (2, a_1 + 1, ..., a_{k-1} + 1).
  std::vector<std::int64_t> tuple = {2};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(seq[k].second == (seq[k].first - 1) / BigRational(seq[k].first));
    CHECK(lct_diagonal(tuple) == seq[k].second);
    tuple.push_back(to_int64(seq[k].first).value() + 1);
  }
  CHECK_THROWS_AS(extremal_sequence(0), InvalidArgument);
}

TEST_CASE("threshold is the first r with a nontrivial multiplier ideal") {
  IdealGenerator gen(52);
  for (int trial = 0; trial < 60; ++trial) {
    const MonomialIdeal a = gen(1, 3, 5, 9);
    const LctResult res = lct(a);
    const BigRational t = *res.threshold;
    CHECK(multiplier_ideal(a, t * q(99, 100)).is_unit());
    CHECK_FALSE(multiplier_ideal(a, t).is_unit());
    CHECK(res.trivial_at_one == multiplier_ideal(a, q(1)).is_unit());
  }
}

TEST_CASE("invariances") {
  IdealGenerator gen(53);
  for (int trial = 0; trial < 100; ++trial) {
    const MonomialIdeal a = gen(2, 4, 5, 8);
    const BigRational t = *lct(a).threshold;
    std::vector<std::size_t> perm(a.dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    CHECK(*lct(permute(a, perm)).threshold == t);
    CHECK(*lct(integral_closure(a)).threshold == t);
    const unsigned m = static_cast<unsigned>(gen.uniform(2, 4));
    CHECK(*lct(power(a, m)).threshold == t / m);
    CHECK(canonical_permutation(permute(a, perm)) == canonical_permutation(a));
  }
}

TEST_CASE("witness facet reduces to a simplex") {
  IdealGenerator gen(54);
  for (int trial = 0; trial < 100; ++trial) {
    const MonomialIdeal a = gen(2, 4, 7, 9);
    const LctResult res = lct(a);
    REQUIRE(res.witness);
    for (const auto& v : res.witness_vertices) CHECK(res.witness->slack(v) == 0);
    CHECK(lct(MonomialIdeal(a.dim(), res.witness_vertices)).threshold ==
          res.threshold);
  }
}

TEST_CASE("search in one variable") {
  const auto records = threshold_search(1, 9, 2);
  REQUIRE(records.size() == 8);
  for (long a = 9; a >= 2; --a) {
    CHECK(records[9 - a].threshold == q(1, a));
    CHECK(records[9 - a].witness == MonomialIdeal(1, {Exponent{a}}));
  }
}

TEST_CASE("search matches exhaustive subsets") {
  for (std::size_t gens : {1u, 2u, 3u}) {
    const std::int64_t max_exp = 3;
    const std::vector<Coords> points =
        box_points({max_exp, max_exp}, [](const Coords& p) { return p != Coords{0, 0}; });
    std::set<BigRational> expected;
    std::vector<std::size_t> idx(gens);
    // All multisets of `gens` points.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
      if (depth == gens) {
        std::vector<Coords> chosen;
        for (auto i : idx) chosen.push_back(points[i]);
        const BigRational t = *lct(ideal_of(2, chosen)).threshold;
        if (t < 1) expected.insert(t);
        return;
      }
      for (std::size_t i = from; i < points.size(); ++i) {
        idx[depth] = i;
        rec(depth + 1, i);
      }
    };
    rec(0, 0);
    const auto records = threshold_search(2, max_exp, gens);
    std::vector<BigRational> got;
    for (const auto& r : records) {
      got.push_back(r.threshold);
      CHECK(lct(r.witness).threshold == r.threshold);
      CHECK(canonical_permutation(r.witness) == r.witness);
      CHECK(r.witness.generators().size() <= gens);
    }
    CHECK(got == std::vector<BigRational>(expected.begin(), expected.end()));
  }
}

TEST_CASE("search options") {
  SearchOptions opts;
  opts.dim = 2;
  opts.max_exponent = 6;
  opts.max_generators = 3;
  const auto serial = threshold_search(opts);
  CHECK(serial.back().threshold == q(5, 6));
  opts.jobs = 3;
  const auto parallel = threshold_search(opts);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(parallel[i].threshold == serial[i].threshold);
    CHECK(parallel[i].witness == serial[i].witness);
  }

  SearchOptions diag;
  diag.dim = 2;
  diag.max_exponent = 6;
  diag.family = SearchFamily::kDiagonal;
  const auto d = threshold_search(diag);
  CHECK(d.back().threshold == q(5, 6));
  CHECK(format_ideal(d.back().witness) == "x^2, y^3");
  for (const auto& r : d) {
    std::vector<std::int64_t> a;
    for (std::size_t i = 0; i < 2; ++i)
      for (const auto& g : r.witness.generators())
        if (g[i] > 0) a.push_back(g[i]);
    CHECK(lct_diagonal(a) == r.threshold);
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i].threshold < d[i + 1].threshold);

  CHECK(threshold_search(0, 3, 2).empty());
  CHECK(threshold_search(2, 0, 2).empty());
  CHECK(threshold_search(2, 3, 0).empty());
}
