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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "multideal/ideal.hpp"
#include "multideal/ideal_io.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/oracle.hpp"
#include "multideal/polyhedron.hpp"
#include "multideal/threshold.hpp"
#include "support/test_support.hpp"

namespace {

using namespace multideal;
using multideal::testing::Coords;
using multideal::testing::IdealGenerator;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

BigRational q(long p, long d = 1) { return make_rational(p, d); }

Exponent ones(std::size_t n) { return Exponent::ones(n); }

// 1. J((x^8, y^6)) and the boundary point x^4 y^3.
Outcome golden_multiplier() {
  Outcome out;
  const MonomialIdeal a = parse_ideal("x^8, y^6");
  const MonomialIdeal j = multiplier_ideal(a, q(1));
  const MonomialIdeal expected(
      2, {Exponent{6, 0}, Exponent{5, 1}, Exponent{4, 2}, Exponent{2, 3},
          Exponent{1, 4}, Exponent{0, 5}});
  out.require(j == expected, "J(x^8, y^6) = " + format_ideal(j));
  out.require(classify(newton_polyhedron(a), Exponent{4, 3}) ==
                  PointClass::Boundary,
              "(4,3) is not on the boundary");
  out.require(!contains(j, Exponent{3, 2}), "x^3 y^2 is in J");
  return out;
}

// 2. Threshold of (x y^4 z^6, x^5 y, y^7 z, x^8 z^8).
Outcome golden_threshold() {
  Outcome out;
  const MonomialIdeal a = parse_ideal("x*y^4*z^6, x^5*y, y^7*z, x^8*z^8");
  const LctResult res = lct(a);
  out.require(res.threshold && *res.threshold == q(68, 191),
              "t = " + (res.threshold ? to_string(*res.threshold) : "inf"));
  out.require(res.remoteness == q(191, 68),
              "remoteness = " + to_string(res.remoteness));
  auto has = [&](const Exponent& e) {
    return std::find(res.witness_vertices.begin(), res.witness_vertices.end(),
                     e) != res.witness_vertices.end();
  };
  out.require(has(Exponent{1, 4, 6}) && has(Exponent{5, 1, 0}) &&
                  has(Exponent{0, 7, 1}),
              "witness facet misses one of the triangle's vertices");
  out.require(!has(Exponent{8, 0, 8}), "x^8 z^8 lies on the witness facet");
  return out;
}

// 3. Diagonal closed form against the general facet computation.
Outcome diagonal_closed_form() {
  Outcome out;
  const std::vector<std::pair<Coords, BigRational>> known = {
      {{2}, q(1, 2)}, {{2, 3}, q(5, 6)}, {{2, 3, 7}, q(41, 42)}};
  for (const auto& [a, t] : known) {
    out.require(lct_diagonal(a) == t, "lct_diagonal of a known tuple");
  }
  IdealGenerator gen(0xD1A6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.uniform(2, 5);
    Coords a(n);
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::int64_t>(gen.uniform(1, 20));
      Coords c(n, 0);
      c[i] = a[i];
      gens.emplace_back(c);
    }
    const LctResult res = lct(MonomialIdeal(n, gens));
    out.require(res.threshold && *res.threshold == lct_diagonal(a),
                "diagonal ideal disagrees with lct_diagonal");
  }
  return out;
}

// 4. a_{k+1} = a_k^2 + a_k.
Outcome extremal() {
  Outcome out;
  const auto seq = extremal_sequence(5);
  const std::vector<long> a = {2, 6, 42, 1806, 3263442};
  out.require(seq.size() == 5, "length");
  for (std::size_t k = 0; k < a.size() && k < seq.size(); ++k) {
    out.require(seq[k].first == a[k], "a_" + std::to_string(k + 1));
    out.require(seq[k].second == q(a[k] - 1, a[k]), "t_" + std::to_string(k + 1));
  }
  return out;
}

// 5. LP oracle against the facet path on random ideals.
Outcome oracle_equivalence() {
  Outcome out;
  IdealGenerator gen(0x0AC1E);
  const std::vector<BigRational> coefficients = {q(1, 3), q(1, 2), q(1), q(3, 2),
                                                 q(2)};
  std::size_t points = 0;
  for (int trial = 0; trial < 200 && out.ok; ++trial) {
    const MonomialIdeal a = gen(2, 4, 6, 12);
    const NewtonPolyhedron p = newton_polyhedron(a);
    for (const auto& r : coefficients) {
      const NewtonPolyhedron rp = scale(p, r);
      Exponent box = multiplier_box(a, r);
      box = box + ones(box.dim());
      const MonomialIdeal brute = oracle::brute_multiplier(
          a.generators(), r, box,
          [&](const Exponent& lambda, const oracle::LpVerdict& v) {
            ++points;
            if (classify(rp, lambda + ones(lambda.dim())) != v.cls)
              out.require(false, "classification differs at lambda+1, lambda=" +
                                     format_monomial(lambda) + " in " +
                                     format_ideal(a));
          });
      out.require(brute == multiplier_ideal(a, p, r),
                  "J(" + to_string(r) + " * (" + format_ideal(a) +
                      ")) differs from the LP oracle");
    }
  }
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(points) +
                " box points";
  return out;
}

// 6. Structural properties, 100 random instances each.
Outcome property_suite() {
  Outcome out;
  const std::vector<BigRational> rs = {q(1, 3), q(1, 2), q(2, 3), q(1),
                                       q(3, 2), q(2),    q(5, 2)};
  IdealGenerator gen(0x9E0);
  auto pick_r = [&] { return rs[gen.uniform(0, rs.size() - 1)]; };
  const int kInstances = 100;

  for (int i = 0; i < kInstances; ++i) {  // monotonicity in r
    const MonomialIdeal a = gen(2, 4, 5, 8);
    BigRational r = pick_r(), s = pick_r();
    if (s < r) std::swap(r, s);
    out.require(is_subideal(multiplier_ideal(a, s), multiplier_ideal(a, r)),
                "monotonicity fails for " + format_ideal(a));
  }
  for (int i = 0; i < kInstances; ++i) {  // power scaling
    const MonomialIdeal a = gen(2, 3, 4, 6);
    const unsigned m = static_cast<unsigned>(gen.uniform(2, 3));
    const BigRational r = pick_r();
    out.require(multiplier_ideal(power(a, m), r) ==
                    multiplier_ideal(a, r * static_cast<long>(m)),
                "power scaling fails for " + format_ideal(a));
  }
  for (int i = 0; i < kInstances; ++i) {  // closure invariance
    const MonomialIdeal a = gen(2, 4, 5, 8);
    const BigRational r = pick_r();
    out.require(multiplier_ideal(integral_closure(a), r) == multiplier_ideal(a, r),
                "closure invariance fails for " + format_ideal(a));
  }
  for (int i = 0; i < kInstances; ++i) {  // integrally closed output
    const MonomialIdeal a = gen(2, 4, 5, 8);
    const MonomialIdeal j = multiplier_ideal(a, pick_r());
    out.require(integral_closure(j) == j,
                "J is not integrally closed for " + format_ideal(a));
  }
  for (int i = 0; i < kInstances; ++i) {  // round-down of rP
    const MonomialIdeal a = gen(2, 4, 5, 8);
    const BigRational r = pick_r();
    out.require(floor_ideal(newton_polyhedron(a), r) == multiplier_ideal(a, r),
                "floor ideal differs for " + format_ideal(a));
  }
  for (int i = 0; i < kInstances; ++i) {  // reciprocity
    const MonomialIdeal a = gen(2, 5, 6, 10);
    const LctResult res = lct(a);
    out.require(res.threshold && *res.threshold * res.remoteness == 1,
                "t * m != 1 for " + format_ideal(a));
  }
  for (int i = 0; i < kInstances; ++i) {  // triviality boundary
    const MonomialIdeal a = gen(2, 4, 5, 8);
    const BigRational t = *lct(a).threshold;
    for (long k : {2L, 10L, 1000L}) {
      for (const BigRational& r :
           {BigRational(t * q(k - 1, k)), t, BigRational(t * q(k + 1, k))}) {
        const bool unit = multiplier_ideal(a, r).is_unit();
        out.require(unit == (r < t), "triviality boundary fails for " +
                                         format_ideal(a) + " at r = " +
                                         to_string(r));
      }
    }
  }
  for (int i = 0; i < kInstances; ++i) {  // simplicial reduction
    const MonomialIdeal a = gen(2, 4, 6, 10);
    const LctResult res = lct(a);
    const std::size_t n = a.dim();
    const MonomialIdeal face(n, res.witness_vertices);
    out.require(lct(face).threshold == res.threshold,
                "witness vertices change the threshold of " + format_ideal(a));
    // Some <= n of them already suffice.
    const auto& verts = res.witness_vertices;
    bool found = false;
    const std::size_t subsets = std::size_t{1} << verts.size();
    for (std::size_t mask = 1; mask < subsets && !found; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) > n) continue;
      std::vector<Exponent> pick;
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (mask >> b & 1) pick.push_back(verts[b]);
      found = lct(MonomialIdeal(n, pick)).threshold == res.threshold;
    }
    out.require(found, "no simplicial sub-ideal for " + format_ideal(a));
  }
  return out;
}

// 7. Largest threshold below 1 in two variables.
Outcome search_experiment() {
  Outcome out;
  const auto records = threshold_search(2, 6, 3);
  out.require(!records.empty(), "no thresholds found");
  if (!records.empty()) {
    out.require(records.back().threshold == q(5, 6),
                "largest threshold below 1 is " +
                    to_string(records.back().threshold));
    out.detail += (out.detail.empty() ? "" : "; ") +
                  std::to_string(records.size()) + " distinct thresholds, max " +
                  to_string(records.back().threshold) + " from " +
                  format_ideal(records.back().witness);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "golden multiplier ideal of (x^8, y^6)", 1, golden_multiplier},
      {"AC2", "golden threshold 68/191", 1, golden_threshold},
      {"AC3", "diagonal closed form", 10, diagonal_closed_form},
      {"AC4", "extremal sequence", 1, extremal},
      {"AC5", "LP oracle equivalence", 300, oracle_equivalence},
      {"AC6", "property suite", 300, property_suite},
      {"AC7", "threshold search dim 2", 120, search_experiment},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds >= c.time_limit_s) {
      if (outcome.ok) outcome.detail = "too slow";
      outcome.ok = false;
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] %s %s (%.2fs, limit %.0fs)%s%s\n",
                outcome.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.time_limit_s, outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
