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

#include "multideal/oracle.hpp"

#include "lattice_box.hpp"
#include "lp_oracle.hpp"
#include "multideal/error.hpp"
#include "multideal/ideal_io.hpp"
#include "multideal/multiplier.hpp"

namespace multideal::oracle {
namespace {

void check_inputs(std::span<const Exponent> generators, std::size_t dim) {
  if (generators.empty())
    throw InvalidArgument("lp_classify: empty generator set");
  for (const auto& g : generators) {
    if (g.dim() != dim)
      throw DimensionError("lp_classify: generator and point differ in dimension");
  }
}

LpVerdict verdict_from_margin(const BigRational& margin) {
  const int s = sgn(margin);
  if (s > 0) return {PointClass::Interior, margin};
  if (s == 0) return {PointClass::Boundary, BigRational(0)};
  return {PointClass::Exterior, BigRational(0)};
}

std::string describe(const Exponent& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

std::string describe(const RatVec& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  return out + ")";
}

Exponent widen(const Exponent& box, Exponent::value_type margin) {
  std::vector<Exponent::value_type> out(box.coords().begin(), box.coords().end());
  for (auto& c : out) c += margin;
  return Exponent(std::move(out));
}

}  // namespace

LpVerdict lp_classify(std::span<const Exponent> generators, const RatVec& p) {
  return lp_classify(generators, BigRational(1), p);
}

LpVerdict lp_classify(std::span<const Exponent> generators,
                      const BigRational& r, const RatVec& p) {
  check_inputs(generators, p.dim());
  if (r <= 0) throw InvalidArgument("lp_classify: r must be positive");
  const IntegerForm point = clear_denominators(p);
  return verdict_from_margin(detail::max_diagonal_margin(
      generators, r.get_num(), r.get_den(), point.scaled, point.denominator));
}

MonomialIdeal brute_multiplier(std::span<const Exponent> generators,
                               const BigRational& r, const Exponent& box,
                               const PointVisitor& visit) {
  check_inputs(generators, box.dim());
  if (r <= 0) throw InvalidArgument("brute_multiplier: r must be positive");
  detail::box_size(box, kMaxBoxPoints);
  const std::size_t n = box.dim();
  std::vector<Exponent> members;
  std::vector<BigInt> shifted(n);
  detail::for_each_in_box(box, [&](std::span<const std::int64_t> lambda,
                                   std::size_t) {
    for (std::size_t i = 0; i < n; ++i)
      shifted[i] = static_cast<long>(lambda[i]) + 1;
    const LpVerdict verdict = verdict_from_margin(detail::max_diagonal_margin(
        generators, r.get_num(), r.get_den(), shifted, BigInt(1)));
    if (visit || verdict.cls == PointClass::Interior) {
      Exponent point(std::vector<Exponent::value_type>(lambda.begin(), lambda.end()));
      if (visit) visit(point, verdict);
      if (verdict.cls == PointClass::Interior) members.push_back(std::move(point));
    }
  });
  return minimalize(n, std::move(members));
}

MonomialIdeal brute_closure(std::span<const Exponent> generators,
                            const Exponent& box) {
  check_inputs(generators, box.dim());
  detail::box_size(box, kMaxBoxPoints);
  const std::size_t n = box.dim();
  std::vector<Exponent> members;
  std::vector<BigInt> point(n);
  const BigInt one = 1;
  detail::for_each_in_box(box, [&](std::span<const std::int64_t> lambda,
                                   std::size_t) {
    for (std::size_t i = 0; i < n; ++i) point[i] = static_cast<long>(lambda[i]);
    const BigRational margin =
        detail::max_diagonal_margin(generators, one, one, point, one);
    if (margin >= 0)
      members.emplace_back(std::vector<Exponent::value_type>(lambda.begin(), lambda.end()));
  });
  return minimalize(n, std::move(members));
}

VerifyReport verify(const MonomialIdeal& ideal,
                    const std::optional<BigRational>& r_opt) {
  if (ideal.is_zero()) throw ZeroIdealError();
  const BigRational r = r_opt.value_or(BigRational(1));
  if (r <= 0) throw InvalidArgument("verify: r must be positive");

  VerifyReport report;
  const auto& gens = ideal.generators();
  const NewtonPolyhedron polyhedron = newton_polyhedron(ideal);
  const NewtonPolyhedron scaled = scale(polyhedron, r);

  auto compare_point = [&](const NewtonPolyhedron& p, const BigRational& factor,
                           const RatVec& point, const std::string& what) {
    ++report.points_checked;
    const PointClass facet_class = classify(p, point);
    const LpVerdict lp = lp_classify(gens, factor, point);
    if (facet_class != lp.cls) {
      report.mismatches.push_back(what + " " + describe(point) + ": facets say " +
                                  to_string(facet_class) + ", LP says " +
                                  to_string(lp.cls));
    }
    if (lp.cls == PointClass::Exterior) {
      bool certified = false;
      for (const auto& f : p.facets()) certified = certified || f.slack(point) < 0;
      if (!certified)
        report.mismatches.push_back(what + " " + describe(point) +
                                    ": exterior without a separating facet");
    }
  };

  for (const auto& g : gens) compare_point(polyhedron, 1, RatVec(g), "generator");
  for (const auto& v : polyhedron.vertices()) {
    compare_point(polyhedron, 1, v, "vertex");
    compare_point(scaled, r, r * v, "scaled vertex");
  }

  // Multiplier ideal: every box point, one row beyond the search box.
  const Exponent box = widen(multiplier_box(ideal, r), 1);
  const MonomialIdeal brute = brute_multiplier(
      gens, r, box, [&](const Exponent& lambda, const LpVerdict& lp) {
        ++report.points_checked;
        const PointClass facet_class = classify(scaled, lambda + Exponent::ones(lambda.dim()));
        if (facet_class != lp.cls) {
          report.mismatches.push_back(
              "lambda + 1 for lambda = " + describe(lambda) + ": facets say " +
              to_string(facet_class) + ", LP says " + to_string(lp.cls));
        }
      });
  const MonomialIdeal fast = multiplier_ideal(ideal, polyhedron, r);
  if (brute != fast) {
    report.mismatches.push_back("multiplier ideal: facets give " +
                                format_ideal(fast) + ", LP gives " +
                                format_ideal(brute));
  }

  const Exponent closure_box = widen(ideal.max_exponents(), 2);
  const MonomialIdeal brute_bar = brute_closure(gens, closure_box);
  const MonomialIdeal fast_bar = integral_closure(ideal);
  if (brute_bar != fast_bar) {
    report.mismatches.push_back("integral closure: facets give " +
                                format_ideal(fast_bar) + ", LP gives " +
                                format_ideal(brute_bar));
  }
  return report;
}

}  // namespace multideal::oracle
