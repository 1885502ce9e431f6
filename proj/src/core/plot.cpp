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

#include "multideal/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "multideal/error.hpp"
#include "multideal/ideal_io.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/polyhedron.hpp"

namespace multideal {
namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 48.0;

struct Scene {
  NewtonPolyhedron scaled;
  MonomialIdeal multiplier;
  std::int64_t width;   // lattice window [0, width] x [0, height]
  std::int64_t height;
};

Scene build_scene(const MonomialIdeal& ideal, const BigRational& r) {
  if (ideal.dim() != 2)
    throw DimensionError("plot2d needs an ideal in exactly two variables");
  if (ideal.is_zero()) throw ZeroIdealError();
  const NewtonPolyhedron polyhedron = newton_polyhedron(ideal);
  const Exponent box = multiplier_box(ideal, r);
  return Scene{scale(polyhedron, r), multiplier_ideal(ideal, polyhedron, r),
               std::max<std::int64_t>(box[0] + 1, 3),
               std::max<std::int64_t>(box[1] + 1, 3)};
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string plot2d_svg(const MonomialIdeal& ideal, const BigRational& r) {
  const Scene scene = build_scene(ideal, r);
  const auto px = [&](const BigRational& x) {
    return fixed(kMargin + x.get_d() * kUnit);
  };
  const auto py = [&](const BigRational& y) {
    return fixed(kMargin + (static_cast<double>(scene.height) - y.get_d()) * kUnit);
  };
  const BigRational w = static_cast<long>(scene.width);
  const BigRational h = static_cast<long>(scene.height);

  // Vertices of a 2D Newton polygon run from the top-left to the
  // bottom-right when sorted by increasing x.
  std::vector<RatVec> vertices = scene.scaled.vertices();
  std::reverse(vertices.begin(), vertices.end());
  std::vector<std::pair<BigRational, BigRational>> outline;
  outline.emplace_back(vertices.front()[0], h);
  for (const auto& v : vertices) outline.emplace_back(v[0], v[1]);
  outline.emplace_back(w, vertices.back()[1]);

  std::ostringstream svg;
  const double total_w = 2 * kMargin + static_cast<double>(scene.width) * kUnit;
  const double total_h = 2 * kMargin + static_cast<double>(scene.height) * kUnit;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(total_w)
      << "\" height=\"" << fixed(total_h) << "\" viewBox=\"0 0 "
      << fixed(total_w) << " " << fixed(total_h) << "\">\n";
  svg << "  <title>J(" << to_string(r) << " * (" << format_ideal(ideal)
      << "))</title>\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  svg << "  <polygon fill=\"#dde7f3\" stroke=\"none\" points=\"";
  for (const auto& [x, y] : outline) svg << px(x) << "," << py(y) << " ";
  svg << px(w) << "," << py(h) << "\"/>\n";
  svg << "  <polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < outline.size(); ++i)
    svg << (i ? " " : "") << px(outline[i].first) << "," << py(outline[i].second);
  svg << "\"/>\n";

  svg << "  <g stroke=\"black\" stroke-width=\"1\">\n";
  svg << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(w)
      << "\" y2=\"" << py(0) << "\"/>\n";
  svg << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0)
      << "\" y2=\"" << py(h) << "\"/>\n";
  svg << "  </g>\n";

  // Lattice points: open circles, filled where lambda + 1 is interior to rP
  // (x^lambda in the multiplier ideal), ringed at minimal generators.
  svg << "  <g>\n";
  for (std::int64_t x = 0; x <= scene.width; ++x) {
    for (std::int64_t y = 0; y <= scene.height; ++y) {
      const Exponent lambda{x, y};
      const BigRational bx = static_cast<long>(x), by = static_cast<long>(y);
      const bool in_j = contains(scene.multiplier, lambda);
      svg << "    <circle cx=\"" << px(bx) << "\" cy=\"" << py(by)
          << "\" r=\"3.5\" "
          << (in_j ? "fill=\"#c0392b\" stroke=\"#c0392b\""
                   : "fill=\"white\" stroke=\"#777777\"")
          << "/>\n";
    }
  }
  for (const auto& g : scene.multiplier.generators()) {
    svg << "    <circle cx=\"" << px(static_cast<long>(g[0])) << "\" cy=\""
        << py(static_cast<long>(g[1]))
        << "\" r=\"7\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::int64_t x = 0; x <= scene.width; ++x) {
    svg << "    <text x=\"" << px(static_cast<long>(x)) << "\" y=\""
        << fixed(kMargin + static_cast<double>(scene.height) * kUnit + 18)
        << "\" text-anchor=\"middle\">" << x << "</text>\n";
  }
  for (std::int64_t y = 0; y <= scene.height; ++y) {
    svg << "    <text x=\"" << fixed(kMargin - 14) << "\" y=\""
        << fixed(kMargin + static_cast<double>(scene.height - y) * kUnit + 4)
        << "\" text-anchor=\"end\">" << y << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

std::string plot2d_csv(const MonomialIdeal& ideal, const BigRational& r) {
  const Scene scene = build_scene(ideal, r);
  std::ostringstream csv;
  csv << "x,y,in_ideal,in_polyhedron,on_boundary,in_multiplier\n";
  for (std::int64_t x = 0; x <= scene.width; ++x) {
    for (std::int64_t y = 0; y <= scene.height; ++y) {
      const Exponent lambda{x, y};
      const PointClass cls = classify(scene.scaled, lambda);
      csv << x << ',' << y << ',' << contains(ideal, lambda) << ','
          << (cls != PointClass::Exterior) << ','
          << (cls == PointClass::Boundary) << ','
          << contains(scene.multiplier, lambda) << '\n';
    }
  }
  return csv.str();
}

}  // namespace multideal
