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

#include "multideal/multideal.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "multideal/error.hpp"
#include "multideal/ideal_io.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/oracle.hpp"
#include "multideal/plot.hpp"
#include "multideal/polyhedron.hpp"
#include "multideal/serialize.hpp"
#include "multideal/threshold.hpp"

struct mi_ideal {
  multideal::MonomialIdeal value;
};

namespace {

thread_local std::string last_error;

mi_status fail(mi_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <class Body>
mi_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const multideal::ParseError& e) {
    return fail(MI_ERR_PARSE, e.what());
  } catch (const multideal::ZeroIdealError& e) {
    return fail(MI_ERR_ZERO_IDEAL, e.what());
  } catch (const multideal::DimensionError& e) {
    return fail(MI_ERR_DIMENSION, e.what());
  } catch (const multideal::InvalidArgument& e) {
    return fail(MI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(MI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MI_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

multideal::BigRational coefficient(const char* r) {
  if (r == nullptr) return multideal::BigRational(1);
  return multideal::parse_rational(r);
}

#define MI_REQUIRE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* mi_version(void) { return "1.0.0"; }

const char* mi_status_string(mi_status status) {
  switch (status) {
    case MI_OK: return "ok";
    case MI_ERR_PARSE: return "parse error";
    case MI_ERR_ZERO_IDEAL: return "zero ideal";
    case MI_ERR_DIMENSION: return "dimension mismatch";
    case MI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MI_ERR_VERIFY_MISMATCH: return "verification mismatch";
    case MI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mi_last_error(void) { return last_error.c_str(); }

void mi_string_free(char* str) { std::free(str); }

mi_status mi_ideal_parse(const char* source, int nvars, mi_ideal** out) {
  MI_REQUIRE(source && out);
  return guarded([&] {
    if (nvars < 0) throw multideal::ParseError("negative variable count");
    std::optional<std::size_t> n;
    if (nvars > 0) n = static_cast<std::size_t>(nvars);
    *out = new mi_ideal{multideal::read_ideal(source, n)};
    return MI_OK;
  });
}

void mi_ideal_free(mi_ideal* ideal) { delete ideal; }

int mi_ideal_nvars(const mi_ideal* ideal) {
  return ideal ? static_cast<int>(ideal->value.dim()) : 0;
}

int mi_ideal_num_generators(const mi_ideal* ideal) {
  return ideal ? static_cast<int>(ideal->value.generators().size()) : 0;
}

int mi_ideal_is_zero(const mi_ideal* ideal) {
  return ideal ? ideal->value.is_zero() : 1;
}

mi_status mi_ideal_generator(const mi_ideal* ideal, int index,
                             long long* exponents) {
  MI_REQUIRE(ideal && exponents);
  const auto& gens = ideal->value.generators();
  if (index < 0 || static_cast<std::size_t>(index) >= gens.size())
    return fail(MI_ERR_INVALID_ARGUMENT, "generator index out of range");
  const auto& g = gens[static_cast<std::size_t>(index)];
  for (std::size_t i = 0; i < g.dim(); ++i) exponents[i] = g[i];
  return MI_OK;
}

int mi_ideal_equal(const mi_ideal* a, const mi_ideal* b) {
  return a && b && a->value == b->value;
}

mi_status mi_ideal_to_text(const mi_ideal* ideal, char** out) {
  MI_REQUIRE(ideal && out);
  return guarded([&] {
    *out = duplicate(multideal::format_ideal(ideal->value));
    return MI_OK;
  });
}

mi_status mi_ideal_to_json(const mi_ideal* ideal, char** out) {
  MI_REQUIRE(ideal && out);
  return guarded([&] {
    *out = duplicate(multideal::json::to_json(ideal->value).dump());
    return MI_OK;
  });
}

mi_status mi_multiplier_ideal(const mi_ideal* ideal, const char* r,
                              mi_ideal** out) {
  MI_REQUIRE(ideal && r && out);
  return guarded([&] {
    *out = new mi_ideal{
        multideal::multiplier_ideal(ideal->value, multideal::parse_rational(r))};
    return MI_OK;
  });
}

mi_status mi_integral_closure(const mi_ideal* ideal, mi_ideal** out) {
  MI_REQUIRE(ideal && out);
  return guarded([&] {
    *out = new mi_ideal{multideal::integral_closure(ideal->value)};
    return MI_OK;
  });
}

mi_status mi_facets_json(const mi_ideal* ideal, char** out) {
  MI_REQUIRE(ideal && out);
  return guarded([&] {
    *out = duplicate(
        multideal::json::to_json(multideal::newton_polyhedron(ideal->value))
            .dump());
    return MI_OK;
  });
}

mi_status mi_classify(const mi_ideal* ideal, const char* r, const char* point,
                      mi_point_class* out) {
  MI_REQUIRE(ideal && point && out);
  return guarded([&] {
    std::vector<multideal::BigRational> coords;
    std::string_view rest = point;
    while (true) {
      auto comma = rest.find(',');
      coords.push_back(multideal::parse_rational(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const auto polyhedron = multideal::scale(
        multideal::newton_polyhedron(ideal->value), coefficient(r));
    switch (multideal::classify(polyhedron,
                                multideal::RatVec(std::move(coords)))) {
      case multideal::PointClass::Interior: *out = MI_INTERIOR; break;
      case multideal::PointClass::Boundary: *out = MI_BOUNDARY; break;
      case multideal::PointClass::Exterior: *out = MI_EXTERIOR; break;
    }
    return MI_OK;
  });
}

mi_status mi_lct_json(const mi_ideal* ideal, char** out) {
  MI_REQUIRE(ideal && out);
  return guarded([&] {
    *out = duplicate(
        multideal::json::to_json(multideal::lct(ideal->value)).dump());
    return MI_OK;
  });
}

mi_status mi_plot2d(const mi_ideal* ideal, const char* r, mi_plot_format format,
                    char** out) {
  MI_REQUIRE(ideal && out);
  return guarded([&] {
    const auto coeff = coefficient(r);
    if (coeff <= 0) throw multideal::InvalidArgument("r must be positive");
    *out = duplicate(format == MI_PLOT_CSV
                         ? multideal::plot2d_csv(ideal->value, coeff)
                         : multideal::plot2d_svg(ideal->value, coeff));
    return MI_OK;
  });
}

mi_status mi_threshold_search(int dim, int max_exponent, int max_generators,
                              int diagonal_only, int jobs,
                              mi_search_callback callback, void* user_data) {
  MI_REQUIRE(callback);
  return guarded([&] {
    if (dim < 0 || max_exponent < 0 || max_generators < 0 || jobs < 0)
      throw multideal::InvalidArgument("search bounds must be nonnegative");
    multideal::SearchOptions options;
    options.dim = static_cast<std::size_t>(dim);
    options.max_exponent = max_exponent;
    options.max_generators = static_cast<std::size_t>(max_generators);
    options.family = diagonal_only ? multideal::SearchFamily::kDiagonal
                                   : multideal::SearchFamily::kAll;
    options.jobs = static_cast<unsigned>(jobs > 0 ? jobs : 1);
    for (const auto& record : multideal::threshold_search(options)) {
      const std::string line = multideal::json::to_json(record).dump();
      if (callback(line.c_str(), user_data) != 0) break;
    }
    return MI_OK;
  });
}

mi_status mi_verify(const mi_ideal* ideal, const char* r, char** diff) {
  MI_REQUIRE(ideal && diff);
  *diff = nullptr;
  return guarded([&] {
    std::optional<multideal::BigRational> coeff;
    if (r != nullptr) coeff = multideal::parse_rational(r);
    const auto report = multideal::oracle::verify(ideal->value, coeff);
    std::string text;
    for (const auto& m : report.mismatches) text += m + "\n";
    *diff = duplicate(text);
    if (!report.ok()) {
      last_error = std::to_string(report.mismatches.size()) +
                   " disagreement(s) between facet and LP paths";
      return MI_ERR_VERIFY_MISMATCH;
    }
    return MI_OK;
  });
}

}  // extern "C"
