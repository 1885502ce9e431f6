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


#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "multideal/multideal.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  mi_string_free(s);
  return out;
}

struct Handle {
  mi_ideal* p = nullptr;
  ~Handle() { mi_ideal_free(p); }
};

int collect(const char* record, void* user) {
  static_cast<std::vector<std::string>*>(user)->push_back(record);
  return 0;
}

int stop_after_two(const char*, void* user) {
  return ++*static_cast<int*>(user) >= 2;
}

}  // namespace

TEST_CASE("ideal handles") {
  Handle a;
  REQUIRE(mi_ideal_parse("x^8, y^6, x^9", 0, &a.p) == MI_OK);
  CHECK(mi_ideal_nvars(a.p) == 2);
  CHECK(mi_ideal_num_generators(a.p) == 2);
  CHECK_FALSE(mi_ideal_is_zero(a.p));
  long long e[2];
  REQUIRE(mi_ideal_generator(a.p, 0, e) == MI_OK);
  CHECK(e[0] == 8);
  CHECK(e[1] == 0);
  CHECK(mi_ideal_generator(a.p, 2, e) == MI_ERR_INVALID_ARGUMENT);

  char* text = nullptr;
  REQUIRE(mi_ideal_to_text(a.p, &text) == MI_OK);
  CHECK(take(text) == "x^8, y^6");
  char* doc = nullptr;
  REQUIRE(mi_ideal_to_json(a.p, &doc) == MI_OK);
  Handle b;
  REQUIRE(mi_ideal_parse(take(doc).c_str(), 0, &b.p) == MI_OK);
  CHECK(mi_ideal_equal(a.p, b.p));

  Handle c;
  REQUIRE(mi_ideal_parse("x1", 4, &c.p) == MI_OK);
  CHECK(mi_ideal_nvars(c.p) == 4);
  Handle d;
  CHECK(mi_ideal_parse("x", 4, &d.p) == MI_ERR_PARSE);
}

TEST_CASE("status codes") {
  Handle a;
  CHECK(mi_ideal_parse("x^", 0, &a.p) == MI_ERR_PARSE);
  CHECK(a.p == nullptr);
  CHECK(std::strlen(mi_last_error()) > 0);
  CHECK(mi_ideal_parse(nullptr, 0, &a.p) == MI_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mi_status_string(MI_ERR_ZERO_IDEAL)).size() > 0);
  CHECK(std::string(mi_version()).size() > 0);

  Handle zero;
  REQUIRE(mi_ideal_parse("0", 2, &zero.p) == MI_OK);
  CHECK(mi_ideal_is_zero(zero.p));
  Handle j;
  CHECK(mi_multiplier_ideal(zero.p, "1", &j.p) == MI_ERR_ZERO_IDEAL);
  char* s = nullptr;
  CHECK(mi_lct_json(zero.p, &s) == MI_ERR_ZERO_IDEAL);

  Handle three;
  REQUIRE(mi_ideal_parse("x, y, z", 0, &three.p) == MI_OK);
  CHECK(mi_plot2d(three.p, nullptr, MI_PLOT_SVG, &s) == MI_ERR_DIMENSION);
  CHECK(mi_multiplier_ideal(three.p, "0.5", &j.p) == MI_ERR_PARSE);
  CHECK(mi_multiplier_ideal(three.p, "-1", &j.p) == MI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("computations through the C interface") {
  Handle a;
  REQUIRE(mi_ideal_parse("x^8, y^6", 0, &a.p) == MI_OK);
  Handle j;
  REQUIRE(mi_multiplier_ideal(a.p, "1", &j.p) == MI_OK);
  char* text = nullptr;
  REQUIRE(mi_ideal_to_text(j.p, &text) == MI_OK);
  CHECK(take(text) == "x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5");

  Handle c;
  REQUIRE(mi_integral_closure(a.p, &c.p) == MI_OK);
  CHECK(mi_ideal_num_generators(c.p) == 7);

  mi_point_class cls;
  REQUIRE(mi_classify(a.p, "1", "4,3", &cls) == MI_OK);
  CHECK(cls == MI_BOUNDARY);
  REQUIRE(mi_classify(a.p, "1/2", "7/2, 1", &cls) == MI_OK);
  CHECK(cls == MI_INTERIOR);
  CHECK(mi_classify(a.p, "1", "4", &cls) == MI_ERR_DIMENSION);

  char* out = nullptr;
  REQUIRE(mi_lct_json(a.p, &out) == MI_OK);
  CHECK(take(out).find("\"t\":\"7/24\"") != std::string::npos);
  REQUIRE(mi_facets_json(a.p, &out) == MI_OK);
  CHECK(take(out).find("\"offset\":24") != std::string::npos);
  REQUIRE(mi_plot2d(a.p, nullptr, MI_PLOT_CSV, &out) == MI_OK);
  CHECK(take(out).rfind("x,y,", 0) == 0);

  char* diff = nullptr;
  CHECK(mi_verify(a.p, "3/2", &diff) == MI_OK);
  CHECK(take(diff).empty());
}

TEST_CASE("streaming search") {
  std::vector<std::string> records;
  REQUIRE(mi_threshold_search(2, 6, 3, 0, 2, collect, &records) == MI_OK);
  REQUIRE_FALSE(records.empty());
  CHECK(records.back().find("\"threshold\":\"5/6\"") != std::string::npos);

  int seen = 0;
  REQUIRE(mi_threshold_search(2, 6, 3, 0, 1, stop_after_two, &seen) == MI_OK);
  CHECK(seen == 2);

  records.clear();
  REQUIRE(mi_threshold_search(3, 7, 0, 1, 1, collect, &records) == MI_OK);
  CHECK(records.back().find("\"threshold\":\"41/42\"") != std::string::npos);
  CHECK(mi_threshold_search(2, 3, 2, 0, 1, nullptr, nullptr) == MI_ERR_INVALID_ARGUMENT);
}
