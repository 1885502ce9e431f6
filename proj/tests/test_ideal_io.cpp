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


#include "doctest.h"
#include "multideal/error.hpp"
#include "multideal/ideal_io.hpp"
#include "multideal/rational.hpp"
#include "multideal/serialize.hpp"
#include "support/test_support.hpp"

using namespace multideal;

TEST_CASE("ideal grammar") {
  CHECK(parse_ideal("x^8, y^6") ==
        MonomialIdeal(2, {Exponent{8, 0}, Exponent{0, 6}}));
  CHECK(parse_ideal("x1^2*x3, x2") ==
        MonomialIdeal(3, {Exponent{2, 0, 1}, Exponent{0, 1, 0}}));
  CHECK(parse_ideal("x y^2 z") == MonomialIdeal(3, {Exponent{1, 2, 1}}));
  CHECK(parse_ideal("  x ^ 2 ,y  ") == parse_ideal("x^2,y"));
  CHECK(parse_ideal("x^2", 3) == MonomialIdeal(3, {Exponent{2, 0, 0}}));
  CHECK(parse_ideal("0").is_zero());
  CHECK(parse_ideal("1", 2).is_unit());
  CHECK(parse_ideal("x1^3", 5).dim() == 5);
  CHECK(parse_ideal("x^2*x").generators().front() == Exponent{3});
}

TEST_CASE("ideal grammar errors") {
  CHECK_THROWS_AS(parse_ideal(""), ParseError);
  CHECK_THROWS_AS(parse_ideal("x^"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_ideal("w^2"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x,,y"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x0"), ParseError);
  CHECK_THROWS_AS(parse_ideal("2*x"), ParseError);
  CHECK_THROWS(parse_ideal("x3", 2));
  CHECK_THROWS(parse_ideal("z", 4));  // aliases only up to three variables
}

TEST_CASE("formatting") {
  CHECK(format_ideal(parse_ideal("x^8, y^6")) == "x^8, y^6");
  CHECK(format_ideal(MonomialIdeal::zero(2)) == "0");
  CHECK(format_ideal(MonomialIdeal::unit(2)) == "1");
  CHECK(format_monomial(Exponent{0, 0, 0}) == "1");
  CHECK(format_monomial(Exponent{1, 0, 0, 2}) == "x1*x4^2");
}

TEST_CASE("text round trip") {
  multideal::testing::IdealGenerator gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialIdeal a = gen(1, 6, 6, 9);
    CHECK(parse_ideal(format_ideal(a), a.dim()) == a);
    CHECK(json::ideal_from_json(json::to_json(a)) == a);
    CHECK(read_ideal(json::to_json(a).dump()) == a);
  }
}

TEST_CASE("json documents") {
  const MonomialIdeal a = read_ideal(R"({"nvars": 2, "generators": [[8, 0], [0, 6]]})");
  CHECK(format_ideal(a) == "x^8, y^6");
  CHECK_THROWS(read_ideal(R"({"nvars": 2, "generators": [[1]]})"));
  CHECK_THROWS(read_ideal(R"({"generators": [[1, -1]]})"));
  CHECK_THROWS_AS(read_ideal("{nope"), ParseError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-2") == make_rational(-2, 1));
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(to_string(make_rational(10, 4)) == "5/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(floor_of(make_rational(-3, 2)) == -2);
  CHECK(ceil_of(make_rational(-3, 2)) == -1);
  CHECK(floor_of(make_rational(7, 1)) == 7);
}
