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

#ifndef MULTIDEAL_IDEAL_IO_HPP_
#define MULTIDEAL_IDEAL_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "multideal/ideal.hpp"

namespace multideal {

// Text grammar:
//
//   ideal    := "0" | monomial ("," monomial)*
//   monomial := "1" | power (("*" | whitespace) power)*
//   power    := variable ("^" digits)?
//   variable := "x" digits | "x" | "y" | "z"
//
// x, y, z alias x1, x2, x3 and are only legal when the ideal has at most
// three variables. The variable count is the highest index used unless
// `nvars` overrides it; an override smaller than an index in use is an
// error. Throws ParseError.
MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::size_t> nvars = std::nullopt);

// Inverse of parse_ideal: "x^6, x^5*y, ..." using x, y, z when dim <= 3 and
// x1..xn otherwise. The zero ideal prints as "0", the unit ideal as "1".
std::string format_ideal(const MonomialIdeal& ideal);
std::string format_monomial(const Exponent& exponent);

// Either a JSON document {"nvars": n, "generators": [[...], ...]} or the
// text grammar above, chosen by the first non-blank character.
MonomialIdeal read_ideal(std::string_view source,
                         std::optional<std::size_t> nvars = std::nullopt);

}  // namespace multideal

#endif  // MULTIDEAL_IDEAL_IO_HPP_
