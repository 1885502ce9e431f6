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

#ifndef MULTIDEAL_RATIONAL_HPP_
#define MULTIDEAL_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace multideal {

// Arbitrary precision scalars. gmpxx keeps mpq_class canonical (lowest
// terms, positive denominator) through every arithmetic operator; the only
// way to obtain a non-canonical value is the two-argument constructor, so
// library code builds fractions through make_rational().
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "p/q", "+p/q", "-p/q" with decimal digits only. Decimal
// points and exponents are rejected rather than approximated.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& value);

BigInt floor_of(const BigRational& value);
BigInt ceil_of(const BigRational& value);

// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const BigInt& value);

}  // namespace multideal

#endif  // MULTIDEAL_RATIONAL_HPP_
