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

#ifndef MULTIDEAL_ERROR_HPP_
#define MULTIDEAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace multideal {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed ideal text, JSON document or rational literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operands of different dimension (number of variables).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Polyhedral operations are undefined on the zero ideal.
class ZeroIdealError : public Error {
 public:
  ZeroIdealError() : Error("empty Newton polyhedron") {}
};

// Precondition violations: r <= 0, m < 1, oversized enumeration box, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace multideal

#endif  // MULTIDEAL_ERROR_HPP_
