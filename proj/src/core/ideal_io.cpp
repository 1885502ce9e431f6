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

#include "multideal/ideal_io.hpp"

#include <cctype>
#include <map>

#include "multideal/error.hpp"
#include "multideal/serialize.hpp"

namespace multideal {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Exponents keyed by 1-based variable index.
using SparseMonomial = std::map<std::size_t, Exponent::value_type>;

class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) : text_(text) {}

  SparseMonomial parse() {
    SparseMonomial out;
    skip_spaces();
    if (at_end()) fail("empty monomial");
    bool first = true;
    while (!at_end()) {
      if (!first) {
        // Separator: whitespace, '*', or both.
        bool separated = skip_spaces();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_spaces();
          separated = true;
        }
        if (!separated) fail("expected '*' or whitespace between factors");
        if (at_end()) fail("dangling '*'");
      }
      first = false;
      parse_factor(out);
    }
    return out;
  }

  bool used_alias() const { return used_alias_; }

 private:
  void parse_factor(SparseMonomial& out) {
    char c = peek();
    if (c == '1' && (pos_ + 1 == text_.size() || !is_digit(text_[pos_ + 1]))) {
      ++pos_;
      return;
    }
    std::size_t index = 0;
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      if (c == 'x' && !at_end() && is_digit(peek())) {
        index = static_cast<std::size_t>(parse_number());
        if (index == 0) fail("variable indices start at x1");
      } else {
        index = c == 'x' ? 1 : c == 'y' ? 2 : 3;
        used_alias_ = true;
      }
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    Exponent::value_type e = 1;
    std::size_t save = pos_;
    skip_spaces();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_spaces();
      if (at_end() || !is_digit(peek())) fail("expected exponent after '^'");
      e = parse_number();
    } else {
      pos_ = save;
    }
    auto& slot = out[index];
    if (__builtin_add_overflow(slot, e, &slot)) fail("exponent overflow");
  }

  Exponent::value_type parse_number() {
    Exponent::value_type value = 0;
    while (!at_end() && is_digit(peek())) {
      if (__builtin_mul_overflow(value, 10, &value) ||
          __builtin_add_overflow(value, peek() - '0', &value)) {
        fail("number too large");
      }
      ++pos_;
    }
    return value;
  }

  bool skip_spaces() {
    std::size_t start = pos_;
    while (!at_end() && is_space(peek())) ++pos_;
    return pos_ != start;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse monomial '" + std::string(text_) +
                     "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool used_alias_ = false;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::size_t> nvars) {
  if (nvars && *nvars == 0) throw ParseError("--vars must be at least 1");
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty ideal");
  if (body == "0") return MonomialIdeal::zero(nvars.value_or(1));

  std::vector<SparseMonomial> monomials;
  std::size_t highest = 0;
  bool aliases = false;
  while (true) {
    auto comma = body.find(',');
    std::string_view piece = trim(body.substr(0, comma));
    if (piece.empty()) throw ParseError("empty generator in ideal");
    MonomialParser parser(piece);
    monomials.push_back(parser.parse());
    aliases = aliases || parser.used_alias();
    if (!monomials.back().empty())
      highest = std::max(highest, monomials.back().rbegin()->first);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }

  std::size_t dim = std::max<std::size_t>(highest, 1);
  if (nvars) {
    if (*nvars < highest)
      throw ParseError("ideal uses x" + std::to_string(highest) +
                       " but only " + std::to_string(*nvars) +
                       " variables were requested");
    dim = *nvars;
  }
  if (aliases && dim > 3)
    throw ParseError("x, y, z are only available with at most 3 variables");

  std::vector<Exponent> gens;
  gens.reserve(monomials.size());
  for (const auto& m : monomials) {
    std::vector<Exponent::value_type> coords(dim, 0);
    for (auto [index, e] : m) coords[index - 1] = e;
    gens.emplace_back(std::move(coords));
  }
  return MonomialIdeal(dim, std::move(gens));
}

std::string format_monomial(const Exponent& exponent) {
  static constexpr const char* kAliases[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < exponent.dim(); ++i) {
    if (exponent[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += exponent.dim() <= 3 ? std::string(kAliases[i])
                               : "x" + std::to_string(i + 1);
    if (exponent[i] != 1) out += "^" + std::to_string(exponent[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

MonomialIdeal read_ideal(std::string_view source,
                         std::optional<std::size_t> nvars) {
  std::string_view body = trim(source);
  if (body.empty() || body.front() != '{') return parse_ideal(body, nvars);

  json::Json doc;
  try {
    doc = json::Json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  MonomialIdeal ideal = json::ideal_from_json(doc);
  if (nvars && *nvars != ideal.dim())
    throw ParseError("--vars disagrees with the JSON \"nvars\" field");
  return ideal;
}

}  // namespace multideal
