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

#include "lp_oracle.hpp"

#include <cstdint>
#include <stdexcept>

namespace multideal::detail {
namespace {

struct Overflow {};

// Integer operations for the int64 tableau. Every intermediate product is
// formed in 128 bits; results that do not fit back into 64 bits abort the
// solve with Overflow.
struct SmallOps {
  using Int = std::int64_t;

  static Int from(const BigInt& v) {
    auto x = to_int64(v);
    if (!x) throw Overflow{};
    return *x;
  }
  static BigInt to_big(Int v) { return BigInt(static_cast<long>(v)); }
  static int sign(Int v) { return (v > 0) - (v < 0); }
  // (a p - b q) / den, exact.
  static Int update(Int a, Int p, Int b, Int q, Int den) {
    const __int128 num =
        static_cast<__int128>(a) * p - static_cast<__int128>(b) * q;
    const __int128 out = num / den;
    if (out * den != num)
      throw std::logic_error("integer pivot produced an inexact division");
    if (out > INT64_MAX || out < INT64_MIN) throw Overflow{};
    return static_cast<Int>(out);
  }
  // sign((a - b) - (c - d))
  static int compare_differences(Int a, Int b, Int c, Int d) {
    const __int128 lhs = static_cast<__int128>(a) - b;
    const __int128 rhs = static_cast<__int128>(c) - d;
    return (lhs > rhs) - (lhs < rhs);
  }
  // sign(a b - c d)
  static int compare_products(Int a, Int b, Int c, Int d) {
    const __int128 lhs = static_cast<__int128>(a) * b;
    const __int128 rhs = static_cast<__int128>(c) * d;
    return (lhs > rhs) - (lhs < rhs);
  }
};

struct BigOps {
  using Int = BigInt;

  static Int from(const BigInt& v) { return v; }
  static BigInt to_big(const Int& v) { return v; }
  static int sign(const Int& v) { return sgn(v); }
  static Int update(const Int& a, const Int& p, const Int& b, const Int& q,
                    const Int& den) {
    Int num = a * p - b * q;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      throw std::logic_error("integer pivot produced an inexact division");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
  }
  static int compare_differences(const Int& a, const Int& b, const Int& c,
                                 const Int& d) {
    return sgn(Int((a - b) - (c - d)));
  }
  static int compare_products(const Int& a, const Int& b, const Int& c,
                              const Int& d) {
    return sgn(Int(a * b - c * d));
  }
};

// Dense tableau in integer-preserving (Edmonds) form: every stored entry is
// the rational tableau entry multiplied by the common denominator `den_`,
// which is the previous pivot element and stays positive.
template <class Ops>
class IntegerTableau {
 public:
  using Int = typename Ops::Int;

  IntegerTableau(std::span<const Exponent> generators, const BigInt& r_num,
                 const BigInt& r_den, const std::vector<BigInt>& point,
                 const BigInt& point_den)
      : k_(generators.size()),
        n_(point.size()),
        vars_(k_ + n_ + 1),
        cols_(vars_ + 1),
        rows_(n_ + 2),
        cells_(rows_ * cols_, Int(0)),
        basis_(n_ + 1) {
    // Coordinate rows scaled by r_den * point_den:
    //   sum_g (r_num point_den g_i) w_g + s'_i + (r_den point_den) eps
    //       = r_den point_i
    const BigInt weight_scale = r_num * point_den;
    const Int eps_coeff = Ops::from(r_den * point_den);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t g = 0; g < k_; ++g)
        at(i, g) = Ops::from(weight_scale * static_cast<long>(generators[g][i]));
      at(i, k_ + i) = Int(1);
      at(i, eps()) = eps_coeff;
      at(i, rhs()) = Ops::from(r_den * point[i]);
    }
    for (std::size_t g = 0; g < k_; ++g) at(n_, g) = Int(1);
    at(n_, rhs()) = Int(1);
    at(objective(), eps()) = Int(-1);
    den_ = Int(1);
  }

  BigRational solve() {
    // Starting basis: all weight on the first generator, eps as large as
    // that allows, slacks for every coordinate but the tightest one.
    std::size_t tight = 0;
    for (std::size_t i = 1; i < n_; ++i) {
      if (Ops::compare_differences(at(i, rhs()), at(i, 0), at(tight, rhs()),
                                   at(tight, 0)) < 0)
        tight = i;
    }
    for (std::size_t i = 0; i < n_; ++i) basis_[i] = k_ + i;
    pivot(n_, 0);
    pivot(tight, eps());

    while (true) {
      std::size_t entering = vars_;
      for (std::size_t j = 0; j < vars_; ++j) {
        if (Ops::sign(at(objective(), j)) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == vars_) break;

      std::size_t leaving = rows_;
      for (std::size_t i = 0; i <= n_; ++i) {
        if (basis_[i] == eps() || Ops::sign(at(i, entering)) <= 0) continue;
        if (leaving == rows_) {
          leaving = i;
          continue;
        }
        const int c = Ops::compare_products(at(i, rhs()), at(leaving, entering),
                                            at(leaving, rhs()), at(i, entering));
        if (c < 0 || (c == 0 && basis_[i] < basis_[leaving])) leaving = i;
      }
      if (leaving == rows_)
        throw std::logic_error("margin LP reported unbounded");
      pivot(leaving, entering);
    }

    for (std::size_t i = 0; i <= n_; ++i) {
      if (basis_[i] == eps())
        return make_rational(Ops::to_big(at(i, rhs())), Ops::to_big(den_));
    }
    throw std::logic_error("margin LP lost its eps column");
  }

 private:
  std::size_t eps() const { return k_ + n_; }
  std::size_t rhs() const { return vars_; }
  std::size_t objective() const { return n_ + 1; }
  Int& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  void pivot(std::size_t r, std::size_t c) {
    const Int p = at(r, c);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Int f = at(i, c);
      for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = Ops::update(at(i, j), p, f, at(r, j), den_);
    }
    den_ = p;
    basis_[r] = c;
  }

  std::size_t k_, n_, vars_, cols_, rows_;
  std::vector<Int> cells_;
  std::vector<std::size_t> basis_;
  Int den_;
};

}  // namespace

BigRational max_diagonal_margin(std::span<const Exponent> generators,
                                const BigInt& r_num, const BigInt& r_den,
                                const std::vector<BigInt>& point,
                                const BigInt& point_den) {
  try {
    return IntegerTableau<SmallOps>(generators, r_num, r_den, point, point_den)
        .solve();
  } catch (const Overflow&) {
    return IntegerTableau<BigOps>(generators, r_num, r_den, point, point_den)
        .solve();
  }
}

}  // namespace multideal::detail
