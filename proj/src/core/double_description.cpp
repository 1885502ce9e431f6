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

#include "double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "multideal/error.hpp"

namespace multideal::detail {

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

IntVector make_primitive(IntVector v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

namespace {

// Incremental row echelon form over Q.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  // Adds `row` if it is independent of the rows so far.
  bool insert(const IntVector& row) {
    std::vector<BigRational> v(row.begin(), row.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = pivots_[k];
      if (v[c] == 0) continue;
      BigRational f = v[c];
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[k][j];
    }
    auto it = std::find_if(v.begin(), v.end(),
                           [](const BigRational& x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t c = static_cast<std::size_t>(it - v.begin());
    BigRational lead = v[c];
    for (auto& x : v) x /= lead;
    // Keep the basis reduced so that pivot columns are unit vectors.
    for (auto& r : rows_) {
      if (r[c] == 0) continue;
      BigRational f = r[c];
      for (std::size_t j = 0; j < dim_; ++j) r[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

  // For a basis of dim - 1 rows: a nonzero vector orthogonal to all of them.
  IntVector kernel_vector() const {
    std::vector<bool> is_pivot(dim_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    auto free_it = std::find(is_pivot.begin(), is_pivot.end(), false);
    const std::size_t f = static_cast<std::size_t>(free_it - is_pivot.begin());
    std::vector<BigRational> y(dim_, 0);
    y[f] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) y[pivots_[k]] = -rows_[k][f];
    BigInt den = 1;
    for (const auto& x : y)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(dim_);
    for (const auto& x : y) out.emplace_back(x.get_num() * (den / x.get_den()));
    return make_primitive(std::move(out));
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<BigRational>> rows_;
  std::vector<std::size_t> pivots_;
};

class Bitset {
 public:
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector coords;
  Bitset zeros;  // processed rows tight at this ray
};

}  // namespace

std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  Echelon e(rows.front().size());
  for (const auto& r : rows) e.insert(r);
  return e.size();
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw std::logic_error("extreme_rays: no rows");
  const std::size_t d = rows.front().size();
  const std::size_t m = rows.size();

  Echelon echelon(d);
  std::vector<std::size_t> basis;
  std::vector<bool> in_basis(m, false);
  for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
    if (echelon.insert(rows[i])) {
      basis.push_back(i);
      in_basis[i] = true;
    }
  }
  if (basis.size() < d)
    throw std::logic_error("extreme_rays: rows do not span the space");

  // Rays of the simplicial cone {A_B y >= 0}: the columns of A_B^{-1}, i.e.
  // for each basis row k the direction tight on every other basis row.
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < d; ++k) {
    Echelon others(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (j != k) others.insert(rows[basis[j]]);
    }
    IntVector y = others.kernel_vector();
    if (dot(rows[basis[k]], y) < 0) {
      for (auto& x : y) x = -x;
    }
    Ray ray{std::move(y), Bitset(m)};
    for (std::size_t j = 0; j < d; ++j) {
      if (j != k) ray.zeros.set(basis[j]);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t row = 0; row < m; ++row) {
    if (in_basis[row]) continue;
    const IntVector& a = rows[row];

    std::vector<BigInt> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].coords);
      const int s = sgn(value[i]);
      if (s > 0) pos.push_back(i);
      if (s < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (value[i] == 0) rays[i].zeros.set(row);
      }
      continue;
    }

    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] < 0) continue;
      Ray kept = rays[i];
      if (value[i] == 0) kept.zeros.set(row);
      next.push_back(std::move(kept));
    }
    for (auto p : pos) {
      for (auto n : neg) {
        Bitset common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o != p && o != n && rays[o].zeros.contains(common))
            adjacent = false;
        }
        if (!adjacent) continue;
        IntVector y(d);
        for (std::size_t j = 0; j < d; ++j) {
          y[j] = value[p] * rays[n].coords[j] - value[n] * rays[p].coords[j];
        }
        common.set(row);
        next.push_back(Ray{make_primitive(std::move(y)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  return out;
}

}  // namespace multideal::detail
