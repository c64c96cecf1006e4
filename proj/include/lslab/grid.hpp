// Copyright 2026 The lslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSLAB_GRID_HPP_
#define LSLAB_GRID_HPP_

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

///
/// Coordinate geometry of the grid [k]^l.
///
/// Coordinates are 1-based everywhere in the public surface: axis values run
/// over {1, ..., k}. A Boolean string x in {0,1}^n is the vertex of the (2, n)
/// grid whose coordinate i is x_i + 1.
///
namespace lslab {

/// Thrown when an exhaustive operation would exceed its enumeration limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 22;

class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> coords) : coords_(std::move(coords)) {}
  Vertex(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const int> coords() const { return coords_; }
  std::vector<int>& mutable_coords() { return coords_; }

  auto operator<=>(const Vertex&) const = default;
  bool operator==(const Vertex&) const = default;

 private:
  std::vector<int> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

inline std::string to_string(const Vertex& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ')';
}

/// Checked k^e; nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t k, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (k != 0 && r > UINT64_MAX / k) return std::nullopt;
    r *= k;
  }
  return r;
}

class GridShape {
 public:
  GridShape(int side, int axes) : side_(side), axes_(axes) {
    if (side < 1) throw std::invalid_argument("grid side must be >= 1");
    if (axes < 1) throw std::invalid_argument("grid must have at least one axis");
  }

  int side() const { return side_; }
  int axes() const { return axes_; }

  /// k^l, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> vertex_count() const { return checked_pow(side_, axes_); }

  /// k^l, refusing shapes beyond `limit` (used before exhaustive scans).
  std::uint64_t checked_vertex_count(std::uint64_t limit = kDefaultEnumerationLimit) const {
    auto n = vertex_count();
    if (!n || *n > limit) {
      throw BudgetExceeded("grid [" + std::to_string(side_) + "]^" + std::to_string(axes_) +
                           " exceeds the enumeration limit of " + std::to_string(limit));
    }
    return *n;
  }

  bool contains(const Vertex& v) const {
    if (v.size() != static_cast<std::size_t>(axes_)) return false;
    for (int c : v.coords())
      if (c < 1 || c > side_) return false;
    return true;
  }

  void require(const Vertex& v) const {
    if (!contains(v))
      throw std::invalid_argument("vertex " + to_string(v) + " is not in [" +
                                  std::to_string(side_) + "]^" + std::to_string(axes_));
  }

  bool operator==(const GridShape&) const = default;

 private:
  int side_;
  int axes_;
};

/// Neighbors in axis order, minus before plus.
inline std::vector<Vertex> neighbors(const GridShape& shape, const Vertex& v) {
  shape.require(v);
  std::vector<Vertex> out;
  out.reserve(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (int delta : {-1, +1}) {
      int c = v[i] + delta;
      if (c < 1 || c > shape.side()) continue;
      Vertex u = v;
      u[i] = c;
      out.push_back(std::move(u));
    }
  }
  return out;
}

/// Calls fn(u) for each neighbor without allocating a result vector.
template <typename Fn>
void for_each_neighbor(const GridShape& shape, const Vertex& v, Fn&& fn) {
  Vertex u = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (int delta : {-1, +1}) {
      int c = v[i] + delta;
      if (c < 1 || c > shape.side()) continue;
      u[i] = c;
      fn(static_cast<const Vertex&>(u));
      u[i] = v[i];
    }
  }
}

inline std::int64_t l1_distance(const Vertex& u, const Vertex& v) {
  if (u.size() != v.size()) throw std::invalid_argument("l1_distance: dimension mismatch");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += std::abs(u[i] - v[i]);
  return d;
}

/// Mixed-radix code sum_i (x_i - 1) k^i, a dense key for hashing and tables.
inline std::uint64_t encode(const GridShape& shape, const Vertex& v) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * shape.side() + (v[i] - 1);
  return code;
}

inline Vertex decode(const GridShape& shape, std::uint64_t code) {
  std::vector<int> c(shape.axes());
  for (int i = 0; i < shape.axes(); ++i) {
    c[i] = static_cast<int>(code % shape.side()) + 1;
    code /= shape.side();
  }
  return Vertex(std::move(c));
}

/// Visits every vertex in code order after checking the enumeration limit.
template <typename Fn>
void for_each_vertex(const GridShape& shape, std::uint64_t limit, Fn&& fn) {
  std::uint64_t n = shape.checked_vertex_count(limit);
  Vertex v(std::vector<int>(shape.axes(), 1));
  for (std::uint64_t code = 0; code < n; ++code) {
    fn(static_cast<const Vertex&>(v));
    for (int i = 0; i < shape.axes(); ++i) {
      if (++v[i] <= shape.side()) break;
      v[i] = 1;
    }
  }
}

// Snake-order Hamilton path.
//
// The path on [k]^1 is 1, 2, ..., k. The path on [k]^(l+1) holds the last
// coordinate at 1 and walks the [k]^l path, then sets it to 2 and walks that
// path backwards, and so on. The last axis is therefore the most significant
// mixed-radix digit, and an odd digit reverses everything below it.

/// 1-based rank of v on the snake path.
inline std::uint64_t ham_index(const GridShape& shape, const Vertex& v) {
  shape.require(v);
  auto total = shape.vertex_count();
  if (!total) throw std::overflow_error("ham_index: grid too large for 64-bit ranks");
  const std::uint64_t k = shape.side();
  std::uint64_t rank = static_cast<std::uint64_t>(v[0] - 1);
  std::uint64_t block = k;  // k^j
  for (int j = 1; j < shape.axes(); ++j) {
    const std::uint64_t digit = static_cast<std::uint64_t>(v[j] - 1);
    if (digit & 1) rank = block - 1 - rank;
    rank += digit * block;
    if (j + 1 < shape.axes()) block *= k;
  }
  return rank + 1;
}

/// The t-th vertex of the snake path, 1 <= t <= k^l, in O(l).
inline Vertex ham_unrank(const GridShape& shape, std::uint64_t t) {
  auto total = shape.vertex_count();
  if (!total) throw std::overflow_error("ham_unrank: grid too large for 64-bit ranks");
  if (t < 1 || t > *total)
    throw std::out_of_range("ham_unrank: rank " + std::to_string(t) + " outside [1.." +
                            std::to_string(*total) + "]");
  const std::uint64_t k = shape.side();
  std::vector<int> c(shape.axes());
  std::uint64_t rank = t - 1;
  std::uint64_t block = *total / k;
  for (int j = shape.axes() - 1; j >= 1; --j) {
    const std::uint64_t digit = rank / block;
    std::uint64_t rem = rank % block;
    c[j] = static_cast<int>(digit) + 1;
    rank = (digit & 1) ? block - 1 - rem : rem;
    block /= k;
  }
  c[0] = static_cast<int>(rank) + 1;
  return Vertex(std::move(c));
}

inline std::optional<Vertex> ham_successor(const GridShape& shape, const Vertex& v) {
  const std::uint64_t t = ham_index(shape, v);
  if (t == *shape.vertex_count()) return std::nullopt;
  return ham_unrank(shape, t + 1);
}

inline std::optional<Vertex> ham_predecessor(const GridShape& shape, const Vertex& v) {
  const std::uint64_t t = ham_index(shape, v);
  if (t == 1) return std::nullopt;
  return ham_unrank(shape, t - 1);
}

}  // namespace lslab

#endif  // LSLAB_GRID_HPP_
