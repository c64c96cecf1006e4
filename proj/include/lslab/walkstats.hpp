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


#ifndef LSLAB_WALKSTATS_HPP_
#define LSLAB_WALKSTATS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lslab/grid.hpp"

namespace lslab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parity bits b_1..b_m, stored 0-based.
using ParityVector = std::vector<int>;

inline constexpr std::uint64_t kDefaultBruteForceLimit = std::uint64_t{1} << 26;

inline Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1, b = base;
  for (; e; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace detail {

inline void check_parity(int m, const ParityVector& b) {
  if (m < 1) throw std::invalid_argument("need at least one bin");
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("parity vector length differs from the number of bins");
  for (int x : b)
    if (x != 0 && x != 1) throw std::invalid_argument("parity bits must be 0 or 1");
}

inline unsigned pack_bits(const ParityVector& b) {
  unsigned code = 0;
  for (std::size_t i = 0; i < b.size(); ++i) code |= static_cast<unsigned>(b[i]) << i;
  return code;
}

}  // namespace detail

/// Histogram of final parity vectors (packed as bitmasks) over every
/// sequence of t balls into m bins, optionally without sequences whose first
/// ball lands in `excluded_first_bin`. Counts sum to m^t or (m-1) m^(t-1).
inline std::vector<std::uint64_t> balls_parity_histogram(
    int m, int t, std::optional<int> excluded_first_bin = std::nullopt,
    std::uint64_t limit = kDefaultBruteForceLimit) {
  if (m < 1 || m > 20) throw std::invalid_argument("bin count out of range");
  if (t < 0) throw std::invalid_argument("negative ball count");
  if (excluded_first_bin && (*excluded_first_bin < 0 || *excluded_first_bin >= m))
    throw std::invalid_argument("excluded bin out of range");
  auto total = checked_pow(static_cast<std::uint64_t>(m), t);
  if (!total || *total > limit)
    throw BudgetExceeded("m^t = " + std::to_string(m) + "^" + std::to_string(t) +
                         " exceeds the brute-force budget");
  std::vector<std::uint64_t> hist(std::size_t{1} << m, 0);
  std::vector<int> seq(t, 0);
  unsigned parity = t % 2 == 0 ? 0u : 1u;  // all balls start in bin 0
  for (std::uint64_t c = 0; c < *total; ++c) {
    if (!(excluded_first_bin && t > 0 && seq[0] == *excluded_first_bin)) ++hist[parity];
    // Odometer increment, toggling parity bits of the balls that move.
    for (int pos = t - 1; pos >= 0; --pos) {
      parity ^= 1u << seq[pos];
      if (++seq[pos] < m) {
        parity ^= 1u << seq[pos];
        break;
      }
      seq[pos] = 0;
      parity ^= 1u;
    }
  }
  return hist;
}

/// Pr[n_i = b_i mod 2 for all i] by enumerating all placements.
inline Rational balls_bruteforce(int m, int t, const ParityVector& b,
                                 std::optional<int> excluded_first_bin = std::nullopt,
                                 std::uint64_t limit = kDefaultBruteForceLimit) {
  detail::check_parity(m, b);
  const auto hist = balls_parity_histogram(m, t, excluded_first_bin, limit);
  BigInt den = 1;
  for (int i = 0; i < t; ++i) den *= m;
  if (excluded_first_bin && t > 0) den = den / m * (m - 1);
  return Rational(BigInt(hist[detail::pack_bits(b)]), den);
}

/// p^(t)[0,...,0] = 2^-m sum_i C(m,i) (1 - 2i/m)^t.
inline Rational balls_closed_form(int m, int t) {
  if (m < 1) throw std::invalid_argument("need at least one bin");
  if (t < 0 || t % 2 != 0) throw std::invalid_argument("closed form needs even t >= 0");
  Rational sum = 0;
  for (int i = 0; i <= m; ++i)
    sum += Rational(binomial(m, i)) * pow_rational(Rational(m - 2 * i, m), t);
  return sum / pow_rational(Rational(2), m);
}

/// p_m^(t) = p_m^(t-2) - ((m-1)/m) ((m-2)/m)^(t-2) p_(m-2)^(t-2), base p_m^(2) = 1/m.
/// The term with m - 2 = 0 bins carries the factor 0 and is dropped.
inline Rational balls_recursion(int m, int t) {
  if (m < 1) throw std::invalid_argument("need at least one bin");
  if (t < 2 || t % 2 != 0) throw std::invalid_argument("recursion needs even t >= 2");
  if (t == 2) return Rational(1, m);
  Rational p = balls_recursion(m, t - 2);
  if (m > 2) {
    p -= Rational(m - 1, m) * pow_rational(Rational(m - 2, m), t - 2) *
         balls_recursion(m - 2, t - 2);
  }
  return p;
}

/// First-ball decomposition for odd t: p^(t+1)[0,...,0] = p^(t)[1,0,...,0],
/// both sides by enumeration.
inline bool balls_odd_reduction_check(int m, int t, std::uint64_t limit = kDefaultBruteForceLimit) {
  if (t < 1 || t % 2 == 0) throw std::invalid_argument("odd reduction needs odd t");
  ParityVector e1(m, 0);
  e1[0] = 1;
  return balls_bruteforce(m, t + 1, ParityVector(m, 0), std::nullopt, limit) ==
         balls_bruteforce(m, t, e1, std::nullopt, limit);
}

// Short walk on the line [n] with sticky ends.

/// Exact distributions p_ij^(t) for 0 <= t <= t_max. Entries are stored as
/// counts of step strings, over the implied denominator 2^t.
class LineWalkTable {
 public:
  LineWalkTable(int n, int t_max) : n_(n), t_max_(t_max) {
    if (n < 2) throw std::invalid_argument("short walk needs n >= 2");
    if (t_max < 0) throw std::invalid_argument("negative horizon");
    counts_.reserve(static_cast<std::size_t>(t_max) + 1);
    std::vector<BigInt> cur(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) cur[idx(i, i)] = 1;
    counts_.push_back(cur);
    for (int t = 1; t <= t_max; ++t) {
      cur = step(n, cur);
      counts_.push_back(cur);
    }
  }

  int n() const { return n_; }
  int t_max() const { return t_max_; }

  /// Number of step strings of length t taking i to j (1-based points).
  const BigInt& count(int t, int i, int j) const {
    check(t, i, j);
    return counts_[t][idx(i - 1, j - 1)];
  }

  Rational prob(int t, int i, int j) const {
    return Rational(count(t, i, j), BigInt(1) << t);
  }

  /// One sticky step applied to every row of a count matrix.
  static std::vector<BigInt> step(int n, const std::vector<BigInt>& cur) {
    std::vector<BigInt> next(cur.size(), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const BigInt& c = cur[static_cast<std::size_t>(i) * n + j];
        if (c == 0) continue;
        next[static_cast<std::size_t>(i) * n + std::max(j - 1, 0)] += c;
        next[static_cast<std::size_t>(i) * n + std::min(j + 1, n - 1)] += c;
      }
    }
    return next;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  void check(int t, int i, int j) const {
    if (t < 0 || t > t_max_) throw std::out_of_range("t outside the table");
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("point outside [n]");
  }

  int n_;
  int t_max_;
  std::vector<std::vector<BigInt>> counts_;
};

inline LineWalkTable line_walk_table(int n, int t_max) { return LineWalkTable(n, t_max); }

/// Single entry p_ij^(t) by a one-row dynamic program.
inline Rational line_walk_prob(int n, int t, int i, int j) {
  if (n < 2) throw std::invalid_argument("short walk needs n >= 2");
  if (t < 0) throw std::invalid_argument("negative step count");
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("point outside [n]");
  std::vector<BigInt> row(n, 0);
  row[i - 1] = 1;
  for (int s = 0; s < t; ++s) {
    std::vector<BigInt> next(n, 0);
    for (int q = 0; q < n; ++q) {
      if (row[q] == 0) continue;
      next[std::max(q - 1, 0)] += row[q];
      next[std::min(q + 1, n - 1)] += row[q];
    }
    row.swap(next);
  }
  return Rational(row[j - 1], BigInt(1) << t);
}

/// Counts bit strings x of length t (bit 1 = step up) whose sticky walk
/// from i ends at j, divided by 2^t.
inline Rational line_walk_bruteforce(int n, int t, int i, int j,
                                     std::uint64_t limit = kDefaultBruteForceLimit) {
  if (n < 2) throw std::invalid_argument("short walk needs n >= 2");
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("point outside [n]");
  if (t < 0 || t >= 63 || (std::uint64_t{1} << t) > limit)
    throw BudgetExceeded("2^t exceeds the brute-force budget");
  std::uint64_t hits = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << t); ++x) {
    int pos = i;
    for (int s = 0; s < t; ++s) pos = ((x >> s) & 1u) ? std::min(pos + 1, n) : std::max(pos - 1, 1);
    if (pos == j) ++hits;
  }
  return Rational(BigInt(hits), BigInt(1) << t);
}

/// Steps that walk axis `dim` receives among t round-robin steps whose first
/// step moves axis `first`: ceil((t - ((dim - first) mod m)) / m), or 0.
inline int round_robin_steps(int m, int t, int first, int dim) {
  const int r = ((dim - first) % m + m) % m;
  return t > r ? (t - r + m - 1) / m : 0;
}

/// Pr[z1 ->_t z2] for the round-robin short walk on [n]^m whose first step
/// moves axis `first`; coordinates are independent given the schedule.
///
/// Example: m = 3, t = 4, first = 2 moves axes 2, 0, 1, 2, so axis 2 takes
/// two steps and axes 0 and 1 one each.
inline Rational composite_walk_prob(int m, int n, int t, int first, const Vertex& z1,
                                    const Vertex& z2) {
  if (m < 1) throw std::invalid_argument("need at least one walk axis");
  if (first < 0 || first >= m) throw std::invalid_argument("first axis out of range");
  if (t < 0) throw std::invalid_argument("negative step count");
  const GridShape shape(n, m);
  shape.require(z1);
  shape.require(z2);
  Rational p = 1;
  for (int dim = 0; dim < m; ++dim) {
    p *= line_walk_prob(n, round_robin_steps(m, t, first, dim), z1[dim], z2[dim]);
    if (p == 0) break;
  }
  return p;
}

/// Worst case of max_ij p_ij^(t) * sqrt(t) and of max_ij p_ij^(t) * n.
struct EnvelopeReport {
  bool within = true;                 // both inequalities held at every t
  double sup_sqrt_scaled = 0.0;       // over 1 <= t <= n^2
  double sup_n_scaled = 0.0;          // over n^2 < t <= 4 n^2
  int first_violation_t = 0;          // 0 if none
};

/// Checks max_ij p^(t) sqrt(t) <= c on 1 <= t <= n^2 and max_ij p^(t) n <= c
/// on n^2 < t <= 4n^2, exactly in integers: count^2 t <= c^2 4^t and
/// count n <= c 2^t.
inline EnvelopeReport line_walk_envelope(int n, int c) {
  if (n < 2) throw std::invalid_argument("short walk needs n >= 2");
  EnvelopeReport rep;
  std::vector<BigInt> cur(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i) * n + i] = 1;
  const int t_end = 4 * n * n;
  for (int t = 1; t <= t_end; ++t) {
    cur = LineWalkTable::step(n, cur);
    const BigInt& mx = *std::max_element(cur.begin(), cur.end());
    const BigInt scale = BigInt(1) << t;
    // max_ij p^(t) as a double without overflowing on huge counts.
    const double p = static_cast<BigInt>((mx << 64) / scale).convert_to<double>() * 0x1.0p-64;
    bool ok;
    if (t <= n * n) {
      ok = mx * mx * t <= BigInt(c) * c * scale * scale;
      rep.sup_sqrt_scaled = std::max(rep.sup_sqrt_scaled, p * std::sqrt(static_cast<double>(t)));
    } else {
      ok = mx * n <= BigInt(c) * scale;
      rep.sup_n_scaled = std::max(rep.sup_n_scaled, p * n);
    }
    if (!ok && rep.within) {
      rep.within = false;
      rep.first_violation_t = t;
    }
  }
  return rep;
}

}  // namespace lslab

#endif  // LSLAB_WALKSTATS_HPP_
