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


#ifndef LSLAB_ADVERSARY_HPP_
#define LSLAB_ADVERSARY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lslab/grid.hpp"
#include "lslab/radical.hpp"
#include "lslab/walkstats.hpp"

/// Adversary lower-bound evaluators over fully enumerated path families.
///
/// A family holds every step sequence of a walk-with-clock path of length
/// T + 1. Inputs are membership functions, so a position is a vertex and two
/// paths differ at it when exactly one of them visits it.
namespace lslab {

enum class PathKind { kHypercube, kGrid };

inline std::string_view path_kind_name(PathKind k) {
  return k == PathKind::kHypercube ? "hypercube" : "grid";
}

inline PathKind parse_path_kind(std::string_view s) {
  if (s == "hypercube" || s == "hypercube-walk") return PathKind::kHypercube;
  if (s == "grid" || s == "grid-walk") return PathKind::kGrid;
  throw std::invalid_argument("unknown path family '" + std::string(s) + "'");
}

/// (j, b) of the first visit of a point, i.e. the point is x_{j,b}.
struct PathIndex {
  int j = 0;
  int b = 0;
};

struct PathFamily {
  PathKind kind;
  int m = 0;
  int T = 0;
  int side = 2;  // 2 for the hypercube walk, n for the grid walk
  GridShape shape{2, 1};
  GridShape clock{2, 1};
  std::vector<std::vector<int>> steps;
  std::vector<std::vector<Vertex>> points;  // x_{0,0}, x_{0,1}, ..., x_{T,1}
  std::vector<std::unordered_map<std::uint64_t, PathIndex>> first_visit;

  std::size_t size() const { return steps.size(); }
  const Vertex& endpoint(std::size_t x) const { return points[x].back(); }
  bool visits(std::size_t x, std::uint64_t code) const { return first_visit[x].contains(code); }
  /// Number of choices per step.
  int branching() const { return kind == PathKind::kHypercube ? m : 2; }
};

inline constexpr std::uint64_t kDefaultFamilyLimit = std::uint64_t{1} << 16;

/// Every path of the family; the clock is the smallest snake [side]^c with
/// at least T + 1 vertices.
inline PathFamily enumerate_paths(PathKind kind, int m, int T, int n = 4,
                                  std::uint64_t limit = kDefaultFamilyLimit) {
  if (T < 0) throw std::invalid_argument("T must be nonnegative");
  if (m < 1) throw std::invalid_argument("need at least one walk axis");
  PathFamily fam;
  fam.kind = kind;
  fam.m = m;
  fam.T = T;
  fam.side = kind == PathKind::kHypercube ? 2 : n;
  if (fam.side < 2) throw std::invalid_argument("grid side must be >= 2");
  const int choices = fam.branching();
  auto count = checked_pow(static_cast<std::uint64_t>(choices), T + 1);
  if (!count || *count > limit) throw BudgetExceeded("path family exceeds the enumeration budget");

  int c = 1;
  while (*checked_pow(static_cast<std::uint64_t>(fam.side), c) < static_cast<std::uint64_t>(T) + 1) ++c;
  fam.clock = GridShape(fam.side, c);
  fam.shape = GridShape(fam.side, m + c);
  std::vector<Vertex> clock_of;
  for (int t = 0; t <= T; ++t) clock_of.push_back(ham_unrank(fam.clock, t + 1));

  std::vector<int> seq(T + 1, 0);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    std::uint64_t rest = idx;
    for (int t = T; t >= 0; --t) {
      const int digit = static_cast<int>(rest % choices);
      rest /= choices;
      seq[t] = kind == PathKind::kHypercube ? digit : (digit == 0 ? -1 : +1);
    }
    std::vector<int> walk(m, kind == PathKind::kHypercube ? 1 : n / 2);
    std::vector<Vertex> pts;
    std::unordered_map<std::uint64_t, PathIndex> first;
    auto emit = [&](int t, int b) {
      std::vector<int> coords(walk);
      coords.insert(coords.end(), clock_of[t].coords().begin(), clock_of[t].coords().end());
      pts.emplace_back(std::move(coords));
      first.try_emplace(encode(fam.shape, pts.back()), PathIndex{t, b});
    };
    for (int t = 0; t <= T; ++t) {
      emit(t, 0);
      if (kind == PathKind::kHypercube) {
        walk[seq[t]] = 3 - walk[seq[t]];
      } else {
        const int dim = t % m;
        walk[dim] = std::clamp(walk[dim] + seq[t], 1, n);
      }
      emit(t, 1);
    }
    fam.steps.push_back(seq);
    fam.points.push_back(std::move(pts));
    fam.first_visit.push_back(std::move(first));
  }
  return fam;
}

/// First step index where the sequences differ; nullopt when identical.
inline std::optional<int> wedge(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("wedge of paths from different families");
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != y[k]) return static_cast<int>(k);
  return std::nullopt;
}

/// |{Z : Z ^ X = k}| = (choices - 1) * choices^(T - k).
inline std::uint64_t diverging_count(const PathFamily& fam, int k) {
  return static_cast<std::uint64_t>(fam.branching() - 1) *
         *checked_pow(static_cast<std::uint64_t>(fam.branching()), fam.T - k);
}

using Relation = std::vector<std::pair<std::size_t, std::size_t>>;

/// All ordered pairs whose endpoints differ.
inline Relation build_relation(const PathFamily& fam) {
  Relation rel;
  for (std::size_t x = 0; x < fam.size(); ++x)
    for (std::size_t y = 0; y < fam.size(); ++y)
      if (fam.endpoint(x) != fam.endpoint(y)) rel.emplace_back(x, y);
  return rel;
}

enum class SchemeKind { kRandomized, kQuantumHypercube, kQuantumGrid };

inline std::string_view scheme_kind_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::kRandomized: return "randomized";
    case SchemeKind::kQuantumHypercube: return "quantum-hypercube";
    case SchemeKind::kQuantumGrid: return "quantum-grid";
  }
  return "?";
}

inline SchemeKind parse_scheme_kind(std::string_view s) {
  if (s == "randomized") return SchemeKind::kRandomized;
  if (s == "quantum-hypercube") return SchemeKind::kQuantumHypercube;
  if (s == "quantum-grid") return SchemeKind::kQuantumGrid;
  throw std::invalid_argument("unknown scheme kind '" + std::string(s) + "'");
}

struct SchemePosition {
  std::uint64_t position = 0;  // vertex code
  Radical u;
  Radical v;
};

struct SchemeEntry {
  std::size_t x = 0;
  std::size_t y = 0;
  Rational w;
  std::vector<SchemePosition> positions;  // where the two inputs differ
};

struct WeightScheme {
  SchemeKind kind = SchemeKind::kRandomized;
  std::vector<SchemeEntry> entries;
};

/// Multipliers (a, b) with a * b = 1 for separation s = j - k + b.
///
/// Hypercube: m^-(ceil(s/2)/2) for s <= 10, m^-(5/2) up to m^2, then 2^-(m/2).
/// Grid with m walk axes of side n: 1 for s = 1, (s-1)^-(m/4) up to m n^2,
/// then n^-(m/2).
inline std::pair<Radical, Radical> scheme_multipliers(SchemeKind kind, int m, int n, int s) {
  if (s < 1) throw std::invalid_argument("separation must be positive");
  switch (kind) {
    case SchemeKind::kRandomized:
      return {Radical(1), Radical(1)};
    case SchemeKind::kQuantumHypercube: {
      long long quarters;
      std::uint64_t base = static_cast<std::uint64_t>(m);
      if (s <= 10) {
        quarters = 2LL * ((s + 1) / 2);  // ceil(s/2)/2 in quarters
      } else if (s <= m * m) {
        quarters = 10;
      } else {
        base = 2;
        quarters = 2LL * m;
      }
      return {Radical::power(base, -quarters), Radical::power(base, quarters)};
    }
    case SchemeKind::kQuantumGrid: {
      if (s == 1) return {Radical(1), Radical(1)};
      if (s <= m * n * n) {
        return {Radical::power(static_cast<std::uint64_t>(s - 1), -m),
                Radical::power(static_cast<std::uint64_t>(s - 1), m)};
      }
      return {Radical::power(static_cast<std::uint64_t>(n), -2LL * m),
              Radical::power(static_cast<std::uint64_t>(n), 2LL * m)};
    }
  }
  throw std::invalid_argument("unsupported scheme kind");
}

/// Weight tables over a relation: w(X,Y) = 1 / |{Z : Z ^ X = k}|, and for a
/// position x_{j,b} only X visits, u = a w and v = b w; for y_{j,b} only Y
/// visits, u = b w and v = a w.
inline WeightScheme build_scheme(SchemeKind kind, const PathFamily& fam, const Relation& rel) {
  if (kind == SchemeKind::kQuantumHypercube && fam.kind != PathKind::kHypercube)
    throw std::invalid_argument("hypercube scheme needs a hypercube family");
  if (kind == SchemeKind::kQuantumGrid && fam.kind != PathKind::kGrid)
    throw std::invalid_argument("grid scheme needs a grid family");
  WeightScheme sch;
  sch.kind = kind;
  sch.entries.reserve(rel.size());
  for (auto [x, y] : rel) {
    auto k = wedge(fam.steps[x], fam.steps[y]);
    if (!k) throw std::invalid_argument("relation pairs a path with itself");
    SchemeEntry e{x, y, Rational(1, diverging_count(fam, *k)), {}};
    auto add = [&](std::uint64_t code, PathIndex at, bool in_x) {
      auto [a, b] = scheme_multipliers(kind, fam.m, fam.side, at.j - *k + at.b);
      Radical w(e.w);
      e.positions.push_back(in_x ? SchemePosition{code, a * w, b * w}
                                 : SchemePosition{code, b * w, a * w});
    };
    for (const auto& [code, at] : fam.first_visit[x])
      if (!fam.visits(y, code)) add(code, at, true);
    for (const auto& [code, at] : fam.first_visit[y])
      if (!fam.visits(x, code)) add(code, at, false);
    std::sort(e.positions.begin(), e.positions.end(),
              [](const auto& p, const auto& q) { return p.position < q.position; });
    sch.entries.push_back(std::move(e));
  }
  return sch;
}

/// Entries violating u v >= w^2; equality is decided exactly, strict
/// inequality by a long-double evaluation of u v - w^2.
inline std::size_t count_invalid_positions(const WeightScheme& sch) {
  std::size_t bad = 0;
  for (const auto& e : sch.entries) {
    const Radical w2 = Radical(e.w * e.w);
    for (const auto& p : e.positions) {
      const Radical diff = p.u * p.v - w2;
      if (!diff.is_zero() && diff.to_long_double() <= 0) ++bad;
    }
  }
  return bad;
}

struct BoundWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  std::uint64_t position = 0;
};

struct WeightedBoundResult {
  Rational value;
  BoundWitness witness;
};

struct QuantumBoundResult {
  Radical radicand_num;  // value = sqrt(num / den)
  Radical radicand_den;
  long double value = 0;
  BoundWitness witness;
};

namespace detail {

struct Marginals {
  std::map<std::size_t, Radical> wx, wy;
  std::map<std::pair<std::size_t, std::uint64_t>, Radical> ux, vy, wxi, wyi;
};

inline Marginals marginals(const WeightScheme& sch) {
  Marginals mg;
  for (const auto& e : sch.entries) {
    const Radical w(e.w);
    mg.wx[e.x] += w;
    mg.wy[e.y] += w;
    for (const auto& p : e.positions) {
      mg.ux[{e.x, p.position}] += p.u;
      mg.vy[{e.y, p.position}] += p.v;
      mg.wxi[{e.x, p.position}] += w;
      mg.wyi[{e.y, p.position}] += w;
    }
  }
  return mg;
}

}  // namespace detail

/// min over pairs and differing positions of max{w_x / w_{x,i}, w_y / w_{y,i}}.
inline WeightedBoundResult thm5_value(const WeightScheme& sch) {
  if (sch.entries.empty()) throw std::invalid_argument("empty relation");
  for (const auto& e : sch.entries)
    if (e.w <= 0) throw std::invalid_argument("weights must be positive");
  const auto mg = detail::marginals(sch);
  std::optional<WeightedBoundResult> best;
  for (const auto& e : sch.entries) {
    for (const auto& p : e.positions) {
      const Rational lhs = mg.wx.at(e.x).rational_part() / mg.wxi.at({e.x, p.position}).rational_part();
      const Rational rhs = mg.wy.at(e.y).rational_part() / mg.wyi.at({e.y, p.position}).rational_part();
      const Rational val = std::max(lhs, rhs);
      if (!best || val < best->value) best = WeightedBoundResult{val, {e.x, e.y, p.position}};
    }
  }
  if (!best) throw std::invalid_argument("no pair differs at any position");
  return *best;
}

/// min over pairs and differing positions of sqrt(w_x w_y / (u_{x,i} v_{y,i})).
/// The minimizing radicand is exact; the comparison between candidates uses
/// long double.
inline QuantumBoundResult thm4_value(const WeightScheme& sch) {
  if (sch.entries.empty()) throw std::invalid_argument("empty relation");
  for (const auto& e : sch.entries)
    if (e.w <= 0) throw std::invalid_argument("weights must be positive");
  if (count_invalid_positions(sch) != 0)
    throw std::invalid_argument("weight scheme violates u v >= w^2");
  const auto mg = detail::marginals(sch);
  std::optional<QuantumBoundResult> best;
  long double best_sq = 0;
  for (const auto& e : sch.entries) {
    for (const auto& p : e.positions) {
      Radical num = mg.wx.at(e.x) * mg.wy.at(e.y);
      Radical den = mg.ux.at({e.x, p.position}) * mg.vy.at({e.y, p.position});
      const long double sq = num.to_long_double() / den.to_long_double();
      if (!best || sq < best_sq) {
        best_sq = sq;
        best = QuantumBoundResult{std::move(num), std::move(den), std::sqrt(sq), {e.x, e.y, p.position}};
      }
    }
  }
  if (!best) throw std::invalid_argument("no pair differs at any position");
  return *best;
}

/// w_X summed straight over the relation.
inline Rational marginal_by_definition(const WeightScheme& sch, std::size_t x) {
  Rational s = 0;
  for (const auto& e : sch.entries)
    if (e.x == x) s += e.w;
  return s;
}

/// Pr[endpoint(Y') != endpoint(X) | Y' ^ X = k] by enumerating the family.
inline Rational divergence_prob_enumerated(const PathFamily& fam, std::size_t x, int k) {
  std::uint64_t total = 0, differ = 0;
  for (std::size_t y = 0; y < fam.size(); ++y) {
    auto w = wedge(fam.steps[x], fam.steps[y]);
    if (!w || *w != k) continue;
    ++total;
    if (fam.endpoint(y) != fam.endpoint(x)) ++differ;
  }
  if (total == 0) throw std::invalid_argument("no path diverges at this step");
  return Rational(BigInt(differ), BigInt(total));
}

/// Same probability from the walk statistics: on the hypercube the suffix
/// must reproduce the parity pattern of X's flips k..T with a different first
/// flip; on the grid Y' steps to the other neighbour at tick k and must walk
/// from there to X's endpoint in the remaining T - k round-robin steps,
/// starting with axis (k + 1) mod m.
inline Rational divergence_prob_formula(const PathFamily& fam, std::size_t x, int k) {
  if (k < 0 || k > fam.T) throw std::invalid_argument("divergence step out of range");
  const auto& seq = fam.steps[x];
  if (fam.kind == PathKind::kHypercube) {
    ParityVector b(fam.m, 0);
    for (int t = k; t <= fam.T; ++t) b[seq[t]] ^= 1;
    return 1 - balls_bruteforce(fam.m, fam.T - k + 1, b, seq[k]);
  }
  const int dim = k % fam.m;
  const Vertex& xk0 = fam.points[x][2 * k];
  Vertex other(std::vector<int>(xk0.coords().begin(), xk0.coords().begin() + fam.m));
  other[dim] = std::clamp(other[dim] - seq[k], 1, fam.side);
  const Vertex& end = fam.endpoint(x);
  Vertex target(std::vector<int>(end.coords().begin(), end.coords().begin() + fam.m));
  return 1 - composite_walk_prob(fam.m, fam.side, fam.T - k, (k + 1) % fam.m, other, target);
}

/// w_X as the sum over divergence steps of the conditional probabilities.
inline Rational marginal_by_conditional(const PathFamily& fam, std::size_t x) {
  Rational s = 0;
  if (fam.branching() < 2) return s;
  for (int k = 0; k <= fam.T; ++k) s += divergence_prob_formula(fam, x, k);
  return s;
}

}  // namespace lslab

#endif  // LSLAB_ADVERSARY_HPP_
