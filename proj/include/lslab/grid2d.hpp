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

#ifndef LSLAB_GRID2D_HPP_
#define LSLAB_GRID2D_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lslab/grid.hpp"
#include "lslab/oracle.hpp"
#include "lslab/rng.hpp"
#include "lslab/solvers.hpp"

/// Shrinking-region local search on the square grid [n]^2.
///
/// Each round samples the current region, keeps the best vertex seen so far
/// as the anchor, and looks for a radius m whose l1 sphere around the anchor
/// holds nothing smaller than the anchor. The region is then cut down to the
/// l1 ball of that radius. Once the radius is at most sqrt(n) the run finishes
/// with steepest descent from the anchor.
namespace lslab {

struct Ball {
  Vertex center;
  std::int64_t radius = 0;
};

/// Region U = [n]^2 intersected with every ball added so far.
class RegionState {
 public:
  explicit RegionState(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("region side must be >= 1");
  }

  int side() const { return n_; }
  const std::vector<Ball>& balls() const { return balls_; }

  void add(const Vertex& center, std::int64_t radius) {
    if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
    balls_.push_back({center, radius});
  }

  bool contains(const Vertex& v) const {
    if (v.size() != 2 || v[0] < 1 || v[0] > n_ || v[1] < 1 || v[1] > n_) return false;
    for (const Ball& b : balls_)
      if (l1_distance(v, b.center) > b.radius) return false;
    return true;
  }

  /// Rows x with a nonempty column interval, as (x, lo, hi). Each ball cuts a
  /// row to one interval, so the region is one interval per row.
  template <typename Fn>
  void for_each_row(Fn&& fn) const {
    auto [xlo, xhi, ylo0, yhi0] = bounding_box();
    for (int x = xlo; x <= xhi; ++x) {
      std::int64_t lo = 1, hi = n_;
      for (const Ball& b : balls_) {
        const std::int64_t slack = b.radius - std::abs(x - b.center[0]);
        if (slack < 0) {
          lo = 1;
          hi = 0;
          break;
        }
        lo = std::max<std::int64_t>(lo, b.center[1] - slack);
        hi = std::min<std::int64_t>(hi, b.center[1] + slack);
      }
      if (lo <= hi) fn(x, static_cast<int>(lo), static_cast<int>(hi));
    }
  }

  /// |U| by row intervals.
  std::uint64_t size() const {
    std::uint64_t total = 0;
    for_each_row([&](int, int lo, int hi) { total += static_cast<std::uint64_t>(hi - lo + 1); });
    return total;
  }

  /// |U| by testing every vertex of the bounding box.
  std::uint64_t size_by_enumeration(std::uint64_t limit = kDefaultEnumerationLimit) const {
    auto [xlo, xhi, ylo, yhi] = bounding_box();
    const std::uint64_t area = static_cast<std::uint64_t>(std::max(0, xhi - xlo + 1)) *
                               static_cast<std::uint64_t>(std::max(0, yhi - ylo + 1));
    if (area > limit) throw BudgetExceeded("region bounding box exceeds the enumeration limit");
    std::uint64_t total = 0;
    for (int x = xlo; x <= xhi; ++x)
      for (int y = ylo; y <= yhi; ++y)
        if (contains(Vertex{x, y})) ++total;
    return total;
  }

  template <typename Fn>
  void for_each_vertex(Fn&& fn) const {
    for_each_row([&](int x, int lo, int hi) {
      for (int y = lo; y <= hi; ++y) fn(Vertex{x, y});
    });
  }

  /// Uniform vertex of U by rejection from the newest ball's bounding box.
  Vertex sample(Rng& rng) const {
    auto [xlo, xhi, ylo, yhi] = bounding_box();
    if (xlo > xhi || ylo > yhi) throw std::logic_error("sampling from an empty region");
    for (;;) {
      Vertex v{static_cast<int>(rng.between(xlo, xhi)), static_cast<int>(rng.between(ylo, yhi))};
      if (contains(v)) return v;
    }
  }

 private:
  struct Box {
    int xlo, xhi, ylo, yhi;
  };

  Box bounding_box() const {
    if (balls_.empty()) return {1, n_, 1, n_};
    const Ball& b = balls_.back();
    auto clip = [&](std::int64_t c) {
      return static_cast<int>(std::clamp<std::int64_t>(c, 1, n_));
    };
    Box box{clip(b.center[0] - b.radius), clip(b.center[0] + b.radius),
            clip(b.center[1] - b.radius), clip(b.center[1] + b.radius)};
    return box;
  }

  int n_;
  std::vector<Ball> balls_;
};

/// Vertices of U at l1 distance exactly `radius` from `center`, sorted.
inline std::vector<Vertex> l1_sphere(const Vertex& center, std::int64_t radius,
                                     const RegionState& region) {
  if (radius < 0) throw std::invalid_argument("sphere radius must be >= 0");
  std::vector<Vertex> out;
  for (std::int64_t dx = -radius; dx <= radius; ++dx) {
    const std::int64_t rest = radius - std::abs(dx);
    for (std::int64_t dy : {-rest, rest}) {
      Vertex w{static_cast<int>(center[0] + dx), static_cast<int>(center[1] + dy)};
      if (region.contains(w)) out.push_back(std::move(w));
      if (rest == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Grid2dOptions {
  Execution execution = Execution::kExact;
  std::optional<double> eps;  // overall budget; the others derive from it
  std::optional<double> eps1;
  std::optional<double> eps2;
  std::optional<double> eps3;
  std::optional<double> eps4;
  /// Per-round set-level checks (boundary containment, good radii) run when
  /// n is at most this; 0 disables them.
  int instrument_limit = 0;
};

struct Grid2dErrorRates {
  double eps = 1.0;
  double eps1 = 1.0;  // sampling
  double eps2 = 1.0;  // minimum finding
  double eps3 = 1.0;  // radius tries
  double eps4 = 1.0;  // sphere test
  std::uint64_t tries = 0;
};

/// eps = 1/(2 log n), eps1 = eps2 = eps3 = eps/4, eps4 = eps/(4 log(4/eps)).
inline Grid2dErrorRates resolve_error_rates(int n, const Grid2dOptions& opt = {}) {
  Grid2dErrorRates r;
  if (opt.eps) {
    r.eps = *opt.eps;
  } else {
    const double lg = std::log2(static_cast<double>(std::max(n, 2)));
    r.eps = 1.0 / (2.0 * lg);
  }
  if (!(r.eps > 0.0 && r.eps <= 4.0)) throw std::invalid_argument("eps must lie in (0, 4]");
  r.eps1 = opt.eps1.value_or(r.eps / 4.0);
  r.eps2 = opt.eps2.value_or(r.eps / 4.0);
  r.eps3 = opt.eps3.value_or(r.eps / 4.0);
  r.eps4 = opt.eps4.value_or(r.eps / (4.0 * std::log2(4.0 / r.eps)));
  for (double e : {r.eps1, r.eps2, r.eps3, r.eps4})
    if (!(e > 0.0 && e <= 1.0)) throw std::invalid_argument("error rates must lie in (0, 1]");
  r.tries = std::max<std::uint64_t>(1, log_inverse_ceil(r.eps3));
  return r;
}

/// Rounds taken when every round keeps the largest allowed radius
/// ceil(3m/4); nullopt when that radius can stall above sqrt(n).
inline std::optional<int> worst_case_rounds(int n) {
  std::int64_t m = n;
  int rounds = 0;
  while (m * m > n) {
    const std::int64_t next = (3 * m + 3) / 4;
    if (next == m) return std::nullopt;
    m = next;
    ++rounds;
  }
  return rounds;
}

struct Grid2dRound {
  int round = 0;
  std::int64_t radius = 0;           // m_(i)
  std::uint64_t region_size = 0;     // |U_(i)|
  std::uint64_t sample_count = 0;
  Vertex anchor;                     // u_(i+1)
  std::int64_t anchor_value = 0;
  std::optional<std::int64_t> next_radius;  // m_(i+1); empty when the round failed
  std::uint64_t tries_used = 0;
  std::uint64_t sphere_size = 0;     // |W_(i)| of the accepted radius
  // Instrumented only.
  std::optional<std::uint64_t> below_anchor;   // vertices of U_(i) smaller than the anchor
  std::optional<std::uint64_t> good_radii;
  std::optional<std::uint64_t> radius_choices;
  std::optional<bool> boundary_step_ok;   // B(U_(i+1)) in B(U_(i)) + W_(i)
  std::optional<bool> boundary_union_ok;  // B(U_(i+1)) in W_(0) + ... + W_(i)
};

struct Grid2dDiagnostics {
  Grid2dErrorRates rates;
  std::vector<Grid2dRound> rounds;
  bool rounds_within_log_n = true;
  std::optional<int> worst_case_rounds;
  std::int64_t final_radius = 0;
  bool descent_in_region = true;
  bool descent_within_radius = true;
};

namespace detail {

inline std::vector<char> region_mask(const RegionState& region) {
  const int n = region.side();
  std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
  region.for_each_vertex([&](const Vertex& v) {
    mask[static_cast<std::size_t>(v[0] - 1) * n + (v[1] - 1)] = 1;
  });
  return mask;
}

// Members of the mask with a grid neighbor outside it.
inline std::vector<char> boundary_mask(const std::vector<char>& mask, int n) {
  std::vector<char> out(mask.size(), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const std::size_t at = static_cast<std::size_t>(x) * n + y;
      if (!mask[at]) continue;
      const int dx[] = {-1, 1, 0, 0};
      const int dy[] = {0, 0, -1, 1};
      for (int k = 0; k < 4; ++k) {
        const int a = x + dx[k], b = y + dy[k];
        if (a < 0 || a >= n || b < 0 || b >= n) continue;
        if (!mask[static_cast<std::size_t>(a) * n + b]) {
          out[at] = 1;
          break;
        }
      }
    }
  }
  return out;
}

inline void mark(std::vector<char>& mask, int n, std::span<const Vertex> vs) {
  for (const Vertex& v : vs) mask[static_cast<std::size_t>(v[0] - 1) * n + (v[1] - 1)] = 1;
}

inline bool subset_of_union(const std::vector<char>& a, const std::vector<char>& b,
                            const std::vector<char>& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i] && !c[i]) return false;
  return true;
}

}  // namespace detail

/// Runs the shrinking-region search on the oracle's [n]^2 domain.
inline SolveResult grid2d_quantum(ValueOracle& oracle, int n, std::uint64_t seed,
                                  const Grid2dOptions& opt = {},
                                  Grid2dDiagnostics* diag = nullptr) {
  const GridShape& shape = oracle.shape();
  if (shape.axes() != 2 || shape.side() != n)
    throw std::invalid_argument("grid2d_quantum needs an oracle on [" + std::to_string(n) +
                                "]^2");
  const Grid2dErrorRates rates = resolve_error_rates(n, opt);
  Grid2dDiagnostics local;
  Grid2dDiagnostics& dg = diag ? *diag : local;
  dg = Grid2dDiagnostics{};
  dg.rates = rates;
  dg.worst_case_rounds = worst_case_rounds(n);

  detail::QueryDelta delta(oracle.ledger());
  QueryLedger& ledger = oracle.ledger();
  Rng sampler(mix_seed(seed, 1));
  Rng fault_rng(mix_seed(seed, 2));
  FaultSource faults = opt.execution == Execution::kFaithful ? &fault_rng : nullptr;
  const bool instrument = opt.instrument_limit > 0 && n <= opt.instrument_limit;

  SolveResult r;
  RegionState region(n);
  std::int64_t m = n;
  Vertex anchor{1, 1};
  std::int64_t anchor_value = 0;
  std::uint64_t previous_size = region.size();
  std::vector<char> wall;  // W_(0) + ... + W_(i), instrumented runs only
  if (instrument) wall.assign(static_cast<std::size_t>(n) * n, 0);

  int i = 0;
  while (m * m > n) {
    Grid2dRound rec;
    rec.round = i;
    rec.radius = m;
    rec.region_size = region.size();
    if (rec.region_size > previous_size) throw std::logic_error("region grew between rounds");
    previous_size = rec.region_size;
    if (i > 0 && rec.region_size > static_cast<std::uint64_t>(2 * m * m + 2 * m + 1))
      throw std::logic_error("region exceeds the l1 ball of its radius");

    const long double want = 4.0L * static_cast<long double>(rec.region_size) /
                             static_cast<long double>(m) *
                             std::log2(1.0L / static_cast<long double>(rates.eps1));
    rec.sample_count = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(want)));

    std::vector<Vertex> picks;
    std::vector<std::int64_t> values;
    picks.reserve(rec.sample_count);
    values.reserve(rec.sample_count);
    Vertex candidate;
    {
      auto scope = ledger.phase("sample-min");
      for (std::uint64_t s = 0; s < rec.sample_count; ++s) {
        picks.push_back(region.sample(sampler));
        values.push_back(oracle.peek(picks.back()));
      }
      candidate = picks[durr_hoyer_min_sim(values, rates.eps2, ledger, faults)];
    }
    std::int64_t candidate_value;
    {
      auto scope = ledger.phase("compare");
      candidate_value = oracle.query(candidate);
    }
    if (i == 0 || !(anchor_value < candidate_value)) {
      if (i > 0 && candidate_value > anchor_value) throw std::logic_error("anchor value rose");
      anchor = candidate;
      anchor_value = candidate_value;
    }
    rec.anchor = anchor;
    rec.anchor_value = anchor_value;

    const std::int64_t lo = m / 4;
    const std::int64_t hi = (3 * m + 3) / 4;
    std::optional<std::int64_t> accepted;
    std::vector<Vertex> sphere;
    {
      auto scope = ledger.phase("sphere-test");
      for (std::uint64_t j = 0; j < rates.tries; ++j) {
        ++rec.tries_used;
        const std::int64_t pick = sampler.between(lo, hi);
        std::vector<Vertex> w = l1_sphere(anchor, pick, region);
        if (!grover_exists_sim(oracle, w, anchor_value, rates.eps4, ledger, faults)) {
          accepted = pick;
          sphere = std::move(w);
          break;
        }
      }
    }

    if (instrument) {
      std::uint64_t below = 0;
      region.for_each_vertex([&](const Vertex& v) {
        if (oracle.peek(v) < anchor_value) ++below;
      });
      rec.below_anchor = below;
      if (4 * below <= static_cast<std::uint64_t>(m)) {
        std::uint64_t good = 0;
        for (std::int64_t c = lo; c <= hi; ++c) {
          bool ok = true;
          for (const Vertex& w : l1_sphere(anchor, c, region))
            if (oracle.peek(w) < anchor_value) ok = false;
          if (ok) ++good;
        }
        rec.good_radii = good;
        rec.radius_choices = static_cast<std::uint64_t>(hi - lo + 1);
      }
    }

    if (!accepted) {
      dg.rounds.push_back(std::move(rec));
      r.found = anchor;
      r.rounds = i;
      r.outcome = Outcome::kFail;
      r.is_local_min = is_local_minimum(oracle, anchor);
      delta.fill(r);
      dg.rounds_within_log_n = static_cast<double>(i) <= std::log2(static_cast<double>(n));
      return r;
    }

    rec.next_radius = *accepted;
    rec.sphere_size = sphere.size();
    if (instrument) {
      const std::vector<char> before = detail::region_mask(region);
      const std::vector<char> edge_before = detail::boundary_mask(before, n);
      RegionState next = region;
      next.add(anchor, *accepted);
      const std::vector<char> edge_after = detail::boundary_mask(detail::region_mask(next), n);
      std::vector<char> w_mask(before.size(), 0);
      detail::mark(w_mask, n, sphere);
      detail::mark(wall, n, sphere);
      rec.boundary_step_ok = detail::subset_of_union(edge_after, edge_before, w_mask);
      rec.boundary_union_ok = detail::subset_of_union(edge_after, wall, wall);
    }
    dg.rounds.push_back(std::move(rec));

    region.add(anchor, *accepted);
    m = *accepted;
    ++i;
    r.trace.push_back({i, m, anchor});
  }

  dg.final_radius = m;
  dg.rounds_within_log_n = n <= 1 || static_cast<double>(i) <= std::log2(static_cast<double>(n));

  detail::Descent d;
  {
    auto scope = ledger.phase("descent");
    d = detail::descend(oracle, anchor, true);
  }
  for (const Vertex& v : d.path)
    if (!region.contains(v)) dg.descent_in_region = false;
  dg.descent_within_radius = d.steps <= static_cast<std::uint64_t>(m);

  r.found = d.end;
  r.rounds = i;
  r.descent_steps = d.steps;
  r.is_local_min = is_local_minimum(oracle, r.found);
  r.outcome = r.is_local_min ? Outcome::kSuccess : Outcome::kFail;
  delta.fill(r);
  return r;
}

}  // namespace lslab

#endif  // LSLAB_GRID2D_HPP_
