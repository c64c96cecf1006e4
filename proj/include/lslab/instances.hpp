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


#ifndef LSLAB_INSTANCES_HPP_
#define LSLAB_INSTANCES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lslab/grid.hpp"
#include "lslab/rng.hpp"

/// Hard Local Search instances built from a random walk plus a clock.
///
/// A hypercube or grid instance splits the coordinates into a walk part (the
/// first m axes) and a clock part (the rest). Step t moves the walk part once,
/// producing x_{t,1} from x_{t,0}, and then the clock advances one vertex along
/// the snake path of the clock space, producing x_{t+1,0}. The block family
/// cuts a d-dimensional grid into [alpha]^(d-1) blocks whose last axis is a
/// local clock and threads consecutive blocks with block-changing segments.
///
/// Every trajectory point carries a slot: hypercube and grid points get
/// slot 2t + b, block points get t * 4 alpha + b, and the j-th interior point
/// of the segment leaving time t gets t * 4 alpha + 1 + j. A point visited
/// twice in a row by a sticky step keeps its first slot. The induced function
/// is top - slot on the trajectory and l1(v, start) + top elsewhere, where top
/// is the value of the start point.
namespace lslab {

enum class Family { kHypercube, kGrid, kBlocks };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::kHypercube: return "hypercube-walk";
    case Family::kGrid: return "grid-walk";
    case Family::kBlocks: return "grid-blocks";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  if (name == "hypercube-walk" || name == "hypercube") return Family::kHypercube;
  if (name == "grid-walk" || name == "grid") return Family::kGrid;
  if (name == "grid-blocks" || name == "blocks") return Family::kBlocks;
  throw std::invalid_argument("unknown instance family '" + std::string(name) + "'");
}

struct InstanceParams {
  int n = 0;
  int d = 0;
  int m = 0;
  double r = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultTrajectoryBudget = std::uint64_t{1} << 20;

/// floor(x) that forgives pow() landing a hair under an exact integer.
inline int robust_floor(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

/// Geometry of the block decomposition of [n']^d.
struct BlockLayout {
  int alpha = 0;        // block side
  int beta = 0;         // blocks per axis
  int side = 0;         // n' = alpha * beta
  int dims = 0;         // d
  int sweep = 0;        // n' - 2 alpha, clock length inside one block
  std::uint64_t length = 0;  // L = sweep * beta^(d-1)

  static BlockLayout make(int n, int d, double r) {
    if (d < 2) throw std::invalid_argument("block instances need d >= 2");
    if (n < 2) throw std::invalid_argument("block instances need n >= 2");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("block exponent r must lie in (0, 1)");
    BlockLayout b;
    b.alpha = robust_floor(std::pow(static_cast<double>(n), r));
    b.beta = robust_floor(std::pow(static_cast<double>(n), 1.0 - r));
    if (b.alpha < 2)
      throw std::invalid_argument("degenerate blocks: alpha = floor(n^r) = " +
                                  std::to_string(b.alpha) + " < 2");
    if (b.beta < 3)
      throw std::invalid_argument("degenerate blocks: beta = floor(n^(1-r)) = " +
                                  std::to_string(b.beta) + " leaves no clock room (need >= 3)");
    b.side = b.alpha * b.beta;
    b.dims = d;
    b.sweep = b.side - 2 * b.alpha;
    auto blocks = checked_pow(static_cast<std::uint64_t>(b.beta), d - 1);
    if (!blocks || *blocks > UINT64_MAX / static_cast<std::uint64_t>(b.sweep))
      throw BudgetExceeded("block layout too large");
    b.length = *blocks * static_cast<std::uint64_t>(b.sweep);
    return b;
  }

  GridShape domain() const { return GridShape(side, dims); }
  GridShape block_grid() const { return GridShape(beta, dims - 1); }
  int clock_axis() const { return dims - 1; }

  /// Block index (1-based per axis) of the first d-1 coordinates of v.
  Vertex block_of(const Vertex& v) const {
    std::vector<int> k(dims - 1);
    for (int i = 0; i + 1 < dims; ++i) k[i] = (v[i] - 1) / alpha + 1;
    return Vertex(std::move(k));
  }

  bool in_block_region(const Vertex& v) const {
    const int c = v[dims - 1];
    return c > alpha && c <= side - alpha;
  }

  /// +1 when block number `order` (0-based along the block path) sweeps up.
  static int sweep_direction(std::uint64_t order) { return (order % 2 == 0) ? +1 : -1; }

  /// Maps a block-region vertex to the long grid [alpha]^(d-1) x [L].
  ///
  /// Each block change along axis j mirrors the within-block coordinate j, so
  /// a coordinate is reflected when its axis has been crossed an odd number of
  /// times on the block path from the first block.
  std::optional<Vertex> to_long_grid(const Vertex& v) const {
    if (!in_block_region(v)) return std::nullopt;
    const GridShape bg = block_grid();
    const Vertex k = block_of(v);
    const std::uint64_t order = ham_index(bg, k) - 1;
    std::vector<int> out(dims);
    for (int i = 0; i + 1 < dims; ++i) {
      const int y = v[i] - (k[i] - 1) * alpha;
      // Every block move along axis i shifts k_i by one, so the number of
      // crossings has the parity of k_i - 1.
      out[i] = ((k[i] - 1) % 2 == 0) ? y : alpha + 1 - y;
    }
    const int c = v[dims - 1];
    const std::uint64_t tau = sweep_direction(order) > 0
                                  ? static_cast<std::uint64_t>(c - (alpha + 1))
                                  : static_cast<std::uint64_t>((side - alpha) - c);
    out[dims - 1] = static_cast<int>(order * static_cast<std::uint64_t>(sweep) + tau + 1);
    return Vertex(std::move(out));
  }
};

class WalkInstance;
std::int64_t instance_value(const WalkInstance& inst, const Vertex& v);

class WalkInstance {
 public:
  Family family() const { return family_; }
  const InstanceParams& params() const { return params_; }
  const GridShape& shape() const { return shape_; }
  /// Number of walk steps minus one; the clock runs over T + 1 ticks.
  std::uint64_t T() const { return T_; }
  const Vertex& start() const { return trajectory_.front(); }
  const Vertex& endpoint() const { return trajectory_.back(); }
  /// Flip coordinates (hypercube) or signs +1/-1 (grid, blocks), one per step.
  std::span<const int> steps() const { return steps_; }
  /// Every listed trajectory point in visiting order. Hypercube and grid
  /// instances list exactly x_{0,0}, x_{0,1}, ..., x_{T,0}, x_{T,1}.
  std::span<const Vertex> trajectory() const { return trajectory_; }
  int walk_dims() const { return walk_dims_; }
  /// Clock space of the hypercube and grid families.
  const std::optional<GridShape>& clock_shape() const { return clock_shape_; }
  const std::optional<BlockLayout>& layout() const { return layout_; }
  /// Slots reserved per clock tick: 2, or 4 alpha for blocks.
  std::uint64_t slot_span() const { return slot_span_; }
  std::int64_t top_value() const { return top_; }

  /// Slot of v on the trajectory, or nullopt when v is off it. Uncounted.
  std::optional<std::uint64_t> slot_of(const Vertex& v) const {
    if (!shape_.contains(v)) return std::nullopt;
    if (family_ == Family::kBlocks) {
      auto it = block_slots_.find(encode(shape_, v));
      if (it == block_slots_.end()) return std::nullopt;
      return it->second;
    }
    const std::uint64_t t = clock_tick(v);
    const std::uint64_t w = walk_code(v);
    if (w == before_[t]) return 2 * t;
    if (w == after_[t]) return 2 * t + 1;
    return std::nullopt;
  }

  bool contains(const Vertex& v) const { return slot_of(v).has_value(); }

  /// Clock tick t of v (0-based) for hypercube and grid instances.
  std::uint64_t clock_tick(const Vertex& v) const {
    return ham_index(*clock_shape_, clock_part(v)) - 1;
  }

  Vertex walk_part(const Vertex& v) const {
    return Vertex(std::vector<int>(v.coords().begin(), v.coords().begin() + walk_dims_));
  }
  Vertex clock_part(const Vertex& v) const {
    return Vertex(std::vector<int>(v.coords().begin() + walk_dims_, v.coords().end()));
  }

 private:
  friend WalkInstance make_hypercube_instance(int, int, std::vector<int>, std::uint64_t,
                                              std::uint64_t);
  friend WalkInstance make_grid_instance(int, int, int, std::vector<int>, std::uint64_t,
                                         std::uint64_t);
  friend WalkInstance make_block_instance(int, int, double, std::vector<int>, std::uint64_t,
                                          std::uint64_t);

  WalkInstance(Family f, InstanceParams p, GridShape shape)
      : family_(f), params_(p), shape_(shape) {}

  std::uint64_t walk_code(const Vertex& v) const {
    std::uint64_t code = 0;
    for (int i = walk_dims_; i-- > 0;) code = code * shape_.side() + (v[i] - 1);
    return code;
  }

  // Shared by the hypercube and grid generators.
  void build_clocked(std::vector<int> walk_start, std::uint64_t budget) {
    const int k = shape_.side();
    clock_shape_ = GridShape(k, shape_.axes() - walk_dims_);
    auto ticks = clock_shape_->vertex_count();
    if (!ticks || *ticks > budget)
      throw BudgetExceeded("clock space of " + std::string(family_name(family_)) +
                           " instance exceeds the trajectory budget");
    T_ = *ticks - 1;
    if (steps_.size() != *ticks)
      throw std::invalid_argument("expected " + std::to_string(*ticks) + " steps, got " +
                                  std::to_string(steps_.size()));
    slot_span_ = 2;
    top_ = static_cast<std::int64_t>(2 * T_);
    before_.resize(*ticks);
    after_.resize(*ticks);
    trajectory_.reserve(2 * *ticks);

    std::vector<int> walk = std::move(walk_start);
    std::vector<int> coords(shape_.axes());
    auto emit = [&](std::uint64_t t) {
      std::copy(walk.begin(), walk.end(), coords.begin());
      Vertex clock = ham_unrank(*clock_shape_, t + 1);
      std::copy(clock.coords().begin(), clock.coords().end(), coords.begin() + walk_dims_);
      trajectory_.emplace_back(coords);
    };
    for (std::uint64_t t = 0; t <= T_; ++t) {
      emit(t);
      before_[t] = walk_code(trajectory_.back());
      const int s = steps_[t];
      if (family_ == Family::kHypercube) {
        if (s < 0 || s >= walk_dims_)
          throw std::invalid_argument("flip coordinate " + std::to_string(s) + " out of range");
        walk[s] = 3 - walk[s];
      } else {
        if (s != 1 && s != -1) throw std::invalid_argument("grid steps must be +1 or -1");
        const int dim = static_cast<int>(t % static_cast<std::uint64_t>(walk_dims_));
        walk[dim] = std::clamp(walk[dim] + s, 1, k);
      }
      emit(t);
      after_[t] = walk_code(trajectory_.back());
    }
  }

  Family family_;
  InstanceParams params_;
  GridShape shape_;
  std::uint64_t T_ = 0;
  std::vector<int> steps_;
  std::vector<Vertex> trajectory_;
  int walk_dims_ = 0;
  std::optional<GridShape> clock_shape_;
  std::optional<BlockLayout> layout_;
  std::uint64_t slot_span_ = 2;
  std::int64_t top_ = 0;
  std::vector<std::uint64_t> before_;  // walk code of x_{t,0}
  std::vector<std::uint64_t> after_;   // walk code of x_{t,1}
  std::unordered_map<std::uint64_t, std::uint64_t> block_slots_;
};

/// Hypercube {0,1}^n = walk {0,1}^m (x) clock {0,1}^(n-m), replaying the flips.
inline WalkInstance make_hypercube_instance(int n, int m, std::vector<int> flips,
                                            std::uint64_t seed = 0,
                                            std::uint64_t budget = kDefaultTrajectoryBudget) {
  if (m < 1 || m >= n)
    throw std::invalid_argument("hypercube instance needs 1 <= m < n (got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
  WalkInstance inst(Family::kHypercube, InstanceParams{n, n, m, 0.0, seed}, GridShape(2, n));
  inst.walk_dims_ = m;
  inst.steps_ = std::move(flips);
  inst.build_clocked(std::vector<int>(m, 1), budget);
  return inst;
}

inline WalkInstance gen_hypercube_instance(int n, int m, std::uint64_t seed,
                                           std::uint64_t budget = kDefaultTrajectoryBudget) {
  if (m < 1 || m >= n)
    throw std::invalid_argument("hypercube instance needs 1 <= m < n (got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
  auto ticks = checked_pow(2, n - m);
  if (!ticks || *ticks > budget)
    throw BudgetExceeded("hypercube clock 2^" + std::to_string(n - m) + " exceeds budget");
  Rng rng(seed);
  std::vector<int> flips(*ticks);
  for (auto& f : flips) f = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
  return make_hypercube_instance(n, m, std::move(flips), seed, budget);
}

/// Grid [n]^d = walk [n]^m (x) clock [n]^(d-m); step t moves axis t mod m.
inline WalkInstance make_grid_instance(int n, int d, int m, std::vector<int> signs,
                                       std::uint64_t seed = 0,
                                       std::uint64_t budget = kDefaultTrajectoryBudget) {
  if (m < 1 || m >= d)
    throw std::invalid_argument("grid instance needs 1 <= m < d (got d=" + std::to_string(d) +
                                ", m=" + std::to_string(m) + ")");
  if (n < 2) throw std::invalid_argument("grid instance needs n >= 2");
  WalkInstance inst(Family::kGrid, InstanceParams{n, d, m, 0.0, seed}, GridShape(n, d));
  inst.walk_dims_ = m;
  inst.steps_ = std::move(signs);
  inst.build_clocked(std::vector<int>(m, n / 2), budget);
  return inst;
}

inline WalkInstance gen_grid_instance(int n, int d, int m, std::uint64_t seed,
                                      std::uint64_t budget = kDefaultTrajectoryBudget) {
  if (m < 1 || m >= d)
    throw std::invalid_argument("grid instance needs 1 <= m < d (got d=" + std::to_string(d) +
                                ", m=" + std::to_string(m) + ")");
  (void)GridShape(n, d);
  auto ticks = checked_pow(static_cast<std::uint64_t>(n), d - m);
  if (!ticks || *ticks > budget)
    throw BudgetExceeded("grid clock exceeds budget");
  Rng rng(seed);
  std::vector<int> signs(*ticks);
  for (auto& s : signs) s = rng.below(2) ? +1 : -1;
  return make_grid_instance(n, d, m, std::move(signs), seed, budget);
}

/// Block-decomposed grid on [n']^d with n' = floor(n^r) floor(n^(1-r)).
///
/// Block-changing segments read the within-block offset of the crossing axis
/// once, when the segment starts: the climb and descent have height h (the
/// distance of the particle to the crossed block face) and the lateral run
/// has 2h - 1 moves, which mirrors the coordinate into the next block.
inline WalkInstance make_block_instance(int n, int d, double r, std::vector<int> signs,
                                        std::uint64_t seed = 0,
                                        std::uint64_t budget = kDefaultTrajectoryBudget) {
  const BlockLayout lay = BlockLayout::make(n, d, r);
  // Each tick lists at most 2 points plus a segment of at most 4 alpha - 1.
  if (lay.length > budget / (4 * static_cast<std::uint64_t>(lay.alpha) + 2))
    throw BudgetExceeded("block trajectory exceeds budget");
  if (signs.size() != lay.length)
    throw std::invalid_argument("expected " + std::to_string(lay.length) + " steps, got " +
                                std::to_string(signs.size()));

  WalkInstance inst(Family::kBlocks, InstanceParams{n, d, 0, r, seed}, lay.domain());
  inst.layout_ = lay;
  inst.walk_dims_ = d - 1;
  inst.steps_ = std::move(signs);
  inst.T_ = lay.length - 1;
  const std::uint64_t span = 4 * static_cast<std::uint64_t>(lay.alpha);
  inst.slot_span_ = span;
  inst.top_ = static_cast<std::int64_t>(span * inst.T_ + 1);

  const GridShape domain = lay.domain();
  const GridShape blocks = lay.block_grid();
  const int a = lay.alpha;
  const int clock = d - 1;
  std::vector<int> x(d, a / 2);
  x[clock] = a + 1;
  Vertex block(std::vector<int>(d - 1, 1));

  auto& traj = inst.trajectory_;
  auto& slots = inst.block_slots_;
  auto emit = [&](std::uint64_t slot) {
    traj.emplace_back(x);
    slots.try_emplace(encode(domain, traj.back()), slot);
  };
  emit(0);
  for (std::uint64_t t = 0; t < lay.length; ++t) {
    const std::uint64_t order = t / static_cast<std::uint64_t>(lay.sweep);
    const int i = static_cast<int>(t % static_cast<std::uint64_t>(d - 1));
    const int s = inst.steps_[t];
    if (s != 1 && s != -1) throw std::invalid_argument("block steps must be +1 or -1");
    const int lo = (block[i] - 1) * a + 1;
    const int hi = block[i] * a;
    x[i] = std::clamp(x[i] + s, lo, hi);
    if (traj.back().coords()[i] != x[i]) emit(t * span + 1);

    const int dir = BlockLayout::sweep_direction(order);
    if ((t + 1) % static_cast<std::uint64_t>(lay.sweep) != 0) {
      x[clock] += dir;
      emit((t + 1) * span);
      continue;
    }
    auto next = ham_successor(blocks, block);
    if (!next) break;  // last block: the particle stops
    int j = 0;
    while ((*next)[j] == block[j]) ++j;
    const int b = (*next)[j] - block[j];
    const int y = x[j] - (block[j] - 1) * a;
    const int h = (b > 0) ? a + 1 - y : y;
    std::uint64_t slot = t * span + 1;
    for (int q = 0; q < h; ++q) {
      x[clock] += dir;
      emit(++slot);
    }
    for (int q = 0; q < 2 * h - 1; ++q) {
      x[j] += b;
      emit(++slot);
    }
    for (int q = 0; q < h; ++q) {
      x[clock] -= dir;
      if (q + 1 < h) {
        emit(++slot);
      } else {
        emit((t + 1) * span);
      }
    }
    block = *next;
  }
  return inst;
}

inline WalkInstance gen_block_instance(int n, int d, double r, std::uint64_t seed,
                                       std::uint64_t budget = kDefaultTrajectoryBudget) {
  const BlockLayout lay = BlockLayout::make(n, d, r);
  if (lay.length > budget / (4 * static_cast<std::uint64_t>(lay.alpha) + 2))
    throw BudgetExceeded("block trajectory exceeds budget");
  Rng rng(seed);
  std::vector<int> signs(lay.length);
  for (auto& s : signs) s = rng.below(2) ? +1 : -1;
  return make_block_instance(n, d, r, std::move(signs), seed, budget);
}

/// Value of the induced function f_X at v.
inline std::int64_t instance_value(const WalkInstance& inst, const Vertex& v) {
  inst.shape().require(v);
  if (auto slot = inst.slot_of(v)) return inst.top_value() - static_cast<std::int64_t>(*slot);
  return l1_distance(v, inst.start()) + inst.top_value();
}

inline const Vertex& instance_endpoint(const WalkInstance& inst) { return inst.endpoint(); }

/// True when every vertex of the listing occupies one contiguous run. Runs
/// longer than one entry come from sticky steps that stand still.
inline bool trajectory_is_self_avoiding(const GridShape& shape, std::span<const Vertex> points) {
  std::unordered_map<std::uint64_t, std::size_t> last_seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::uint64_t code = encode(shape, points[i]);
    auto [it, fresh] = last_seen.try_emplace(code, i);
    if (!fresh) {
      if (it->second + 1 != i) return false;
      it->second = i;
    }
  }
  return true;
}

// Recommended parameters.

enum class Mode { kRandomized, kQuantum };

inline Mode parse_mode(std::string_view s) {
  if (s == "randomized" || s == "classical") return Mode::kRandomized;
  if (s == "quantum") return Mode::kQuantum;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

struct ParameterRecord {
  Family family;
  Mode mode;
  std::optional<int> m;     // walk dimensions (hypercube, grid)
  std::optional<double> r;  // block exponent
};

/// Parameter choices behind the lower-bound constructions; logs are base 2.
inline ParameterRecord recommended_params(Family family, Mode mode, int n, int d = 0) {
  ParameterRecord rec{family, mode, std::nullopt, std::nullopt};
  switch (family) {
    case Family::kHypercube: {
      if (n < 2) throw std::invalid_argument("hypercube parameters need n >= 2");
      const double lg = std::log2(static_cast<double>(n));
      const int m = mode == Mode::kRandomized ? robust_floor((n + lg) / 2.0)
                                              : robust_floor((2.0 * n - lg) / 3.0);
      if (m < 1 || m >= n) throw std::invalid_argument("no valid m for this n");
      rec.m = m;
      return rec;
    }
    case Family::kGrid: {
      if (d < 2) throw std::invalid_argument("grid parameters need d >= 2");
      if (mode == Mode::kRandomized) {
        rec.m = d > 4 ? (d + 1) / 2 : (d >= 3 ? 2 : 1);
      } else {
        if (d > 6) {
          rec.m = static_cast<int>(std::lround(2.0 * d / 3.0));
        } else if (d == 6) {
          rec.m = 4;
        } else if (d >= 3) {
          rec.m = d - 2;
        } else {
          rec.m = 1;
        }
      }
      return rec;
    }
    case Family::kBlocks: {
      if (d < 2) throw std::invalid_argument("block parameters need d >= 2");
      const double dd = d;
      if (mode == Mode::kRandomized) {
        if (d >= 4) {
          rec.r = dd / (2.0 * dd - 2.0);
        } else if (d == 3) {
          if (n < 4) throw std::invalid_argument("d = 3 randomized exponent needs n >= 4");
          const double lg = std::log2(static_cast<double>(n));
          rec.r = 0.75 - std::log2(lg) / (4.0 * lg);
        } else {
          rec.r = 2.0 / 3.0;
        }
      } else {
        rec.r = d >= 6 ? 2.0 * dd / (3.0 * dd - 3.0) : dd / (dd + 1.0);
      }
      return rec;
    }
  }
  throw std::invalid_argument("unsupported family");
}

}  // namespace lslab

#endif  // LSLAB_INSTANCES_HPP_
