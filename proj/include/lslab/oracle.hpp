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


#ifndef LSLAB_ORACLE_HPP_
#define LSLAB_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lslab/grid.hpp"
#include "lslab/instances.hpp"

namespace lslab {

struct QueryCounts {
  std::uint64_t classical = 0;
  std::uint64_t quantum = 0;  // charged, not executed

  std::uint64_t total() const { return classical + quantum; }
  QueryCounts& operator+=(const QueryCounts& o) {
    classical += o.classical;
    quantum += o.quantum;
    return *this;
  }
  bool operator==(const QueryCounts&) const = default;
};

/// Per-run query accounting with a stack of phase labels.
class QueryLedger {
 public:
  inline static const std::string kDefaultPhase = "main";

  void charge_classical(std::uint64_t n = 1) {
    totals_.classical += n;
    phases_[current_phase()].classical += n;
  }
  void charge_quantum(std::uint64_t n) {
    totals_.quantum += n;
    phases_[current_phase()].quantum += n;
  }

  const QueryCounts& totals() const { return totals_; }
  const std::map<std::string, QueryCounts>& phases() const { return phases_; }
  const std::string& current_phase() const {
    return stack_.empty() ? kDefaultPhase : stack_.back();
  }

  /// Scoped phase label; charges inside the scope land under `label`.
  class PhaseScope {
   public:
    PhaseScope(QueryLedger& ledger, std::string label) : ledger_(&ledger) {
      ledger_->stack_.push_back(std::move(label));
    }
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;
    ~PhaseScope() { ledger_->stack_.pop_back(); }

   private:
    QueryLedger* ledger_;
  };

  [[nodiscard]] PhaseScope phase(std::string label) { return PhaseScope(*this, std::move(label)); }

 private:
  QueryCounts totals_;
  std::map<std::string, QueryCounts> phases_;
  std::vector<std::string> stack_;
};

/// Black-box access to f : [k]^l -> Z. Every query() is charged one
/// classical query. peek() is the uncharged path used for post-hoc checks.
class ValueOracle {
 public:
  using Function = std::function<std::int64_t(const Vertex&)>;

  ValueOracle(GridShape shape, Function f) : shape_(shape), f_(std::move(f)) {}

  static ValueOracle from_table(GridShape shape, std::map<Vertex, std::int64_t> table) {
    auto t = std::make_shared<const std::map<Vertex, std::int64_t>>(std::move(table));
    return ValueOracle(shape, [t](const Vertex& v) {
      auto it = t->find(v);
      if (it == t->end()) throw std::out_of_range("no table entry for " + to_string(v));
      return it->second;
    });
  }

  static ValueOracle from_instance(std::shared_ptr<const WalkInstance> inst) {
    const GridShape shape = inst->shape();
    return ValueOracle(shape, [inst = std::move(inst)](const Vertex& v) {
      return instance_value(*inst, v);
    });
  }

  std::int64_t query(const Vertex& v) {
    shape_.require(v);
    ledger_.charge_classical();
    return f_(v);
  }

  std::int64_t peek(const Vertex& v) const {
    shape_.require(v);
    return f_(v);
  }

  const GridShape& shape() const { return shape_; }
  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

 private:
  GridShape shape_;
  Function f_;
  QueryLedger ledger_;
};

inline std::int64_t query_value(ValueOracle& oracle, const Vertex& v) { return oracle.query(v); }

/// Answers g(x) = [x in set(X)] for a generated instance, one query each.
class MembershipOracle {
 public:
  explicit MembershipOracle(std::shared_ptr<const WalkInstance> inst) : inst_(std::move(inst)) {}

  bool query(const Vertex& v) {
    inst_->shape().require(v);
    ledger_.charge_classical();
    return inst_->contains(v);
  }

  const GridShape& shape() const { return inst_->shape(); }
  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

 private:
  std::shared_ptr<const WalkInstance> inst_;
  QueryLedger ledger_;
};

inline bool query_membership(MembershipOracle& oracle, const Vertex& v) { return oracle.query(v); }

/// What a PATH solver knows about an instance without seeing the path.
struct InstanceMetadata {
  Family family;
  GridShape shape;
  std::uint64_t T;
  Vertex start;
  int walk_dims;
  std::optional<GridShape> clock_shape;
  std::optional<BlockLayout> layout;
  std::int64_t top;
  std::uint64_t slot_span;

  static InstanceMetadata of(const WalkInstance& inst) {
    return InstanceMetadata{inst.family(),     inst.shape(),       inst.T(),
                            inst.start(),      inst.walk_dims(),   inst.clock_shape(),
                            inst.layout(),     inst.top_value(),   inst.slot_span()};
  }
};

namespace detail {

inline int walk_weight(const Vertex& v, int walk_dims) {
  int ones = 0;
  for (int i = 0; i < walk_dims; ++i) ones += v[i] - 1;
  return ones;
}

/// Replays the walk from the known start with one membership query per tick
/// and returns x_{t,0}. Only needed for single-axis walks, where a step that
/// undoes the previous one makes the predecessor probe inconclusive.
inline Vertex replay_clocked(const InstanceMetadata& meta, MembershipOracle& mem,
                             std::uint64_t t) {
  const int k = meta.shape.side();
  Vertex x = meta.start;
  for (std::uint64_t s = 0; s < t; ++s) {
    const int dim = static_cast<int>(s % static_cast<std::uint64_t>(meta.walk_dims));
    Vertex up = x, down = x;
    up[dim] = std::min(x[dim] + 1, k);
    down[dim] = std::max(x[dim] - 1, 1);
    if (up == x) {
      if (mem.query(down)) x = down;
    } else if (down == x) {
      if (mem.query(up)) x = up;
    } else {
      x = mem.query(up) ? up : down;
    }
    Vertex clock = ham_unrank(*meta.clock_shape, s + 2);
    for (std::size_t i = 0; i < clock.size(); ++i) x[meta.walk_dims + i] = clock[i];
  }
  return x;
}

inline Vertex replay_blocks(const InstanceMetadata& meta, MembershipOracle& mem,
                            std::uint64_t t) {
  const BlockLayout& lay = *meta.layout;
  const GridShape bg = lay.block_grid();
  const int a = lay.alpha;
  const int clock = lay.clock_axis();
  Vertex x = meta.start;
  Vertex block(std::vector<int>(lay.dims - 1, 1));
  for (std::uint64_t s = 0; s < t; ++s) {
    const std::uint64_t order = s / static_cast<std::uint64_t>(lay.sweep);
    const int i = static_cast<int>(s % static_cast<std::uint64_t>(lay.dims - 1));
    const int lo = (block[i] - 1) * a + 1, hi = block[i] * a;
    Vertex up = x, down = x;
    up[i] = std::min(x[i] + 1, hi);
    down[i] = std::max(x[i] - 1, lo);
    if (up == x) {
      if (mem.query(down)) x = down;
    } else if (down == x) {
      if (mem.query(up)) x = up;
    } else {
      x = mem.query(up) ? up : down;
    }
    const int dir = BlockLayout::sweep_direction(order);
    if ((s + 1) % static_cast<std::uint64_t>(lay.sweep) != 0) {
      x[clock] += dir;
      continue;
    }
    const Vertex next = *ham_successor(bg, block);
    int j = 0;
    while (next[j] == block[j]) ++j;
    const int b = next[j] - block[j];
    const int y = x[j] - (block[j] - 1) * a;
    const int h = (b > 0) ? a + 1 - y : y;
    x[j] += b * (2 * h - 1);
    block = next;
  }
  return x;
}

inline std::int64_t simulate_clocked(const InstanceMetadata& meta, MembershipOracle& mem,
                                     const Vertex& v) {
  if (!mem.query(v)) return l1_distance(v, meta.start) + meta.top;
  Vertex clock_part(std::vector<int>(v.coords().begin() + meta.walk_dims, v.coords().end()));
  const std::uint64_t t = ham_index(*meta.clock_shape, clock_part) - 1;
  const std::int64_t base = meta.top - static_cast<std::int64_t>(2 * t);
  if (t == 0) return v == meta.start ? base : base - 1;

  Vertex probe = v;
  Vertex prev_clock = ham_unrank(*meta.clock_shape, t);
  for (std::size_t i = 0; i < prev_clock.size(); ++i) probe[meta.walk_dims + i] = prev_clock[i];
  if (!mem.query(probe)) return base - 1;
  // A yes can also come from x_{t-1,0} when step t undid step t-1.
  if (meta.family == Family::kHypercube) {
    // Every flip changes the weight of the walk part by one.
    const int b = (detail::walk_weight(v, meta.walk_dims) + static_cast<int>(t % 2)) % 2;
    return base - b;
  }
  if (meta.walk_dims >= 2) return base;  // consecutive steps move different axes
  return replay_clocked(meta, mem, t) == v ? base : base - 1;
}

inline std::int64_t simulate_blocks(const InstanceMetadata& meta, MembershipOracle& mem,
                                    const Vertex& v) {
  const BlockLayout& lay = *meta.layout;
  const GridShape bg = lay.block_grid();
  const int a = lay.alpha;
  const int side = lay.side;
  const int ca = lay.clock_axis();
  const std::int64_t S = static_cast<std::int64_t>(meta.slot_span);
  const std::int64_t off = l1_distance(v, meta.start) + meta.top;
  const int c = v[ca];
  const Vertex k = lay.block_of(v);
  const std::uint64_t order = ham_index(bg, k) - 1;

  if (lay.in_block_region(v)) {
    if (!mem.query(v)) return off;
    const int dir = BlockLayout::sweep_direction(order);
    const std::uint64_t tau = dir > 0 ? static_cast<std::uint64_t>(c - (a + 1))
                                      : static_cast<std::uint64_t>((side - a) - c);
    const std::uint64_t t = order * static_cast<std::uint64_t>(lay.sweep) + tau;
    const std::int64_t base = meta.top - static_cast<std::int64_t>(t) * S;
    if (t == 0) return v == meta.start ? base : base - 1;
    // One tick back along the sweep, or onto the incoming segment when v
    // sits on the entry row of its block.
    Vertex probe = v;
    probe[ca] = c - dir;
    if (!mem.query(probe)) return base - 1;
    if (tau == 0 || lay.dims >= 3) return base;
    return replay_blocks(meta, mem, t) == v ? base : base - 1;
  }

  // Segment region: only the segment entering or leaving v's block on this side.
  const bool top_side = c > side - a;
  const bool exits_here = (BlockLayout::sweep_direction(order) > 0) == top_side;
  Vertex from = k, to = k;
  std::uint64_t from_order = order;
  if (exits_here) {
    auto next = ham_successor(bg, k);
    if (!next) return off;
    to = *next;
  } else {
    auto prev = ham_predecessor(bg, k);
    if (!prev) return off;
    from = *prev;
    from_order = order - 1;
  }
  int j = 0;
  while (from[j] == to[j]) ++j;
  const int b = to[j] - from[j];
  const int z = top_side ? c - (side - a) : (a + 1) - c;  // height above the block face
  // Position across the crossed face: 1..a in the old block, a+1..2a in the new.
  const int p = b > 0 ? v[j] - (from[j] - 1) * a : from[j] * a + 1 - v[j];
  int s;
  if (p <= a) {
    const int e = a + 1 - p;
    s = (z <= e) ? z : z + (p - (a + 1 - z));
  } else {
    const int e = p - a;
    s = (z < e) ? 4 * e - 1 - z : z + (p - (a + 1 - z));
  }
  if (!mem.query(v)) return off;
  const std::int64_t t = static_cast<std::int64_t>((from_order + 1) * lay.sweep - 1);
  return meta.top - (t * S + 1 + s);
}

}  // namespace detail

/// Computes f_X(v) from membership queries and path-free metadata.
///
/// Off-path vertices cost one query. On-path vertices read their clock tick t
/// from their own coordinates and probe the vertex one tick earlier to learn
/// whether they are x_{t,0} or x_{t,1}. For single-axis walks an inconclusive
/// probe falls back to a counted replay from the start.
inline std::int64_t simulate_value_via_membership(const InstanceMetadata& meta,
                                                  MembershipOracle& mem, const Vertex& v) {
  meta.shape.require(v);
  if (meta.family == Family::kBlocks) return detail::simulate_blocks(meta, mem, v);
  return detail::simulate_clocked(meta, mem, v);
}

}  // namespace lslab

#endif  // LSLAB_ORACLE_HPP_
