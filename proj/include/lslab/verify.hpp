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


#ifndef LSLAB_VERIFY_HPP_
#define LSLAB_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>

#include "lslab/grid.hpp"
#include "lslab/instances.hpp"

namespace lslab {

/// Exhaustive scans refuse domains larger than this by default.
inline constexpr std::uint64_t kDefaultScanLimit = std::uint64_t{1} << 16;

struct VerifyReport {
  bool self_avoiding = false;
  bool unique_local_min = false;
  bool membership_consistent = false;
  bool values_decreasing = false;  // along the trajectory, ignoring sticky repeats
  std::uint64_t local_minima = 0;
  std::optional<Vertex> witness;  // first vertex that broke a check, if any

  bool ok() const {
    return self_avoiding && unique_local_min && membership_consistent && values_decreasing;
  }
};

/// Scans every vertex of `shape` against a trajectory listing.
///
/// `value` is the induced function and `member` the membership predicate
/// under test; the listing itself is the reference point set.
inline VerifyReport verify_trajectory(const GridShape& shape, std::span<const Vertex> points,
                                      const std::function<std::int64_t(const Vertex&)>& value,
                                      const std::function<bool(const Vertex&)>& member,
                                      std::uint64_t limit = kDefaultScanLimit) {
  shape.checked_vertex_count(limit);
  VerifyReport rep;
  rep.self_avoiding = trajectory_is_self_avoiding(shape, points);

  std::unordered_set<std::uint64_t> listed;
  for (const auto& p : points) listed.insert(encode(shape, p));

  rep.values_decreasing = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] == points[i - 1]) continue;
    if (value(points[i]) >= value(points[i - 1])) {
      rep.values_decreasing = false;
      if (!rep.witness) rep.witness = points[i];
    }
  }

  rep.membership_consistent = true;
  std::optional<Vertex> only_min;
  for_each_vertex(shape, limit, [&](const Vertex& v) {
    if (member(v) != listed.contains(encode(shape, v))) {
      rep.membership_consistent = false;
      if (!rep.witness) rep.witness = v;
    }
    const std::int64_t fv = value(v);
    bool is_min = true;
    for_each_neighbor(shape, v, [&](const Vertex& w) {
      if (is_min && value(w) < fv) is_min = false;
    });
    if (is_min) {
      ++rep.local_minima;
      if (!only_min) only_min = v;
    }
  });
  rep.unique_local_min =
      rep.local_minima == 1 && !points.empty() && *only_min == points.back();
  if (!rep.unique_local_min && !rep.witness && only_min) rep.witness = only_min;
  return rep;
}

/// Exhaustive check of a generated instance; throws BudgetExceeded when the
/// domain is larger than `limit`.
inline VerifyReport verify_instance(const WalkInstance& inst,
                                    std::uint64_t limit = kDefaultScanLimit) {
  inst.shape().checked_vertex_count(limit);
  VerifyReport rep = verify_trajectory(
      inst.shape(), inst.trajectory(),
      [&](const Vertex& v) { return instance_value(inst, v); },
      [&](const Vertex& v) { return inst.contains(v); }, limit);
  if (inst.family() != Family::kBlocks && inst.trajectory().size() != 2 * (inst.T() + 1))
    rep.self_avoiding = false;
  return rep;
}

}  // namespace lslab

#endif  // LSLAB_VERIFY_HPP_
