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


#include "lslab/instances.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lslab/verify.hpp"

namespace lslab {
namespace {

TEST(HypercubeInstanceTest, SmallestClock) {
  auto inst = gen_hypercube_instance(3, 2, 11);
  EXPECT_EQ(inst.T(), 1u);
  EXPECT_EQ(inst.trajectory().size(), 4u);
  EXPECT_EQ(inst.start(), (Vertex{1, 1, 1}));
  EXPECT_THROW(gen_hypercube_instance(3, 3, 1), std::invalid_argument);
  EXPECT_THROW(gen_hypercube_instance(3, 0, 1), std::invalid_argument);
}

TEST(HypercubeInstanceTest, EndpointReplaysFlips) {
  auto inst = make_hypercube_instance(3, 2, {0, 1});
  EXPECT_EQ(inst.endpoint(), (Vertex{2, 2, 2}));
  EXPECT_EQ(instance_endpoint(inst), inst.trajectory().back());
}

TEST(HypercubeInstanceTest, FlipsAreUniformOverWalkAxes) {
  auto inst = gen_hypercube_instance(14, 4, 5);
  std::vector<int> hits(4, 0);
  for (int f : inst.steps()) ++hits[f];
  for (int h : hits) EXPECT_NEAR(h, 256, 60);
}

TEST(HypercubeInstanceTest, BudgetRefusal) {
  EXPECT_THROW(gen_hypercube_instance(40, 2, 1), BudgetExceeded);
}

TEST(GridInstanceTest, ShapesAndStart) {
  auto a = gen_grid_instance(4, 2, 1, 3);
  EXPECT_EQ(a.T(), 3u);
  EXPECT_EQ(a.start()[0], 2);
  EXPECT_EQ(gen_grid_instance(3, 3, 2, 3).T(), 2u);
  EXPECT_THROW(gen_grid_instance(3, 2, 2, 3), std::invalid_argument);
}

TEST(GridInstanceTest, StickyEndpoint) {
  auto inst = make_grid_instance(4, 2, 1, {+1, +1, +1, +1});
  // 2 -> 3 -> 4, then the walk sticks at the boundary.
  EXPECT_EQ(inst.endpoint(), (Vertex{4, 4}));
  EXPECT_EQ(instance_value(inst, inst.endpoint()), 0);  // first visit of (4,4) is x_{3,0}
}

TEST(GridInstanceTest, RoundRobinAxes) {
  auto inst = gen_grid_instance(5, 4, 3, 8);
  auto traj = inst.trajectory();
  for (std::uint64_t t = 0; t <= inst.T(); ++t) {
    const Vertex& a = traj[2 * t];
    const Vertex& b = traj[2 * t + 1];
    for (int i = 0; i < 3; ++i)
      if (i != static_cast<int>(t % 3)) {
        EXPECT_EQ(a[i], b[i]);
      }
  }
}

TEST(BlockInstanceTest, LayoutNumbers) {
  auto lay = BlockLayout::make(9, 2, 0.5);
  EXPECT_EQ(lay.alpha, 3);
  EXPECT_EQ(lay.beta, 3);
  EXPECT_EQ(lay.side, 9);
  EXPECT_EQ(lay.length, 9u);
  EXPECT_THROW(BlockLayout::make(4, 2, 0.1), std::invalid_argument);
  EXPECT_THROW(gen_block_instance(4, 2, 0.1, 1), std::invalid_argument);
}

TEST(BlockInstanceTest, StartAndEndpoint) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = gen_block_instance(9, 2, 0.5, seed);
    EXPECT_EQ(inst.start(), (Vertex{1, 4}));
    EXPECT_EQ(inst.T(), 8u);
    const auto& lay = *inst.layout();
    EXPECT_EQ(lay.block_of(inst.endpoint()), (Vertex{3}));
    EXPECT_TRUE(trajectory_is_self_avoiding(inst.shape(), inst.trajectory()));
  }
}

TEST(BlockInstanceTest, ThreadedBlocksFormTheLongGrid) {
  for (auto [n, d, r] : {std::tuple{9, 2, 0.5}, std::tuple{16, 2, 0.5}, std::tuple{9, 3, 0.5}}) {
    const auto lay = BlockLayout::make(n, d, r);
    const GridShape domain = lay.domain();
    const GridShape longg(std::max<int>(lay.alpha, static_cast<int>(lay.length)), d);
    std::set<Vertex> images;
    std::uint64_t region = 0;
    for_each_vertex(domain, 1 << 16, [&](const Vertex& v) {
      auto img = lay.to_long_grid(v);
      if (!img) return;
      ++region;
      for (int i = 0; i + 1 < d; ++i) {
        EXPECT_GE((*img)[i], 1);
        EXPECT_LE((*img)[i], lay.alpha);
      }
      EXPECT_GE((*img)[d - 1], 1);
      EXPECT_LE(static_cast<std::uint64_t>((*img)[d - 1]), lay.length);
      images.insert(*img);
    });
    const auto expected = static_cast<std::uint64_t>(std::pow(lay.alpha, d - 1)) * lay.length;
    EXPECT_EQ(region, expected);
    EXPECT_EQ(images.size(), expected);

    // Along the trajectory, non-segment points advance one long-grid step at a time.
    auto inst = gen_block_instance(n, d, r, 17);
    std::optional<Vertex> prev;
    for (const auto& p : inst.trajectory()) {
      auto img = lay.to_long_grid(p);
      if (!img) continue;
      if (prev) {
        EXPECT_LE(l1_distance(*prev, *img), 1);
      }
      prev = img;
    }
    EXPECT_EQ(static_cast<std::uint64_t>((*prev)[d - 1]), lay.length);
  }
}

TEST(InstanceValueTest, ClaimFormulaPoints) {
  auto inst = gen_hypercube_instance(6, 3, 21);
  const auto T = static_cast<std::int64_t>(inst.T());
  EXPECT_EQ(instance_value(inst, inst.endpoint()), -1);
  EXPECT_EQ(instance_value(inst, inst.start()), 2 * T);
  for (const auto& u : neighbors(inst.shape(), inst.start())) {
    if (!inst.contains(u)) {
      EXPECT_EQ(instance_value(inst, u), 2 * T + 1);
    }
  }
  auto traj = inst.trajectory();
  for (std::size_t i = 0; i < traj.size(); ++i)
    EXPECT_EQ(instance_value(inst, traj[i]), 2 * T - static_cast<std::int64_t>(i));
  EXPECT_THROW(instance_value(inst, Vertex{1, 1}), std::invalid_argument);
}

TEST(InstanceValueTest, BlockValuesDecreaseAlongTrajectory) {
  auto inst = gen_block_instance(16, 2, 0.5, 4);
  auto traj = inst.trajectory();
  for (std::size_t i = 1; i < traj.size(); ++i)
    EXPECT_LT(instance_value(inst, traj[i]), instance_value(inst, traj[i - 1]));
}

TEST(VerifyTest, SmallInstancesPassEveryCheck) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (int m = 1; m < 8; ++m) EXPECT_TRUE(verify_instance(gen_hypercube_instance(8, m, seed)).ok());
    EXPECT_TRUE(verify_instance(gen_grid_instance(6, 2, 1, seed)).ok());
    EXPECT_TRUE(verify_instance(gen_grid_instance(5, 3, 2, seed)).ok());
    EXPECT_TRUE(verify_instance(gen_grid_instance(5, 3, 1, seed)).ok());
    EXPECT_TRUE(verify_instance(gen_block_instance(9, 2, 0.5, seed)).ok());
    EXPECT_TRUE(verify_instance(gen_block_instance(16, 2, 0.5, seed)).ok());
    EXPECT_TRUE(verify_instance(gen_block_instance(9, 3, 0.5, seed)).ok());
  }
}

TEST(VerifyTest, DuplicatedPointIsCaught) {
  auto inst = gen_hypercube_instance(5, 2, 3);
  std::vector<Vertex> pts(inst.trajectory().begin(), inst.trajectory().end());
  pts.push_back(pts[1]);
  auto rep = verify_trajectory(
      inst.shape(), pts, [&](const Vertex& v) { return instance_value(inst, v); },
      [&](const Vertex& v) { return inst.contains(v); });
  EXPECT_FALSE(rep.self_avoiding);
}

TEST(VerifyTest, WrongMembershipIsCaught) {
  auto inst = gen_hypercube_instance(5, 2, 3);
  auto rep = verify_trajectory(
      inst.shape(), inst.trajectory(), [&](const Vertex& v) { return instance_value(inst, v); },
      [&](const Vertex& v) { return !inst.contains(v); });
  EXPECT_FALSE(rep.membership_consistent);
  EXPECT_TRUE(rep.unique_local_min);
}

TEST(VerifyTest, ConstantFunctionHasManyMinima) {
  auto inst = gen_hypercube_instance(5, 2, 3);
  auto rep = verify_trajectory(
      inst.shape(), inst.trajectory(), [](const Vertex&) { return std::int64_t{0}; },
      [&](const Vertex& v) { return inst.contains(v); });
  EXPECT_FALSE(rep.unique_local_min);
  EXPECT_EQ(rep.local_minima, 32u);
}

TEST(VerifyTest, RefusesLargeScans) {
  auto inst = gen_hypercube_instance(20, 12, 1);
  EXPECT_THROW(verify_instance(inst), BudgetExceeded);
}

TEST(InjectivityTest, DistinctFlipSequencesGiveDistinctPointSets) {
  // n = 4, m = 2: T = 3, so 2^4 flip sequences.
  std::set<std::set<Vertex>> sets;
  for (int code = 0; code < 16; ++code) {
    std::vector<int> flips(4);
    for (int i = 0; i < 4; ++i) flips[i] = (code >> i) & 1;
    auto inst = make_hypercube_instance(4, 2, flips);
    sets.insert(std::set<Vertex>(inst.trajectory().begin(), inst.trajectory().end()));
  }
  EXPECT_EQ(sets.size(), 16u);
}

TEST(RecommendedParamsTest, Examples) {
  EXPECT_EQ(*recommended_params(Family::kHypercube, Mode::kRandomized, 10).m, 6);
  EXPECT_EQ(*recommended_params(Family::kHypercube, Mode::kQuantum, 12).m, 6);
  EXPECT_DOUBLE_EQ(*recommended_params(Family::kBlocks, Mode::kRandomized, 100, 4).r, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*recommended_params(Family::kBlocks, Mode::kRandomized, 100, 2).r, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*recommended_params(Family::kBlocks, Mode::kQuantum, 100, 6).r, 12.0 / 15.0);
  EXPECT_DOUBLE_EQ(*recommended_params(Family::kBlocks, Mode::kQuantum, 100, 3).r, 0.75);
  const double r3 = *recommended_params(Family::kBlocks, Mode::kRandomized, 256, 3).r;
  EXPECT_DOUBLE_EQ(r3, 0.75 - 3.0 / 32.0);
  EXPECT_EQ(*recommended_params(Family::kGrid, Mode::kRandomized, 10, 7).m, 4);
  EXPECT_EQ(*recommended_params(Family::kGrid, Mode::kQuantum, 10, 9).m, 6);
  EXPECT_EQ(*recommended_params(Family::kGrid, Mode::kQuantum, 10, 5).m, 3);
  EXPECT_THROW(recommended_params(Family::kGrid, Mode::kQuantum, 10, 1), std::invalid_argument);
}

TEST(FamilyNamesTest, RoundTrip) {
  for (auto f : {Family::kHypercube, Family::kGrid, Family::kBlocks})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("torus"), std::invalid_argument);
}

}  // namespace
}  // namespace lslab
