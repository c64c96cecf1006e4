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


#ifndef LSLAB_INSTANCE_IO_HPP_
#define LSLAB_INSTANCE_IO_HPP_

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lslab/instances.hpp"

namespace lslab {

inline constexpr int kInstanceFormatVersion = 1;

inline nlohmann::json vertex_to_json(const Vertex& v) {
  return nlohmann::json(std::vector<int>(v.coords().begin(), v.coords().end()));
}

/// Self-contained instance record: parameters plus the explicit step sequence.
inline nlohmann::json instance_to_json(const WalkInstance& inst) {
  const InstanceParams& p = inst.params();
  nlohmann::json params = {{"n", p.n}, {"d", p.d}, {"seed", p.seed}};
  if (inst.family() == Family::kBlocks) {
    params["r"] = p.r;
  } else {
    params["m"] = p.m;
  }
  return {
      {"format_version", kInstanceFormatVersion},
      {"family", std::string(family_name(inst.family()))},
      {"params", params},
      {"T", inst.T()},
      {"start", vertex_to_json(inst.start())},
      {"step_sequence", std::vector<int>(inst.steps().begin(), inst.steps().end())},
      {"endpoint", vertex_to_json(inst.endpoint())},
  };
}

/// Rebuilds an instance by replaying the stored steps and cross-checks the
/// recorded T, start and endpoint.
inline WalkInstance instance_from_json(const nlohmann::json& j,
                                       std::uint64_t budget = kDefaultTrajectoryBudget) {
  if (!j.is_object() || !j.contains("format_version"))
    throw std::invalid_argument("instance record lacks format_version");
  const int version = j.at("format_version").get<int>();
  if (version != kInstanceFormatVersion)
    throw std::invalid_argument("unsupported instance format_version " + std::to_string(version));
  const Family family = parse_family(j.at("family").get<std::string>());
  const auto& p = j.at("params");
  const int n = p.at("n").get<int>();
  const std::uint64_t seed = p.value("seed", std::uint64_t{0});
  auto steps = j.at("step_sequence").get<std::vector<int>>();

  WalkInstance inst = [&] {
    switch (family) {
      case Family::kHypercube:
        return make_hypercube_instance(n, p.at("m").get<int>(), std::move(steps), seed, budget);
      case Family::kGrid:
        return make_grid_instance(n, p.at("d").get<int>(), p.at("m").get<int>(),
                                  std::move(steps), seed, budget);
      case Family::kBlocks:
        return make_block_instance(n, p.at("d").get<int>(), p.at("r").get<double>(),
                                   std::move(steps), seed, budget);
    }
    throw std::invalid_argument("unsupported family");
  }();

  if (j.at("T").get<std::uint64_t>() != inst.T())
    throw std::invalid_argument("instance record: T does not match the replayed steps");
  if (j.at("start") != vertex_to_json(inst.start()))
    throw std::invalid_argument("instance record: start does not match");
  if (j.at("endpoint") != vertex_to_json(inst.endpoint()))
    throw std::invalid_argument("instance record: endpoint does not match the replayed steps");
  return inst;
}

inline void save_instance(const WalkInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst).dump(2) << '\n';
}

inline WalkInstance load_instance(const std::string& path,
                                  std::uint64_t budget = kDefaultTrajectoryBudget) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return instance_from_json(nlohmann::json::parse(in), budget);
}

}  // namespace lslab

#endif  // LSLAB_INSTANCE_IO_HPP_
