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

#ifndef LSLAB_FUNCTIONS_HPP_
#define LSLAB_FUNCTIONS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lslab/grid.hpp"
#include "lslab/oracle.hpp"
#include "lslab/rng.hpp"

// Built-in test functions on [n]^d.
namespace lslab {

enum class Builtin { kBowl, kConstant };

inline std::string_view builtin_name(Builtin b) { return b == Builtin::kBowl ? "bowl" : "constant"; }

inline Builtin parse_builtin(std::string_view s) {
  if (s == "bowl" || s == "l1-bowl") return Builtin::kBowl;
  if (s == "constant") return Builtin::kConstant;
  throw std::invalid_argument("unknown builtin function '" + std::string(s) + "'");
}

inline Vertex random_vertex(const GridShape& shape, Rng& rng) {
  std::vector<int> c(shape.axes());
  for (int& x : c) x = static_cast<int>(rng.between(1, shape.side()));
  return Vertex(std::move(c));
}

/// f(v) = |v - center|_1.
inline ValueOracle bowl_oracle(const GridShape& shape, const Vertex& center) {
  shape.require(center);
  return ValueOracle(shape, [center](const Vertex& v) { return l1_distance(v, center); });
}

inline ValueOracle constant_oracle(const GridShape& shape, std::int64_t value = 0) {
  return ValueOracle(shape, [value](const Vertex&) { return value; });
}

/// The builtin on [n]^d; the bowl center is drawn from `seed`.
inline ValueOracle builtin_oracle(Builtin b, int n, int d, std::uint64_t seed) {
  const GridShape shape(n, d);
  if (b == Builtin::kConstant) return constant_oracle(shape);
  Rng rng(seed);
  return bowl_oracle(shape, random_vertex(shape, rng));
}

}  // namespace lslab

#endif  // LSLAB_FUNCTIONS_HPP_
