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

#ifndef LSLAB_SOLVERS_HPP_
#define LSLAB_SOLVERS_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lslab/grid.hpp"
#include "lslab/oracle.hpp"
#include "lslab/rng.hpp"

/// Local search under query accounting: steepest descent, sample-then-descend
/// and the simulated quantum subroutines it can be charged with.
///
/// Quantum subroutines are simulated classically. They read values through
/// the uncharged peek() path and charge the ledger the fixed cost
/// ceil(sqrt(S)) * ceil(log2(1/eps)). In faithful mode they also err at the
/// advertised rate.
namespace lslab {

enum class Outcome { kSuccess, kFail };

inline std::string_view outcome_name(Outcome o) {
  return o == Outcome::kSuccess ? "success" : "fail";
}

/// exact: simulated subroutines never err. faithful: they err at rate eps.
enum class Execution { kExact, kFaithful };

inline std::string_view execution_name(Execution e) {
  return e == Execution::kExact ? "exact" : "faithful";
}

inline Execution parse_execution(std::string_view s) {
  if (s == "exact") return Execution::kExact;
  if (s == "faithful") return Execution::kFaithful;
  throw std::invalid_argument("unknown execution mode '" + std::string(s) + "'");
}

enum class Charging { kClassical, kQuantum };

inline std::string_view charging_name(Charging c) {
  return c == Charging::kClassical ? "classical" : "quantum";
}

inline Charging parse_charging(std::string_view s) {
  if (s == "classical" || s == "randomized") return Charging::kClassical;
  if (s == "quantum") return Charging::kQuantum;
  throw std::invalid_argument("unknown charging '" + std::string(s) + "'");
}

struct TraceEntry {
  int round = 0;
  std::int64_t radius = 0;
  Vertex anchor;
};

struct SolveResult {
  Vertex found;
  bool is_local_min = false;
  QueryCounts queries;                         // charged during this run only
  std::map<std::string, QueryCounts> phases;   // same, split by phase label
  Outcome outcome = Outcome::kFail;
  int rounds = 0;
  std::uint64_t descent_steps = 0;
  std::vector<TraceEntry> trace;
};

/// Uncharged check that no neighbor of v has a strictly smaller value.
inline bool is_local_minimum(const ValueOracle& oracle, const Vertex& v) {
  const std::int64_t fv = oracle.peek(v);
  bool ok = true;
  for_each_neighbor(oracle.shape(), v, [&](const Vertex& u) {
    if (ok && oracle.peek(u) < fv) ok = false;
  });
  return ok;
}

/// ceil(log2(1/eps)) for eps in (0, 1]; zero at eps = 1.
inline std::uint64_t log_inverse_ceil(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("error rate must lie in (0, 1]");
  return static_cast<std::uint64_t>(std::ceil(std::log2(1.0 / eps) - 1e-12));
}

/// ceil(sqrt(s)) in integers.
inline std::uint64_t sqrt_ceil(std::uint64_t s) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(s)));
  while (r * r < s) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= s) --r;
  return r;
}

/// Per-run source of injected subroutine errors; null means exact mode.
using FaultSource = Rng*;

/// Index of the minimum of `values` (lowest index on ties), charged as a
/// Durr-Hoyer search. With a fault source, returns a uniformly random other
/// index with probability eps2.
inline std::size_t durr_hoyer_min_sim(std::span<const std::int64_t> values, double eps2,
                                      QueryLedger& ledger, FaultSource faults = nullptr) {
  if (values.empty()) throw std::invalid_argument("durr_hoyer_min_sim: empty input");
  const std::uint64_t rounds = log_inverse_ceil(eps2);
  ledger.charge_quantum(sqrt_ceil(values.size()) * rounds);
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[best]) best = i;
  if (faults && values.size() > 1 && faults->bernoulli(eps2)) {
    std::size_t other = static_cast<std::size_t>(faults->below(values.size() - 1));
    return other >= best ? other + 1 : other;
  }
  return best;
}

/// Whether some w in `region` has f(w) < threshold, charged as a Grover
/// search. Values come from the uncharged path. An empty region costs nothing
/// and answers false. With a fault source the answer flips with probability eps4.
inline bool grover_exists_sim(const ValueOracle& oracle, std::span<const Vertex> region,
                              std::int64_t threshold, double eps4, QueryLedger& ledger,
                              FaultSource faults = nullptr) {
  if (region.empty()) return false;
  ledger.charge_quantum(sqrt_ceil(region.size()) * log_inverse_ceil(eps4));
  bool found = false;
  for (const Vertex& w : region) {
    if (oracle.peek(w) < threshold) {
      found = true;
      break;
    }
  }
  if (faults && faults->bernoulli(eps4)) found = !found;
  return found;
}

namespace detail {

class QueryDelta {
 public:
  explicit QueryDelta(const QueryLedger& ledger)
      : ledger_(ledger), totals_(ledger.totals()), phases_(ledger.phases()) {}

  void fill(SolveResult& r) const {
    const QueryCounts& now = ledger_.totals();
    r.queries = {now.classical - totals_.classical, now.quantum - totals_.quantum};
    r.phases.clear();
    for (const auto& [label, c] : ledger_.phases()) {
      QueryCounts d = c;
      if (auto it = phases_.find(label); it != phases_.end()) {
        d.classical -= it->second.classical;
        d.quantum -= it->second.quantum;
      }
      if (d.total() > 0) r.phases[label] = d;
    }
  }

 private:
  const QueryLedger& ledger_;
  QueryCounts totals_;
  std::map<std::string, QueryCounts> phases_;
};

struct Descent {
  Vertex end;
  std::uint64_t steps = 0;
  std::vector<Vertex> path;  // filled only on request
};

// Every distinct vertex is charged once per descent.
inline Descent descend(ValueOracle& oracle, const Vertex& start, bool keep_path) {
  const GridShape& shape = oracle.shape();
  shape.require(start);
  std::unordered_map<std::uint64_t, std::int64_t> seen;
  auto probe = [&](const Vertex& v) {
    auto [it, fresh] = seen.try_emplace(encode(shape, v), 0);
    if (fresh) it->second = oracle.query(v);
    return it->second;
  };

  Descent d{start, 0, {}};
  if (keep_path) d.path.push_back(start);
  std::int64_t fv = probe(start);
  for (;;) {
    std::optional<Vertex> best;
    std::int64_t best_value = fv;
    std::uint64_t best_rank = 0;
    for_each_neighbor(shape, d.end, [&](const Vertex& u) {
      const std::int64_t fu = probe(u);
      if (fu > best_value || (!best && fu == best_value)) return;
      if (best && fu == best_value) {
        const std::uint64_t rank = ham_index(shape, u);
        if (rank >= best_rank) return;
        best = u;
        best_rank = rank;
        return;
      }
      best = u;
      best_value = fu;
      best_rank = ham_index(shape, u);
    });
    if (!best) return d;
    d.end = *best;
    fv = best_value;
    ++d.steps;
    if (keep_path) d.path.push_back(d.end);
  }
}

}  // namespace detail

/// Moves to the smallest neighbor while it is strictly smaller; ties go to the
/// lowest snake rank. All probes are classical queries.
inline SolveResult steepest_descent(ValueOracle& oracle, const Vertex& start) {
  detail::QueryDelta delta(oracle.ledger());
  detail::Descent d;
  {
    auto scope = oracle.ledger().phase("descent");
    d = detail::descend(oracle, start, false);
  }
  SolveResult r;
  r.found = d.end;
  r.descent_steps = d.steps;
  r.is_local_min = is_local_minimum(oracle, r.found);
  r.outcome = r.is_local_min ? Outcome::kSuccess : Outcome::kFail;
  delta.fill(r);
  return r;
}

inline constexpr double kDefaultSampleMinError = 0.25;

/// Samples `samples` vertices uniformly with replacement, takes the smallest
/// (lowest sample index on ties), then descends from it. Classical charging
/// pays one query per sample; quantum charging pays one minimum search.
inline SolveResult sample_then_descend(ValueOracle& oracle, std::uint64_t samples,
                                       std::uint64_t seed, Charging charging,
                                       double min_error = kDefaultSampleMinError) {
  const GridShape& shape = oracle.shape();
  const auto total = shape.vertex_count();
  if (!total) throw std::invalid_argument("sample_then_descend: domain too large");
  if (samples < 1 || samples > *total)
    throw std::invalid_argument("sample count " + std::to_string(samples) + " outside [1, " +
                                std::to_string(*total) + "]");
  detail::QueryDelta delta(oracle.ledger());
  Rng rng(seed);
  std::vector<Vertex> picks;
  std::vector<std::int64_t> values;
  picks.reserve(samples);
  values.reserve(samples);
  std::size_t best = 0;
  {
    auto scope = oracle.ledger().phase("sample");
    for (std::uint64_t i = 0; i < samples; ++i) {
      picks.push_back(decode(shape, rng.below(*total)));
      values.push_back(charging == Charging::kClassical ? oracle.query(picks.back())
                                                        : oracle.peek(picks.back()));
    }
    if (charging == Charging::kQuantum) {
      best = durr_hoyer_min_sim(values, min_error, oracle.ledger());
    } else {
      for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[best]) best = i;
    }
  }
  detail::Descent d;
  {
    auto scope = oracle.ledger().phase("descent");
    d = detail::descend(oracle, picks[best], false);
  }
  SolveResult r;
  r.found = d.end;
  r.descent_steps = d.steps;
  r.is_local_min = is_local_minimum(oracle, r.found);
  r.outcome = r.is_local_min ? Outcome::kSuccess : Outcome::kFail;
  delta.fill(r);
  return r;
}

}  // namespace lslab

#endif  // LSLAB_SOLVERS_HPP_
