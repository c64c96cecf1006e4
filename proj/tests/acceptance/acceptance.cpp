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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion.
// Exit status is 0 unless --strict is given and some criterion failed, or
// a criterion threw.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lslab/adversary.hpp"
#include "lslab/bench.hpp"
#include "lslab/instances.hpp"
#include "lslab/oracle.hpp"
#include "lslab/verify.hpp"
#include "lslab/walkstats.hpp"

namespace {

using namespace lslab;

// Pinned tolerances.
constexpr int kEnvelopeConstant = 4;
constexpr double kMinSuccessRate = 0.5;
constexpr double kGridSlopeLo = 0.4;
constexpr double kGridSlopeHi = 0.8;
constexpr double kHardnessSlope = 1.0;
constexpr double kHardnessSlopeTol = 0.1;
constexpr double kMonteCarloSigmas = 3.0;
constexpr std::uint64_t kMaxMembershipPerValue = 2;
constexpr std::uint64_t kInstanceSeeds = 20;
constexpr std::uint64_t kGridTrials = 50;
constexpr std::uint64_t kFaithfulTrials = 200;
constexpr std::uint64_t kHardnessSeeds = 20;
constexpr std::uint64_t kEquivalenceRuns = 100000;

struct Verdict {
  bool pass = false;
  std::string detail;
};

int worker_threads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string fixed(double x, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

// 1
Verdict ball_parity() {
  int checked = 0;
  for (int m = 2; m <= 5; ++m) {
    for (int t = 2; t <= 10; t += 2) {
      const Rational brute = balls_bruteforce(m, t, ParityVector(m, 0));
      if (brute != balls_closed_form(m, t) || brute != balls_recursion(m, t))
        return {false, "mismatch at m=" + std::to_string(m) + " t=" + std::to_string(t)};
      ++checked;
    }
  }
  for (int m = 2; m <= 12; ++m) {
    if (balls_recursion(m, 2) != Rational(1, m) || balls_closed_form(m, 2) != Rational(1, m))
      return {false, "two-ball base case wrong at m=" + std::to_string(m)};
    ++checked;
  }
  for (int m = 2; m <= 3; ++m) {
    for (int t = 1; t <= 7; t += 2) {
      if (!balls_odd_reduction_check(m, t))
        return {false, "odd reduction fails at m=" + std::to_string(m) + " t=" + std::to_string(t)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " exact identities"};
}

// 2
Verdict conditional_bound() {
  int checked = 0;
  for (int m = 2; m <= 4; ++m) {
    for (int t = 1; t <= 8; ++t) {
      const auto all = balls_parity_histogram(m, t);
      const Rational scale(m, m - 1);
      for (int first = 0; first < m; ++first) {
        const auto cond = balls_parity_histogram(m, t, first);
        const BigInt den_all = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(t));
        const BigInt den_cond = den_all / m * (m - 1);
        for (std::size_t b = 0; b < all.size(); ++b) {
          const Rational lhs(BigInt(cond[b]), den_cond);
          const Rational rhs = scale * Rational(BigInt(all[b]), den_all);
          if (lhs > rhs)
            return {false, "violated at m=" + std::to_string(m) + " t=" + std::to_string(t) +
                               " excluded bin " + std::to_string(first)};
          ++checked;
        }
      }
    }
  }
  return {true, std::to_string(checked) + " (m, t, parity, bin) cases"};
}

// 3
Verdict line_walk() {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    const LineWalkTable table = line_walk_table(n, 14);
    for (int t = 0; t <= 14; ++t) {
      for (int i = 1; i <= n; ++i) {
        Rational row = 0;
        for (int j = 1; j <= n; ++j) {
          const Rational p = table.prob(t, i, j);
          if (p != line_walk_bruteforce(n, t, i, j))
            return {false, "table differs from enumeration at n=" + std::to_string(n) +
                               " t=" + std::to_string(t)};
          if (t == 0 && p != Rational(i == j ? 1 : 0)) return {false, "t=0 is not the identity"};
          row += p;
          ++checked;
        }
        if (row != 1) return {false, "row does not sum to one at n=" + std::to_string(n)};
      }
    }
  }
  return {true, std::to_string(checked) + " entries"};
}

// 4
Verdict envelope() {
  std::string sup;
  bool ok = true;
  for (int n : {4, 8, 16, 32}) {
    const EnvelopeReport rep = line_walk_envelope(n, kEnvelopeConstant);
    ok = ok && rep.within;
    sup += " n=" + std::to_string(n) + ":" + fixed(rep.sup_sqrt_scaled) + "/" +
           fixed(rep.sup_n_scaled);
    if (!rep.within) sup += "(first violation t=" + std::to_string(rep.first_violation_t) + ")";
  }
  return {ok, "sup p*sqrt(t)/p*n" + sup};
}

// 5 and 6 share the instance corpus.
std::vector<std::shared_ptr<const WalkInstance>> instance_corpus() {
  std::vector<std::shared_ptr<const WalkInstance>> out;
  auto add = [&](WalkInstance inst) { out.push_back(std::make_shared<const WalkInstance>(std::move(inst))); };
  for (int n = 4; n <= 12; ++n)
    for (int m = 1; m < n; ++m)
      for (std::uint64_t s = 0; s < kInstanceSeeds; ++s) add(gen_hypercube_instance(n, m, s));
  for (int n = 4; n <= 8; ++n)
    for (int d = 2; d <= 3; ++d)
      for (int m = 1; m < d; ++m)
        for (std::uint64_t s = 0; s < kInstanceSeeds; ++s) add(gen_grid_instance(n, d, m, s));
  for (int alpha = 2; alpha <= 8; ++alpha) {
    for (int beta = 3; alpha * beta <= 16; ++beta) {
      const int n = alpha * beta;
      const double r = std::log(static_cast<double>(alpha)) / std::log(static_cast<double>(n));
      for (std::uint64_t s = 0; s < kInstanceSeeds; ++s) add(gen_block_instance(n, 2, r, s));
    }
  }
  return out;
}

const std::vector<std::shared_ptr<const WalkInstance>>& corpus() {
  static const auto c = instance_corpus();
  return c;
}

std::string instance_label(const WalkInstance& inst) {
  std::string s(family_name(inst.family()));
  s += " side=" + std::to_string(inst.shape().side()) + " d=" + std::to_string(inst.shape().axes());
  s += " walk=" + std::to_string(inst.walk_dims());
  return s;
}

Verdict instance_checks() {
  std::size_t failed = 0;
  std::string first;
  for (const auto& inst : corpus()) {
    if (!verify_instance(*inst).ok()) {
      if (failed++ == 0) first = instance_label(*inst);
    }
  }
  Verdict v{failed == 0, std::to_string(corpus().size() - failed) + "/" +
                             std::to_string(corpus().size()) + " instances verified"};
  if (failed) v.detail += ", first failure: " + first;
  return v;
}

Verdict membership_simulation() {
  std::uint64_t values = 0, wrong = 0, over_budget = 0, max_queries = 0;
  std::map<std::string, std::uint64_t> over_by_kind;
  for (const auto& inst : corpus()) {
    const InstanceMetadata meta = InstanceMetadata::of(*inst);
    MembershipOracle mem(inst);
    for_each_vertex(inst->shape(), kDefaultScanLimit, [&](const Vertex& v) {
      const std::uint64_t before = mem.ledger().totals().classical;
      const std::int64_t got = simulate_value_via_membership(meta, mem, v);
      const std::uint64_t used = mem.ledger().totals().classical - before;
      ++values;
      if (got != instance_value(*inst, v)) ++wrong;
      if (used > kMaxMembershipPerValue) {
        ++over_budget;
        ++over_by_kind[std::string(family_name(inst->family())) + "/walk=" +
                       std::to_string(inst->walk_dims())];
      }
      max_queries = std::max(max_queries, used);
    });
  }
  std::string detail = std::to_string(values) + " values, " + std::to_string(wrong) +
                       " wrong, " + std::to_string(over_budget) + " needed more than " +
                       std::to_string(kMaxMembershipPerValue) + " queries (max " +
                       std::to_string(max_queries) + ")";
  for (const auto& [k, c] : over_by_kind) detail += " " + k + ":" + std::to_string(c);
  return {wrong == 0 && over_budget == 0, detail};
}

// 7: second implementation of the two bounds straight from the path family.
struct DirectBounds {
  Rational weighted;
  Radical quantum_num, quantum_den;
};

DirectBounds direct_bounds(const PathFamily& fam, bool quantum_weights) {
  const std::size_t N = fam.size();
  const int br = fam.branching();
  std::vector<std::map<std::uint64_t, int>> visit(N);  // code -> first listing index
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t i = 0; i < fam.points[x].size(); ++i)
      visit[x].try_emplace(encode(fam.shape, fam.points[x][i]), static_cast<int>(i));

  struct Pos {
    std::uint64_t code;
    Radical u, v;
  };
  struct Pair {
    std::size_t x, y;
    Rational w;
    std::vector<Pos> pos;
  };
  std::vector<Pair> pairs;
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      if (fam.points[x].back() == fam.points[y].back()) continue;
      int k = 0;
      while (fam.steps[x][k] == fam.steps[y][k]) ++k;
      BigInt count = br - 1;
      for (int e = k; e < fam.T; ++e) count *= br;
      Pair p{x, y, Rational(BigInt(1), count), {}};
      auto mult = [&](int listing) {
        const int s = listing / 2 - k + listing % 2;
        if (!quantum_weights) return std::pair<Radical, Radical>{Radical(1), Radical(1)};
        const long long q = 2LL * ((s + 1) / 2);
        return std::pair<Radical, Radical>{Radical::power(fam.m, -q), Radical::power(fam.m, q)};
      };
      for (const auto& [code, at] : visit[x]) {
        if (visit[y].contains(code)) continue;
        auto [a, b] = mult(at);
        p.pos.push_back({code, a * Radical(p.w), b * Radical(p.w)});
      }
      for (const auto& [code, at] : visit[y]) {
        if (visit[x].contains(code)) continue;
        auto [a, b] = mult(at);
        p.pos.push_back({code, b * Radical(p.w), a * Radical(p.w)});
      }
      pairs.push_back(std::move(p));
    }
  }

  DirectBounds out;
  bool first = true;
  long double best = 0;
  for (const Pair& e : pairs) {
    for (const Pos& pos : e.pos) {
      Rational wx = 0, wy = 0, wxi = 0, wyi = 0;
      Radical ux, vy;
      for (const Pair& o : pairs) {
        const bool has = std::any_of(o.pos.begin(), o.pos.end(),
                                     [&](const Pos& q) { return q.code == pos.code; });
        if (o.x == e.x) {
          wx += o.w;
          if (has) wxi += o.w;
        }
        if (o.y == e.y) {
          wy += o.w;
          if (has) wyi += o.w;
        }
        for (const Pos& q : o.pos) {
          if (q.code != pos.code) continue;
          if (o.x == e.x) ux += q.u;
          if (o.y == e.y) vy += q.v;
        }
      }
      const Rational weighted = std::max(wx / wxi, wy / wyi);
      const Radical num(wx * wy);
      const Radical den = ux * vy;
      const long double sq = num.to_long_double() / den.to_long_double();
      if (first || weighted < out.weighted) out.weighted = weighted;
      if (first || sq < best) {
        best = sq;
        out.quantum_num = num;
        out.quantum_den = den;
      }
      first = false;
    }
  }
  return out;
}

Verdict adversary() {
  const PathFamily fam = enumerate_paths(PathKind::kHypercube, 2, 3);
  const Relation rel = build_relation(fam);
  std::string detail;
  bool ok = true;
  for (SchemeKind kind : {SchemeKind::kRandomized, SchemeKind::kQuantumHypercube}) {
    const WeightScheme sch = build_scheme(kind, fam, rel);
    std::size_t unequal = 0;
    for (const auto& e : sch.entries)
      for (const auto& p : e.positions)
        if (!(p.u * p.v == Radical(e.w * e.w))) ++unequal;
    std::size_t marginal_mismatch = 0;
    for (std::size_t x = 0; x < fam.size(); ++x)
      if (marginal_by_definition(sch, x) != marginal_by_conditional(fam, x)) ++marginal_mismatch;
    const WeightedBoundResult t5 = thm5_value(sch);
    const QuantumBoundResult t4 = thm4_value(sch);
    const DirectBounds direct = direct_bounds(fam, kind == SchemeKind::kQuantumHypercube);
    const bool t5_ok = t5.value == direct.weighted;
    const bool t4_ok = t4.radicand_num * direct.quantum_den == direct.quantum_num * t4.radicand_den;
    ok = ok && unequal == 0 && marginal_mismatch == 0 && t5_ok && t4_ok;
    std::ostringstream os;
    os << scheme_kind_name(kind) << ": uv!=w^2 " << unequal << ", marginal mismatches "
       << marginal_mismatch << ", weighted " << t5.value << (t5_ok ? " (agrees)" : " (DIFFERS)")
       << ", quantum " << fixed(static_cast<double>(t4.value), 4)
       << (t4_ok ? " (agrees)" : " (DIFFERS)") << "; ";
    detail += os.str();
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

// 8 and 9
nlohmann::json grid_cell(const std::string& family, nlohmann::json sizes, const std::string& mode,
                         std::uint64_t trials) {
  nlohmann::json c = {{"family", family}, {"n", std::move(sizes)}, {"d", 2},
                      {"algo", "grid2d-quantum"}, {"mode", mode},
                      {"seeds", {{"from", 0}, {"count", trials}}}};
  if (family == "grid-walk") c["m"] = 1;
  return c;
}

struct RateSummary {
  bool ok = true;
  std::string detail;
};

// Success rate per (family, n) plus local-minimum verification of every success.
RateSummary success_rates(const std::vector<ResultRow>& rows) {
  std::map<std::pair<std::string, int>, std::pair<int, int>> tally;
  int unverified = 0;
  for (const ResultRow& r : rows) {
    auto& [ok, all] = tally[{r.family, r.n}];
    ++all;
    if (r.outcome == "success") {
      ++ok;
      if (!r.is_local_min) ++unverified;
    }
  }
  RateSummary s;
  double worst = 1.0;
  std::string worst_at;
  for (const auto& [key, t] : tally) {
    const double rate = static_cast<double>(t.first) / t.second;
    if (worst_at.empty() || rate < worst) {
      worst = rate;
      worst_at = key.first + " n=" + std::to_string(key.second);
    }
    if (rate < kMinSuccessRate) s.ok = false;
  }
  if (unverified) s.ok = false;
  s.detail = "min success " + fixed(worst, 2) + " (" + worst_at + "), unverified successes " +
             std::to_string(unverified);
  return s;
}

Verdict grid_exact() {
  const nlohmann::json sizes = {64, 128, 256, 512, 1024};
  ExperimentConfig cfg = parse_config(
      {{"cells", {grid_cell("bowl", sizes, "exact", kGridTrials),
                  grid_cell("grid-walk", sizes, "exact", kGridTrials)}}});
  cfg.threads = worker_threads();
  const auto rows = run_experiment(cfg);
  RateSummary rates = success_rates(rows);
  bool ok = rates.ok;
  std::string detail = rates.detail;
  for (const std::string fam : {"bowl", "grid-walk"}) {
    std::vector<ResultRow> sub;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(sub),
                 [&](const ResultRow& r) { return r.family == fam; });
    const SlopeFit fit = fit_loglog_slope(sub, "n", "total_queries");
    ok = ok && fit.slope >= kGridSlopeLo && fit.slope <= kGridSlopeHi;
    detail += ", " + fam + " slope " + fixed(fit.slope) + " +- " + fixed(fit.std_error);
  }
  return {ok, detail};
}

Verdict grid_faithful() {
  ExperimentConfig cfg = parse_config(
      {{"cells", {grid_cell("bowl", 256, "faithful", kFaithfulTrials),
                  grid_cell("grid-walk", 256, "faithful", kFaithfulTrials)}}});
  cfg.threads = worker_threads();
  const RateSummary rates = success_rates(run_experiment(cfg));
  return {rates.ok, rates.detail};
}

// 10
Verdict steepest_hardness() {
  nlohmann::json cells = nlohmann::json::array();
  std::map<int, std::uint64_t> clock_len;
  for (int n = 8; n <= 14; ++n) {
    const int m = *recommended_params(Family::kHypercube, Mode::kRandomized, n).m;
    clock_len[n] = (std::uint64_t{1} << (n - m)) - 1;
    cells.push_back({{"family", "hypercube-walk"}, {"n", n}, {"m", m}, {"algo", "steepest"},
                     {"seeds", {{"from", 0}, {"count", kHardnessSeeds}}}});
  }
  ExperimentConfig cfg = parse_config({{"cells", cells}});
  cfg.threads = worker_threads();
  const auto rows = run_experiment(cfg);
  std::size_t short_runs = 0;
  std::vector<std::pair<double, double>> pts;
  for (const ResultRow& r : rows) {
    const std::uint64_t T = clock_len.at(r.n);
    if (r.classical_queries < 2 * T) ++short_runs;
    pts.emplace_back(static_cast<double>(T), static_cast<double>(r.classical_queries));
  }
  const SlopeFit fit = fit_loglog_slope(pts);
  const bool slope_ok = std::abs(fit.slope - kHardnessSlope) <= kHardnessSlopeTol;
  return {short_runs == 0 && slope_ok,
          std::to_string(short_runs) + "/" + std::to_string(rows.size()) +
              " runs below 2T, slope vs T " + fixed(fit.slope) + " +- " + fixed(fit.std_error)};
}

// 11
Verdict block_equivalence() {
  const int n = 9;
  const double r = 0.5;
  const BlockLayout lay = BlockLayout::make(n, 2, r);
  const int a = lay.alpha;
  const int L = static_cast<int>(lay.length);

  // Block vertex for each long-grid point (y, clock).
  std::map<std::pair<int, int>, Vertex> block_vertex;
  for_each_vertex(lay.domain(), kDefaultScanLimit, [&](const Vertex& v) {
    if (auto lg = lay.to_long_grid(v)) block_vertex.emplace(std::make_pair((*lg)[0], (*lg)[1]), v);
  });
  if (block_vertex.size() != static_cast<std::size_t>(a * L))
    return {false, "block region does not cover the long grid"};

  // Tested pairs, fixed in advance: every (y, y') for these clock pairs.
  const std::vector<std::pair<int, int>> clocks = {{2, 5}, {3, 4}, {2, 8}, {5, 9}};
  struct Test {
    int y, c, y2, c2;
  };
  std::vector<Test> tests;
  for (auto [c, c2] : clocks)
    for (int y = 1; y <= a; ++y)
      for (int y2 = 1; y2 <= a; ++y2) tests.push_back({y, c, y2, c2});

  // Exact law of the long-grid walk with clock: the points at clock c are
  // the positions before and after step c - 1.
  const int start = a / 2;
  std::vector<std::uint64_t> exact_a(tests.size(), 0), exact_ab(tests.size(), 0);
  for (std::uint32_t bits = 0; bits < (1u << L); ++bits) {
    std::vector<int> pos(L + 1);
    pos[0] = start;
    for (int k = 0; k < L; ++k) pos[k + 1] = std::clamp(pos[k] + ((bits >> k) & 1u ? 1 : -1), 1, a);
    auto at = [&](int y, int c) { return pos[c - 1] == y || pos[c] == y; };
    for (std::size_t i = 0; i < tests.size(); ++i) {
      const Test& t = tests[i];
      if (!at(t.y, t.c)) continue;
      ++exact_a[i];
      if (at(t.y2, t.c2)) ++exact_ab[i];
    }
  }

  std::vector<std::uint64_t> seen_a(tests.size(), 0), seen_ab(tests.size(), 0);
  for (std::uint64_t seed = 0; seed < kEquivalenceRuns; ++seed) {
    const WalkInstance inst = gen_block_instance(n, 2, r, seed);
    for (std::size_t i = 0; i < tests.size(); ++i) {
      const Test& t = tests[i];
      if (!inst.contains(block_vertex.at({t.y, t.c}))) continue;
      ++seen_a[i];
      if (inst.contains(block_vertex.at({t.y2, t.c2}))) ++seen_ab[i];
    }
  }

  std::size_t outside = 0, compared = 0;
  double worst_z = 0.0;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    if (exact_a[i] == 0) {
      if (seen_a[i] != 0) ++outside;
      continue;
    }
    if (seen_a[i] == 0) {
      ++outside;
      continue;
    }
    ++compared;
    const double p = static_cast<double>(exact_ab[i]) / static_cast<double>(exact_a[i]);
    const double f = static_cast<double>(seen_ab[i]) / static_cast<double>(seen_a[i]);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(seen_a[i]));
    if (se == 0.0) {
      if (f != p) ++outside;
      continue;
    }
    const double z = std::abs(f - p) / se;
    worst_z = std::max(worst_z, z);
    if (z > kMonteCarloSigmas) ++outside;
  }
  return {outside == 0, std::to_string(compared) + " pairs over " +
                            std::to_string(kEquivalenceRuns) + " runs, worst |z| " +
                            fixed(worst_z, 2) + ", outside " + std::to_string(outside)};
}

// 12
Verdict determinism() {
  const auto j = nlohmann::json::parse(R"({"cells": [
      {"family": "grid-walk", "n": [32, 64], "d": 2, "m": 1, "algo": "grid2d-quantum",
       "mode": "faithful", "seeds": {"count": 5}},
      {"family": "hypercube-walk", "n": 9, "algo": ["steepest", "sample-descend"],
       "seeds": {"from": 3, "count": 5}},
      {"family": "grid-blocks", "n": 16, "d": 2, "r": 0.5, "algo": "sample-descend",
       "mode": "quantum", "seeds": {"count": 5}},
      {"family": "bowl", "n": 40, "d": 2, "algo": "grid2d-quantum", "seeds": {"count": 5}}]})");
  ExperimentConfig cfg = parse_config(j);
  const std::string first = to_csv(run_experiment(cfg));
  cfg.threads = worker_threads() + 1;
  const std::string second = to_csv(run_experiment(cfg));
  const bool same = strip_runtime(first) == strip_runtime(second);
  const auto lines = std::count(first.begin(), first.end(), '\n');
  return {same, std::to_string(lines - 1) + " rows, " + (same ? "identical" : "different") +
                    " after dropping the runtime column"};
}

struct Criterion {
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--strict") == 0) strict = true;

  const std::vector<Criterion> criteria = {
      {"ball parity combinatorics", ball_parity},
      {"conditional parity bound", conditional_bound},
      {"line walk tables", line_walk},
      {"line walk envelope", envelope},
      {"instance verification", instance_checks},
      {"values from membership queries", membership_simulation},
      {"adversary weight schemes", adversary},
      {"grid descent, exact mode", grid_exact},
      {"grid descent, faithful mode", grid_faithful},
      {"steepest descent hardness", steepest_hardness},
      {"block and long grid equivalence", block_equivalence},
      {"bench determinism", determinism},
  };

  int failed = 0;
  bool crashed = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
      crashed = true;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << std::setw(2) << i + 1 << " "
              << criteria[i].name << ": " << v.detail << " [" << fixed(secs, 1) << "s]"
              << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed"
            << std::endl;
  if (crashed) return 1;
  return strict && failed ? 1 : 0;
}
