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

#ifndef LSLAB_BENCH_HPP_
#define LSLAB_BENCH_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lslab/functions.hpp"
#include "lslab/grid2d.hpp"
#include "lslab/instances.hpp"
#include "lslab/oracle.hpp"
#include "lslab/solvers.hpp"

/// Experiment sweeps: JSON config in, one CSV row per (cell, seed) out.
///
/// Config shape:
///
///   {
///     "output": "results.csv",                       optional
///     "threads": 4,                                  optional, default 1
///     "budgets": {"trajectory": 1048576},            optional
///     "cells": [
///       {"family": "grid-walk", "n": [64, 128], "d": 2, "m": 1,
///        "algo": ["grid2d-quantum"], "mode": "exact",
///        "seeds": {"from": 0, "count": 50}}
///     ]
///   }
///
/// "n" and "algo" may be scalars or lists; a cell expands to their product.
/// Unknown keys are rejected at every level.
namespace lslab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algo { kSteepest, kSampleDescend, kGrid2dQuantum };

inline std::string_view algo_name(Algo a) {
  switch (a) {
    case Algo::kSteepest: return "steepest";
    case Algo::kSampleDescend: return "sample-descend";
    case Algo::kGrid2dQuantum: return "grid2d-quantum";
  }
  return "?";
}

inline Algo parse_algo(std::string_view s) {
  if (s == "steepest") return Algo::kSteepest;
  if (s == "sample-descend") return Algo::kSampleDescend;
  if (s == "grid2d-quantum") return Algo::kGrid2dQuantum;
  throw ConfigError("unknown algorithm '" + std::string(s) + "'");
}

/// Instance families plus the two builtin functions.
struct FamilySpec {
  std::optional<Family> walk;
  std::optional<Builtin> builtin;

  std::string name() const {
    return walk ? std::string(family_name(*walk)) : std::string(builtin_name(*builtin));
  }
};

inline FamilySpec parse_family_spec(std::string_view s) {
  FamilySpec f;
  try {
    f.builtin = parse_builtin(s);
    return f;
  } catch (const std::invalid_argument&) {
  }
  try {
    f.walk = parse_family(s);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return f;
}

struct Budgets {
  std::uint64_t trajectory = kDefaultTrajectoryBudget;
};

/// One fully expanded experiment cell.
struct CellSpec {
  FamilySpec family;
  int n = 0;
  int d = 0;
  std::optional<int> m;
  std::optional<double> r;
  Algo algo = Algo::kSteepest;
  std::string mode;  // classical|quantum for descent algos, exact|faithful for grid2d
  std::optional<std::uint64_t> samples;
  std::optional<double> eps;
  std::uint64_t seed_from = 0;
  std::uint64_t seed_count = 0;
};

struct ExperimentConfig {
  std::vector<CellSpec> cells;
  std::optional<std::string> output;
  Budgets budgets;
  int threads = 1;
};

struct ResultRow {
  std::string family;
  int n = 0;
  int d = 0;
  std::string m_or_r;
  std::string algo;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t classical_queries = 0;
  std::uint64_t charged_quantum_queries = 0;
  std::string outcome;
  bool is_local_min = false;
  int rounds = 0;
  double runtime_ms = 0.0;
};

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "family", "n",      "d",      "m_or_r",       "algo",   "mode",      "seed",
      "classical_queries", "charged_quantum_queries", "outcome", "is_local_min", "rounds",
      "runtime_ms"};
  return cols;
}

namespace detail {

inline void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <typename T>
std::vector<T> scalar_or_list(const nlohmann::json& v, const std::string& what) {
  std::vector<T> out;
  try {
    if (v.is_array()) {
      for (const auto& x : v) out.push_back(x.get<T>());
    } else {
      out.push_back(v.get<T>());
    }
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("bad value for '" + what + "'");
  }
  if (out.empty()) throw ConfigError("'" + what + "' must not be empty");
  return out;
}

template <typename T>
T get_as(const nlohmann::json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("missing or bad '" + std::string(key) + "' in " + where);
  }
}

inline std::string default_mode(Algo a) {
  return a == Algo::kGrid2dQuantum ? "exact" : "classical";
}

inline void validate_cell(const CellSpec& c, const std::string& where) {
  if (c.n < 1) throw ConfigError(where + ": n must be >= 1");
  if (c.seed_count == 0) throw ConfigError(where + ": seed range is empty");
  if (c.algo == Algo::kGrid2dQuantum) {
    if (c.mode != "exact" && c.mode != "faithful")
      throw ConfigError(where + ": grid2d-quantum mode must be exact or faithful");
    if (c.family.walk == Family::kHypercube || c.d != 2)
      throw ConfigError(where + ": grid2d-quantum runs on [n]^2 only");
  } else if (c.mode != "classical" && c.mode != "quantum") {
    throw ConfigError(where + ": mode must be classical or quantum for " +
                      std::string(algo_name(c.algo)));
  }
  if (c.algo == Algo::kSteepest && c.mode != "classical")
    throw ConfigError(where + ": steepest descent is classical only");
  if (c.family.walk == Family::kBlocks && !c.r)
    throw ConfigError(where + ": grid-blocks needs r");
  if (c.family.walk != Family::kHypercube && c.d < 1)
    throw ConfigError(where + ": d must be >= 1");
}

}  // namespace detail

inline ExperimentConfig parse_config(const nlohmann::json& j) {
  using detail::get_as;
  detail::reject_unknown(j, {"cells", "output", "budgets", "threads"}, "config");
  ExperimentConfig cfg;
  if (j.contains("output")) cfg.output = get_as<std::string>(j, "output", "config");
  if (j.contains("threads")) {
    cfg.threads = get_as<int>(j, "threads", "config");
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  }
  if (j.contains("budgets")) {
    const auto& b = j.at("budgets");
    detail::reject_unknown(b, {"trajectory"}, "budgets");
    if (b.contains("trajectory"))
      cfg.budgets.trajectory = get_as<std::uint64_t>(b, "trajectory", "budgets");
  }
  if (!j.contains("cells") || !j.at("cells").is_array() || j.at("cells").empty())
    throw ConfigError("config needs a nonempty 'cells' list");

  int index = 0;
  for (const auto& cj : j.at("cells")) {
    const std::string where = "cells[" + std::to_string(index++) + "]";
    detail::reject_unknown(cj, {"family", "n", "d", "m", "r", "algo", "mode", "samples", "eps",
                                "seeds"},
                           where);
    CellSpec base;
    base.family = parse_family_spec(get_as<std::string>(cj, "family", where));
    if (cj.contains("d")) base.d = get_as<int>(cj, "d", where);
    if (cj.contains("m")) base.m = get_as<int>(cj, "m", where);
    if (cj.contains("r")) base.r = get_as<double>(cj, "r", where);
    if (cj.contains("samples")) base.samples = get_as<std::uint64_t>(cj, "samples", where);
    if (cj.contains("eps")) base.eps = get_as<double>(cj, "eps", where);
    if (!cj.contains("seeds")) throw ConfigError(where + ": missing 'seeds'");
    const auto& sj = cj.at("seeds");
    detail::reject_unknown(sj, {"from", "count"}, where + ".seeds");
    base.seed_from = sj.contains("from") ? get_as<std::uint64_t>(sj, "from", where) : 0;
    base.seed_count = get_as<std::uint64_t>(sj, "count", where + ".seeds");
    if (!cj.contains("n")) throw ConfigError(where + ": missing 'n'");
    if (!cj.contains("algo")) throw ConfigError(where + ": missing 'algo'");
    const auto sizes = detail::scalar_or_list<int>(cj.at("n"), "n");
    const auto algos = detail::scalar_or_list<std::string>(cj.at("algo"), "algo");
    for (const auto& a : algos) {
      for (int n : sizes) {
        CellSpec c = base;
        c.n = n;
        c.algo = parse_algo(a);
        if (base.family.walk == Family::kHypercube) c.d = n;
        c.mode = cj.contains("mode") ? get_as<std::string>(cj, "mode", where)
                                     : detail::default_mode(c.algo);
        detail::validate_cell(c, where);
        cfg.cells.push_back(std::move(c));
      }
    }
  }
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

/// Sample count defaults: ceil(sqrt(N * deg)) for classical charging and
/// ceil(N^(2/3) deg^(1/3)) for quantum charging, capped at N.
inline std::uint64_t default_sample_count(const GridShape& shape, Charging charging) {
  const auto total = shape.vertex_count();
  if (!total) throw ConfigError("domain too large to sample");
  const double N = static_cast<double>(*total);
  const double deg = 2.0 * shape.axes() / (shape.side() == 2 ? 2.0 : 1.0);
  const double s = charging == Charging::kClassical ? std::sqrt(N * deg)
                                                    : std::cbrt(N * N * deg);
  return std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(s - 1e-9)), 1, *total);
}

namespace detail {

inline std::string format_number(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

struct PreparedRun {
  std::shared_ptr<const WalkInstance> instance;
  std::unique_ptr<ValueOracle> oracle;
  std::string m_or_r;
};

inline PreparedRun prepare(const CellSpec& c, std::uint64_t seed, const Budgets& budgets) {
  PreparedRun p;
  const Mode walk_mode = c.mode == "quantum" || c.algo == Algo::kGrid2dQuantum
                             ? Mode::kQuantum
                             : Mode::kRandomized;
  try {
    if (c.family.builtin) {
      p.oracle = std::make_unique<ValueOracle>(builtin_oracle(*c.family.builtin, c.n, c.d, seed));
      return p;
    }
    switch (*c.family.walk) {
      case Family::kHypercube: {
        const int m = c.m ? *c.m : *recommended_params(Family::kHypercube, walk_mode, c.n).m;
        p.instance = std::make_shared<const WalkInstance>(
            gen_hypercube_instance(c.n, m, seed, budgets.trajectory));
        p.m_or_r = std::to_string(m);
        break;
      }
      case Family::kGrid: {
        const int m = c.m ? *c.m : *recommended_params(Family::kGrid, walk_mode, c.n, c.d).m;
        p.instance = std::make_shared<const WalkInstance>(
            gen_grid_instance(c.n, c.d, m, seed, budgets.trajectory));
        p.m_or_r = std::to_string(m);
        break;
      }
      case Family::kBlocks: {
        p.instance = std::make_shared<const WalkInstance>(
            gen_block_instance(c.n, c.d, *c.r, seed, budgets.trajectory));
        p.m_or_r = format_number(*c.r);
        break;
      }
    }
  } catch (const BudgetExceeded& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  p.oracle = std::make_unique<ValueOracle>(ValueOracle::from_instance(p.instance));
  return p;
}

}  // namespace detail

struct SolveRequest {
  Algo algo = Algo::kSteepest;
  std::string mode = "classical";
  std::uint64_t seed = 0;
  std::optional<Vertex> start;  // steepest only; random when empty
  std::optional<std::uint64_t> samples;
  std::optional<double> eps;
  std::optional<double> eps4;
};

/// Dispatches one solver run on `f`.
inline SolveResult solve(ValueOracle& f, const SolveRequest& req) {
  switch (req.algo) {
    case Algo::kSteepest: {
      if (req.mode != "classical") throw ConfigError("steepest descent is classical only");
      Vertex start;
      if (req.start) {
        start = *req.start;
      } else {
        Rng rng(req.seed);
        start = random_vertex(f.shape(), rng);
      }
      return steepest_descent(f, start);
    }
    case Algo::kSampleDescend: {
      Charging ch;
      try {
        ch = parse_charging(req.mode);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      const std::uint64_t s = req.samples ? *req.samples : default_sample_count(f.shape(), ch);
      try {
        return sample_then_descend(f, s, req.seed, ch);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    case Algo::kGrid2dQuantum: {
      Grid2dOptions opt;
      try {
        opt.execution = parse_execution(req.mode);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      opt.eps = req.eps;
      opt.eps4 = req.eps4;
      if (f.shape().axes() != 2) throw ConfigError("grid2d-quantum runs on [n]^2 only");
      return grid2d_quantum(f, f.shape().side(), req.seed, opt);
    }
  }
  throw ConfigError("unsupported algorithm");
}

/// Runs one (cell, seed) pair. The solver seed is derived from the row seed.
inline ResultRow run_row(const CellSpec& c, std::uint64_t seed, const Budgets& budgets = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::PreparedRun p = detail::prepare(c, seed, budgets);
  SolveRequest req;
  req.algo = c.algo;
  req.mode = c.mode;
  req.seed = mix_seed(seed, 0x5017);
  if (p.instance) req.start = p.instance->start();
  req.samples = c.samples;
  req.eps = c.eps;
  const SolveResult res = solve(*p.oracle, req);
  const auto t1 = std::chrono::steady_clock::now();

  ResultRow row;
  row.family = c.family.name();
  row.n = c.n;
  row.d = c.d;
  row.m_or_r = p.m_or_r;
  row.algo = std::string(algo_name(c.algo));
  row.mode = c.mode;
  row.seed = seed;
  row.classical_queries = res.queries.classical;
  row.charged_quantum_queries = res.queries.quantum;
  row.outcome = std::string(outcome_name(res.outcome));
  row.is_local_min = res.is_local_min;
  row.rounds = res.rounds;
  row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (res.outcome == Outcome::kSuccess && !res.is_local_min)
    throw std::logic_error("success row without a verified local minimum");
  return row;
}

/// Rows in (cell, seed) order regardless of the thread count.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
  for (std::size_t i = 0; i < cfg.cells.size(); ++i) {
    const CellSpec& c = cfg.cells[i];
    for (std::uint64_t s = 0; s < c.seed_count; ++s) jobs.emplace_back(i, c.seed_from + s);
  }
  // Surface configuration errors before any worker starts.
  for (const CellSpec& c : cfg.cells) (void)detail::prepare(c, c.seed_from, cfg.budgets);

  std::vector<ResultRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        rows[k] = run_row(cfg.cells[jobs[k].first], jobs[k].second, cfg.budgets);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(jobs.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const ResultRow& r : rows) {
    os << r.family << ',' << r.n << ',' << r.d << ',' << r.m_or_r << ',' << r.algo << ','
       << r.mode << ',' << r.seed << ',' << r.classical_queries << ','
       << r.charged_quantum_queries << ',' << r.outcome << ','
       << (r.is_local_min ? "true" : "false") << ',' << r.rounds << ',' << std::fixed
       << std::setprecision(3) << r.runtime_ms << std::defaultfloat << '\n';
  }
}

inline std::string to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

/// The CSV text with the runtime column removed from every line.
inline std::string strip_runtime(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    const auto cut = line.rfind(',');
    out += (cut == std::string::npos ? line : line.substr(0, cut));
    out += '\n';
  }
  return out;
}

struct SlopeFit {
  double slope = 0.0;
  double std_error = 0.0;
  std::size_t points = 0;  // distinct x values
};

/// Least-squares slope of log2(mean y) against log2 x over distinct x.
inline SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& samples) {
  std::map<double, std::pair<double, std::size_t>> by_x;
  for (const auto& [x, y] : samples) {
    if (!(x > 0.0)) throw std::invalid_argument("fit_loglog_slope: x must be positive");
    auto& acc = by_x[x];
    acc.first += y;
    ++acc.second;
  }
  if (by_x.size() < 2) throw std::invalid_argument("fit_loglog_slope: need >= 2 distinct x values");
  std::vector<double> lx, ly;
  for (const auto& [x, acc] : by_x) {
    const double mean = acc.first / static_cast<double>(acc.second);
    if (!(mean > 0.0)) throw std::invalid_argument("fit_loglog_slope: mean y must be positive");
    lx.push_back(std::log2(x));
    ly.push_back(std::log2(mean));
  }
  const double k = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.points = lx.size();
  if (lx.size() > 2) {
    double ssr = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      const double e = ly[i] - (my + fit.slope * (lx[i] - mx));
      ssr += e * e;
    }
    fit.std_error = std::sqrt(ssr / (k - 2.0) / sxx);
  }
  return fit;
}

/// Numeric column of a row: n, d, seed, classical_queries,
/// charged_quantum_queries, total_queries, rounds or runtime_ms.
inline double row_field(const ResultRow& r, const std::string& field) {
  if (field == "n") return r.n;
  if (field == "d") return r.d;
  if (field == "seed") return static_cast<double>(r.seed);
  if (field == "classical_queries") return static_cast<double>(r.classical_queries);
  if (field == "charged_quantum_queries") return static_cast<double>(r.charged_quantum_queries);
  if (field == "total_queries")
    return static_cast<double>(r.classical_queries + r.charged_quantum_queries);
  if (field == "rounds") return r.rounds;
  if (field == "runtime_ms") return r.runtime_ms;
  throw std::invalid_argument("no numeric field '" + field + "'");
}

inline SlopeFit fit_loglog_slope(const std::vector<ResultRow>& rows, const std::string& x_field,
                                 const std::string& y_field) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(rows.size());
  for (const ResultRow& r : rows) pts.emplace_back(row_field(r, x_field), row_field(r, y_field));
  return fit_loglog_slope(pts);
}

}  // namespace lslab

#endif  // LSLAB_BENCH_HPP_
