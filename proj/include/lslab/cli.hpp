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

#ifndef LSLAB_CLI_HPP_
#define LSLAB_CLI_HPP_

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lslab/adversary.hpp"
#include "lslab/bench.hpp"
#include "lslab/functions.hpp"
#include "lslab/instance_io.hpp"
#include "lslab/instances.hpp"
#include "lslab/solvers.hpp"
#include "lslab/verify.hpp"
#include "lslab/walkstats.hpp"

/// Command-line front end: gen, solve, stats, adversary, bench.
///
/// Exit codes: 0 success, 1 solver failure (or differing CSVs for
/// `bench --compare`), 2 invalid arguments or configuration.
namespace lslab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverFail = 1;
inline constexpr int kExitUsage = 2;

inline nlohmann::json solve_result_to_json(const SolveResult& r) {
  nlohmann::json j;
  j["found"] = vertex_to_json(r.found);
  j["is_local_min"] = r.is_local_min;
  j["outcome"] = outcome_name(r.outcome);
  j["rounds"] = r.rounds;
  j["descent_steps"] = r.descent_steps;
  j["queries"] = {{"classical", r.queries.classical},
                  {"quantum", r.queries.quantum},
                  {"total", r.queries.total()}};
  nlohmann::json phases = nlohmann::json::object();
  for (const auto& [label, c] : r.phases)
    phases[label] = {{"classical", c.classical}, {"quantum", c.quantum}};
  j["phases"] = phases;
  nlohmann::json trace = nlohmann::json::array();
  for (const TraceEntry& t : r.trace)
    trace.push_back({{"round", t.round}, {"radius", t.radius}, {"anchor", vertex_to_json(t.anchor)}});
  j["trace"] = trace;
  return j;
}

inline std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ParityVector parse_parity(const std::string& s, int m) {
  ParityVector b;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') continue;
    if (ch != '0' && ch != '1') throw ConfigError("parity vector must be 0/1 digits");
    b.push_back(ch - '0');
  }
  if (s.empty()) b.assign(m, 0);
  if (static_cast<int>(b.size()) != m)
    throw ConfigError("parity vector needs " + std::to_string(m) + " entries");
  return b;
}

// One "key value" line per field; strings unquoted.
inline void print_fields(std::ostream& out, const nlohmann::json& j) {
  for (const auto& [k, v] : j.items())
    out << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local search query-complexity lab"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a hard instance and write it as JSON");
  std::string g_family, g_out;
  int g_n = 0, g_d = 0;
  std::optional<int> g_m;
  std::optional<double> g_r;
  std::uint64_t g_seed = 0;
  std::uint64_t g_budget = kDefaultTrajectoryBudget;
  std::string g_mode = "randomized";
  bool g_verify = false;
  gen->add_option("--family", g_family, "hypercube-walk | grid-walk | grid-blocks")->required();
  gen->add_option("--n", g_n, "hypercube dimension or grid side")->required();
  gen->add_option("--d", g_d, "grid dimension");
  gen->add_option("--m", g_m, "walk dimensions (hypercube, grid)");
  gen->add_option("--r", g_r, "block exponent");
  gen->add_option("--mode", g_mode, "parameter defaults: randomized | quantum");
  gen->add_option("--seed", g_seed);
  gen->add_option("--budget", g_budget, "trajectory budget");
  gen->add_option("--out", g_out, "output file (default: standard output)");
  gen->add_flag("--verify", g_verify, "scan the instance and report the checks on stderr");

  // solve
  auto* sol = app.add_subcommand("solve", "Run a solver on an instance or builtin function");
  std::string s_inst, s_function, s_algo = "steepest", s_mode;
  int s_n = 0, s_d = 2;
  std::uint64_t s_seed = 0;
  std::optional<std::uint64_t> s_samples;
  std::optional<double> s_eps, s_eps4;
  bool s_json = false;
  auto* inst_opt = sol->add_option("--inst", s_inst, "instance file");
  auto* fn_opt = sol->add_option("--function", s_function, "builtin: bowl | constant");
  inst_opt->excludes(fn_opt);
  sol->add_option("--n", s_n, "builtin grid side");
  sol->add_option("--d", s_d, "builtin grid dimension");
  sol->add_option("--algo", s_algo, "steepest | sample-descend | grid2d-quantum");
  sol->add_option("--mode", s_mode, "classical | quantum | exact | faithful");
  sol->add_option("--seed", s_seed);
  sol->add_option("--samples", s_samples);
  sol->add_option("--eps", s_eps, "overall error budget for grid2d-quantum");
  sol->add_option("--eps4", s_eps4, "sphere-test error rate for grid2d-quantum");
  sol->add_flag("--json", s_json, "print the result as JSON");

  // stats
  auto* stats = app.add_subcommand("stats", "Exact random-walk statistics");
  stats->require_subcommand(1);
  stats->fallthrough();
  auto* balls = stats->add_subcommand("balls", "Balls-in-bins parity probabilities");
  int b_m = 2, b_t = 2;
  std::string b_parity;
  std::optional<int> b_excluded;
  balls->add_option("--m", b_m)->required();
  balls->add_option("--t", b_t)->required();
  balls->add_option("--parity", b_parity, "target parity vector, e.g. 0,1,0");
  balls->add_option("--excluded", b_excluded, "bin the first ball may not use");
  auto* line = stats->add_subcommand("line", "Lazy reflecting walk on a line");
  int l_n = 2, l_t = 0, l_i = 1, l_j = 1;
  line->add_option("--n", l_n)->required();
  line->add_option("--t", l_t)->required();
  line->add_option("--i", l_i);
  line->add_option("--j", l_j);
  auto* env = stats->add_subcommand("envelope", "Check the line-walk decay envelope");
  int e_n = 4, e_c = 4;
  env->add_option("--n", e_n)->required();
  env->add_option("--c", e_c);
  bool st_json = false;
  stats->add_flag("--json", st_json);

  // adversary
  auto* adv = app.add_subcommand("adversary", "Weight-scheme bounds on a small path family");
  std::string a_kind = "hypercube", a_scheme = "randomized";
  int a_m = 2, a_T = 3, a_n = 4;
  bool a_json = false;
  adv->add_option("--kind", a_kind, "hypercube | grid");
  adv->add_option("--m", a_m);
  adv->add_option("--T", a_T);
  adv->add_option("--n", a_n, "grid side");
  adv->add_option("--scheme", a_scheme, "randomized | quantum-hypercube | quantum-grid");
  adv->add_flag("--json", a_json);

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment config and emit CSV");
  std::string c_config, c_out;
  std::optional<int> c_threads;
  std::vector<std::string> c_compare;
  bench->add_option("--config", c_config, "experiment JSON");
  bench->add_option("--out", c_out, "CSV path (overrides the config)");
  bench->add_option("--threads", c_threads);
  bench->add_option("--compare", c_compare, "compare two CSVs ignoring runtime")->expected(2);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const Family fam = parse_family(g_family);
      const Mode mode = parse_mode(g_mode);
      WalkInstance inst = [&] {
        switch (fam) {
          case Family::kHypercube: {
            const int m = g_m ? *g_m : *recommended_params(fam, mode, g_n).m;
            return gen_hypercube_instance(g_n, m, g_seed, g_budget);
          }
          case Family::kGrid: {
            const int m = g_m ? *g_m : *recommended_params(fam, mode, g_n, g_d).m;
            return gen_grid_instance(g_n, g_d, m, g_seed, g_budget);
          }
          case Family::kBlocks: {
            const double r = g_r ? *g_r : *recommended_params(fam, mode, g_n, g_d).r;
            return gen_block_instance(g_n, g_d, r, g_seed, g_budget);
          }
        }
        throw ConfigError("unsupported family");
      }();
      if (g_verify) {
        const VerifyReport rep = verify_instance(inst);
        err << "self_avoiding=" << rep.self_avoiding << " unique_local_min=" << rep.unique_local_min
            << " membership_consistent=" << rep.membership_consistent
            << " values_decreasing=" << rep.values_decreasing << '\n';
        if (!rep.ok()) return kExitSolverFail;
      }
      if (g_out.empty()) {
        out << instance_to_json(inst).dump() << '\n';
      } else {
        save_instance(inst, g_out);
      }
      return kExitOk;
    }

    if (sol->parsed()) {
      std::unique_ptr<ValueOracle> f;
      SolveRequest req;
      req.algo = parse_algo(s_algo);
      req.mode = s_mode.empty() ? detail::default_mode(req.algo) : s_mode;
      req.seed = s_seed;
      req.samples = s_samples;
      req.eps = s_eps;
      req.eps4 = s_eps4;
      if (!s_inst.empty()) {
        auto inst = std::make_shared<const WalkInstance>(load_instance(s_inst));
        f = std::make_unique<ValueOracle>(ValueOracle::from_instance(inst));
        req.start = inst->start();
      } else if (!s_function.empty()) {
        if (s_n < 1) throw ConfigError("--function needs --n >= 1");
        f = std::make_unique<ValueOracle>(
            builtin_oracle(parse_builtin(s_function), s_n, s_d, s_seed));
        req.seed = mix_seed(s_seed, 0x5017);
      } else {
        throw ConfigError("solve needs --inst or --function");
      }
      const SolveResult r = solve(*f, req);
      if (s_json) {
        out << solve_result_to_json(r).dump(2) << '\n';
      } else {
        out << "found " << r.found << " outcome " << outcome_name(r.outcome)
            << " local_min " << (r.is_local_min ? "yes" : "no") << " classical "
            << r.queries.classical << " quantum " << r.queries.quantum << " rounds " << r.rounds
            << '\n';
      }
      return r.outcome == Outcome::kSuccess ? kExitOk : kExitSolverFail;
    }

    if (stats->parsed()) {
      nlohmann::json j;
      if (balls->parsed()) {
        const ParityVector b = detail::parse_parity(b_parity, b_m);
        j["m"] = b_m;
        j["t"] = b_t;
        j["bruteforce"] =
            rational_string(b_excluded ? balls_bruteforce(b_m, b_t, b, *b_excluded)
                                       : balls_bruteforce(b_m, b_t, b));
        const bool all_even = std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
        if (all_even && !b_excluded && b_t % 2 == 0 && b_t >= 2) {
          j["closed_form"] = rational_string(balls_closed_form(b_m, b_t));
          j["recursion"] = rational_string(balls_recursion(b_m, b_t));
        }
      } else if (line->parsed()) {
        j["n"] = l_n;
        j["t"] = l_t;
        j["i"] = l_i;
        j["j"] = l_j;
        j["probability"] = rational_string(line_walk_prob(l_n, l_t, l_i, l_j));
      } else {
        const EnvelopeReport rep = line_walk_envelope(e_n, e_c);
        j["n"] = e_n;
        j["c"] = e_c;
        j["within"] = rep.within;
        j["sup_sqrt_scaled"] = rep.sup_sqrt_scaled;
        j["sup_n_scaled"] = rep.sup_n_scaled;
        j["first_violation_t"] = rep.first_violation_t;
      }
      if (st_json) {
        out << j.dump(2) << '\n';
      } else {
        detail::print_fields(out, j);
      }
      return kExitOk;
    }

    if (adv->parsed()) {
      const PathKind kind = parse_path_kind(a_kind);
      const SchemeKind sk = parse_scheme_kind(a_scheme);
      const PathFamily fam = enumerate_paths(kind, a_m, a_T, a_n);
      const Relation rel = build_relation(fam);
      const WeightScheme sch = build_scheme(sk, fam, rel);
      nlohmann::json j;
      j["kind"] = path_kind_name(kind);
      j["scheme"] = scheme_kind_name(sk);
      j["paths"] = fam.size();
      j["pairs"] = sch.entries.size();
      const std::size_t bad = count_invalid_positions(sch);
      j["invalid_positions"] = bad;
      const WeightedBoundResult t5 = thm5_value(sch);
      j["weighted_bound"] = rational_string(t5.value);
      if (bad == 0) {
        const QuantumBoundResult t4 = thm4_value(sch);
        j["quantum_bound_radicand"] = t4.radicand_num.to_string() + " / " +
                                      t4.radicand_den.to_string();
        j["quantum_bound"] = static_cast<double>(t4.value);
      }
      if (a_json) {
        out << j.dump(2) << '\n';
      } else {
        detail::print_fields(out, j);
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      if (!c_compare.empty()) {
        const bool same = strip_runtime(detail::read_file(c_compare[0])) ==
                          strip_runtime(detail::read_file(c_compare[1]));
        out << (same ? "identical" : "different") << '\n';
        return same ? kExitOk : kExitSolverFail;
      }
      if (c_config.empty()) throw ConfigError("bench needs --config or --compare");
      ExperimentConfig cfg = load_config(c_config);
      if (c_threads) {
        if (*c_threads < 1) throw ConfigError("--threads must be >= 1");
        cfg.threads = *c_threads;
      }
      const std::string path = !c_out.empty() ? c_out : cfg.output.value_or("");
      const auto rows = run_experiment(cfg);
      if (path.empty()) {
        write_csv(out, rows);
      } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ConfigError("cannot write '" + path + "'");
        write_csv(f, rows);
      }
      std::size_t fails = 0;
      for (const auto& r : rows) fails += r.outcome != "success";
      err << rows.size() << " rows, " << fails << " failed\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

inline int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace lslab

#endif  // LSLAB_CLI_HPP_
