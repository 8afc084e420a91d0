// Copyright 2026 The DSHP Authors
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

#ifndef DSHP_TOOLS_CLI_HPP_
#define DSHP_TOOLS_CLI_HPP_

// Command dispatch for the `dshp` tool. Kept in a header so the test suites
// can drive it in-process with captured streams.
//
// Exit codes: 0 success, 1 check failed, 2 invalid instance or arguments,
// 3 instance outside the algorithm's domain, 4 I/O failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dshp/dshp.hpp"

namespace dshp::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalid = 2,
  kDomain = 3,
  kIo = 4,
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IoError("cannot write '" + path + "'");
}

inline Rational rational_arg(const std::string& text, const std::string& name) {
  if (auto r = Rational::parse(text)) return *r;
  throw InvalidInput("--" + name + ": '" + text + "' is not a rational");
}

// --max-n, else DSHP_MAX_N, else the library default.
inline int resolve_cap(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DSHP_MAX_N"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 62) {
      throw InvalidInput(std::string("DSHP_MAX_N='") + env +
                         "' is not a cap in [1, 62]");
    }
    return static_cast<int>(v);
  }
  return ExactOptions{}.max_n;
}

inline Instance load_instance(const std::string& path) {
  Instance in = parse_instance(read_file(path));
  require_valid(in);
  return in;
}

struct Context {
  std::ostream& out;
  bool pretty = false;

  void emit(const Json& j) const { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

struct RunReport {
  std::string algorithm;
  std::string label;
  Solution solution;
  long long wall_time_ms = 0;
  Json extras = Json::object();

  Json to_json() const {
    Json j;
    j["algorithm"] = algorithm;
    j["label"] = label;
    j["objective"] = solution.value.to_string();
    j["wall_time_ms"] = wall_time_ms;
    j["solution"] = solution_to_json(solution);
    j["extras"] = extras;
    return j;
  }
};

inline Json profile_json(const ThreeValueProfile& p) {
  Json j;
  j["v_small"] = p.v_small.to_string();
  j["v_medium"] = p.v_medium.to_string();
  j["v_large"] = p.v_large.to_string();
  j["large_count"] = p.large_count;
  j["medium_count"] = p.medium_count;
  return j;
}

inline RunReport run_algorithm(const std::string& algo, const Instance& in,
                               bool prune, int cap) {
  RunReport report;
  report.algorithm = algo;
  report.label = in.label;
  const auto start = std::chrono::steady_clock::now();
  if (algo == "exact") {
    ExactStats stats;
    report.solution = solve_exact(in, {prune, cap}, &stats);
    report.extras["prune"] = prune;
    report.extras["pruned_assets"] = stats.pruned_assets;
    report.extras["first_stage_sets"] = stats.first_stage_sets;
  } else if (algo == "two-value") {
    TwoValueStats stats;
    report.solution = solve_two_value(in, &stats);
    report.extras["visits"] = stats.visits;
  } else {
    auto [sol, approx] = solve_approx(in);
    report.solution = std::move(sol);
    report.extras = profile_json(approx.profile);
    report.extras["guarantee"] = approx.guarantee.to_string();
    report.extras["certified_lower_bound"] =
        approx.certified_lower_bound.to_string();
  }
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

// Collects itemized verdicts for the check commands.
class Verdicts {
 public:
  void add(const std::string& check, bool pass, const std::string& detail = {}) {
    Json j;
    j["check"] = check;
    j["pass"] = pass;
    if (!detail.empty()) j["detail"] = detail;
    lines_.push_back(std::move(j));
    ok_ = ok_ && pass;
  }

  void skip(const std::string& check, const std::string& why) {
    Json j;
    j["check"] = check;
    j["skipped"] = why;
    lines_.push_back(std::move(j));
  }

  // Every structural constraint gets a line; failures carry the first detail.
  void add_structure(const Instance& in, const Solution& sol) {
    const auto violations = solution_violations(in, sol);
    std::vector<std::string> names = {"|F| ≤ k", "Σx + Σy = k", "x_i + y_ij ≤ 1"};
    for (const auto& v : violations) {
      if (std::find(names.begin(), names.end(), v.constraint) == names.end()) {
        names.push_back(v.constraint);
      }
    }
    for (const auto& name : names) {
      auto it = std::find_if(violations.begin(), violations.end(),
                             [&](const Violation& v) { return v.constraint == name; });
      add(name, it == violations.end(), it == violations.end() ? "" : it->detail);
    }
  }

  bool ok() const { return ok_; }

  int finish(const Context& ctx, Json summary) const {
    for (const auto& j : lines_) ctx.emit(j);
    summary["verdict"] = ok_ ? "pass" : "fail";
    ctx.emit(summary);
    return ok_ ? kOk : kCheckFailed;
  }

 private:
  std::vector<Json> lines_;
  bool ok_ = true;
};

inline int check_solution(const Context& ctx, const Instance& in,
                          const Solution& sol) {
  Verdicts v;
  v.add_structure(in, sol);
  if (v.ok()) {
    const auto eval = evaluate(in, sol);
    v.add("objective", eval.matches_recorded,
          eval.matches_recorded ? "" : "recomputed " + eval.value.to_string() +
                                           ", recorded " + sol.value.to_string());
  } else {
    v.skip("objective", "structure invalid");
  }
  return v.finish(ctx, Json::object());
}

// Recovers (B, S) from a reduction instance: f_00 = 1 - B, max f = 1 + S.
inline ReductionParams infer_params(const Graph& g, const Instance& in) {
  if (in.n != g.n() || in.n < 1) {
    throw InvalidInput("instance size does not match graph");
  }
  Rational top = in.f[0][0];
  for (const auto& row : in.f) {
    for (const auto& x : row) top = std::max(top, x);
  }
  return {g.regular_degree().value_or(-1), Rational(1) - in.f[0][0],
          top - Rational(1)};
}

inline int check_reduction(const Context& ctx, const Graph& g,
                           const Instance& in, const Solution& sol, int cap) {
  Verdicts v;
  Json summary = Json::object();
  v.add("graph connected", g.is_connected());
  const auto degree = g.regular_degree();
  v.add("graph regular", degree.has_value(),
        degree ? "d = " + std::to_string(*degree) : "");
  const auto params = infer_params(g, in);
  bool built = false;
  try {
    Instance expected = build_reduction(g, params);
    expected.label = in.label;
    built = expected == in;
    v.add("instance matches construction", built,
          "B = " + params.B.to_string() + ", S = " + params.S.to_string());
  } catch (const InvalidInput& e) {
    v.add("instance matches construction", false, e.what());
  }
  v.add_structure(in, sol);
  if (!v.ok()) return v.finish(ctx, summary);

  const auto eval = evaluate(in, sol);
  v.add("objective", eval.matches_recorded,
        "recomputed " + eval.value.to_string());
  if (in.n <= cap) {
    const auto best = solve_exact(in, {true, cap});
    v.add("solution optimal", best.value == eval.value,
          "exact optimum " + best.value.to_string());
  } else {
    v.skip("solution optimal", "n exceeds cap " + std::to_string(cap));
  }
  const auto dominating = extract_dominating(g, sol);
  v.add("extracted set dominating", is_dominating(g, dominating));
  const auto mds = brute_force_mds(g, std::max(cap, 24));
  v.add("extracted set minimum", dominating.size() == mds.size(),
        "|D| = " + std::to_string(dominating.size()) + ", minimum " +
            std::to_string(mds.size()));
  if (!dominating.empty()) {
    const auto closed = dominating_solution_revenue(g.n(), params,
                                                    static_cast<int>(dominating.size()));
    v.add("closed-form revenue", closed == eval.value,
          "formula " + closed.to_string());
  }
  summary["mds_size"] = mds.size();
  summary["dominating_set"] = dominating;
  return v.finish(ctx, summary);
}

inline int compare(const Context& ctx, const Instance& in, int cap) {
  auto [sol, report] = solve_approx(in);
  Json j;
  j["label"] = in.label;
  j["n"] = in.n;
  j["k"] = in.k;
  j["approx"] = sol.value.to_string();
  if (in.n <= cap) {
    const auto best = solve_exact(in, {true, cap});
    j["exact"] = best.value.to_string();
    j["exact_status"] = "solved";
    if (best.value.sign() != 0) {
      j["realized_ratio"] = (sol.value / best.value).to_string();
    } else {
      j["realized_ratio"] = nullptr;
    }
  } else {
    j["exact"] = nullptr;
    j["exact_status"] = "skipped";
    j["realized_ratio"] = nullptr;
  }
  j["ratio_vm_over_vl"] = report.guarantee.to_string();
  const Rational k_over_n(in.k, in.n);
  j["ratio_max_half_k_over_n"] = std::max(Rational(1, 2), k_over_n).to_string();
  ctx.emit(j);
  return kOk;
}

/// Runs the tool on `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Two-stage discrete sell-or-hold solver toolkit", "dshp"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::optional<int> max_n;
  std::string instance_path, solution_path, graph_path, solution_out;

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  std::string algo;
  bool prune = false;
  solve->add_option("--algo", algo, "exact | two-value | approx")
      ->required()
      ->check(CLI::IsMember({"exact", "two-value", "approx"}));
  solve->add_option("--instance", instance_path)->required();
  solve->add_flag("--prune", prune, "Exact solver: skip never-early assets");
  solve->add_option("--max-n", max_n, "Exact solver size cap");
  solve->add_option("--solution-out", solution_out,
                    "Also write the solution file here");

  auto* gen = app.add_subcommand("gen", "Generate instances and graphs");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random", "Random instance");
  int gn = 0, gm = 0, gk = 0, gd = 0;
  std::uint64_t seed = 0;
  std::string values = "any";
  gen_random->add_option("--n", gn)->required();
  gen_random->add_option("--m", gm)->required();
  gen_random->add_option("--k", gk)->required();
  gen_random->add_option("--values", values)
      ->check(CLI::IsMember({"2", "3", "any"}));
  gen_random->add_option("--seed", seed);
  auto* gen_tight = gen->add_subcommand("tightness", "Tightness family");
  std::string vs, vm, vl;
  gen_tight->add_option("--vs", vs)->required();
  gen_tight->add_option("--vm", vm)->required();
  gen_tight->add_option("--vl", vl)->required();
  auto* gen_red = gen->add_subcommand("reduction", "Dominating-set reduction");
  std::optional<int> red_d;
  std::optional<std::string> red_b, red_s;
  gen_red->add_option("--graph", graph_path)->required();
  gen_red->add_option("--d", red_d);
  gen_red->add_option("--B", red_b);
  gen_red->add_option("--S", red_s);
  auto* gen_graph = gen->add_subcommand("graph", "Random connected regular graph");
  gen_graph->add_option("--n", gn)->required();
  gen_graph->add_option("--d", gd)->required();
  gen_graph->add_option("--seed", seed);

  auto* mds = app.add_subcommand("mds", "Minimum dominating set of a graph");
  mds->add_option("--graph", graph_path)->required();

  auto* cmp = app.add_subcommand("compare", "Approximation vs exact");
  cmp->add_option("--instance", instance_path)->required();
  cmp->add_option("--max-n", max_n);

  auto* check = app.add_subcommand("check", "Verify solutions");
  check->require_subcommand(1);
  auto* check_sol = check->add_subcommand("solution", "Structural check");
  check_sol->add_option("--instance", instance_path)->required();
  check_sol->add_option("--solution", solution_path)->required();
  auto* check_red = check->add_subcommand("reduction", "Reduction round trip");
  check_red->add_option("--graph", graph_path)->required();
  check_red->add_option("--instance", instance_path)->required();
  check_red->add_option("--solution", solution_path)->required();
  check_red->add_option("--max-n", max_n);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalid;
  }

  const Context ctx{out, pretty};
  try {
    if (solve->parsed()) {
      const Instance in = load_instance(instance_path);
      const auto report = run_algorithm(algo, in, prune, resolve_cap(max_n));
      if (!solution_out.empty()) {
        write_file(solution_out, serialize_solution(report.solution));
      }
      ctx.emit(report.to_json());
      return kOk;
    }
    if (gen_random->parsed()) {
      const ValueKind kind = values == "2"   ? ValueKind::kTwo
                             : values == "3" ? ValueKind::kThree
                                             : ValueKind::kAny;
      Rng rng = make_rng(seed);
      Instance in = random_instance(gn, gm, gk, kind, rng);
      in.label += "-seed" + std::to_string(seed);
      require_valid(in);
      out << serialize_instance(in);
      return kOk;
    }
    if (gen_tight->parsed()) {
      out << serialize_instance(gen_tightness(rational_arg(vs, "vs"),
                                              rational_arg(vm, "vm"),
                                              rational_arg(vl, "vl")));
      return kOk;
    }
    if (gen_red->parsed()) {
      const Graph g = parse_graph(read_file(graph_path));
      const auto degree = g.regular_degree();
      if (!degree) throw InvalidInput("graph is not regular");
      if (red_d && *red_d != *degree) {
        throw InvalidInput("--d " + std::to_string(*red_d) +
                           " does not match the graph degree " +
                           std::to_string(*degree));
      }
      ReductionParams params = default_params(g.n(), *degree);
      const Rational ratio = params.S / params.B;
      if (red_b) params.B = rational_arg(*red_b, "B");
      if (red_s) params.S = rational_arg(*red_s, "S");
      if (red_b && !red_s) params.S = params.B * ratio;
      if (red_s && !red_b) params.B = params.S / ratio;
      out << serialize_instance(build_reduction(g, params));
      return kOk;
    }
    if (gen_graph->parsed()) {
      out << serialize_graph(gen_regular_graph(gn, gd, seed));
      return kOk;
    }
    if (mds->parsed()) {
      const Graph g = parse_graph(read_file(graph_path));
      const auto set = brute_force_mds(g);
      Json j;
      j["n"] = g.n();
      j["size"] = set.size();
      j["set"] = set;
      ctx.emit(j);
      return kOk;
    }
    if (cmp->parsed()) {
      return compare(ctx, load_instance(instance_path), resolve_cap(max_n));
    }
    if (check_sol->parsed()) {
      const Instance in = load_instance(instance_path);
      return check_solution(ctx, in, parse_solution(read_file(solution_path)));
    }
    if (check_red->parsed()) {
      const Graph g = parse_graph(read_file(graph_path));
      const Instance in = load_instance(instance_path);
      return check_reduction(ctx, g, in, parse_solution(read_file(solution_path)),
                             resolve_cap(max_n));
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const DomainMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace dshp::cli

#endif  // DSHP_TOOLS_CLI_HPP_
