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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All comparisons are exact rational equalities or inequalities.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dshp/dshp.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace dshp;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(Outcome& out) : out_(out) {}
  // Records the first failure only.
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }

 private:
  Outcome& out_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void within(Criterion& c, Clock::time_point start, double limit) {
  const double s = seconds_since(start);
  c.expect(s < limit, "took " + std::to_string(s) + " s, limit " +
                          std::to_string(limit) + " s");
}

Outcome two_value_exactness() {
  Outcome out;
  Criterion c(out);
  const auto start = Clock::now();
  Rng rng = make_rng(1001);
  std::set<int> budgets;
  for (int t = 0; t < 500 && out.pass; ++t) {
    const int n = uniform_int(rng, 1, 10);
    const int k = uniform_int(rng, 0, n);
    budgets.insert(k);
    const Instance in =
        random_instance(n, uniform_int(rng, 1, 6), k, ValueKind::kTwo, rng);
    const Rational fast = solve_two_value(in).value;
    const Rational exact = solve_exact(in).value;
    c.expect(fast == exact, "instance " + std::to_string(t) + ": two-value " +
                                fast.to_string() + " vs exact " + exact.to_string());
  }
  c.expect(budgets.size() == 11, "not every k in 0..10 was sampled");
  within(c, start, 10.0);
  out.detail = out.pass ? "500 instances, k in 0..10 all sampled" : out.detail;
  return out;
}

Outcome approximation_guarantee() {
  Outcome out;
  Criterion c(out);
  const auto start = Clock::now();
  Rng rng = make_rng(1002);
  std::optional<Rational> worst;
  for (int t = 0; t < 500 && out.pass; ++t) {
    const int n = uniform_int(rng, 2, 10);
    const Instance in = random_instance(n, uniform_int(rng, 1, 6),
                                        uniform_int(rng, 0, n), ValueKind::kThree,
                                        rng);
    const auto [sol, report] = solve_approx(in);
    const Rational exact = solve_exact(in).value;
    c.expect(sol.value >= report.guarantee * exact,
             "instance " + std::to_string(t) + ": " + sol.value.to_string() +
                 " < " + report.guarantee.to_string() + " * " + exact.to_string());
    if (exact.sign() > 0) {
      const Rational slack = (sol.value / exact) / report.guarantee;
      if (!worst || slack < *worst) worst = slack;
    }
  }
  within(c, start, 20.0);
  if (out.pass) {
    out.detail = "500 instances, min achieved/(guarantee*opt) = " +
                 (worst ? worst->to_string() : std::string("n/a"));
  }
  return out;
}

Outcome tightness() {
  Outcome out;
  Criterion c(out);
  const std::vector<std::array<Rational, 3>> triples = {
      {0, 1, 2}, {1, 2, 3}, {Rational(1, 2), Rational(3, 4), Rational(1)}};
  for (const auto& [s, m, l] : triples) {
    const Instance in = gen_tightness(s, m, l);
    const Rational ratio = solve_approx(in).first.value / solve_exact(in).value;
    c.expect(ratio == m / l, in.label + ": ratio " + ratio.to_string() +
                                 ", expected " + (m / l).to_string());
  }
  if (out.pass) out.detail = "ratios 1/2, 2/3, 3/4";
  return out;
}

struct Case {
  std::string name;
  Graph graph;
  int d;
  int expect_mds = -1;  // -1: no fixed expectation
};

std::vector<Case> reduction_cases() {
  std::vector<Case> cases = {{"octahedron", testing::octahedron(), 4, 2},
                             {"cycle5", testing::cycle(5), 2, 2}};
  int generated = 0;
  for (int d : {2, 3, 4}) {
    for (int n = d + 2; n <= 12; ++n) {
      if ((n * d) % 2) continue;
      for (std::uint64_t seed : {1u, 2u}) {
        cases.push_back({"regular(n=" + std::to_string(n) + ",d=" +
                             std::to_string(d) + ",seed=" + std::to_string(seed) + ")",
                         gen_regular_graph(n, d, seed), d});
        ++generated;
      }
    }
  }
  return cases;
}

Outcome reduction_round_trip(const std::vector<Case>& cases) {
  Outcome out;
  Criterion c(out);
  const auto start = Clock::now();
  int generated = 0;
  for (const auto& cs : cases) {
    const Graph& g = cs.graph;
    const Instance in = build_reduction(g, default_params(g.n(), cs.d));
    const Solution opt = solve_exact(in);
    const auto mds = brute_force_mds(g);
    const int held = g.n() - static_cast<int>(opt.first_stage.size());
    c.expect(held == static_cast<int>(mds.size()),
             cs.name + ": n - |F| = " + std::to_string(held) + ", MDS " +
                 std::to_string(mds.size()));
    const auto dom = extract_dominating(g, opt);
    c.expect(is_dominating(g, dom), cs.name + ": extracted set not dominating");
    if (cs.expect_mds >= 0) {
      c.expect(static_cast<int>(mds.size()) == cs.expect_mds,
               cs.name + ": MDS size " + std::to_string(mds.size()));
      c.expect(static_cast<int>(opt.first_stage.size()) == g.n() - cs.expect_mds,
               cs.name + ": first-stage size " +
                   std::to_string(opt.first_stage.size()));
    } else {
      ++generated;
      c.expect(g.regular_degree() == cs.d && g.is_connected() && g.n() <= 12,
               cs.name + ": generated graph outside the corpus contract");
    }
  }
  c.expect(generated >= 20, "only " + std::to_string(generated) + " generated graphs");
  within(c, start, 120.0);
  if (out.pass) {
    out.detail = "octahedron, cycle5 and " + std::to_string(generated) +
                 " generated graphs";
  }
  return out;
}

Outcome closed_form_revenue(const std::vector<Case>& cases) {
  Outcome out;
  Criterion c(out);
  for (const auto& cs : cases) {
    const Graph& g = cs.graph;
    const auto params = default_params(g.n(), cs.d);
    const Instance in = build_reduction(g, params);
    const auto dom = extract_dominating(g, solve_exact(in));
    const auto mds = brute_force_mds(g);
    for (const auto& set : {dom, mds}) {
      const int size = static_cast<int>(set.size());
      const Rational formula = dominating_solution_revenue(g.n(), params, size);
      const Solution plan = dominating_plan(g, in, set);
      c.expect(formula == evaluate(in, plan).value,
               cs.name + ": formula " + formula.to_string() + " vs plan " +
                   plan.value.to_string());
      if (size < g.n()) {
        c.expect(formula > dominating_solution_revenue(g.n(), params, size + 1),
                 cs.name + ": revenue not decreasing at |D| = " +
                     std::to_string(size));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(cases.size()) + " graphs";
  return out;
}

Outcome pruning() {
  Outcome out;
  Criterion c(out);
  Rng rng = make_rng(1006);
  for (int t = 0; t < 500 && out.pass; ++t) {
    const int n = uniform_int(rng, 1, 10);
    const Instance in = random_instance(n, uniform_int(rng, 1, 6),
                                        uniform_int(rng, 0, n), ValueKind::kAny,
                                        rng);
    const Rational a = solve_exact(in, {true, 24}).value;
    const Rational b = solve_exact(in, {false, 24}).value;
    c.expect(a == b, "instance " + std::to_string(t) + ": pruned " +
                         a.to_string() + " vs full " + b.to_string());
  }
  if (out.pass) out.detail = "500 instances";
  return out;
}

Outcome greedy_optimality() {
  Outcome out;
  Criterion c(out);
  Rng rng = make_rng(1007);
  for (int t = 0; t < 200 && out.pass; ++t) {
    const int n = uniform_int(rng, 1, 8);
    const Instance in = random_instance(n, uniform_int(rng, 1, 4),
                                        uniform_int(rng, 0, n), ValueKind::kAny,
                                        rng);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    shuffle(std::span<int>(all), rng);
    all.resize(uniform_int(rng, 0, in.k));
    std::sort(all.begin(), all.end());
    std::uint32_t mask = 0;
    for (int i : all) mask |= 1u << i;
    const Rational greedy = second_stage_greedy(in, all).revenue;
    const Rational brute = testing::brute_second_stage(in, mask);
    c.expect(greedy == brute, "instance " + std::to_string(t) + ": greedy " +
                                  greedy.to_string() + " vs " + brute.to_string());
  }
  if (out.pass) out.detail = "200 instances";
  return out;
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dshp");
  std::ostringstream out, err;
  dshp::cli::run(args, out, err);
  return out.str();
}

std::string strip_timing(const std::string& report) {
  auto j = Json::parse(report);
  j.erase("wall_time_ms");
  return j.dump();
}

Outcome determinism() {
  Outcome out;
  Criterion c(out);
  Rng rng = make_rng(1008);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 1, 10);
    Instance in = random_instance(n, uniform_int(rng, 1, 6), uniform_int(rng, 0, n),
                                  static_cast<ValueKind>(t % 3), rng);
    in.label = "det-" + std::to_string(t);
    const std::string text = serialize_instance(in);
    c.expect(parse_instance(text) == in, in.label + ": parse(serialize) differs");
    c.expect(serialize_instance(parse_instance(text)) == text,
             in.label + ": re-serialization differs");
    c.expect(serialize_solution(solve_exact(in)) ==
                 serialize_solution(solve_exact(parse_instance(text))),
             in.label + ": exact solver output differs");
    if (t % 3 == 1) {
      c.expect(serialize_solution(solve_approx(in).first) ==
                   serialize_solution(solve_approx(in).first),
               in.label + ": approx output differs");
    }
    if (t % 3 == 0) {
      c.expect(serialize_solution(solve_two_value(in)) ==
                   serialize_solution(solve_two_value(in)),
               in.label + ": two-value output differs");
    }
  }
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gen", "random", "--n", "9", "--m", "5", "--k", "4", "--seed", "5"},
           {"gen", "random", "--n", "9", "--m", "5", "--k", "4", "--values", "3",
            "--seed", "5"},
           {"gen", "graph", "--n", "12", "--d", "4", "--seed", "3"},
           {"gen", "tightness", "--vs", "1", "--vm", "2", "--vl", "3"}}) {
    c.expect(run_cli(args) == run_cli(args), "CLI '" + args[1] + "' output differs");
  }
  const std::string inst_text = run_cli(
      {"gen", "random", "--n", "8", "--m", "4", "--k", "3", "--values", "3",
       "--seed", "11"});
  const std::string path = (std::filesystem::temp_directory_path() /
                            "dshp_acceptance_instance.json").string();
  dshp::cli::write_file(path, inst_text);
  for (const char* algo : {"exact", "approx"}) {
    const auto a = run_cli({"solve", "--algo", algo, "--instance", path});
    const auto b = run_cli({"solve", "--algo", algo, "--instance", path});
    c.expect(!a.empty() && strip_timing(a) == strip_timing(b),
             std::string("CLI solve ") + algo + " output differs");
  }
  std::filesystem::remove(path);
  if (out.pass) out.detail = "100 instances round-tripped, solver and CLI outputs stable";
  return out;
}

}  // namespace

int main() {
  const auto cases = reduction_cases();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 two-value exactness", two_value_exactness},
      {"2 approximation guarantee", approximation_guarantee},
      {"3 tightness", tightness},
      {"4 reduction round trip", [&] { return reduction_round_trip(cases); }},
      {"5 closed-form revenue", [&] { return closed_form_revenue(cases); }},
      {"6 pruning preserves optimum", pruning},
      {"7 greedy second-stage optimality", greedy_optimality},
      {"8 determinism and round trip", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s (%.2f s): %s\n", out.pass ? "PASS" : "FAIL", name.c_str(),
                seconds_since(start), out.detail.c_str());
    failed += out.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
