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

#ifndef DSHP_MODEL_HPP_
#define DSHP_MODEL_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dshp/errors.hpp"
#include "dshp/rational.hpp"

namespace dshp {

/// A two-stage sell-or-hold instance.
///
/// There are `n` assets and `m` second-stage scenarios. Asset `i` can be
/// sold now for `c[i]`, or under scenario `j` (probability `p[j]`) for
/// `f[i][j]`. Exactly `k` assets are sold along every scenario path:
///
///   max  sum_i c_i x_i + sum_j p_j sum_i f_ij y_ij
///   s.t. sum_i x_i + sum_i y_ij = k       for every j
///        x_i + y_ij <= 1,  x_i in {0,1}
///
/// Assets and scenarios are 0-indexed. Values may be negative; the algorithm
/// modules restrict further where their guarantees need it.
struct Instance {
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<Rational> c;               // n first-stage values
  std::vector<Rational> p;               // m scenario probabilities
  std::vector<std::vector<Rational>> f;  // n rows of m second-stage values
  std::string label;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// First-stage sold set F plus, for every scenario, the assets sold then.
/// Index lists are kept sorted ascending.
struct Solution {
  std::vector<int> first_stage;
  std::vector<std::vector<int>> second_stage;
  Rational value;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Returns every violated Instance invariant; empty means valid.
inline std::vector<std::string> validate(const Instance& in) {
  std::vector<std::string> out;
  if (in.n < 1) out.push_back("n < 1 (n = " + std::to_string(in.n) + ")");
  if (in.m < 1) out.push_back("m < 1 (m = " + std::to_string(in.m) + ")");
  if (in.k < 0) out.push_back("k < 0 (k = " + std::to_string(in.k) + ")");
  if (in.k > in.n) {
    out.push_back("k > n (k = " + std::to_string(in.k) +
                  ", n = " + std::to_string(in.n) + ")");
  }
  if (std::ssize(in.c) != in.n) {
    out.push_back("c has " + std::to_string(in.c.size()) +
                  " entries, expected n = " + std::to_string(in.n));
  }
  if (std::ssize(in.p) != in.m) {
    out.push_back("p has " + std::to_string(in.p.size()) +
                  " entries, expected m = " + std::to_string(in.m));
  }
  if (std::ssize(in.f) != in.n) {
    out.push_back("f has " + std::to_string(in.f.size()) +
                  " rows, expected n = " + std::to_string(in.n));
  }
  for (std::size_t i = 0; i < in.f.size(); ++i) {
    if (std::ssize(in.f[i]) != in.m) {
      out.push_back("f[" + std::to_string(i) + "] has " +
                    std::to_string(in.f[i].size()) +
                    " entries, expected m = " + std::to_string(in.m));
    }
  }
  Rational total;
  for (std::size_t j = 0; j < in.p.size(); ++j) {
    if (in.p[j].sign() < 0) {
      out.push_back("p[" + std::to_string(j) + "] = " + in.p[j].to_string() +
                    " is negative");
    }
    total += in.p[j];
  }
  if (!in.p.empty() && total != Rational(1)) {
    out.push_back("probabilities sum to " + total.to_string() + " ≠ 1");
  }
  return out;
}

// Throws InvalidInput listing all violations.
inline void require_valid(const Instance& in) {
  const auto violations = validate(in);
  if (violations.empty()) return;
  std::string msg = "invalid instance";
  for (const auto& v : violations) msg += "; " + v;
  throw InvalidInput(msg);
}

/// Per-scenario asset order by decreasing f_ij, lowest index first on ties.
/// The greedy second stage for any F takes a prefix of this order with the
/// members of F skipped.
inline std::vector<std::vector<int>> scenario_orders(const Instance& in) {
  std::vector<std::vector<int>> orders(in.m);
  for (int j = 0; j < in.m; ++j) {
    auto& order = orders[j];
    order.resize(in.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return in.f[a][j] > in.f[b][j];
    });
  }
  return orders;
}

struct SecondStage {
  std::vector<std::vector<int>> sold;  // sorted, one list per scenario
  Rational revenue;                    // sum_j p_j sum_{i in sold[j]} f_ij
};

// Builds a membership mask for F and checks |F| <= k and index range.
inline std::vector<char> first_stage_mask(const Instance& in,
                                          std::span<const int> first_stage) {
  if (std::ssize(first_stage) > in.k) {
    throw InfeasibleSolution(
        "|F| ≤ k", std::to_string(first_stage.size()) + " assets sold at stage 1, "
                       "budget k = " + std::to_string(in.k));
  }
  std::vector<char> mask(in.n, 0);
  for (int i : first_stage) {
    if (i < 0 || i >= in.n) {
      throw InfeasibleSolution("index range",
                               "asset " + std::to_string(i) + " not in [0, n)");
    }
    if (mask[i]) {
      throw InfeasibleSolution("distinct indices",
                               "asset " + std::to_string(i) + " repeated in F");
    }
    mask[i] = 1;
  }
  return mask;
}

/// Optimal second-stage response to a fixed first-stage set F.
///
/// With x fixed the problem splits per scenario into "pick k - |F| of the
/// unsold assets maximizing the sum of f_ij"; the top values (lowest index on
/// ties) are optimal, so the second stage is integral.
inline SecondStage second_stage_greedy(const Instance& in,
                                       std::span<const int> first_stage) {
  const auto mask = first_stage_mask(in, first_stage);
  const int remaining = in.k - static_cast<int>(first_stage.size());
  SecondStage out;
  out.sold.resize(in.m);
  const auto orders = scenario_orders(in);
  for (int j = 0; j < in.m; ++j) {
    auto& sold = out.sold[j];
    Rational sum;
    for (int i : orders[j]) {
      if (std::ssize(sold) == remaining) break;
      if (mask[i]) continue;
      sold.push_back(i);
      sum += in.f[i][j];
    }
    std::sort(sold.begin(), sold.end());
    out.revenue += in.p[j] * sum;
  }
  return out;
}

struct Violation {
  std::string constraint;
  std::string detail;
};

// Structural checks of a solution against an instance; empty when feasible.
// The objective value is not checked here.
inline std::vector<Violation> solution_violations(const Instance& in,
                                                  const Solution& sol) {
  std::vector<Violation> out;
  std::vector<char> mask(in.n, 0);
  bool range_ok = true;
  for (int i : sol.first_stage) {
    if (i < 0 || i >= in.n) {
      out.push_back({"index range", "first-stage asset " + std::to_string(i) +
                                        " not in [0, n)"});
      range_ok = false;
    } else if (mask[i]) {
      out.push_back({"distinct indices",
                     "asset " + std::to_string(i) + " repeated in F"});
    } else {
      mask[i] = 1;
    }
  }
  if (!std::is_sorted(sol.first_stage.begin(), sol.first_stage.end())) {
    out.push_back({"sorted indices", "first_stage is not sorted"});
  }
  const auto fsize = static_cast<int>(sol.first_stage.size());
  if (fsize > in.k) {
    out.push_back({"|F| ≤ k", std::to_string(fsize) +
                                  " assets sold at stage 1, budget k = " +
                                  std::to_string(in.k)});
  }
  if (std::ssize(sol.second_stage) != in.m) {
    out.push_back({"scenario count",
                   std::to_string(sol.second_stage.size()) +
                       " second-stage lists, expected m = " +
                       std::to_string(in.m)});
    return out;
  }
  for (int j = 0; j < in.m; ++j) {
    const auto& sold = sol.second_stage[j];
    const std::string where = "scenario " + std::to_string(j);
    if (fsize + std::ssize(sold) != in.k) {
      out.push_back({"Σx + Σy = k",
                     where + " sells " + std::to_string(fsize) + " + " +
                         std::to_string(sold.size()) + ", budget k = " +
                         std::to_string(in.k)});
    }
    if (!std::is_sorted(sold.begin(), sold.end())) {
      out.push_back({"sorted indices", where + " list is not sorted"});
    }
    std::set<int> seen;
    for (int i : sold) {
      if (i < 0 || i >= in.n) {
        out.push_back({"index range", where + " asset " + std::to_string(i) +
                                          " not in [0, n)"});
        continue;
      }
      if (!seen.insert(i).second) {
        out.push_back({"distinct indices",
                       where + " repeats asset " + std::to_string(i)});
      }
      if (range_ok && mask[i]) {
        out.push_back({"x_i + y_ij ≤ 1",
                       "asset " + std::to_string(i) +
                           " sold at stage 1 and again in " + where});
      }
    }
  }
  return out;
}

struct Evaluation {
  Rational value;
  bool matches_recorded = false;  // value == solution.value
};

/// Exact objective of a structurally feasible solution. Throws
/// InfeasibleSolution naming the first broken constraint.
inline Evaluation evaluate(const Instance& in, const Solution& sol) {
  if (const auto v = solution_violations(in, sol); !v.empty()) {
    throw InfeasibleSolution(v.front().constraint, v.front().detail);
  }
  Rational value;
  for (int i : sol.first_stage) value += in.c[i];
  for (int j = 0; j < in.m; ++j) {
    Rational sum;
    for (int i : sol.second_stage[j]) sum += in.f[i][j];
    value += in.p[j] * sum;
  }
  return {value, value == sol.value};
}

// Completes F greedily into a full Solution.
inline Solution complete(const Instance& in, std::vector<int> first_stage) {
  std::sort(first_stage.begin(), first_stage.end());
  auto second = second_stage_greedy(in, first_stage);
  Solution sol;
  for (int i : first_stage) sol.value += in.c[i];
  sol.value += second.revenue;
  sol.first_stage = std::move(first_stage);
  sol.second_stage = std::move(second.sold);
  return sol;
}

/// Distinct values among all c_i and f_ij in increasing order. Stops after
/// `limit` + 1 values have been found.
inline std::vector<Rational> distinct_values(const Instance& in,
                                             std::size_t limit) {
  std::set<Rational> seen;
  auto add = [&](const Rational& v) {
    seen.insert(v);
    return seen.size() > limit;
  };
  for (const auto& v : in.c) {
    if (add(v)) return {seen.begin(), seen.end()};
  }
  for (const auto& row : in.f) {
    for (const auto& v : row) {
      if (add(v)) return {seen.begin(), seen.end()};
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace dshp

#endif  // DSHP_MODEL_HPP_
