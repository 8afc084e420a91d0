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

#ifndef DSHP_REDUCTION_HPP_
#define DSHP_REDUCTION_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dshp/errors.hpp"
#include "dshp/graph.hpp"
#include "dshp/model.hpp"
#include "dshp/random.hpp"
#include "dshp/rational.hpp"

// Dominating-set reduction for d-regular connected graphs on n vertices.
//
// Every vertex is an asset worth 1 now, and every vertex is also a scenario
// (probability 1/n). Under scenario j, asset i is worth 1 - B if i = j or i is
// adjacent to j, and 1 + S otherwise. With k = n - 1 and
//
//   d / (n - d) < S / B < (d + 1) / (n - d - 1)
//
// the assets held back at stage 1 in an optimal plan form a minimum
// dominating set.

namespace dshp {

struct ReductionParams {
  int d = 0;
  Rational B;  // discount
  Rational S;  // premium

  friend bool operator==(const ReductionParams&, const ReductionParams&) = default;
};

// Strict window bounds (low, high) on S/B; requires 0 <= d < n - 1.
inline std::pair<Rational, Rational> ratio_window(int n, int d) {
  if (d < 0 || d >= n - 1) {
    throw InvalidInput("ratio window is empty unless 0 <= d < n - 1 (n = " +
                       std::to_string(n) + ", d = " + std::to_string(d) + ")");
  }
  return {Rational(d, n - d), Rational(d + 1, n - d - 1)};
}

// Empty string when the parameters are admissible for n vertices.
inline std::string window_violation(int n, const ReductionParams& params) {
  if (params.d < 0 || params.d >= n - 1) {
    return "ratio window is empty for n = " + std::to_string(n) +
           ", d = " + std::to_string(params.d);
  }
  if (params.B.sign() <= 0 || params.S.sign() <= 0) {
    return "B and S must be positive";
  }
  const auto [low, high] = ratio_window(n, params.d);
  const Rational ratio = params.S / params.B;
  if (!(low < ratio && ratio < high)) {
    return "S/B = " + ratio.to_string() + " outside the open window (" +
           low.to_string() + ", " + high.to_string() + ")";
  }
  return {};
}

/// B = 1/2 and S/B at the midpoint of the window.
inline ReductionParams default_params(int n, int d) {
  const auto [low, high] = ratio_window(n, d);
  const Rational mid = (low + high) / Rational(2);
  return {d, Rational(1, 2), mid / Rational(2)};
}

inline Instance build_reduction(const Graph& g, const ReductionParams& params) {
  if (!g.is_connected()) throw InvalidInput("reduction: graph is not connected");
  const auto degree = g.regular_degree();
  if (!degree) throw InvalidInput("reduction: graph is not regular");
  if (*degree != params.d) {
    throw InvalidInput("reduction: graph is " + std::to_string(*degree) +
                       "-regular but d = " + std::to_string(params.d));
  }
  if (auto why = window_violation(g.n(), params); !why.empty()) {
    throw InvalidInput("reduction: " + why);
  }
  const int n = g.n();
  const Rational low = Rational(1) - params.B;
  const Rational high = Rational(1) + params.S;
  Instance in;
  in.n = n;
  in.m = n;
  in.k = n - 1;
  in.c.assign(n, Rational(1));
  in.p.assign(n, Rational(1, n));
  in.f.assign(n, std::vector<Rational>(n, high));
  for (int i = 0; i < n; ++i) {
    in.f[i][i] = low;
    for (int j : g.neighbors(i)) in.f[i][j] = low;
  }
  in.label = "reduction(n=" + std::to_string(n) + ",d=" +
             std::to_string(params.d) + ",B=" + params.B.to_string() +
             ",S=" + params.S.to_string() + ")";
  return in;
}

inline bool is_dominating(const Graph& g, const std::vector<int>& set) {
  std::vector<char> covered(g.n(), 0);
  for (int v : set) {
    if (v < 0 || v >= g.n()) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
    covered[v] = 1;
    for (int w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c; });
}

/// Minimum dominating set by exhaustive search: sizes in increasing order,
/// lexicographic within a size, first hit returned.
inline std::vector<int> brute_force_mds(const Graph& g, int cap = 24) {
  const int n = g.n();
  if (n > cap || n > 30) {
    throw CapExceeded("minimum dominating set search capped at n = " +
                      std::to_string(std::min(cap, 30)) + " (n = " +
                      std::to_string(n) + ")");
  }
  if (n == 0) return {};
  std::vector<std::uint32_t> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (int w : g.neighbors(v)) closed[v] |= 1u << w;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> chosen;
  for (int size = 1; size <= n; ++size) {
    chosen.resize(size);
    std::iota(chosen.begin(), chosen.end(), 0);
    while (true) {
      std::uint32_t cover = 0;
      for (int v : chosen) cover |= closed[v];
      if (cover == all) return chosen;
      int slot = size - 1;
      while (slot >= 0 && chosen[slot] == n - size + slot) --slot;
      if (slot < 0) break;
      ++chosen[slot];
      for (int s = slot + 1; s < size; ++s) chosen[s] = chosen[s - 1] + 1;
    }
  }
  return {};  // unreachable for n >= 1: V itself dominates
}

// The vertices not sold at stage 1.
inline std::vector<int> extract_dominating(const Graph& g,
                                           const Solution& sol) {
  std::vector<char> sold(g.n(), 0);
  for (int i : sol.first_stage) {
    if (i >= 0 && i < g.n()) sold[i] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    if (!sold[v]) out.push_back(v);
  }
  return out;
}

/// Objective of "sell V \ D now, then under every scenario all of D but one
/// asset worth 1 - B", for a dominating set D of size dsize:
///
///   R = n - |D| + (1/n) [ |D| (n - dB + (n - d - 1) S - B) - n (1 - B) ]
inline Rational dominating_solution_revenue(int n, const ReductionParams& params,
                                            int dsize) {
  if (dsize < 1 || dsize > n) {
    throw InvalidInput("dominating set size " + std::to_string(dsize) +
                       " outside [1, " + std::to_string(n) + "]");
  }
  const Rational nn(n), dd(params.d), size(dsize);
  const Rational row = nn - dd * params.B + (nn - dd - 1) * params.S - params.B;
  return nn - size + (size * row - nn * (Rational(1) - params.B)) / nn;
}

/// The explicit plan behind dominating_solution_revenue, built from the graph
/// rather than by the greedy completion: under scenario j the unsold asset is
/// the highest-indexed member of D in the closed neighbourhood of j.
/// Throws InvalidInput if D does not dominate.
inline Solution dominating_plan(const Graph& g, const Instance& in,
                                const std::vector<int>& dominating) {
  std::vector<char> in_set(g.n(), 0);
  for (int v : dominating) in_set[v] = 1;
  Solution sol;
  for (int v = 0; v < g.n(); ++v) {
    if (!in_set[v]) sol.first_stage.push_back(v);
  }
  for (int j = 0; j < g.n(); ++j) {
    int keep = -1;
    for (int v : dominating) {
      if (v == j || g.adjacent(v, j)) keep = std::max(keep, v);
    }
    if (keep < 0) {
      throw InvalidInput("vertex " + std::to_string(j) + " is not dominated");
    }
    auto& sold = sol.second_stage.emplace_back();
    for (int v : dominating) {
      if (v != keep) sold.push_back(v);
    }
    std::sort(sold.begin(), sold.end());
  }
  sol.value = evaluate(in, sol).value;
  return sol;
}

/// Random connected simple d-regular graph from the pairing model. Each
/// attempt re-seeds from (seed, attempt); attempts with loops, repeated edges
/// or several components are rejected.
inline Graph gen_regular_graph(int n, int d, std::uint64_t seed,
                               int max_attempts = 200000) {
  if (n < 1 || d < 0 || d >= n) {
    throw InvalidInput("regular graph needs n >= 1 and 0 <= d < n");
  }
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw InvalidInput("n * d = " + std::to_string(n * d) +
                       " is odd; no d-regular graph exists");
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) {
      for (int r = 0; r < d; ++r) points.push_back(v);
    }
    Rng rng = make_rng(seed, attempt);
    shuffle(std::span<int>(points), rng);
    std::vector<Graph::Edge> edges;
    bool simple = true;
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v || seen[u][v]) {
        simple = false;
        break;
      }
      seen[u][v] = seen[v][u] = 1;
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw Error("no connected simple " + std::to_string(d) +
              "-regular graph on " + std::to_string(n) + " vertices after " +
              std::to_string(max_attempts) + " attempts");
}

}  // namespace dshp

#endif  // DSHP_REDUCTION_HPP_
