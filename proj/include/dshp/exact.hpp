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

#ifndef DSHP_EXACT_HPP_
#define DSHP_EXACT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "dshp/errors.hpp"
#include "dshp/model.hpp"
#include "dshp/rational.hpp"

namespace dshp {

struct ExactOptions {
  bool prune = false;  // skip assets that are never worth selling early
  int max_n = 24;
};

struct ExactStats {
  std::uint64_t first_stage_sets = 0;  // completions evaluated
  std::size_t pruned_assets = 0;
};

/// Assets whose first-stage value is strictly below their expected
/// second-stage value. Some optimum never sells them at stage 1.
inline std::vector<int> prunable(const Instance& in) {
  std::vector<int> out;
  for (int i = 0; i < in.n; ++i) {
    Rational expected;
    for (int j = 0; j < in.m; ++j) expected += in.p[j] * in.f[i][j];
    if (in.c[i] < expected) out.push_back(i);
  }
  return out;
}

/// Reference optimizer: enumerates first-stage sets F by size 0..k and
/// lexicographically within a size, completes each with the greedy second
/// stage and keeps the first set reaching the best value.
///
/// Values are rescaled by the lcm of all denominators so the inner loop runs
/// on integers; the result is exact.
inline Solution solve_exact(const Instance& in, const ExactOptions& options = {},
                            ExactStats* stats = nullptr) {
  require_valid(in);
  if (options.max_n < 1) throw InvalidInput("max_n must be at least 1");
  if (in.n > options.max_n) {
    throw CapExceeded("n = " + std::to_string(in.n) +
                      " exceeds the exact-solver cap " +
                      std::to_string(options.max_n) +
                      "; raise it with --max-n or DSHP_MAX_N");
  }

  std::vector<std::vector<Rational>> weighted(in.n,
                                              std::vector<Rational>(in.m));
  BigInt scale = 1;
  for (int i = 0; i < in.n; ++i) {
    scale = boost::integer::lcm(scale, in.c[i].denominator());
    for (int j = 0; j < in.m; ++j) {
      weighted[i][j] = in.p[j] * in.f[i][j];
      scale = boost::integer::lcm(scale, weighted[i][j].denominator());
    }
  }
  auto scaled = [&](const Rational& v) {
    return v.numerator() * (scale / v.denominator());
  };
  std::vector<BigInt> first(in.n);
  std::vector<std::vector<BigInt>> second(in.n, std::vector<BigInt>(in.m));
  for (int i = 0; i < in.n; ++i) {
    first[i] = scaled(in.c[i]);
    for (int j = 0; j < in.m; ++j) second[i][j] = scaled(weighted[i][j]);
  }
  const auto orders = scenario_orders(in);

  std::vector<int> candidates;
  if (options.prune) {
    const auto skip = prunable(in);
    std::vector<char> skipped(in.n, 0);
    for (int i : skip) skipped[i] = 1;
    for (int i = 0; i < in.n; ++i) {
      if (!skipped[i]) candidates.push_back(i);
    }
    if (stats) stats->pruned_assets = skip.size();
  } else {
    candidates.resize(in.n);
    std::iota(candidates.begin(), candidates.end(), 0);
  }

  std::vector<char> mask(in.n, 0);
  std::vector<int> chosen;  // positions into candidates
  std::vector<int> best_set;
  BigInt best_value;
  bool have_best = false;
  std::uint64_t evaluated = 0;

  auto evaluate_current = [&]() {
    ++evaluated;
    const int remaining = in.k - static_cast<int>(chosen.size());
    BigInt value = 0;
    for (int pos : chosen) value += first[candidates[pos]];
    for (int j = 0; j < in.m; ++j) {
      int taken = 0;
      for (int i : orders[j]) {
        if (taken == remaining) break;
        if (mask[i]) continue;
        value += second[i][j];
        ++taken;
      }
    }
    if (!have_best || value > best_value) {
      have_best = true;
      best_value = std::move(value);
      best_set.clear();
      for (int pos : chosen) best_set.push_back(candidates[pos]);
    }
  };

  const int max_size = std::min<int>(in.k, static_cast<int>(candidates.size()));
  const int pool = static_cast<int>(candidates.size());
  for (int size = 0; size <= max_size; ++size) {
    chosen.resize(size);
    std::iota(chosen.begin(), chosen.end(), 0);
    std::fill(mask.begin(), mask.end(), 0);
    for (int pos : chosen) mask[candidates[pos]] = 1;
    while (true) {
      evaluate_current();
      // Advance to the next size-combination in lexicographic order.
      int slot = size - 1;
      while (slot >= 0 && chosen[slot] == pool - size + slot) --slot;
      if (slot < 0) break;
      for (int s = slot; s < size; ++s) mask[candidates[chosen[s]]] = 0;
      ++chosen[slot];
      for (int s = slot + 1; s < size; ++s) chosen[s] = chosen[s - 1] + 1;
      for (int s = slot; s < size; ++s) mask[candidates[chosen[s]]] = 1;
    }
  }
  if (stats) stats->first_stage_sets = evaluated;

  Solution sol = complete(in, best_set);
  // The integer search and the rational completion must agree.
  if (sol.value * Rational(scale) != Rational(best_value)) {
    throw Error("internal: exact solver value mismatch");
  }
  return sol;
}

}  // namespace dshp

#endif  // DSHP_EXACT_HPP_
