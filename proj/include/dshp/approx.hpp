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

#ifndef DSHP_APPROX_HPP_
#define DSHP_APPROX_HPP_

#include <string>
#include <utility>
#include <vector>

#include "dshp/errors.hpp"
#include "dshp/model.hpp"
#include "dshp/rational.hpp"

namespace dshp {

struct ThreeValueProfile {
  Rational v_small;
  Rational v_medium;
  Rational v_large;
  int large_count = 0;   // assets with c_i = v_large
  int medium_count = 0;  // assets with c_i = v_medium
};

struct ApproxReport {
  Rational achieved;
  ThreeValueProfile profile;
  Rational guarantee;  // v_medium / v_large
  // No upper bound on the optimum is computed, so this equals achieved.
  Rational certified_lower_bound;
};

/// Requires exactly three distinct values among all c_i and f_ij.
inline ThreeValueProfile detect_three_values(const Instance& in) {
  require_valid(in);
  const auto values = distinct_values(in, 3);
  if (values.size() != 3) {
    std::string list;
    for (const auto& v : values) list += (list.empty() ? "" : ", ") + v.to_string();
    if (values.size() < 3) {
      throw DomainMismatch("instance has " + std::to_string(values.size()) +
                           " distinct value(s) {" + list +
                           "}; use the two-value solver or treat as degenerate");
    }
    throw DomainMismatch("instance has more than three distinct values; "
                         "witnesses " + list);
  }
  ThreeValueProfile profile{values[0], values[1], values[2], 0, 0};
  for (const auto& v : in.c) {
    if (v == profile.v_large) ++profile.large_count;
    if (v == profile.v_medium) ++profile.medium_count;
  }
  return profile;
}

/// Two-step heuristic for nonnegative three-valued instances. Always within
/// a factor v_medium / v_large of the optimum.
///
///  1. Sell every asset whose current value is v_large or v_medium, or k of
///     them (v_large first, lowest index within a class) if there are more.
///  2. If budget remains, each scenario sells its best remaining assets.
inline std::pair<Solution, ApproxReport> solve_approx(const Instance& in) {
  const auto profile = detect_three_values(in);
  if (profile.v_small.sign() < 0) {
    throw DomainMismatch("approximation guarantee needs nonnegative values; "
                         "found " + profile.v_small.to_string());
  }
  std::vector<int> first;
  for (const auto* cls : {&profile.v_large, &profile.v_medium}) {
    for (int i = 0; i < in.n && std::ssize(first) < in.k; ++i) {
      if (in.c[i] == *cls) first.push_back(i);
    }
  }
  Solution sol = complete(in, std::move(first));
  ApproxReport report{sol.value, profile, profile.v_medium / profile.v_large,
                      sol.value};
  return {std::move(sol), std::move(report)};
}

/// Four assets, three uniform scenarios, k = 1. The heuristic sells the
/// v_medium asset now for v_medium while the optimum waits and collects
/// v_large in every scenario, so the ratio is exactly v_medium / v_large.
inline Instance gen_tightness(const Rational& v_small, const Rational& v_medium,
                              const Rational& v_large) {
  if (!(v_small < v_medium && v_medium < v_large)) {
    throw InvalidInput("tightness family needs v_small < v_medium < v_large");
  }
  const Rational& s = v_small;
  const Rational& l = v_large;
  Instance in;
  in.n = 4;
  in.m = 3;
  in.k = 1;
  in.c = {s, v_medium, s, s};
  in.p = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  in.f = {{l, s, s}, {s, s, s}, {s, l, s}, {s, s, l}};
  in.label = "tightness(" + v_small.to_string() + "," + v_medium.to_string() +
             "," + v_large.to_string() + ")";
  return in;
}

}  // namespace dshp

#endif  // DSHP_APPROX_HPP_
