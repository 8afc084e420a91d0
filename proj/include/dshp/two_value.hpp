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

#ifndef DSHP_TWO_VALUE_HPP_
#define DSHP_TWO_VALUE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dshp/errors.hpp"
#include "dshp/model.hpp"
#include "dshp/rational.hpp"

namespace dshp {

struct TwoValueProfile {
  Rational v_min;
  Rational v_max;
  std::vector<int> high;  // assets with c_i = v_max, ascending
};

// Element visits made by detection and solving; linear in n * m.
struct TwoValueStats {
  std::uint64_t visits = 0;
};

namespace two_value_detail {

inline std::string witness(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].to_string();
  }
  return s;
}

}  // namespace two_value_detail

/// Classifies an instance whose c_i and f_ij take exactly two values.
/// Throws DegenerateValues for a single value and DomainMismatch (with three
/// witnesses) for more than two.
inline TwoValueProfile detect_two_values(const Instance& in,
                                         TwoValueStats* stats = nullptr) {
  require_valid(in);
  const auto values = distinct_values(in, 2);
  if (stats) stats->visits += static_cast<std::uint64_t>(in.n) * (in.m + 1);
  if (values.size() > 2) {
    throw DomainMismatch("instance is not two-valued; witnesses " +
                         two_value_detail::witness(values));
  }
  if (values.size() < 2) {
    throw DegenerateValues("instance has the single value " +
                           values.front().to_string() +
                           "; every feasible plan has the same objective");
  }
  TwoValueProfile profile{values[0], values[1], {}};
  for (int i = 0; i < in.n; ++i) {
    if (in.c[i] == profile.v_max) profile.high.push_back(i);
  }
  return profile;
}

/// Polynomial algorithm for two-valued instances.
///
/// With C = {i : c_i = v_max}: if |C| >= k sell the k lowest-indexed members
/// of C now and nothing later; otherwise sell all of C now and, per scenario,
/// the k - |C| best remaining assets. Selection counts v_max entries instead of
/// sorting, so the whole run is O(nm).
inline Solution solve_two_value(const Instance& in,
                                TwoValueStats* stats = nullptr) {
  TwoValueProfile profile;
  try {
    profile = detect_two_values(in, stats);
  } catch (const DegenerateValues&) {
    Solution sol;
    for (int i = 0; i < in.k; ++i) sol.first_stage.push_back(i);
    sol.second_stage.assign(in.m, {});
    sol.value = Rational(in.k) * in.c.front();
    return sol;
  }

  Solution sol;
  sol.second_stage.assign(in.m, {});
  const int high = static_cast<int>(profile.high.size());
  if (high >= in.k) {
    sol.first_stage.assign(profile.high.begin(), profile.high.begin() + in.k);
    sol.value = Rational(in.k) * profile.v_max;
    return sol;
  }

  sol.first_stage = profile.high;
  sol.value = Rational(high) * profile.v_max;
  const int remaining = in.k - high;
  std::vector<char> sold_early(in.n, 0);
  for (int i : profile.high) sold_early[i] = 1;
  std::uint64_t visits = 0;
  for (int j = 0; j < in.m; ++j) {
    auto& sold = sol.second_stage[j];
    int top = 0;
    // First pass takes v_max entries, second pass fills with v_min ones;
    // both go by increasing index, which keeps the list sorted after merge.
    std::vector<char> take(in.n, 0);
    for (int i = 0; i < in.n && top < remaining; ++i) {
      ++visits;
      if (!sold_early[i] && in.f[i][j] == profile.v_max) {
        take[i] = 1;
        ++top;
      }
    }
    int low = 0;
    for (int i = 0; i < in.n && top + low < remaining; ++i) {
      ++visits;
      if (!sold_early[i] && !take[i]) {
        take[i] = 1;
        ++low;
      }
    }
    for (int i = 0; i < in.n; ++i) {
      if (take[i]) sold.push_back(i);
    }
    visits += in.n;
    sol.value += in.p[j] * (Rational(top) * profile.v_max +
                            Rational(low) * profile.v_min);
  }
  if (stats) stats->visits += visits;
  return sol;
}

}  // namespace dshp

#endif  // DSHP_TWO_VALUE_HPP_
