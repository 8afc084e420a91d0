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

#ifndef DSHP_GENERATORS_HPP_
#define DSHP_GENERATORS_HPP_

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dshp/errors.hpp"
#include "dshp/model.hpp"
#include "dshp/random.hpp"
#include "dshp/rational.hpp"

namespace dshp {

enum class ValueKind { kTwo, kThree, kAny };

// Value-set draws used by the `gen random` command and the property suites.
// Two-valued sets may be negative; three-valued sets are nonnegative so the
// approximation domain applies.
inline std::vector<Rational> random_value_set(ValueKind kind, Rng& rng) {
  const int q = uniform_int(rng, 1, 4);
  switch (kind) {
    case ValueKind::kTwo: {
      const Rational lo(uniform_int(rng, -4, 8), q);
      return {lo, lo + Rational(uniform_int(rng, 1, 8), q)};
    }
    case ValueKind::kThree: {
      const Rational s(uniform_int(rng, 0, 6), q);
      const Rational m = s + Rational(uniform_int(rng, 1, 6), q);
      return {s, m, m + Rational(uniform_int(rng, 1, 6), q)};
    }
    case ValueKind::kAny:
      break;
  }
  return {};
}

inline std::vector<Rational> random_probabilities(int m, Rng& rng) {
  std::vector<int> weight(m);
  int total = 0;
  for (auto& w : weight) total += (w = uniform_int(rng, 0, 4));
  if (total == 0) {
    weight[uniform_below(rng, m)] = 1;
    total = 1;
  }
  std::vector<Rational> p;
  for (int w : weight) p.emplace_back(w, total);
  return p;
}

/// Random valid instance. For kTwo and kThree every value of the drawn set
/// occurs at least once, so value detection sees exactly two or three values.
inline Instance random_instance(int n, int m, int k, ValueKind kind, Rng& rng) {
  if (n < 1 || m < 1 || k < 0 || k > n) {
    throw InvalidInput("random instance needs n >= 1, m >= 1, 0 <= k <= n");
  }
  Instance in;
  in.n = n;
  in.m = m;
  in.k = k;
  in.p = random_probabilities(m, rng);
  in.c.resize(n);
  in.f.assign(n, std::vector<Rational>(m));
  const int cells = n * (m + 1);
  auto cell = [&](int idx) -> Rational& {
    const int i = idx / (m + 1), j = idx % (m + 1);
    return j == 0 ? in.c[i] : in.f[i][j - 1];
  };
  if (kind == ValueKind::kAny) {
    for (int idx = 0; idx < cells; ++idx) {
      cell(idx) = Rational(uniform_int(rng, -10, 20), uniform_int(rng, 1, 4));
    }
    in.label = "random-any";
    return in;
  }
  const auto values = random_value_set(kind, rng);
  if (cells < std::ssize(values)) {
    throw InvalidInput("instance too small to hold " +
                       std::to_string(values.size()) + " distinct values");
  }
  std::vector<int> order(cells);
  std::iota(order.begin(), order.end(), 0);
  shuffle(std::span<int>(order), rng);
  for (int t = 0; t < cells; ++t) {
    const auto pick = t < std::ssize(values) ? t : uniform_below(rng, values.size());
    cell(order[t]) = values[pick];
  }
  in.label = kind == ValueKind::kTwo ? "random-two" : "random-three";
  return in;
}

}  // namespace dshp

#endif  // DSHP_GENERATORS_HPP_
