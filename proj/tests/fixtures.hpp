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

#ifndef DSHP_TESTS_FIXTURES_HPP_
#define DSHP_TESTS_FIXTURES_HPP_

#include <vector>

#include "dshp/graph.hpp"
#include "dshp/model.hpp"

namespace dshp::testing {

// K6 minus the matching {(0,3), (1,4), (2,5)}.
inline Graph octahedron() {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != u + 3) edges.emplace_back(u, v);
    }
  }
  return Graph(6, edges);
}

inline Graph cycle(int n) {
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Instance uniform_instance(int k, std::vector<Rational> c,
                                 std::vector<std::vector<Rational>> f) {
  Instance in;
  in.n = static_cast<int>(c.size());
  in.m = static_cast<int>(f.front().size());
  in.k = k;
  in.c = std::move(c);
  in.f = std::move(f);
  in.p.assign(in.m, Rational(1, in.m));
  return in;
}

// c = (2, 1, 1), f rows (1, 1), (2, 1), (1, 2), k = 2, uniform p.
inline Instance small_two_valued() {
  return uniform_instance(2, {2, 1, 1}, {{1, 1}, {2, 1}, {1, 2}});
}

}  // namespace dshp::testing

#endif  // DSHP_TESTS_FIXTURES_HPP_
