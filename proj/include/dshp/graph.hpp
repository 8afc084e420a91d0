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

#ifndef DSHP_GRAPH_HPP_
#define DSHP_GRAPH_HPP_

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dshp/errors.hpp"

namespace dshp {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  // Edges may be given in either orientation. Throws InvalidInput on loops,
  // repeated edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
    if (n < 0) throw InvalidInput("graph: negative vertex count");
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) {
        throw InvalidInput("graph: edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") out of range");
      }
      if (u == v) {
        throw InvalidInput("graph: loop at vertex " + std::to_string(u));
      }
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end());
        dup != edges.end()) {
      throw InvalidInput("graph: repeated edge (" + std::to_string(dup->first) +
                         ", " + std::to_string(dup->second) + ")");
    }
    for (const auto& [u, v] : edges) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(int u, int v) const {
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  // The common degree, if every vertex has the same one.
  std::optional<int> regular_degree() const {
    if (n_ == 0) return std::nullopt;
    const int d = degree(0);
    for (int v = 1; v < n_; ++v) {
      if (degree(v) != d) return std::nullopt;
    }
    return d;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted, u < v
  std::vector<std::vector<int>> adjacency_;
};

// Text format: a header line "n e", then e lines "u v" with 0 <= u < v < n.
// Blank lines and '#' comments are ignored.
inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<Graph::Edge> edges;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("graph line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long a, b;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw fail("expected two integers");
    }
    if (!(fields >> b)) throw fail("expected two integers");
    std::string extra;
    if (fields >> extra) throw fail("unexpected trailing field '" + extra + "'");
    if (!header) {
      if (a < 0 || b < 0 || a > (1 << 20)) throw fail("bad header");
      header.emplace(static_cast<int>(a), static_cast<int>(b));
      continue;
    }
    if (!(0 <= a && a < b && b < header->first)) {
      throw fail("edge must satisfy 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!header) throw ParseError("graph: missing header line");
  if (std::ssize(edges) != header->second) {
    throw ParseError("graph: header declares " + std::to_string(header->second) +
                     " edges, found " + std::to_string(edges.size()));
  }
  return Graph(header->first, std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " +
                    std::to_string(g.edges().size()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace dshp

#endif  // DSHP_GRAPH_HPP_
