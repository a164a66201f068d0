// Copyright 2026 The gridmp Authors.
//
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

// Test-only helpers. The oracles here deliberately avoid the library's
// matching code: adjacency comes from raw coordinates and maximum matchings
// from a plain Kuhn augmenting-path search.

#ifndef GRIDMP_TESTS_TEST_UTIL_H_
#define GRIDMP_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "gridmp/grid.h"
#include "gridmp/matching.h"

namespace gridmp::testing_util {

inline constexpr std::uint32_t kDefaultSeed = 20260214;

// Base seed for randomized tests; set with --seed=N (see test_main.cc).
std::uint32_t Seed();

// Every ordered dims tuple with 1..max_n entries, each >= 2, order <= max_order.
inline std::vector<std::vector<int>> AllGrids(int max_n,
                                              std::int64_t max_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t order) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_n) return;
    for (int k = 2; order * k <= max_order; ++k) {
      cur.push_back(k);
      rec(order * k);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Raw coordinate model of a grid, built without Grid.
struct RawGrid {
  std::vector<int> dims;
  std::vector<std::vector<int>> coords;
  std::vector<std::vector<int>> adj;

  explicit RawGrid(std::vector<int> d) : dims(std::move(d)) {
    std::vector<int> c(dims.size(), 0);
    while (true) {
      coords.push_back(c);
      int i = static_cast<int>(dims.size()) - 1;
      while (i >= 0 && ++c[i] == dims[i]) c[i--] = 0;
      if (i < 0) break;
    }
    adj.resize(coords.size());
    for (std::size_t a = 0; a < coords.size(); ++a) {
      for (std::size_t b = 0; b < coords.size(); ++b) {
        int dist = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
          dist += std::abs(coords[a][i] - coords[b][i]);
        }
        if (dist == 1) adj[a].push_back(static_cast<int>(b));
      }
    }
  }
  int size() const { return static_cast<int>(coords.size()); }
  bool Even(int v) const {
    int s = 0;
    for (int x : coords[v]) s += x;
    return s % 2 == 0;
  }
};

// Maximum matching size of the raw grid minus the vertex pairs in `deleted`
// and the vertices in `removed`. Kuhn's algorithm from the even side.
inline int OracleMaxMatching(const RawGrid& g,
                             const std::set<std::pair<int, int>>& deleted,
                             const std::vector<int>& removed = {}) {
  std::vector<char> gone(g.size(), 0);
  for (int v : removed) gone[v] = 1;
  auto usable = [&](int a, int b) {
    return !gone[a] && !gone[b] &&
           !deleted.count({std::min(a, b), std::max(a, b)});
  };
  std::vector<int> mate(g.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int v) {
    for (int w : g.adj[v]) {
      if (!usable(v, w) || seen[w]) continue;
      seen[w] = 1;
      if (mate[w] < 0 || augment(mate[w])) {
        mate[w] = v;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (gone[v] || !g.Even(v)) continue;
    seen.assign(g.size(), 0);
    if (augment(v)) ++size;
  }
  return size;
}

// Converts library edge ids to raw vertex pairs. Vertex numbering agrees
// because both enumerate coordinates with the last position fastest; the
// tests check that separately.
inline std::set<std::pair<int, int>> AsPairs(const Grid& grid,
                                             const std::vector<EdgeId>& ids) {
  std::set<std::pair<int, int>> out;
  for (EdgeId e : ids) out.insert({grid.edge(e).lo, grid.edge(e).hi});
  return out;
}

// Oracle for "F precludes": no PM or APM of G - F (optionally minus u).
inline bool OraclePrecludes(const RawGrid& g,
                            const std::set<std::pair<int, int>>& f,
                            const std::vector<int>& removed = {}) {
  const int live = g.size() - static_cast<int>(removed.size());
  return 2 * OracleMaxMatching(g, f, removed) < live - 1;
}

// Perfect-matching-only variant, for graphs of even order.
inline bool OracleHasPm(const RawGrid& g,
                        const std::set<std::pair<int, int>>& f,
                        const std::vector<int>& removed = {}) {
  const int live = g.size() - static_cast<int>(removed.size());
  return 2 * OracleMaxMatching(g, f, removed) == live;
}

// Matchings are checked against raw adjacency, not Grid.
inline bool OracleIsMatchingMissing(const Grid& grid, const RawGrid& raw,
                                    const Matching& m,
                                    const std::vector<int>& expected_holes) {
  std::vector<int> cover(raw.size(), 0);
  for (EdgeId e : m) {
    const int a = grid.edge(e).lo, b = grid.edge(e).hi;
    bool adjacent = false;
    for (int w : raw.adj[a]) adjacent |= w == b;
    if (!adjacent) return false;
    ++cover[a];
    ++cover[b];
  }
  std::vector<int> holes;
  for (int v = 0; v < raw.size(); ++v) {
    if (cover[v] > 1) return false;
    if (cover[v] == 0) holes.push_back(v);
  }
  return holes == expected_holes;
}

// Lexicographic k-combinations of [0, n).
inline void ForEachCombination(int n, int k,
                               const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  if (k > n) return;
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace gridmp::testing_util

#endif  // GRIDMP_TESTS_TEST_UTIL_H_
