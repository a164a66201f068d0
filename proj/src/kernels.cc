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

#include "gridmp/kernels.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "gridmp/constructions.h"

namespace gridmp {

PreclusionProblem PreclusionProblem::ForGrid(const Grid& grid) {
  PreclusionProblem p;
  p.grid = &grid;
  p.universe.resize(grid.num_edges());
  for (EdgeId e = 0; e < grid.num_edges(); ++e) p.universe[e] = e;
  const Matching w = grid.even_order()
                         ? DefaultPm(grid)
                         : ApmAllEven(grid, static_cast<VertexId>(0));
  p.witness = w.edges();
  p.target = static_cast<int>(grid.order() / 2);
  return p;
}

PreclusionProblem PreclusionProblem::ForVertexDeleted(const Grid& grid,
                                                      VertexId u) {
  PreclusionProblem p;
  p.grid = &grid;
  const Matching w = ApmAllEven(grid, u);
  for (EdgeId e = 0; e < grid.num_edges(); ++e) {
    if (!grid.Incident(e, u)) p.universe.push_back(e);
  }
  p.removed.assign(grid.order(), 0);
  p.removed[u] = 1;
  p.witness = w.edges();
  p.target = static_cast<int>((grid.order() - 1) / 2);
  return p;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (r > kMax / num) return kMax;
    r = r * num / i;
  }
  return r;
}

namespace {

// Advances idx (strictly increasing, values < n) to the next combination.
bool NextCombination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

bool MeetsWitness(const std::vector<EdgeId>& set,
                  const std::vector<EdgeId>& witness) {
  for (EdgeId e : set) {
    if (std::find(witness.begin(), witness.end(), e) != witness.end()) {
      return true;
    }
  }
  return false;
}

struct Segment {
  EdgeId required = -1;  // -1: no required edge
  std::vector<EdgeId> pool;
  int choose = 0;
};

struct Task {
  int segment;
  int first;  // index into the segment pool, -1 when choose == 0
};

}  // namespace

std::vector<FaultSet> EnumerateSerial(const PreclusionProblem& problem, int k,
                                      bool prune) {
  const Grid& g = *problem.grid;
  const int n = static_cast<int>(problem.universe.size());
  std::vector<FaultSet> out;
  if (k < 0 || k > n) return out;
  BipartiteMatcher matcher(g);
  std::vector<std::uint8_t> mask(g.num_edges(), 0);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<EdgeId> set(k);
  do {
    for (int i = 0; i < k; ++i) set[i] = problem.universe[idx[i]];
    if (prune && !MeetsWitness(set, problem.witness)) continue;
    for (EdgeId e : set) mask[e] = 1;
    if (matcher.Solve(mask, problem.removed) < problem.target) {
      out.emplace_back(set);
    }
    for (EdgeId e : set) mask[e] = 0;
  } while (NextCombination(idx, n));
  return out;
}

std::vector<FaultSet> EnumerateParallel(const PreclusionProblem& problem,
                                        int k, const KernelOptions& options) {
  const Grid& g = *problem.grid;
  std::vector<FaultSet> out;
  if (k < 0 || k > static_cast<int>(problem.universe.size())) return out;

  std::vector<Segment> segments;
  if (options.prune) {
    if (k == 0) return out;
    std::vector<EdgeId> excluded;
    for (EdgeId w : problem.witness) {
      if (!std::binary_search(problem.universe.begin(), problem.universe.end(),
                              w)) {
        continue;
      }
      excluded.push_back(w);
      Segment s;
      s.required = w;
      s.choose = k - 1;
      for (EdgeId e : problem.universe) {
        if (std::find(excluded.begin(), excluded.end(), e) == excluded.end()) {
          s.pool.push_back(e);
        }
      }
      segments.push_back(std::move(s));
    }
  } else {
    segments.push_back({-1, problem.universe, k});
  }

  std::vector<Task> tasks;
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    const Segment& seg = segments[s];
    if (seg.choose == 0) {
      tasks.push_back({s, -1});
      continue;
    }
    const int last = static_cast<int>(seg.pool.size()) - seg.choose;
    for (int p = 0; p <= last; ++p) tasks.push_back({s, p});
  }

  std::vector<std::vector<FaultSet>> found(tasks.size());
  std::atomic<bool> stop{false};
  const int threads =
      options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
    BipartiteMatcher matcher(g);
    std::vector<std::uint8_t> mask(g.num_edges(), 0);
    std::vector<EdgeId> set;

#pragma omp for schedule(dynamic)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (stop.load(std::memory_order_relaxed)) continue;
      const Segment& seg = segments[tasks[t].segment];
      // Remaining choices come from pool[first + 1 ..].
      const int rest = seg.choose > 0 ? seg.choose - 1 : 0;
      const int base = tasks[t].first + 1;
      const int avail = static_cast<int>(seg.pool.size()) - base;
      std::vector<int> idx(rest);
      for (int i = 0; i < rest; ++i) idx[i] = i;
      do {
        set.clear();
        if (seg.required >= 0) set.push_back(seg.required);
        if (tasks[t].first >= 0) set.push_back(seg.pool[tasks[t].first]);
        for (int i : idx) set.push_back(seg.pool[base + i]);
        for (EdgeId e : set) mask[e] = 1;
        const int size = matcher.Solve(mask, problem.removed, problem.witness);
        for (EdgeId e : set) mask[e] = 0;
        if (size < problem.target) {
          found[t].emplace_back(set);
          if (options.stop_at_first) {
            stop.store(true, std::memory_order_relaxed);
            break;
          }
        }
      } while (NextCombination(idx, avail));
    }
  }

  for (auto& part : found) {
    for (auto& s : part) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  if (options.stop_at_first && out.size() > 1) out.resize(1);
  return out;
}

}  // namespace gridmp
