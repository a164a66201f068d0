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

#include "gridmp/preclusion.h"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <string>

#include "gridmp/kernels.h"

namespace gridmp {
namespace {

void CheckBudget(std::size_t universe, int k, std::uint64_t budget,
                 int lower_bound) {
  const std::uint64_t subsets = Binomial(universe, k);
  if (subsets > budget) {
    throw BudgetExceeded("C(" + std::to_string(universe) + ", " +
                             std::to_string(k) + ") = " +
                             std::to_string(subsets) +
                             " subsets exceeds budget " +
                             std::to_string(budget),
                         lower_bound);
  }
}

struct SearchOutcome {
  int k = 0;
  std::vector<FaultSet> sets;
};

SearchOutcome SmallestPrecluding(const PreclusionProblem& problem,
                                 int predicted, const SearchOptions& options,
                                 bool collect_all) {
  const int universe = static_cast<int>(problem.universe.size());
  const int max_k =
      std::min(options.limit.value_or(predicted + 1), universe);
  CheckBudget(universe, std::min(max_k, predicted), options.budget, 1);
  KernelOptions kernel{options.prune, !collect_all, options.threads};
  for (int k = 1; k <= max_k; ++k) {
    CheckBudget(universe, k, options.budget, k);
    auto sets = EnumerateParallel(problem, k, kernel);
    if (!sets.empty()) return {k, std::move(sets)};
  }
  throw LimitReached("no preclusion set of size <= " + std::to_string(max_k),
                     max_k + 1);
}

struct Pattern {
  FaultSet set;
  int u0;
  int axis;
};

std::vector<Pattern> SpecialPatterns(const Grid& grid) {
  std::vector<Pattern> out;
  if (grid.n() != 2) return out;
  for (int axis = 0; axis < 2; ++axis) {
    const int other = 1 - axis;
    if (grid.dim(axis) % 2 != 0 || grid.dim(other) != 3) continue;
    for (int u0 = 0; u0 + 2 <= grid.dim(axis); u0 += 2) {
      Coords c(2);
      c[axis] = u0;
      c[other] = 0;
      const EdgeId bottom = grid.EdgeAt(grid.Index(c), axis);
      c[other] = 2;
      const EdgeId top = grid.EdgeAt(grid.Index(c), axis);
      out.push_back({FaultSet{bottom, top}, u0, axis});
    }
  }
  return out;
}

// Every k-subset of edges whose removal leaves k + 1 components of odd
// order. For paths these are exactly the optimal preclusion sets.
std::vector<FaultSet> OddComponentCuts(const Grid& grid, int k) {
  std::vector<FaultSet> out;
  std::vector<EdgeId> pick;
  std::function<void(EdgeId)> rec = [&](EdgeId from) {
    if (static_cast<int>(pick.size()) == k) {
      const FaultSet f(pick);
      const auto sizes = ComponentSizes(grid, f);
      if (static_cast<int>(sizes.size()) == k + 1 &&
          std::all_of(sizes.begin(), sizes.end(),
                      [](std::int64_t s) { return s % 2 == 1; })) {
        out.push_back(f);
      }
      return;
    }
    for (EdgeId e = from; e < grid.num_edges(); ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<FaultSet> OddStarSets(const Grid& grid) {
  std::vector<FaultSet> out;
  for (VertexId v = 0; v < grid.order(); ++v) {
    if (grid.Parity(v) == VertexClass::kOdd &&
        grid.Degree(v) == grid.n() + 1) {
      out.emplace_back(grid.Star(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IsTrivial(const SetClass& c) {
  return c.kind == SetClass::Kind::kTrivialAtVertex;
}

}  // namespace

int PredictedMp(const Grid& grid) {
  return grid.even_order() ? grid.n() : grid.n() + 1;
}

int BruteForceMp(const Grid& grid, const SearchOptions& options) {
  const auto problem = PreclusionProblem::ForGrid(grid);
  return SmallestPrecluding(problem, PredictedMp(grid), options, false).k;
}

std::vector<FaultSet> EnumerateOptimalSets(const Grid& grid,
                                           const SearchOptions& options) {
  const auto problem = PreclusionProblem::ForGrid(grid);
  return SmallestPrecluding(problem, PredictedMp(grid), options, true).sets;
}

std::vector<FaultSet> SpecialTwoGridPatterns(const Grid& grid) {
  std::vector<FaultSet> out;
  for (auto& p : SpecialPatterns(grid)) out.push_back(std::move(p.set));
  return out;
}

SetClass ClassifySet(const Grid& grid, const FaultSet& faults) {
  if (faults.empty() || !IsMpSet(grid, faults)) {
    throw std::invalid_argument("not a matching preclusion set");
  }
  const Edge& first = grid.edge(faults.edges().front());
  for (VertexId v : {first.lo, first.hi}) {
    if (grid.Star(v) == faults.edges()) {
      return {SetClass::Kind::kTrivialAtVertex, v, -1, -1};
    }
  }
  for (const Pattern& p : SpecialPatterns(grid)) {
    if (p.set == faults) {
      return {SetClass::Kind::kSpecialTwoGrid, -1, p.u0, p.axis};
    }
  }
  return {};
}

MpResult VerifyGrid(const Grid& grid, const SearchOptions& options) {
  MpResult r;
  r.dims = grid.dims();
  r.predicted_mp = PredictedMp(grid);
  const auto problem = PreclusionProblem::ForGrid(grid);
  auto outcome = SmallestPrecluding(problem, r.predicted_mp, options, true);
  r.mp = outcome.k;
  r.optimal_sets = std::move(outcome.sets);
  for (const FaultSet& f : r.optimal_sets) {
    r.classifications.push_back(ClassifySet(grid, f));
  }
  r.super_matched = std::all_of(r.classifications.begin(),
                                r.classifications.end(), IsTrivial);

  auto fail = [&](std::string why) { r.mismatches.push_back(std::move(why)); };
  if (r.mp != r.predicted_mp) {
    fail("brute mp " + std::to_string(r.mp) + " != predicted " +
         std::to_string(r.predicted_mp));
  }
  const int n = grid.n();
  if (n == 1) {
    if (r.optimal_sets != OddComponentCuts(grid, r.predicted_mp)) {
      fail("optimal sets of the path are not the odd-component cuts");
    }
  } else if (grid.even_order() && n >= 3) {
    if (!r.super_matched) fail("an optimal set is not a vertex star");
  } else if (grid.even_order()) {
    for (const SetClass& c : r.classifications) {
      if (c.kind == SetClass::Kind::kOther) {
        fail("an optimal set is neither trivial nor a special 2-grid pair");
        break;
      }
    }
    for (const FaultSet& p : SpecialTwoGridPatterns(grid)) {
      if (!std::binary_search(r.optimal_sets.begin(), r.optimal_sets.end(),
                              p)) {
        fail("special pair {" + grid.FormatEdge(p.edges()[0]) + ", " +
             grid.FormatEdge(p.edges()[1]) + "} is not optimal");
      }
    }
  } else {
    const auto expected = OddStarSets(grid);
    if (r.optimal_sets.size() != expected.size()) {
      fail("expected " + std::to_string(expected.size()) +
           " odd-vertex stars, found " +
           std::to_string(r.optimal_sets.size()) + " optimal sets");
    } else if (r.optimal_sets != expected) {
      fail("optimal sets differ from the odd-vertex stars of degree n + 1");
    }
  }
  r.prediction_match = r.mismatches.empty();
  return r;
}

bool VerifyVertexDeletedMp(const Grid& grid, VertexId u,
                           const SearchOptions& options) {
  if (grid.even_order()) {
    throw std::invalid_argument("grid " + grid.FormatDims() +
                                " has even order");
  }
  if (!grid.AllEven(u)) {
    throw std::invalid_argument("vertex " + grid.FormatVertex(u) +
                                " is not all-even");
  }
  const auto problem = PreclusionProblem::ForVertexDeleted(grid, u);
  const int n = grid.n();
  CheckBudget(problem.universe.size(), n, options.budget, 1);
  const KernelOptions kernel{options.prune, true, options.threads};
  for (int k = 1; k < n; ++k) {
    if (!EnumerateParallel(problem, k, kernel).empty()) return false;
  }
  return !EnumerateParallel(problem, n, kernel).empty();
}

std::vector<SweepEntry> Sweep(std::span<const std::vector<int>> family,
                              const SearchOptions& options) {
  std::vector<SweepEntry> out(family.size());
  SearchOptions inner = options;
  inner.threads = 1;
  const int threads =
      options.threads > 0 ? options.threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(family.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    SweepEntry& entry = out[i];
    entry.dims = family[i];
    try {
      const Grid grid = Grid::Build(family[i]);
      entry.result = VerifyGrid(grid, inner);
    } catch (const BudgetExceeded& e) {
      entry.error = e.what();
      entry.budget_exceeded = true;
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
  }
  return out;
}

std::vector<std::vector<int>> ParseFamily(std::istream& in) {
  std::vector<std::vector<int>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(ParseDims(line));
  }
  return out;
}

std::vector<std::int64_t> ComponentSizes(const Grid& grid,
                                         const FaultSet& faults) {
  std::vector<std::uint8_t> seen(grid.order(), 0);
  std::vector<VertexId> stack;
  std::vector<std::int64_t> sizes;
  for (VertexId s = 0; s < grid.order(); ++s) {
    if (seen[s]) continue;
    std::int64_t size = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (const Incidence& inc : grid.Neighbors(v)) {
        if (seen[inc.neighbor] || faults.contains(inc.edge)) continue;
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace gridmp
