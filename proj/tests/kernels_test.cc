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

#include <limits>

#include "gridmp/grid.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gridmp {
namespace {

using testing_util::AllGrids;
using testing_util::AsPairs;
using testing_util::ForEachCombination;
using testing_util::OraclePrecludes;
using testing_util::RawGrid;

TEST(Binomial, ValuesAndSaturation) {
  EXPECT_EQ(Binomial(5, 2), 10u);
  EXPECT_EQ(Binomial(12, 0), 1u);
  EXPECT_EQ(Binomial(3, 4), 0u);
  EXPECT_EQ(Binomial(54, 3), 24804u);
  EXPECT_EQ(Binomial(10000, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(PreclusionProblem, Witnesses) {
  const Grid even = Grid::Build({4, 3});
  const PreclusionProblem p = PreclusionProblem::ForGrid(even);
  EXPECT_EQ(p.target, 6);
  EXPECT_EQ(static_cast<int>(p.witness.size()), 6);
  EXPECT_EQ(static_cast<int>(p.universe.size()), even.num_edges());

  const Grid odd = Grid::Build({3, 3});
  const PreclusionProblem q = PreclusionProblem::ForGrid(odd);
  EXPECT_EQ(q.target, 4);

  const PreclusionProblem r = PreclusionProblem::ForVertexDeleted(odd, 0);
  EXPECT_EQ(r.target, 4);
  EXPECT_EQ(static_cast<int>(r.universe.size()), odd.num_edges() - 2);
  EXPECT_THROW(PreclusionProblem::ForVertexDeleted(odd, 1),
               std::invalid_argument);
}

// Every k-subset of the universe, judged by the oracle.
std::vector<FaultSet> OracleSets(const PreclusionProblem& p, int k) {
  const RawGrid raw(p.grid->dims());
  std::vector<int> removed;
  for (std::size_t v = 0; v < p.removed.size(); ++v) {
    if (p.removed[v]) removed.push_back(static_cast<int>(v));
  }
  std::vector<FaultSet> out;
  ForEachCombination(static_cast<int>(p.universe.size()), k,
                     [&](const std::vector<int>& c) {
                       std::vector<EdgeId> f;
                       for (int i : c) f.push_back(p.universe[i]);
                       if (OraclePrecludes(raw, AsPairs(*p.grid, f), removed)) {
                         out.emplace_back(f);
                       }
                     });
  return out;
}

TEST(Kernels, SerialMatchesOracle) {
  for (const auto& dims : AllGrids(3, 12)) {
    const Grid g = Grid::Build(dims);
    const PreclusionProblem p = PreclusionProblem::ForGrid(g);
    for (int k = 1; k <= 3; ++k) {
      ASSERT_EQ(EnumerateSerial(p, k, false), OracleSets(p, k))
          << g.FormatDims() << " k=" << k;
    }
  }
}

TEST(Kernels, VertexDeletedMatchesOracle) {
  const Grid g = Grid::Build({3, 3});
  for (VertexId u : {0, 2, 6, 8}) {
    const PreclusionProblem p = PreclusionProblem::ForVertexDeleted(g, u);
    for (int k = 1; k <= 2; ++k) {
      ASSERT_EQ(EnumerateParallel(p, k, {}), OracleSets(p, k));
    }
  }
}

TEST(Kernels, SerialParallelPrunedUnprunedAgree) {
  for (const auto& dims : AllGrids(4, 18)) {
    const Grid g = Grid::Build(dims);
    const PreclusionProblem p = PreclusionProblem::ForGrid(g);
    const int max_k = std::min(g.n() + 1, 4);
    for (int k = 1; k <= max_k; ++k) {
      const auto reference = EnumerateSerial(p, k, false);
      ASSERT_EQ(EnumerateSerial(p, k, true), reference) << g.FormatDims();
      for (bool prune : {true, false}) {
        for (int threads : {1, 2, 4}) {
          KernelOptions o;
          o.prune = prune;
          o.threads = threads;
          ASSERT_EQ(EnumerateParallel(p, k, o), reference)
              << g.FormatDims() << " k=" << k << " prune=" << prune
              << " threads=" << threads;
        }
      }
    }
  }
}

TEST(Kernels, StopAtFirstReturnsOneGenuineSet) {
  const Grid g = Grid::Build({3, 3});
  const PreclusionProblem p = PreclusionProblem::ForGrid(g);
  KernelOptions o;
  o.stop_at_first = true;
  const auto all = EnumerateParallel(p, 3, {});
  ASSERT_FALSE(all.empty());
  const auto one = EnumerateParallel(p, 3, o);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NE(std::find(all.begin(), all.end(), one[0]), all.end());
  EXPECT_TRUE(EnumerateParallel(p, 2, o).empty());
}

TEST(Kernels, ZeroSizeSets) {
  const Grid g = Grid::Build({2, 2});
  const PreclusionProblem p = PreclusionProblem::ForGrid(g);
  EXPECT_TRUE(EnumerateSerial(p, 0, true).empty());
  EXPECT_TRUE(EnumerateParallel(p, 0, {}).empty());
}

}  // namespace
}  // namespace gridmp
