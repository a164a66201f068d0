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

// Exhaustive search for matching preclusion sets of a fixed size.
//
// EnumerateSerial is the reference: it walks every k-subset of the universe
// in lexicographic order and solves each from scratch. EnumerateParallel is
// the production kernel: it only generates subsets meeting the witness
// matching (every preclusion set must, since the witness would otherwise
// survive), splits them into independent tasks for OpenMP, and warm-starts
// each matching solve from the witness. Both return sets in lexicographic
// order and must agree exactly.

#ifndef GRIDMP_KERNELS_H_
#define GRIDMP_KERNELS_H_

#include <cstdint>
#include <vector>

#include "gridmp/grid.h"
#include "gridmp/matching.h"

namespace gridmp {

// The graph whose preclusion sets are searched: a grid, optionally minus one
// vertex, together with a witness maximum matching of that graph.
struct PreclusionProblem {
  const Grid* grid = nullptr;
  std::vector<EdgeId> universe;
  std::vector<std::uint8_t> removed;  // vertex mask; empty when none
  std::vector<EdgeId> witness;
  // Matching size that certifies a subset is NOT a preclusion set.
  int target = 0;

  // G itself; the witness is the canonical (almost) perfect matching.
  static PreclusionProblem ForGrid(const Grid& grid);
  // G - u for odd-order G and all-even u.
  static PreclusionProblem ForVertexDeleted(const Grid& grid, VertexId u);
};

struct KernelOptions {
  bool prune = true;
  // Stop as soon as one set is found; the result then holds exactly one
  // set, not necessarily the lexicographically first.
  bool stop_at_first = false;
  // 0 uses the OpenMP default.
  int threads = 0;
};

std::vector<FaultSet> EnumerateSerial(const PreclusionProblem& problem, int k,
                                      bool prune);
std::vector<FaultSet> EnumerateParallel(const PreclusionProblem& problem,
                                        int k, const KernelOptions& options);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gridmp

#endif  // GRIDMP_KERNELS_H_
