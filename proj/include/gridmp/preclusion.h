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

// Matching preclusion numbers by exhaustive search, classification of the
// optimal sets, and the comparison against the closed-form predictions:
//
//   mp(G) = n      for even order, every optimal set a vertex star when
//                  n >= 3, stars or the 2-grid "ladder rung" pairs when n = 2;
//   mp(G) = n + 1  for odd order, optimal sets exactly the stars of odd-sum
//                  vertices of degree n + 1 when n >= 2.

#ifndef GRIDMP_PRECLUSION_H_
#define GRIDMP_PRECLUSION_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridmp/grid.h"
#include "gridmp/matching.h"

namespace gridmp {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// The search stopped before finding a preclusion set; mp >= lower_bound().
class SearchIncomplete : public std::runtime_error {
 public:
  SearchIncomplete(const std::string& what, int lower_bound)
      : std::runtime_error(what), lower_bound_(lower_bound) {}
  int lower_bound() const { return lower_bound_; }

 private:
  int lower_bound_;
};

// C(|E|, k) exceeded the subset budget.
class BudgetExceeded : public SearchIncomplete {
 public:
  using SearchIncomplete::SearchIncomplete;
};

// The caller's size limit was reached.
class LimitReached : public SearchIncomplete {
 public:
  using SearchIncomplete::SearchIncomplete;
};

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  // Largest set size tried; defaults to predicted mp + 1.
  std::optional<int> limit;
  bool prune = true;
  int threads = 0;
};

int PredictedMp(const Grid& grid);

int BruteForceMp(const Grid& grid, const SearchOptions& options = {});

// All preclusion sets of size mp(G), lexicographic over edge ids.
std::vector<FaultSet> EnumerateOptimalSets(const Grid& grid,
                                           const SearchOptions& options = {});

struct SetClass {
  enum class Kind { kTrivialAtVertex, kSpecialTwoGrid, kOther };
  Kind kind = Kind::kOther;
  VertexId vertex = -1;  // kTrivialAtVertex
  int u0 = -1;           // kSpecialTwoGrid
  int axis = -1;         // kSpecialTwoGrid: position of the even dimension

  friend bool operator==(const SetClass&, const SetClass&) = default;
};

// Throws std::invalid_argument if F is not a preclusion set. Optimality is
// the caller's responsibility.
SetClass ClassifySet(const Grid& grid, const FaultSet& faults);

// For a 2-grid with one even dimension k_e and the other equal to 3: the
// pairs {(u0,0)(u0+1,0), (u0,2)(u0+1,2)} along the even axis, u0 even.
// Empty for every other grid.
std::vector<FaultSet> SpecialTwoGridPatterns(const Grid& grid);

struct MpResult {
  std::vector<int> dims;
  int mp = 0;
  int predicted_mp = 0;
  std::vector<FaultSet> optimal_sets;
  std::vector<SetClass> classifications;
  bool super_matched = false;
  bool prediction_match = false;
  // Human-readable reasons when prediction_match is false.
  std::vector<std::string> mismatches;
};

MpResult VerifyGrid(const Grid& grid, const SearchOptions& options = {});

// mp(G - u) = n: every |F| <= n - 1 leaves a perfect matching of (G - u) - F
// and some |F| = n does not. Requires odd order and u all-even.
bool VerifyVertexDeletedMp(const Grid& grid, VertexId u,
                           const SearchOptions& options = {});

struct SweepEntry {
  std::vector<int> dims;
  std::optional<MpResult> result;
  std::string error;
  bool budget_exceeded = false;
};

// VerifyGrid over the family, grids in parallel; output order follows the
// input. Failures are recorded per entry.
std::vector<SweepEntry> Sweep(std::span<const std::vector<int>> family,
                              const SearchOptions& options = {});

// One dims string per line; '#' starts a comment; blank lines ignored.
std::vector<std::vector<int>> ParseFamily(std::istream& in);

// Sizes of the connected components of G - F, ascending.
std::vector<std::int64_t> ComponentSizes(const Grid& grid,
                                         const FaultSet& faults);

}  // namespace gridmp

#endif  // GRIDMP_PRECLUSION_H_
