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

// Matchings, fault sets and alternating cycles on grid graphs, plus a
// Hopcroft-Karp maximum matching over the coordinate-parity bipartition.

#ifndef GRIDMP_MATCHING_H_
#define GRIDMP_MATCHING_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gridmp/grid.h"

namespace gridmp {

// Sorted, duplicate-free list of edge ids. The tag keeps matchings and fault
// sets from being mixed up.
template <class Tag>
class EdgeSetOf {
 public:
  EdgeSetOf() = default;
  explicit EdgeSetOf(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }
  EdgeSetOf(std::initializer_list<EdgeId> edges)
      : EdgeSetOf(std::vector<EdgeId>(edges)) {}

  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeId e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSetOf&, const EdgeSetOf&) = default;
  friend auto operator<=>(const EdgeSetOf& a, const EdgeSetOf& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  std::vector<EdgeId> edges_;
};

struct MatchingTag {};
struct FaultTag {};
using Matching = EdgeSetOf<MatchingTag>;
using FaultSet = EdgeSetOf<FaultTag>;

// A closed walk v_0 v_1 ... v_{L-1} v_0 over distinct vertices; edges[i]
// joins vertices[i] and vertices[(i + 1) % L].
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  // Throws GridError unless consecutive vertices are adjacent, vertices are
  // distinct and the length is at least 4.
  static Cycle FromVertices(const Grid& grid, std::vector<VertexId> vertices);
  std::size_t length() const { return edges.size(); }
};

// Throws GridError on an unknown edge id.
bool IsMatching(const Grid& grid, std::span<const EdgeId> edges);
std::vector<VertexId> UncoveredVertices(const Grid& grid, const Matching& m);

// Reusable Hopcroft-Karp state for one grid. Left side is V_e.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const Grid& grid);

  // Maximum matching size of the grid with the masked edges and vertices
  // removed (an empty span masks nothing). Edges of `warm_start` that
  // survive the masks seed the search.
  int Solve(std::span<const std::uint8_t> edge_deleted,
            std::span<const std::uint8_t> vertex_removed,
            std::span<const EdgeId> warm_start = {});
  // The matching found by the last Solve.
  Matching Extract() const;

 private:
  bool Bfs();
  bool Dfs(VertexId v);
  bool Usable(EdgeId e, VertexId other) const;

  const Grid* grid_;
  std::vector<VertexId> left_;
  std::vector<VertexId> mate_;
  std::vector<EdgeId> mate_edge_;
  std::vector<int> dist_;
  std::vector<VertexId> queue_;
  std::span<const std::uint8_t> edge_deleted_;
  std::span<const std::uint8_t> vertex_removed_;
};

// Vertex deletion removes the vertices' incident edges and drops them from
// the coverage target.
Matching MaxMatching(const Grid& grid, const FaultSet& deleted = {},
                     std::span<const VertexId> removed = {});
bool HasPerfectMatching(const Grid& grid, const FaultSet& deleted,
                        std::span<const VertexId> removed = {});
bool HasAlmostPerfectMatching(const Grid& grid, const FaultSet& deleted,
                              std::span<const VertexId> removed = {});
// G - F has neither a perfect nor an almost perfect matching.
bool IsMpSet(const Grid& grid, const FaultSet& faults);

// d_F(f): edges of F other than f sharing an endpoint with f.
int FaultDegree(const Grid& grid, const FaultSet& faults, EdgeId f);

// All (f,d,j;4)-cycles through f, ordered by the other position d' and then
// direction (-1 before +1). Each is listed as u, v, v', u' with f = uv,
// u the lower endpoint. Throws GridError for 1-grids.
std::vector<Cycle> F4Cycles(const Grid& grid, EdgeId f);

// True iff the cycle's edges alternate between M and E \ M.
bool IsAlternating(const Cycle& cycle, const Matching& m);

// M xor C. Throws std::invalid_argument unless C is M-alternating.
Matching SymmetricDifference(const Matching& m, const Cycle& cycle);

// C is M-alternating and {} != C cap F subset of M. False whenever F cap M
// is empty.
bool IsNiceCycle(const FaultSet& faults, const Matching& m,
                 const Cycle& cycle);

class NiceCycleError : public std::invalid_argument {
 public:
  NiceCycleError(const std::string& what, int cycle_index)
      : std::invalid_argument(what), cycle_index_(cycle_index) {}
  // Offending cycle, or -1 when the cycles fail to cover F cap M.
  int cycle_index() const { return cycle_index_; }

 private:
  int cycle_index_;
};

// M xor C_1 xor ... xor C_s for pairwise edge-disjoint (F,M)-nice cycles
// covering F cap M. Throws NiceCycleError on any precondition violation.
Matching ApplyNiceCycles(const Matching& m, std::span<const Cycle> cycles,
                         const FaultSet& faults);

enum class FaultEdgeKind { kNiceFault, kBadFault };

struct FaultEdgeVerdict {
  FaultEdgeKind kind;
  std::optional<Cycle> witness;
  int length_limit;
};

// Shortest (F,M)-nice cycle through f of length <= max_length, by iterative
// deepening. f must lie in M.
std::optional<Cycle> FindNiceCycle(const Grid& grid, const FaultSet& faults,
                                   const Matching& m, EdgeId f,
                                   int max_length);

inline constexpr int kDefaultCycleLimit = 8;

// Throws std::invalid_argument unless f is in F cap M.
FaultEdgeVerdict ClassifyFaultEdge(const Grid& grid, const FaultSet& faults,
                                   const Matching& m, EdgeId f,
                                   int max_length = kDefaultCycleLimit);

}  // namespace gridmp

#endif  // GRIDMP_MATCHING_H_
