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

// n-grid graphs P_{k_0} x ... x P_{k_{n-1}} and their layer structure.
//
// Vertices are numbered row-major (coordinate 0 most significant). Edges are
// stored with hi = lo + e_d and sorted by (position, lo); an edge's rank in
// that order is its EdgeId.

#ifndef GRIDMP_GRID_H_
#define GRIDMP_GRID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridmp {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Coords = std::vector<int>;

// Invalid dimensions, out-of-range vertices/edges or malformed text.
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId lo;
  VertexId hi;
  int position;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

enum class VertexClass { kEven, kOdd };

// Layers G_d[0..k_d-1] and crossing sets E_d^{j,j+1} at one position.
struct PartitionView {
  int position = 0;
  std::vector<std::vector<VertexId>> layers;
  std::vector<std::vector<EdgeId>> crossings;
};

class Grid;

// A layer G_d[j] as a grid in its own right, with its embedding into the
// parent grid (indexed by sub-grid VertexId).
struct LayerEmbedding;

class Grid {
 public:
  // Throws GridError on an empty list, any k_i < 2 or an order too large to
  // materialize.
  static Grid Build(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int n() const { return static_cast<int>(dims_.size()); }
  int dim(int d) const { return dims_[d]; }
  std::int64_t order() const { return order_; }
  bool even_order() const { return order_ % 2 == 0; }
  int n2() const { return n2_; }
  int ne() const { return ne_; }
  int min_degree() const { return n(); }
  int max_degree() const { return 2 * n() - n2_; }

  bool Contains(std::span<const int> coords) const;
  VertexId Index(std::span<const int> coords) const;
  Coords CoordsOf(VertexId v) const;
  int Coord(VertexId v, int d) const {
    return static_cast<int>((v / strides_[d]) % dims_[d]);
  }
  std::int64_t stride(int d) const { return strides_[d]; }

  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;
  // Edge {lo, lo + e_d}; requires coordinate d of lo below k_d - 1.
  EdgeId EdgeAt(VertexId lo, int position) const;
  std::optional<EdgeId> EdgeBetween(VertexId a, VertexId b) const;
  bool ValidEdge(EdgeId e) const { return e >= 0 && e < num_edges(); }
  bool Incident(EdgeId e, VertexId v) const {
    return edges_[e].lo == v || edges_[e].hi == v;
  }

  std::span<const Incidence> Neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int Degree(VertexId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  // Edge ids incident with v, ascending.
  std::vector<EdgeId> Star(VertexId v) const;

  VertexClass Parity(VertexId v) const;
  bool AllEven(VertexId v) const;
  bool IsMinDegree(VertexId v) const { return Degree(v) == min_degree(); }
  bool IsMaxDegree(VertexId v) const { return Degree(v) == max_degree(); }

  // v^+ / v^- along position d; throws GridError when leaving the grid.
  VertexId Shift(VertexId v, int d, int dir) const;

  PartitionView PartitionAt(int d) const;
  LayerEmbedding LayerSubgrid(int d, int j) const;

  std::string FormatDims() const;
  std::string FormatVertex(VertexId v) const;
  std::string FormatEdge(EdgeId e) const;
  VertexId ParseVertex(std::string_view text) const;
  // Accepts either endpoint order.
  EdgeId ParseEdge(std::string_view text) const;

  void CheckVertex(VertexId v) const;

 private:
  Grid() = default;

  std::vector<int> dims_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 0;
  int n2_ = 0;
  int ne_ = 0;
  std::vector<Edge> edges_;
  // First EdgeId of each position, plus a sentinel.
  std::vector<EdgeId> position_offset_;
  std::vector<std::int64_t> offsets_;
  std::vector<Incidence> adjacency_;
};

struct LayerEmbedding {
  Grid grid;
  std::vector<VertexId> to_parent;
};

// "6,3" -> {6, 3}. Throws GridError on malformed input (values are not
// range-checked here; Grid::Build does that).
std::vector<int> ParseDims(std::string_view text);
Coords ParseCoords(std::string_view text);

}  // namespace gridmp

#endif  // GRIDMP_GRID_H_
