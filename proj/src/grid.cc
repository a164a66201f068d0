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

#include "gridmp/grid.h"

#include <algorithm>
#include <charconv>
#include <utility>

namespace gridmp {
namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 22;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<int> ParseIntList(std::string_view text, std::string_view what) {
  std::vector<int> out;
  text = Trim(text);
  if (text.empty()) throw GridError("empty " + std::string(what));
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = Trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw GridError("malformed " + std::string(what) + ": '" +
                      std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::vector<int> ParseDims(std::string_view text) {
  return ParseIntList(text, "dims");
}

Coords ParseCoords(std::string_view text) {
  return ParseIntList(text, "vertex");
}

Grid Grid::Build(std::vector<int> dims) {
  if (dims.empty()) throw GridError("grid needs at least one dimension");
  Grid g;
  g.order_ = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 2) {
      throw GridError("dimension " + std::to_string(i) + " is " +
                      std::to_string(dims[i]) + "; every k_i must be >= 2");
    }
    g.order_ *= dims[i];
    if (g.order_ > kMaxOrder) throw GridError("grid order too large");
    if (dims[i] == 2) ++g.n2_;
    if (dims[i] % 2 == 0) ++g.ne_;
  }
  g.dims_ = std::move(dims);
  const int n = g.n();
  g.strides_.assign(n, 1);
  for (int d = n - 2; d >= 0; --d) {
    g.strides_[d] = g.strides_[d + 1] * g.dims_[d + 1];
  }

  g.position_offset_.assign(n + 1, 0);
  for (int d = 0; d < n; ++d) {
    const std::int64_t count = g.order_ / g.dims_[d] * (g.dims_[d] - 1);
    g.position_offset_[d + 1] =
        g.position_offset_[d] + static_cast<EdgeId>(count);
    for (VertexId v = 0; v < g.order_; ++v) {
      if (g.Coord(v, d) + 1 < g.dims_[d]) {
        g.edges_.push_back(
            {v, static_cast<VertexId>(v + g.strides_[d]), d});
      }
    }
  }

  std::vector<std::int64_t> deg(g.order_ + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.lo];
    ++deg[e.hi];
  }
  g.offsets_.assign(g.order_ + 1, 0);
  for (std::int64_t v = 0; v < g.order_; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  }
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges_[e];
    g.adjacency_[fill[ed.lo]++] = {ed.hi, e};
    g.adjacency_[fill[ed.hi]++] = {ed.lo, e};
  }
  return g;
}

bool Grid::Contains(std::span<const int> coords) const {
  if (coords.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= dims_[i]) return false;
  }
  return true;
}

VertexId Grid::Index(std::span<const int> coords) const {
  if (!Contains(coords)) throw GridError("vertex outside grid");
  std::int64_t v = 0;
  for (int d = 0; d < n(); ++d) v += coords[d] * strides_[d];
  return static_cast<VertexId>(v);
}

Coords Grid::CoordsOf(VertexId v) const {
  CheckVertex(v);
  Coords c(n());
  for (int d = 0; d < n(); ++d) c[d] = Coord(v, d);
  return c;
}

void Grid::CheckVertex(VertexId v) const {
  if (v < 0 || v >= order_) {
    throw GridError("vertex id " + std::to_string(v) + " outside grid");
  }
}

const Edge& Grid::edge(EdgeId e) const {
  if (!ValidEdge(e)) {
    throw GridError("unknown edge id " + std::to_string(e));
  }
  return edges_[e];
}

EdgeId Grid::EdgeAt(VertexId lo, int position) const {
  CheckVertex(lo);
  if (position < 0 || position >= n()) throw GridError("position out of range");
  if (Coord(lo, position) + 1 >= dims_[position]) {
    throw GridError("no edge leaves " + FormatVertex(lo) + " upward at " +
                    std::to_string(position));
  }
  // Rank among lo vertices with coordinate `position` < k - 1: mixed radix
  // with that digit's base reduced by one.
  std::int64_t rank = 0;
  for (int d = 0; d < n(); ++d) {
    const int base = d == position ? dims_[d] - 1 : dims_[d];
    rank = rank * base + Coord(lo, d);
  }
  return position_offset_[position] + static_cast<EdgeId>(rank);
}

std::optional<EdgeId> Grid::EdgeBetween(VertexId a, VertexId b) const {
  CheckVertex(a);
  CheckVertex(b);
  for (const Incidence& inc : Neighbors(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

std::vector<EdgeId> Grid::Star(VertexId v) const {
  CheckVertex(v);
  std::vector<EdgeId> out;
  for (const Incidence& inc : Neighbors(v)) out.push_back(inc.edge);
  std::sort(out.begin(), out.end());
  return out;
}

VertexClass Grid::Parity(VertexId v) const {
  CheckVertex(v);
  int sum = 0;
  for (int d = 0; d < n(); ++d) sum += Coord(v, d);
  return sum % 2 == 0 ? VertexClass::kEven : VertexClass::kOdd;
}

bool Grid::AllEven(VertexId v) const {
  CheckVertex(v);
  for (int d = 0; d < n(); ++d) {
    if (Coord(v, d) % 2 != 0) return false;
  }
  return true;
}

VertexId Grid::Shift(VertexId v, int d, int dir) const {
  CheckVertex(v);
  if (d < 0 || d >= n()) throw GridError("position out of range");
  if (dir != 1 && dir != -1) throw GridError("shift direction must be +-1");
  const int c = Coord(v, d) + dir;
  if (c < 0 || c >= dims_[d]) {
    throw GridError("shift of " + FormatVertex(v) + " leaves the grid");
  }
  return static_cast<VertexId>(v + dir * strides_[d]);
}

PartitionView Grid::PartitionAt(int d) const {
  if (d < 0 || d >= n()) throw GridError("position out of range");
  PartitionView view;
  view.position = d;
  view.layers.resize(dims_[d]);
  view.crossings.resize(dims_[d] - 1);
  for (VertexId v = 0; v < order_; ++v) view.layers[Coord(v, d)].push_back(v);
  for (EdgeId e = position_offset_[d]; e < position_offset_[d + 1]; ++e) {
    view.crossings[Coord(edges_[e].lo, d)].push_back(e);
  }
  return view;
}

LayerEmbedding Grid::LayerSubgrid(int d, int j) const {
  if (n() < 2) throw GridError("a 1-grid has no layer sub-grid");
  if (d < 0 || d >= n()) throw GridError("position out of range");
  if (j < 0 || j >= dims_[d]) throw GridError("layer index out of range");
  std::vector<int> sub_dims;
  for (int i = 0; i < n(); ++i) {
    if (i != d) sub_dims.push_back(dims_[i]);
  }
  LayerEmbedding out{Build(sub_dims), {}};
  out.to_parent.resize(out.grid.order());
  Coords c(n());
  for (VertexId s = 0; s < out.grid.order(); ++s) {
    int k = 0;
    for (int i = 0; i < n(); ++i) {
      c[i] = i == d ? j : out.grid.Coord(s, k++);
    }
    out.to_parent[s] = Index(c);
  }
  return out;
}

std::string Grid::FormatDims() const {
  std::string out;
  for (int d = 0; d < n(); ++d) {
    if (d) out += ',';
    out += std::to_string(dims_[d]);
  }
  return out;
}

std::string Grid::FormatVertex(VertexId v) const {
  CheckVertex(v);
  std::string out;
  for (int d = 0; d < n(); ++d) {
    if (d) out += ',';
    out += std::to_string(Coord(v, d));
  }
  return out;
}

std::string Grid::FormatEdge(EdgeId e) const {
  const Edge& ed = edge(e);
  return FormatVertex(ed.lo) + "|" + FormatVertex(ed.hi);
}

VertexId Grid::ParseVertex(std::string_view text) const {
  const Coords c = ParseCoords(text);
  if (!Contains(c)) {
    throw GridError("vertex '" + std::string(text) + "' outside grid " +
                    FormatDims());
  }
  return Index(c);
}

EdgeId Grid::ParseEdge(std::string_view text) const {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw GridError("edge '" + std::string(text) + "' lacks '|'");
  }
  const VertexId a = ParseVertex(text.substr(0, bar));
  const VertexId b = ParseVertex(text.substr(bar + 1));
  const auto e = EdgeBetween(a, b);
  if (!e) throw GridError("'" + std::string(text) + "' is not an edge");
  return *e;
}

}  // namespace gridmp
