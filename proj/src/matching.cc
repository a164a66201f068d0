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

#include "gridmp/matching.h"

#include <limits>
#include <string>

namespace gridmp {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();
constexpr VertexId kNone = -1;

std::vector<std::uint8_t> EdgeMask(const Grid& grid, const FaultSet& set) {
  std::vector<std::uint8_t> mask(grid.num_edges(), 0);
  for (EdgeId e : set) {
    grid.edge(e);
    mask[e] = 1;
  }
  return mask;
}

std::vector<std::uint8_t> VertexMask(const Grid& grid,
                                     std::span<const VertexId> removed) {
  std::vector<std::uint8_t> mask;
  if (removed.empty()) return mask;
  mask.assign(grid.order(), 0);
  for (VertexId v : removed) {
    grid.CheckVertex(v);
    mask[v] = 1;
  }
  return mask;
}

std::int64_t RemainingOrder(const Grid& grid,
                            std::span<const VertexId> removed) {
  std::vector<VertexId> r(removed.begin(), removed.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return grid.order() - static_cast<std::int64_t>(r.size());
}

}  // namespace

Cycle Cycle::FromVertices(const Grid& grid, std::vector<VertexId> vertices) {
  if (vertices.size() < 4) throw GridError("cycle needs at least 4 vertices");
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GridError("cycle repeats a vertex");
  }
  Cycle c;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto e =
        grid.EdgeBetween(vertices[i], vertices[(i + 1) % vertices.size()]);
    if (!e) throw GridError("cycle vertices are not consecutive neighbours");
    c.edges.push_back(*e);
  }
  c.vertices = std::move(vertices);
  return c;
}

bool IsMatching(const Grid& grid, std::span<const EdgeId> edges) {
  std::vector<std::uint8_t> seen(grid.order(), 0);
  for (EdgeId e : edges) {
    const Edge& ed = grid.edge(e);
    if (seen[ed.lo] || seen[ed.hi]) return false;
    seen[ed.lo] = seen[ed.hi] = 1;
  }
  return true;
}

std::vector<VertexId> UncoveredVertices(const Grid& grid, const Matching& m) {
  std::vector<std::uint8_t> covered(grid.order(), 0);
  for (EdgeId e : m) {
    const Edge& ed = grid.edge(e);
    covered[ed.lo] = covered[ed.hi] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < grid.order(); ++v) {
    if (!covered[v]) out.push_back(v);
  }
  return out;
}

BipartiteMatcher::BipartiteMatcher(const Grid& grid)
    : grid_(&grid),
      mate_(grid.order(), kNone),
      mate_edge_(grid.order(), kNone),
      dist_(grid.order(), kInf) {
  for (VertexId v = 0; v < grid.order(); ++v) {
    if (grid.Parity(v) == VertexClass::kEven) left_.push_back(v);
  }
  queue_.reserve(grid.order());
}

bool BipartiteMatcher::Usable(EdgeId e, VertexId other) const {
  if (!edge_deleted_.empty() && edge_deleted_[e]) return false;
  if (!vertex_removed_.empty() && vertex_removed_[other]) return false;
  return true;
}

int BipartiteMatcher::Solve(std::span<const std::uint8_t> edge_deleted,
                            std::span<const std::uint8_t> vertex_removed,
                            std::span<const EdgeId> warm_start) {
  edge_deleted_ = edge_deleted;
  vertex_removed_ = vertex_removed;
  std::fill(mate_.begin(), mate_.end(), kNone);
  std::fill(mate_edge_.begin(), mate_edge_.end(), kNone);
  int size = 0;
  for (EdgeId e : warm_start) {
    const Edge& ed = grid_->edges()[e];
    if (!Usable(e, ed.lo) || !Usable(e, ed.hi)) continue;
    if (mate_[ed.lo] != kNone || mate_[ed.hi] != kNone) continue;
    mate_[ed.lo] = ed.hi;
    mate_[ed.hi] = ed.lo;
    mate_edge_[ed.lo] = mate_edge_[ed.hi] = e;
    ++size;
  }
  while (Bfs()) {
    for (VertexId v : left_) {
      if (mate_[v] == kNone && (vertex_removed_.empty() ||
                                !vertex_removed_[v])) {
        if (Dfs(v)) ++size;
      }
    }
  }
  return size;
}

// Layers free left vertices at distance 0; dist_ of a left vertex is its
// alternating-path depth. Returns true if some free right vertex is reached.
bool BipartiteMatcher::Bfs() {
  queue_.clear();
  for (VertexId v : left_) {
    if (!vertex_removed_.empty() && vertex_removed_[v]) {
      dist_[v] = kInf;
    } else if (mate_[v] == kNone) {
      dist_[v] = 0;
      queue_.push_back(v);
    } else {
      dist_[v] = kInf;
    }
  }
  bool found = false;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId v = queue_[head];
    for (const Incidence& inc : grid_->Neighbors(v)) {
      if (!Usable(inc.edge, inc.neighbor)) continue;
      const VertexId w = mate_[inc.neighbor];
      if (w == kNone) {
        found = true;
      } else if (dist_[w] == kInf) {
        dist_[w] = dist_[v] + 1;
        queue_.push_back(w);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::Dfs(VertexId v) {
  for (const Incidence& inc : grid_->Neighbors(v)) {
    if (!Usable(inc.edge, inc.neighbor)) continue;
    const VertexId w = mate_[inc.neighbor];
    if (w == kNone || (dist_[w] == dist_[v] + 1 && Dfs(w))) {
      mate_[v] = inc.neighbor;
      mate_[inc.neighbor] = v;
      mate_edge_[v] = mate_edge_[inc.neighbor] = inc.edge;
      return true;
    }
  }
  dist_[v] = kInf;
  return false;
}

Matching BipartiteMatcher::Extract() const {
  std::vector<EdgeId> out;
  for (VertexId v : left_) {
    if (mate_[v] != kNone) out.push_back(mate_edge_[v]);
  }
  return Matching(std::move(out));
}

Matching MaxMatching(const Grid& grid, const FaultSet& deleted,
                     std::span<const VertexId> removed) {
  const auto edge_mask = EdgeMask(grid, deleted);
  const auto vertex_mask = VertexMask(grid, removed);
  BipartiteMatcher matcher(grid);
  matcher.Solve(edge_mask, vertex_mask);
  return matcher.Extract();
}

bool HasPerfectMatching(const Grid& grid, const FaultSet& deleted,
                        std::span<const VertexId> removed) {
  const std::int64_t target = RemainingOrder(grid, removed);
  return 2 * static_cast<std::int64_t>(
                 MaxMatching(grid, deleted, removed).size()) == target;
}

bool HasAlmostPerfectMatching(const Grid& grid, const FaultSet& deleted,
                              std::span<const VertexId> removed) {
  const std::int64_t target = RemainingOrder(grid, removed) - 1;
  return 2 * static_cast<std::int64_t>(
                 MaxMatching(grid, deleted, removed).size()) == target;
}

bool IsMpSet(const Grid& grid, const FaultSet& faults) {
  const auto size =
      static_cast<std::int64_t>(MaxMatching(grid, faults).size());
  return 2 * size < grid.order() - 1;
}

int FaultDegree(const Grid& grid, const FaultSet& faults, EdgeId f) {
  const Edge& fe = grid.edge(f);
  int count = 0;
  for (EdgeId g : faults) {
    if (g == f) continue;
    if (grid.Incident(g, fe.lo) || grid.Incident(g, fe.hi)) ++count;
  }
  return count;
}

std::vector<Cycle> F4Cycles(const Grid& grid, EdgeId f) {
  if (grid.n() < 2) throw GridError("a 1-grid has no 4-cycles");
  const Edge& fe = grid.edge(f);
  std::vector<Cycle> out;
  for (int d = 0; d < grid.n(); ++d) {
    if (d == fe.position) continue;
    for (int dir : {-1, 1}) {
      const int c = grid.Coord(fe.lo, d) + dir;
      if (c < 0 || c >= grid.dim(d)) continue;
      const VertexId u2 = grid.Shift(fe.lo, d, dir);
      const VertexId v2 = grid.Shift(fe.hi, d, dir);
      Cycle cycle;
      cycle.vertices = {fe.lo, fe.hi, v2, u2};
      cycle.edges = {f, *grid.EdgeBetween(fe.hi, v2),
                     *grid.EdgeBetween(v2, u2), *grid.EdgeBetween(u2, fe.lo)};
      out.push_back(std::move(cycle));
    }
  }
  return out;
}

bool IsAlternating(const Cycle& cycle, const Matching& m) {
  const std::size_t len = cycle.edges.size();
  if (len < 4 || len % 2 != 0) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (m.contains(cycle.edges[i]) == m.contains(cycle.edges[(i + 1) % len])) {
      return false;
    }
  }
  return true;
}

Matching SymmetricDifference(const Matching& m, const Cycle& cycle) {
  if (!IsAlternating(cycle, m)) {
    throw std::invalid_argument("cycle is not M-alternating");
  }
  std::vector<EdgeId> c = cycle.edges;
  std::sort(c.begin(), c.end());
  std::vector<EdgeId> out;
  std::set_symmetric_difference(m.begin(), m.end(), c.begin(), c.end(),
                                std::back_inserter(out));
  return Matching(std::move(out));
}

bool IsNiceCycle(const FaultSet& faults, const Matching& m,
                 const Cycle& cycle) {
  const bool faults_meet_m = std::any_of(
      faults.begin(), faults.end(), [&](EdgeId e) { return m.contains(e); });
  if (!faults_meet_m || !IsAlternating(cycle, m)) return false;
  bool hits = false;
  for (EdgeId e : cycle.edges) {
    if (!faults.contains(e)) continue;
    if (!m.contains(e)) return false;
    hits = true;
  }
  return hits;
}

Matching ApplyNiceCycles(const Matching& m, std::span<const Cycle> cycles,
                         const FaultSet& faults) {
  std::vector<EdgeId> used;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!IsNiceCycle(faults, m, cycles[i])) {
      throw NiceCycleError("cycle " + std::to_string(i) + " is not nice",
                           idx);
    }
    for (EdgeId e : cycles[i].edges) {
      if (std::find(used.begin(), used.end(), e) != used.end()) {
        throw NiceCycleError(
            "cycle " + std::to_string(i) + " shares an edge with an earlier one",
            idx);
      }
    }
    used.insert(used.end(), cycles[i].edges.begin(), cycles[i].edges.end());
  }
  for (EdgeId e : faults) {
    if (m.contains(e) && std::find(used.begin(), used.end(), e) == used.end()) {
      throw NiceCycleError("fault edge in M not covered by any cycle", -1);
    }
  }
  Matching out = m;
  for (const Cycle& c : cycles) out = SymmetricDifference(out, c);
  return out;
}

namespace {

// Depth-first extension of an alternating path a=f.lo ... x ending with an
// M-edge, closing with a good non-M edge back into the start.
class NiceCycleSearch {
 public:
  NiceCycleSearch(const Grid& grid, const FaultSet& faults, const Matching& m)
      : grid_(grid), faults_(faults), m_(m), on_path_(grid.order(), 0),
        mate_(grid.order(), kNone), mate_edge_(grid.order(), kNone) {
    for (EdgeId e : m) {
      const Edge& ed = grid.edge(e);
      mate_[ed.lo] = ed.hi;
      mate_[ed.hi] = ed.lo;
      mate_edge_[ed.lo] = mate_edge_[ed.hi] = e;
    }
  }

  std::optional<Cycle> Find(EdgeId f, int exact_length) {
    const Edge& fe = grid_.edge(f);
    start_ = fe.lo;
    target_length_ = exact_length;
    path_ = {fe.lo, fe.hi};
    edges_ = {f};
    on_path_[fe.lo] = on_path_[fe.hi] = 1;
    const bool ok = Extend(fe.hi);
    on_path_[fe.lo] = on_path_[fe.hi] = 0;
    for (VertexId v : path_) on_path_[v] = 0;
    if (!ok) return std::nullopt;
    return Cycle{path_, edges_};
  }

 private:
  bool Good(EdgeId e) const { return !faults_.contains(e) && !m_.contains(e); }

  bool Extend(VertexId x) {
    const int len = static_cast<int>(edges_.size());
    for (const Incidence& inc : grid_.Neighbors(x)) {
      if (!Good(inc.edge)) continue;
      const VertexId y = inc.neighbor;
      if (y == start_) {
        if (len + 1 == target_length_) {
          edges_.push_back(inc.edge);
          return true;
        }
        continue;
      }
      if (on_path_[y] || len + 3 > target_length_) continue;
      const VertexId z = mate_[y];
      if (z == kNone || on_path_[z]) continue;
      path_.push_back(y);
      path_.push_back(z);
      edges_.push_back(inc.edge);
      edges_.push_back(mate_edge_[y]);
      on_path_[y] = on_path_[z] = 1;
      if (Extend(z)) return true;
      on_path_[y] = on_path_[z] = 0;
      path_.resize(path_.size() - 2);
      edges_.resize(edges_.size() - 2);
    }
    return false;
  }

  const Grid& grid_;
  const FaultSet& faults_;
  const Matching& m_;
  std::vector<std::uint8_t> on_path_;
  std::vector<VertexId> mate_;
  std::vector<EdgeId> mate_edge_;
  VertexId start_ = kNone;
  int target_length_ = 0;
  std::vector<VertexId> path_;
  std::vector<EdgeId> edges_;
};

}  // namespace

std::optional<Cycle> FindNiceCycle(const Grid& grid, const FaultSet& faults,
                                   const Matching& m, EdgeId f,
                                   int max_length) {
  if (!m.contains(f)) throw std::invalid_argument("edge not in the matching");
  NiceCycleSearch search(grid, faults, m);
  for (int len = 4; len <= max_length; len += 2) {
    if (auto c = search.Find(f, len)) return c;
  }
  return std::nullopt;
}

FaultEdgeVerdict ClassifyFaultEdge(const Grid& grid, const FaultSet& faults,
                                   const Matching& m, EdgeId f,
                                   int max_length) {
  if (!faults.contains(f) || !m.contains(f)) {
    throw std::invalid_argument("edge " + grid.FormatEdge(f) +
                                " is not in F cap M");
  }
  auto witness = FindNiceCycle(grid, faults, m, f, max_length);
  const FaultEdgeKind kind =
      witness ? FaultEdgeKind::kNiceFault : FaultEdgeKind::kBadFault;
  return {kind, std::move(witness), max_length};
}

}  // namespace gridmp
