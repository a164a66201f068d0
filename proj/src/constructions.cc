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

#include "gridmp/constructions.h"

#include <string>
#include <vector>

namespace gridmp {
namespace {

// An axis-aligned sub-grid [lo_d, hi_d] per position. Layers and the two
// sides of a cut crossing set are boxes; "even" always means even relative
// to lo.
struct Box {
  std::vector<int> lo;
  std::vector<int> hi;

  static Box Whole(const Grid& g) {
    Box b;
    b.lo.assign(g.n(), 0);
    for (int d = 0; d < g.n(); ++d) b.hi.push_back(g.dim(d) - 1);
    return b;
  }
  int extent(int d) const { return hi[d] - lo[d] + 1; }
  Box Fix(int d, int value) const {
    Box b = *this;
    b.lo[d] = b.hi[d] = value;
    return b;
  }
  Box Slice(int d, int from, int to) const {
    Box b = *this;
    b.lo[d] = from;
    b.hi[d] = to;
    return b;
  }
  bool Holds(const Grid& g, VertexId v) const {
    for (std::size_t d = 0; d < lo.size(); ++d) {
      const int c = g.Coord(v, static_cast<int>(d));
      if (c < lo[d] || c > hi[d]) return false;
    }
    return true;
  }
};

int Rel(const Grid& g, const Box& box, VertexId v, int d) {
  return g.Coord(v, d) - box.lo[d];
}

template <class Fn>
void ForEachVertex(const Grid& g, const Box& box, Fn&& fn) {
  Coords c = box.lo;
  while (true) {
    fn(g.Index(c));
    int d = g.n() - 1;
    while (d >= 0 && c[d] == box.hi[d]) {
      c[d] = box.lo[d];
      --d;
    }
    if (d < 0) return;
    ++c[d];
  }
}

// E_d^{j,j+1} restricted to the box, j relative to lo_d.
void AddCrossing(const Grid& g, const Box& box, int d, int j,
                 std::vector<EdgeId>& out) {
  ForEachVertex(g, box.Fix(d, box.lo[d] + j),
                [&](VertexId x) { out.push_back(g.EdgeAt(x, d)); });
}

void PmIn(const Grid& g, const Box& box, std::vector<EdgeId>& out) {
  for (int d = 0; d < g.n(); ++d) {
    if (box.extent(d) % 2 != 0) continue;
    for (int j = 0; j + 1 < box.extent(d); j += 2) AddCrossing(g, box, d, j, out);
    return;
  }
}

void ApmAllEvenIn(const Grid& g, const Box& box, VertexId u,
                  std::vector<EdgeId>& out) {
  int d = 0;
  while (d < g.n() && box.extent(d) == 1) ++d;
  if (d == g.n()) return;
  const int ud = Rel(g, box, u, d);
  for (int j = 0; j + 1 < ud; j += 2) AddCrossing(g, box, d, j, out);
  ApmAllEvenIn(g, box.Fix(d, g.Coord(u, d)), u, out);
  for (int j = ud + 1; j + 1 < box.extent(d); j += 2) {
    AddCrossing(g, box, d, j, out);
  }
}

// Crossing sets 0-1, 2-3, ... at d, skipping the three layers centred on
// the odd relative coordinate c.
void AddCrossingsAround(const Grid& g, const Box& box, int d, int c,
                        std::vector<EdgeId>& out) {
  for (int j = 0; j + 2 <= c - 1; j += 2) AddCrossing(g, box, d, j, out);
  for (int j = c + 2; j + 1 < box.extent(d); j += 2) {
    AddCrossing(g, box, d, j, out);
  }
}

void ApmEvenSumIn(const Grid& g, const Box& box, VertexId u,
                  std::vector<EdgeId>& out) {
  std::vector<int> odd;
  for (int d = 0; d < g.n() && odd.size() < 2; ++d) {
    if (Rel(g, box, u, d) % 2 != 0) odd.push_back(d);
  }
  if (odd.empty()) {
    ApmAllEvenIn(g, box, u, out);
    return;
  }
  const int a = odd[0];
  const int b = odd[1];
  const int ua = g.Coord(u, a);
  const int ub = g.Coord(u, b);

  AddCrossingsAround(g, box, a, ua - box.lo[a], out);
  const Box h = box.Fix(a, ua);
  AddCrossingsAround(g, h, b, ub - h.lo[b], out);
  ApmEvenSumIn(g, h.Fix(b, ub), u, out);

  // Companions v, w next to u at position b; every other free coordinate
  // sits at the box's low corner.
  Coords vc = g.CoordsOf(u);
  for (int d = 0; d < g.n(); ++d) {
    if (d != a && d != b) vc[d] = box.lo[d];
  }
  Coords wc = vc;
  vc[b] = ub - 1;
  wc[b] = ub + 1;
  const VertexId v = g.Index(vc);
  const VertexId w = g.Index(wc);
  ApmAllEvenIn(g, h.Fix(b, ub - 1), v, out);
  ApmAllEvenIn(g, h.Fix(b, ub + 1), w, out);

  const VertexId v_minus = g.Shift(v, a, -1);
  const VertexId w_plus = g.Shift(w, a, +1);
  ApmAllEvenIn(g, box.Fix(a, ua - 1), v_minus, out);
  ApmAllEvenIn(g, box.Fix(a, ua + 1), w_plus, out);
  out.push_back(g.EdgeAt(v_minus, a));
  out.push_back(g.EdgeAt(w, a));
}

bool EdgeInBox(const Grid& g, const Box& box, EdgeId e) {
  const Edge& ed = g.edges()[e];
  return box.Holds(g, ed.lo) && box.Holds(g, ed.hi);
}

bool PmMinusVertexIn(const Grid& g, const Box& box, VertexId u,
                     const FaultSet& faults, std::vector<EdgeId>& out) {
  int d = -1;
  for (EdgeId e : faults) {
    if (EdgeInBox(g, box, e)) {
      d = g.edges()[e].position;
      break;
    }
  }
  if (d < 0) {
    ApmAllEvenIn(g, box, u, out);
    return true;
  }

  // Lexicographically first transversal path at position d, all other
  // coordinates even, that avoids F.
  std::vector<int> others;
  for (int s = 0; s < g.n(); ++s) {
    if (s != d && box.extent(s) > 1) others.push_back(s);
  }
  Coords x = box.lo;
  const int k = box.extent(d);
  std::vector<VertexId> path;
  bool found = false;
  while (!found) {
    path.clear();
    bool clean = true;
    for (int j = 0; j < k; ++j) {
      x[d] = box.lo[d] + j;
      path.push_back(g.Index(x));
      if (j > 0 && faults.contains(g.EdgeAt(path[j - 1], d))) clean = false;
    }
    if (clean) {
      found = true;
      break;
    }
    int i = static_cast<int>(others.size()) - 1;
    while (i >= 0 && x[others[i]] + 2 > box.hi[others[i]]) {
      x[others[i]] = box.lo[others[i]];
      --i;
    }
    if (i < 0) break;
    x[others[i]] += 2;
  }
  if (!found) return false;

  const int ud = Rel(g, box, u, d);
  for (int j = 0; j < k; ++j) {
    const VertexId hole = j == ud ? u : path[j];
    if (!PmMinusVertexIn(g, box.Fix(d, box.lo[d] + j), hole, faults, out)) {
      return false;
    }
  }
  for (int j = 0; j + 1 < ud; j += 2) out.push_back(g.EdgeAt(path[j], d));
  for (int j = ud + 1; j + 1 < k; j += 2) out.push_back(g.EdgeAt(path[j], d));
  return true;
}

void RequireOddOrder(const Grid& g) {
  if (g.even_order()) {
    throw ConstructionError("grid " + g.FormatDims() + " has even order");
  }
}

}  // namespace

Matching CanonicalPm(const Grid& grid, int d) {
  if (d < 0 || d >= grid.n()) throw ConstructionError("position out of range");
  if (grid.dim(d) % 2 != 0) {
    throw ConstructionError("k_" + std::to_string(d) + " = " +
                            std::to_string(grid.dim(d)) + " is odd");
  }
  std::vector<EdgeId> out;
  const Box box = Box::Whole(grid);
  for (int j = 0; j + 1 < grid.dim(d); j += 2) AddCrossing(grid, box, d, j, out);
  return Matching(std::move(out));
}

Matching DefaultPm(const Grid& grid) {
  for (int d = 0; d < grid.n(); ++d) {
    if (grid.dim(d) % 2 == 0) return CanonicalPm(grid, d);
  }
  throw ConstructionError("grid " + grid.FormatDims() + " has odd order");
}

Matching ApmAllEven(const Grid& grid, VertexId u) {
  RequireOddOrder(grid);
  if (!grid.AllEven(u)) {
    throw ConstructionError("vertex " + grid.FormatVertex(u) +
                            " is not all-even");
  }
  std::vector<EdgeId> out;
  ApmAllEvenIn(grid, Box::Whole(grid), u, out);
  return Matching(std::move(out));
}

Matching ApmEvenSum(const Grid& grid, VertexId u) {
  RequireOddOrder(grid);
  if (grid.Parity(u) != VertexClass::kEven) {
    throw ConstructionError("vertex " + grid.FormatVertex(u) +
                            " has odd coordinate sum");
  }
  std::vector<EdgeId> out;
  ApmEvenSumIn(grid, Box::Whole(grid), u, out);
  return Matching(std::move(out));
}

EdgeAvoidingApm ApmAvoidingEdge(const Grid& grid, EdgeId f) {
  RequireOddOrder(grid);
  if (!grid.ValidEdge(f)) {
    throw ConstructionError("edge id " + std::to_string(f) + " not in grid");
  }
  const Edge& fe = grid.edge(f);
  const int d = fe.position;
  const int j = grid.Coord(fe.lo, d);
  const Box whole = Box::Whole(grid);
  const Box low = whole.Slice(d, 0, j);
  const Box high = whole.Slice(d, j + 1, grid.dim(d) - 1);
  const Box& odd_side = low.extent(d) % 2 != 0 ? low : high;
  const Box& even_side = low.extent(d) % 2 != 0 ? high : low;
  const VertexId corner = grid.Index(odd_side.lo);
  std::vector<EdgeId> out;
  PmIn(grid, even_side, out);
  ApmAllEvenIn(grid, odd_side, corner, out);
  return {Matching(std::move(out)), corner};
}

std::optional<Matching> PmOfVertexDeleted(const Grid& grid, VertexId u,
                                          const FaultSet& faults) {
  RequireOddOrder(grid);
  grid.CheckVertex(u);
  if (!grid.AllEven(u)) {
    throw ConstructionError("vertex " + grid.FormatVertex(u) +
                            " is not all-even");
  }
  std::vector<EdgeId> kept;
  for (EdgeId e : faults) {
    if (!grid.ValidEdge(e)) {
      throw ConstructionError("edge id " + std::to_string(e) + " not in grid");
    }
    if (!grid.Incident(e, u)) kept.push_back(e);
  }
  if (static_cast<int>(kept.size()) > grid.n() - 1) {
    throw ConstructionError("|F| = " + std::to_string(kept.size()) +
                            " exceeds n - 1 = " + std::to_string(grid.n() - 1));
  }
  const FaultSet f(std::move(kept));
  std::vector<EdgeId> out;
  if (!PmMinusVertexIn(grid, Box::Whole(grid), u, f, out)) return std::nullopt;
  return Matching(std::move(out));
}

}  // namespace gridmp
