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
#include <cstdlib>
#include <set>

#include "gtest/gtest.h"
#include "test_util.h"

namespace gridmp {
namespace {

using testing_util::AllGrids;

// Adjacent pairs by comparing every pair of coordinate tuples.
int BruteEdgeCount(const Grid& g) {
  int count = 0;
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b = a + 1; b < g.order(); ++b) {
      int diff = 0, total = 0;
      for (int d = 0; d < g.n(); ++d) {
        const int delta = std::abs(g.Coord(a, d) - g.Coord(b, d));
        total += delta;
        if (delta) ++diff;
      }
      if (diff == 1 && total == 1) ++count;
    }
  }
  return count;
}

TEST(BuildGrid, DerivedStatistics) {
  const Grid cube = Grid::Build({2, 2, 2});
  EXPECT_EQ(cube.n(), 3);
  EXPECT_EQ(cube.order(), 8);
  EXPECT_EQ(cube.n2(), 3);
  EXPECT_EQ(cube.ne(), 3);

  const Grid g = Grid::Build({6, 3});
  EXPECT_EQ(g.n(), 2);
  EXPECT_EQ(g.order(), 18);
  EXPECT_EQ(g.ne(), 1);
  EXPECT_EQ(g.n2(), 0);
}

TEST(BuildGrid, RejectsBadDims) {
  EXPECT_THROW(Grid::Build({3, 1}), GridError);
  EXPECT_THROW(Grid::Build({}), GridError);
  EXPECT_THROW(Grid::Build({0, 3}), GridError);
  EXPECT_THROW(Grid::Build({4096, 4096}), GridError);
}

TEST(Edges, ExampleCounts) {
  EXPECT_EQ(Grid::Build({2, 2}).num_edges(), 4);
  // 2*3 + 3*2, cross-checked by pair enumeration below.
  EXPECT_EQ(Grid::Build({3, 3}).num_edges(), 12);
  EXPECT_EQ(Grid::Build({6, 3}).num_edges(), 27);
}

TEST(Edges, FormulaAndPairEnumerationAgree) {
  for (const auto& dims : AllGrids(3, 64)) {
    const Grid g = Grid::Build(dims);
    std::int64_t formula = 0;
    for (int d = 0; d < g.n(); ++d) {
      formula += (g.dim(d) - 1) * (g.order() / g.dim(d));
    }
    ASSERT_EQ(g.num_edges(), formula) << g.FormatDims();
    ASSERT_EQ(g.num_edges(), BruteEdgeCount(g)) << g.FormatDims();
  }
}

TEST(Edges, CanonicalOrientationAndOrder) {
  const Grid g = Grid::Build({3, 4, 2});
  EXPECT_TRUE(std::is_sorted(g.edges().begin(), g.edges().end(),
                             [](const Edge& a, const Edge& b) {
                               return std::tie(a.position, a.lo) <
                                      std::tie(b.position, b.lo);
                             }));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    EXPECT_EQ(g.Coord(ed.hi, ed.position), g.Coord(ed.lo, ed.position) + 1);
    EXPECT_EQ(g.EdgeAt(ed.lo, ed.position), e);
    EXPECT_EQ(g.ParseEdge(g.FormatEdge(e)), e);
  }
}

TEST(Degree, Examples) {
  const Grid g = Grid::Build({3, 3});
  EXPECT_EQ(g.Degree(g.ParseVertex("0,0")), 2);
  EXPECT_EQ(g.Degree(g.ParseVertex("1,1")), 4);
  EXPECT_EQ(g.max_degree(), 4);
  const Grid h = Grid::Build({2, 3, 3});
  EXPECT_EQ(h.Degree(h.ParseVertex("0,1,1")), 5);
  EXPECT_EQ(h.max_degree(), 5);
}

TEST(Degree, HandshakeAndClassSizes) {
  for (const auto& dims : AllGrids(4, 200)) {
    const Grid g = Grid::Build(dims);
    std::int64_t sum = 0;
    int min_deg = 0, max_deg = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      const int deg = g.Degree(v);
      int interior = 0;
      for (int d = 0; d < g.n(); ++d) {
        if (g.Coord(v, d) > 0 && g.Coord(v, d) < g.dim(d) - 1) ++interior;
      }
      ASSERT_EQ(deg, g.n() + interior);
      sum += deg;
      if (g.IsMinDegree(v)) ++min_deg;
      if (g.IsMaxDegree(v)) ++max_deg;
    }
    ASSERT_EQ(sum, 2 * g.num_edges()) << g.FormatDims();
    ASSERT_EQ(min_deg, 1 << g.n()) << g.FormatDims();
    std::int64_t expected = 1;
    for (int k : g.dims()) expected *= k >= 3 ? k - 2 : 2;
    ASSERT_EQ(max_deg, expected) << g.FormatDims();
  }
}

TEST(VertexClass, Examples) {
  const Grid g = Grid::Build({3, 3});
  EXPECT_EQ(g.Parity(g.ParseVertex("1,2")), VertexClass::kOdd);
  const VertexId v = g.ParseVertex("2,0");
  EXPECT_EQ(g.Parity(v), VertexClass::kEven);
  EXPECT_TRUE(g.AllEven(v));
  EXPECT_FALSE(g.AllEven(g.ParseVertex("1,1")));

  const Grid c = Grid::Build({3, 3, 3});
  int min_count = 0;
  for (VertexId u = 0; u < c.order(); ++u) min_count += c.IsMinDegree(u);
  EXPECT_EQ(min_count, 8);
}

TEST(VertexClass, ParityIsProperTwoColouring) {
  for (const auto& dims : AllGrids(4, 200)) {
    const Grid g = Grid::Build(dims);
    for (const Edge& e : g.edges()) {
      ASSERT_NE(g.Parity(e.lo), g.Parity(e.hi)) << g.FormatDims();
    }
  }
}

TEST(VertexClass, OddOrderBipartitionCounts) {
  for (const auto& dims : AllGrids(4, 200)) {
    const Grid g = Grid::Build(dims);
    if (g.even_order()) continue;
    std::int64_t even = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.Parity(v) == VertexClass::kEven) ++even;
      if (g.AllEven(v)) ASSERT_EQ(g.Parity(v), VertexClass::kEven);
    }
    ASSERT_EQ(even, g.order() - even + 1) << g.FormatDims();
  }
}

TEST(PartitionAt, Examples) {
  const Grid g = Grid::Build({6, 3});
  const PartitionView p = g.PartitionAt(0);
  ASSERT_EQ(p.layers.size(), 6u);
  ASSERT_EQ(p.crossings.size(), 5u);
  for (const auto& layer : p.layers) EXPECT_EQ(layer.size(), 3u);
  for (const auto& cross : p.crossings) EXPECT_EQ(cross.size(), 3u);

  const PartitionView q = Grid::Build({3, 3}).PartitionAt(1);
  ASSERT_EQ(q.layers.size(), 3u);
  for (const auto& layer : q.layers) EXPECT_EQ(layer.size(), 3u);

  const Grid cube = Grid::Build({2, 2, 2});
  const PartitionView r = cube.PartitionAt(2);
  ASSERT_EQ(r.layers.size(), 2u);
  ASSERT_EQ(r.crossings.size(), 1u);
  EXPECT_EQ(r.crossings[0].size(), 4u);
  EXPECT_EQ(cube.LayerSubgrid(2, 0).grid.dims(), (std::vector<int>{2, 2}));

  EXPECT_THROW(g.PartitionAt(2), GridError);
}

TEST(PartitionAt, ReassemblesEdgeSet) {
  for (const auto& dims : AllGrids(3, 120)) {
    const Grid g = Grid::Build(dims);
    for (int d = 0; d < g.n(); ++d) {
      const PartitionView p = g.PartitionAt(d);
      std::vector<int> layer_of(g.order(), -1);
      for (int j = 0; j < g.dim(d); ++j) {
        ASSERT_EQ(static_cast<std::int64_t>(p.layers[j].size()),
                  g.order() / g.dim(d));
        for (VertexId v : p.layers[j]) {
          ASSERT_EQ(layer_of[v], -1);
          layer_of[v] = j;
        }
      }
      std::multiset<EdgeId> seen;
      for (const Edge& e : g.edges()) {
        if (layer_of[e.lo] == layer_of[e.hi]) {
          seen.insert(g.EdgeAt(e.lo, e.position));
        }
      }
      for (int j = 0; j + 1 < g.dim(d); ++j) {
        std::set<VertexId> lo_side, hi_side;
        for (EdgeId e : p.crossings[j]) {
          seen.insert(e);
          lo_side.insert(g.edge(e).lo);
          hi_side.insert(g.edge(e).hi);
          ASSERT_EQ(layer_of[g.edge(e).lo], j);
          ASSERT_EQ(layer_of[g.edge(e).hi], j + 1);
        }
        // A perfect matching between consecutive layers.
        ASSERT_EQ(lo_side.size(), p.layers[j].size());
        ASSERT_EQ(hi_side.size(), p.layers[j + 1].size());
      }
      ASSERT_EQ(static_cast<int>(seen.size()), g.num_edges());
      ASSERT_EQ(std::set<EdgeId>(seen.begin(), seen.end()).size(),
                seen.size());
    }
  }
}

TEST(PartitionAt, PathsDegradeToSingleVertexLayers) {
  const Grid path = Grid::Build({5});
  const PartitionView p = path.PartitionAt(0);
  ASSERT_EQ(p.layers.size(), 5u);
  for (const auto& layer : p.layers) EXPECT_EQ(layer.size(), 1u);
  EXPECT_THROW(path.LayerSubgrid(0, 0), GridError);
}

TEST(LayerSubgrid, Examples) {
  const Grid g = Grid::Build({6, 3});
  const LayerEmbedding l = g.LayerSubgrid(0, 2);
  EXPECT_EQ(l.grid.dims(), std::vector<int>{3});
  for (VertexId s = 0; s < l.grid.order(); ++s) {
    EXPECT_EQ(g.CoordsOf(l.to_parent[s]), (Coords{2, static_cast<int>(s)}));
  }
  EXPECT_EQ(Grid::Build({3, 3, 3}).LayerSubgrid(1, 0).grid.dims(),
            (std::vector<int>{3, 3}));
  EXPECT_EQ(Grid::Build({2, 3}).LayerSubgrid(1, 1).grid.dims(),
            std::vector<int>{2});
  EXPECT_THROW(g.LayerSubgrid(0, 6), GridError);
}

TEST(LayerSubgrid, EmbeddingPreservesAdjacency) {
  const Grid g = Grid::Build({3, 4, 2});
  for (int d = 0; d < g.n(); ++d) {
    for (int j = 0; j < g.dim(d); ++j) {
      const LayerEmbedding l = g.LayerSubgrid(d, j);
      for (const Edge& e : l.grid.edges()) {
        EXPECT_TRUE(g.EdgeBetween(l.to_parent[e.lo], l.to_parent[e.hi]));
      }
      for (VertexId s = 0; s < l.grid.order(); ++s) {
        EXPECT_EQ(g.Coord(l.to_parent[s], d), j);
      }
    }
  }
}

TEST(Shift, Examples) {
  const Grid g = Grid::Build({3, 3});
  EXPECT_EQ(g.FormatVertex(g.Shift(g.ParseVertex("1,1"), 0, +1)), "2,1");
  EXPECT_THROW(g.Shift(g.ParseVertex("0,0"), 0, -1), GridError);
  EXPECT_EQ(g.FormatVertex(g.Shift(g.ParseVertex("2,0"), 1, +1)), "2,1");
}

TEST(TextEncoding, ParsesAndRejects) {
  EXPECT_EQ(ParseDims("6,3"), (std::vector<int>{6, 3}));
  EXPECT_EQ(ParseDims(" 2 , 2,2 "), (std::vector<int>{2, 2, 2}));
  EXPECT_THROW(ParseDims("6,,3"), GridError);
  EXPECT_THROW(ParseDims("a"), GridError);
  const Grid g = Grid::Build({6, 3});
  EXPECT_EQ(g.FormatEdge(g.ParseEdge("3,0|2,0")), "2,0|3,0");
  EXPECT_THROW(g.ParseEdge("2,0|4,0"), GridError);
  EXPECT_THROW(g.ParseVertex("6,0"), GridError);
  EXPECT_THROW(g.ParseVertex("1"), GridError);
}

}  // namespace
}  // namespace gridmp
