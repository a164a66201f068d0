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

// Explicit perfect and almost perfect matchings of grid graphs.
//
// All builders are recursive over layers and never search: the matchings
// are assembled from crossing sets and smaller grids. Precondition failures
// throw ConstructionError.

#ifndef GRIDMP_CONSTRUCTIONS_H_
#define GRIDMP_CONSTRUCTIONS_H_

#include <optional>
#include <stdexcept>

#include "gridmp/grid.h"
#include "gridmp/matching.h"

namespace gridmp {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// M_d = E_d^{0,1} u E_d^{2,3} u ... ; requires k_d even.
Matching CanonicalPm(const Grid& grid, int d);

// Canonical perfect matching at the smallest position with k_d even.
Matching DefaultPm(const Grid& grid);

// Almost perfect matching missing exactly u, for odd order and u with all
// coordinates even. Recurses on the smallest position.
Matching ApmAllEven(const Grid& grid, VertexId u);

// Almost perfect matching missing exactly u, for odd order and any u with
// even coordinate sum. Pairs of odd coordinates are peeled off two at a time.
Matching ApmEvenSum(const Grid& grid, VertexId u);

struct EdgeAvoidingApm {
  Matching matching;
  VertexId uncovered;
};

// Almost perfect matching of an odd-order grid that does not use f. Cuts the
// crossing set containing f; the odd side is left uncovered at its corner
// nearest the origin.
EdgeAvoidingApm ApmAvoidingEdge(const Grid& grid, EdgeId f);

// Perfect matching of (G - u) - F for odd order, u all-even and |F| <= n-1.
// Edges of F incident with u are ignored (they are not edges of G - u).
// Returns std::nullopt only if the layer recursion finds no fault-free
// transversal, which cannot happen for valid inputs.
std::optional<Matching> PmOfVertexDeleted(const Grid& grid, VertexId u,
                                          const FaultSet& faults);

}  // namespace gridmp

#endif  // GRIDMP_CONSTRUCTIONS_H_
