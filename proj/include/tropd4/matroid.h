// Copyright 2026 The tropd4 Authors.
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

// Regular subdivisions of the hypersimplex Delta(3,6) induced by tropical
// Pluecker vectors, matroid checks on their cells, and classification of the
// dual tropical planes by a combinatorial signature.

#ifndef TROPD4_MATROID_H_
#define TROPD4_MATROID_H_

#include <compare>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tropd4/geometry.h"
#include "tropd4/grassmannian.h"
#include "tropd4/linalg.h"

namespace tropd4 {

// e_i + e_j + e_k for the 20 triples, in lexicographic triple order.
const std::vector<IntVector>& HypersimplexVertices();

// Basis-exchange axiom on a nonempty set of triples.
bool IsMatroidBasisSet(const std::vector<PlueckerIndex>& bases);

struct SubdivisionCell {
  std::vector<PlueckerIndex> bases;  // sorted
  auto operator<=>(const SubdivisionCell&) const = default;
};

// Maximal cells of the lower-envelope subdivision of Delta(3,6) lifted by
// w (20 heights, lexicographic index order). Cells are sorted.
std::vector<SubdivisionCell> InducedSubdivision(std::span<const Rational> w);

struct CellInvariant {
  int vertex_count = 0;
  std::vector<int> fvector;  // (f_0, ..., f_5) of the cell polytope
  auto operator<=>(const CellInvariant&) const = default;
};

// Isomorphism invariant of a subdivision. Besides the cell invariants and the
// pairwise intersection dimensions (-1 when disjoint), it records which kinds
// of cells meet in which dimension; the first two parts alone do not separate
// all six realized plane types.
struct Signature {
  std::vector<CellInvariant> cells;
  std::vector<int> intersection_dims;
  std::vector<std::tuple<CellInvariant, CellInvariant, int>> incidences;
  auto operator<=>(const Signature&) const = default;
};

CellInvariant CellInvariantOf(const SubdivisionCell& cell);
Signature SubdivisionSignature(const std::vector<SubdivisionCell>& cells);

struct PlaneType {
  std::string name;
  Signature signature;
};

// Sum of the primitive rays.
Vector InteriorPoint(const Cone& cone);

// Signature of the subdivision induced by TropPhi2(x). Throws "NotMatroidal"
// if some cell fails the basis-exchange check.
Signature SignatureAt(std::span<const Rational> x);

// Reference signatures, one per realized plane type, each computed from the
// first listed cone of that type in the published cone partition. Throws
// "AmbiguousReference" if two coincide.
const std::vector<PlaneType>& ReferencePlaneTypes();

// Type whose reference signature equals `signature`. Throws "UnknownType".
const PlaneType& MatchPlaneType(const Signature& signature);

// MatchPlaneType(SignatureAt(InteriorPoint(cone))).
const PlaneType& ClassifyPlaneType(const Cone& cone);

}  // namespace tropd4

#endif  // TROPD4_MATROID_H_
