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

// Exact polyhedral primitives: cones in double description, complete fans,
// and regular subdivisions of point configurations.

#ifndef TROPD4_GEOMETRY_H_
#define TROPD4_GEOMETRY_H_

#include <cstddef>
#include <vector>

#include "tropd4/linalg.h"

namespace tropd4 {

// a1 x1 + ... + an xn + c. As a cone halfspace the constant is zero and the
// form is read as "value >= 0".
struct LinearForm {
  Vector coefficients;
  Rational constant = 0;

  Rational Evaluate(std::span<const Rational> x) const;
  Rational Evaluate(std::span<const Integer> x) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

LinearForm Homogeneous(Vector coefficients);
LinearForm Homogeneous(std::span<const Integer> coefficients);

// Positive multiple of v with coprime integer entries. Throws "ZeroRay".
IntVector CanonicalizeRay(std::span<const Rational> v);
IntVector CanonicalizeRay(std::span<const Integer> v);

// Extreme rays of {x in R^dim : h(x) >= 0 for all h}, canonical and sorted.
// Throws "NotPointed" (carrying a line direction) if the cone has lineality.
std::vector<IntVector> ConeRays(const std::vector<LinearForm>& halfspaces,
                                int dim);

// A polyhedral cone held in both representations. The H side is whatever
// the cone was built from; the V side is rays plus a lineality basis.
class Cone {
 public:
  static Cone FromHalfspaces(int dim, std::vector<LinearForm> halfspaces);
  // Cone generated by the given vectors (lineality allowed).
  static Cone FromRays(int dim, const std::vector<IntVector>& generators);

  int ambient_dim() const { return dim_; }
  const std::vector<LinearForm>& halfspaces() const { return halfspaces_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  bool pointed() const { return lineality_.empty(); }

  // Dimension of the linear span.
  int dim() const;
  bool Contains(std::span<const Rational> x) const;
  // Contained in the relative interior.
  bool ContainsInInterior(std::span<const Rational> x) const;

  // Irredundant inequality description: facet normals (one per facet,
  // canonical within the cone's span) and equations spanning the
  // orthogonal complement of the span.
  std::vector<IntVector> Facets() const;
  std::vector<IntVector> Equations() const;

  // Ray subsets that are faces of this (pointed) cone, including the empty
  // face and the cone itself. Each entry is a sorted list of indices into
  // rays().
  std::vector<std::vector<int>> FaceRaySets() const;

 private:
  Cone() = default;
  void ComputeVRep();

  int dim_ = 0;
  std::vector<LinearForm> halfspaces_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
};

// H-rep concatenation. Throws "DimensionMismatch".
Cone IntersectCones(const Cone& a, const Cone& b);
int ConeDim(const Cone& c);

// A fan stored as a deduplicated ray list plus maximal cones as sorted ray
// index lists. cones[i] is the geometric cone behind maximal_cones[i].
struct Fan {
  int ambient_dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<int>> maximal_cones;
  std::vector<Cone> cones;
  bool complete = false;

  // All faces of all maximal cones, deduplicated, grouped by dimension
  // (index 0 holds the origin face). Requires pointed cones.
  std::vector<std::vector<std::vector<int>>> FacesByDimension() const;
  // (f_1, ..., f_d): number of faces of dimension 1..ambient_dim.
  std::vector<std::size_t> FVector() const;
  // Index of a maximal cone whose ray set equals `ray_indices`, or -1.
  int FindCone(const std::vector<int>& ray_indices) const;
  int RayIndex(std::span<const Integer> ray) const;
};

// Builds a Fan from pointed cones: collects and sorts rays, maps every cone
// to ray indices, orders cones by their index lists.
Fan MakeFan(int ambient_dim, std::vector<Cone> cones, bool complete);

struct LiftedPointSet {
  std::vector<IntVector> points;
  std::vector<Rational> heights;
};

// Maximal cells of the regular subdivision induced by the lower envelope of
// the lifted points. Each cell is a sorted index list; cells are sorted.
std::vector<std::vector<int>> RegularSubdivision(const LiftedPointSet& lift);

// Dimension of conv(A) ∩ conv(B) for two cells of one subdivision, i.e. the
// affine dimension of their shared vertices; -1 when they are disjoint.
int IntersectionDim(const std::vector<IntVector>& points,
                    const std::vector<int>& cell_a,
                    const std::vector<int>& cell_b);

// Vertex-index sets of the facets of conv(points[subset]), each sorted and
// expressed as indices into `points`.
std::vector<std::vector<int>> PolytopeFacets(
    const std::vector<IntVector>& points, const std::vector<int>& subset);

// Nonempty faces of conv(points[subset]) as sorted index sets, including the
// polytope itself. Assumes every point of `subset` is a vertex.
std::vector<std::vector<int>> PolytopeFaces(
    const std::vector<IntVector>& points, const std::vector<int>& subset);

// (f_0, ..., f_d) of conv(points[subset]), f_d = 1.
std::vector<int> PolytopeFVector(const std::vector<IntVector>& points,
                                 const std::vector<int>& subset);

// Exact membership x ∈ conv(points[subset]).
bool PolytopeContains(const std::vector<IntVector>& points,
                      const std::vector<int>& subset,
                      std::span<const Rational> x);

}  // namespace tropd4

#endif  // TROPD4_GEOMETRY_H_
