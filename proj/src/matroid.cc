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

#include "tropd4/matroid.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "tropd4/error.h"
#include "tropd4/reference.h"

namespace tropd4 {
namespace {

unsigned Mask(const PlueckerIndex& t) {
  return (1u << (t.i - 1)) | (1u << (t.j - 1)) | (1u << (t.k - 1));
}

std::vector<int> VertexIndices(const SubdivisionCell& cell) {
  std::vector<int> idx;
  for (const PlueckerIndex& b : cell.bases) idx.push_back(PlueckerPosition(b));
  return idx;
}

}  // namespace

const std::vector<IntVector>& HypersimplexVertices() {
  static const std::vector<IntVector> kVertices = [] {
    std::vector<IntVector> v;
    for (const PlueckerIndex& t : AllPlueckerIndices()) {
      IntVector p(6, Integer(0));
      p[t.i - 1] = p[t.j - 1] = p[t.k - 1] = 1;
      v.push_back(std::move(p));
    }
    return v;
  }();
  return kVertices;
}

bool IsMatroidBasisSet(const std::vector<PlueckerIndex>& bases) {
  std::set<unsigned> family;
  for (const PlueckerIndex& b : bases) family.insert(Mask(b));
  for (unsigned a : family) {
    for (unsigned b : family) {
      for (unsigned out = a & ~b; out != 0; out &= out - 1) {
        const unsigned x = out & -out;
        bool exchanged = false;
        for (unsigned in = b & ~a; in != 0 && !exchanged; in &= in - 1) {
          const unsigned y = in & -in;
          exchanged = family.count((a & ~x) | y) > 0;
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

std::vector<SubdivisionCell> InducedSubdivision(std::span<const Rational> w) {
  if (w.size() != 20) {
    throw Error("DimensionMismatch", "weight vector needs 20 entries");
  }
  LiftedPointSet lift{HypersimplexVertices(), {w.begin(), w.end()}};
  const auto& indices = AllPlueckerIndices();
  std::vector<SubdivisionCell> cells;
  for (const std::vector<int>& cell : RegularSubdivision(lift)) {
    SubdivisionCell c;
    for (int i : cell) c.bases.push_back(indices[i]);
    cells.push_back(std::move(c));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

CellInvariant CellInvariantOf(const SubdivisionCell& cell) {
  // The same cells recur across cones and sample points.
  static std::mutex mu;
  static std::map<std::vector<int>, CellInvariant> cache;
  const std::vector<int> idx = VertexIndices(cell);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(idx); it != cache.end()) return it->second;
  }
  CellInvariant inv{static_cast<int>(idx.size()),
                    PolytopeFVector(HypersimplexVertices(), idx)};
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(idx, inv);
  return inv;
}

Signature SubdivisionSignature(const std::vector<SubdivisionCell>& cells) {
  Signature s;
  std::vector<CellInvariant> inv;
  std::vector<std::vector<int>> idx;
  for (const SubdivisionCell& c : cells) {
    inv.push_back(CellInvariantOf(c));
    idx.push_back(VertexIndices(c));
  }
  s.cells = inv;
  std::sort(s.cells.begin(), s.cells.end());
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      const int d = IntersectionDim(HypersimplexVertices(), idx[a], idx[b]);
      s.intersection_dims.push_back(d);
      s.incidences.emplace_back(std::min(inv[a], inv[b]),
                                std::max(inv[a], inv[b]), d);
    }
  }
  std::sort(s.intersection_dims.begin(), s.intersection_dims.end());
  std::sort(s.incidences.begin(), s.incidences.end());
  return s;
}

Vector InteriorPoint(const Cone& cone) {
  Vector x(cone.ambient_dim(), Rational(0));
  for (const IntVector& r : cone.rays()) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += r[i];
  }
  return x;
}

Signature SignatureAt(std::span<const Rational> x) {
  const std::vector<SubdivisionCell> cells = InducedSubdivision(TropPhi2(x));
  for (const SubdivisionCell& c : cells) {
    if (!IsMatroidBasisSet(c.bases)) {
      std::string names;
      for (const PlueckerIndex& b : c.bases) names += b.ToString() + " ";
      throw Error("NotMatroidal", "cell {" + names + "} at " + ToString(x));
    }
  }
  return SubdivisionSignature(cells);
}

const std::vector<PlaneType>& ReferencePlaneTypes() {
  static const std::vector<PlaneType> kTypes = [] {
    std::vector<PlaneType> types;
    for (const reference::TypeRow& row : reference::Table1()) {
      std::vector<IntVector> rays;
      for (int label : row.cones.front()) {
        rays.push_back(ToIntVector(reference::Rays().at(label - 1)));
      }
      const Cone cone = Cone::FromRays(4, rays);
      types.push_back({row.type, SignatureAt(InteriorPoint(cone))});
    }
    for (std::size_t a = 0; a < types.size(); ++a) {
      for (std::size_t b = a + 1; b < types.size(); ++b) {
        if (types[a].signature == types[b].signature) {
          throw Error("AmbiguousReference", types[a].name + " and " +
                                                types[b].name +
                                                " share a signature");
        }
      }
    }
    return types;
  }();
  return kTypes;
}

const PlaneType& MatchPlaneType(const Signature& signature) {
  for (const PlaneType& t : ReferencePlaneTypes()) {
    if (t.signature == signature) return t;
  }
  throw Error("UnknownType", "signature matches no realized plane type");
}

const PlaneType& ClassifyPlaneType(const Cone& cone) {
  return MatchPlaneType(SignatureAt(InteriorPoint(cone)));
}

}  // namespace tropd4
