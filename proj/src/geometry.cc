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

#include "tropd4/geometry.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "tropd4/error.h"

namespace tropd4 {
namespace {

// A halfspace scaled to a primitive integer normal; zero rows are dropped.
std::vector<IntVector> IntegerRows(const std::vector<LinearForm>& halfspaces,
                                   int dim) {
  std::vector<IntVector> rows;
  rows.reserve(halfspaces.size());
  for (const LinearForm& h : halfspaces) {
    if (static_cast<int>(h.coefficients.size()) != dim) {
      throw Error("DimensionMismatch",
                  "halfspace of length " +
                      std::to_string(h.coefficients.size()) +
                      " in ambient dimension " + std::to_string(dim));
    }
    if (IsZero(h.coefficients)) continue;
    rows.push_back(CanonicalizeRay(h.coefficients));
  }
  return rows;
}

Matrix ToMatrix(const std::vector<IntVector>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const IntVector& r : rows) m.push_back(ToVector(r));
  return m;
}

void SortUnique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct DDRay {
  IntVector v;
  std::vector<bool> zero;  // tight constraints among the processed rows
};

// Rank of the rows of `rows` selected by the common zero set of a and b.
bool Adjacent(const DDRay& a, const DDRay& b,
              const std::vector<IntVector>& rows,
              const std::vector<bool>& processed, int dim) {
  std::vector<IntVector> common;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (processed[i] && a.zero[i] && b.zero[i]) common.push_back(rows[i]);
  }
  if (static_cast<int>(common.size()) < dim - 2) return false;
  return static_cast<int>(Rank(common)) == dim - 2;
}

// Independent columns of m, chosen greedily left to right.
std::vector<std::size_t> IndependentColumns(const Matrix& m,
                                            std::size_t cols) {
  std::vector<std::size_t> chosen;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    Matrix sub;
    sub.reserve(m.size());
    for (const Vector& row : m) {
      Vector r;
      for (std::size_t k : chosen) r.push_back(row[k]);
      r.push_back(row[c]);
      sub.push_back(std::move(r));
    }
    const std::size_t rk = Rank(std::move(sub));
    if (rk > rank) {
      chosen.push_back(c);
      rank = rk;
    }
  }
  return chosen;
}

Vector Restrict(std::span<const Rational> v,
                const std::vector<std::size_t>& cols) {
  Vector out;
  out.reserve(cols.size());
  for (std::size_t c : cols) out.push_back(v[c]);
  return out;
}

// Homogenized rows (1, p) for the selected points.
Matrix HomogenizedRows(const std::vector<IntVector>& points,
                       const std::vector<int>& subset) {
  Matrix q;
  q.reserve(subset.size());
  for (int i : subset) {
    Vector row;
    row.reserve(points[i].size() + 1);
    row.emplace_back(1);
    for (const Integer& x : points[i]) row.emplace_back(x);
    q.push_back(std::move(row));
  }
  return q;
}

std::vector<std::vector<int>> CloseUnderIntersection(
    const std::vector<std::vector<int>>& facets, std::vector<int> top) {
  std::set<std::vector<int>> faces;
  std::vector<std::vector<int>> queue;
  faces.insert(top);
  queue.push_back(std::move(top));
  while (!queue.empty()) {
    std::vector<int> face = std::move(queue.back());
    queue.pop_back();
    for (const std::vector<int>& facet : facets) {
      std::vector<int> meet;
      std::set_intersection(face.begin(), face.end(), facet.begin(),
                            facet.end(), std::back_inserter(meet));
      if (meet.empty() || meet.size() == face.size()) continue;
      if (faces.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  return {faces.begin(), faces.end()};
}

}  // namespace

Rational LinearForm::Evaluate(std::span<const Rational> x) const {
  return Dot(std::span<const Rational>(coefficients), x) + constant;
}

Rational LinearForm::Evaluate(std::span<const Integer> x) const {
  return Dot(x, std::span<const Rational>(coefficients)) + constant;
}

LinearForm Homogeneous(Vector coefficients) {
  return LinearForm{std::move(coefficients), 0};
}

LinearForm Homogeneous(std::span<const Integer> coefficients) {
  return LinearForm{ToVector(coefficients), 0};
}

IntVector CanonicalizeRay(std::span<const Rational> v) {
  Integer denominators = 1;
  bool nonzero = false;
  for (const Rational& x : v) {
    if (sgn(x) == 0) continue;
    nonzero = true;
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(),
            x.get_den_mpz_t());
  }
  if (!nonzero) throw Error("ZeroRay", "cannot canonicalize the zero vector");
  IntVector out;
  out.reserve(v.size());
  for (const Rational& x : v) {
    out.push_back(x.get_num() * (denominators / x.get_den()));
  }
  return CanonicalizeRay(std::span<const Integer>(out));
}

IntVector CanonicalizeRay(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) throw Error("ZeroRay", "cannot canonicalize the zero vector");
  IntVector out(v.begin(), v.end());
  for (Integer& x : out) x /= g;
  return out;
}

std::vector<IntVector> ConeRays(const std::vector<LinearForm>& halfspaces,
                                int dim) {
  if (dim <= 0) return {};
  const std::vector<IntVector> rows = IntegerRows(halfspaces, dim);
  {
    const std::vector<Vector> lines =
        NullSpace(ToMatrix(rows), static_cast<std::size_t>(dim));
    if (!lines.empty()) {
      throw Error("NotPointed",
                  "cone contains the line spanned by " +
                      ToString(CanonicalizeRay(lines.front())));
    }
  }

  // Start from a simplicial cone cut out by dim independent rows.
  std::vector<bool> processed(rows.size(), false);
  std::vector<std::size_t> basis_rows;
  {
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < rows.size() &&
                            static_cast<int>(chosen.size()) < dim;
         ++i) {
      chosen.push_back(rows[i]);
      if (static_cast<int>(Rank(chosen)) == static_cast<int>(chosen.size())) {
        basis_rows.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  Matrix basis;
  for (std::size_t i : basis_rows) {
    basis.push_back(ToVector(rows[i]));
    processed[i] = true;
  }
  const Matrix inverse = Inverse(basis);

  std::vector<DDRay> rays;
  for (int j = 0; j < dim; ++j) {
    Vector column(dim);
    for (int i = 0; i < dim; ++i) column[i] = inverse[i][j];
    DDRay ray{CanonicalizeRay(column), std::vector<bool>(rows.size(), false)};
    for (int k = 0; k < dim; ++k) {
      if (k != j) ray.zero[basis_rows[k]] = true;
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (processed[r]) continue;
    std::vector<DDRay> positive, negative, zero;
    std::vector<Integer> pos_val, neg_val;
    for (DDRay& ray : rays) {
      Integer value = Dot(std::span<const Integer>(rows[r]),
                          std::span<const Integer>(ray.v));
      const int s = sgn(value);
      if (s > 0) {
        positive.push_back(std::move(ray));
        pos_val.push_back(std::move(value));
      } else if (s < 0) {
        negative.push_back(std::move(ray));
        neg_val.push_back(std::move(value));
      } else {
        ray.zero[r] = true;
        zero.push_back(std::move(ray));
      }
    }
    std::vector<DDRay> next;
    for (std::size_t p = 0; p < positive.size(); ++p) {
      for (std::size_t q = 0; q < negative.size(); ++q) {
        if (!Adjacent(positive[p], negative[q], rows, processed, dim)) continue;
        IntVector combined(dim);
        for (int k = 0; k < dim; ++k) {
          combined[k] =
              pos_val[p] * negative[q].v[k] - neg_val[q] * positive[p].v[k];
        }
        DDRay ray{CanonicalizeRay(std::span<const Integer>(combined)),
                  std::vector<bool>(rows.size(), false)};
        for (std::size_t i = 0; i < rows.size(); ++i) {
          ray.zero[i] = processed[i] && positive[p].zero[i] &&
                        negative[q].zero[i];
        }
        ray.zero[r] = true;
        next.push_back(std::move(ray));
      }
    }
    for (DDRay& ray : positive) next.push_back(std::move(ray));
    for (DDRay& ray : zero) next.push_back(std::move(ray));
    rays = std::move(next);
    processed[r] = true;
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (DDRay& ray : rays) out.push_back(std::move(ray.v));
  SortUnique(out);
  return out;
}

Cone Cone::FromHalfspaces(int dim, std::vector<LinearForm> halfspaces) {
  Cone c;
  c.dim_ = dim;
  c.halfspaces_ = std::move(halfspaces);
  c.ComputeVRep();
  return c;
}

Cone Cone::FromRays(int dim, const std::vector<IntVector>& generators) {
  // Facets of cone(G) are the rays of its dual {y : <g, y> >= 0}; the dual's
  // lineality is the orthogonal complement of span(G), which contributes
  // equations.
  std::vector<LinearForm> dual_halfspaces;
  for (const IntVector& g : generators) {
    if (static_cast<int>(g.size()) != dim) {
      throw Error("DimensionMismatch", "generator " + ToString(g) +
                                           " in ambient dimension " +
                                           std::to_string(dim));
    }
    dual_halfspaces.push_back(Homogeneous(std::span<const Integer>(g)));
  }
  const Cone dual = FromHalfspaces(dim, std::move(dual_halfspaces));
  std::vector<LinearForm> primal;
  for (const IntVector& f : dual.rays()) {
    primal.push_back(Homogeneous(std::span<const Integer>(f)));
  }
  for (const IntVector& e : dual.lineality()) {
    primal.push_back(Homogeneous(std::span<const Integer>(e)));
    IntVector neg = e;
    for (Integer& x : neg) x = -x;
    primal.push_back(Homogeneous(std::span<const Integer>(neg)));
  }
  return FromHalfspaces(dim, std::move(primal));
}

void Cone::ComputeVRep() {
  Matrix a;
  for (const LinearForm& h : halfspaces_) {
    if (static_cast<int>(h.coefficients.size()) != dim_) {
      throw Error("DimensionMismatch", "halfspace length differs from " +
                                           std::to_string(dim_));
    }
    a.push_back(h.coefficients);
  }
  const std::vector<Vector> lines =
      NullSpace(std::move(a), static_cast<std::size_t>(dim_));
  lineality_.clear();
  for (const Vector& l : lines) lineality_.push_back(CanonicalizeRay(l));
  if (lineality_.empty()) {
    rays_ = ConeRays(halfspaces_, dim_);
    return;
  }
  std::vector<LinearForm> pinned = halfspaces_;
  for (const IntVector& l : lineality_) {
    pinned.push_back(Homogeneous(std::span<const Integer>(l)));
    IntVector neg = l;
    for (Integer& x : neg) x = -x;
    pinned.push_back(Homogeneous(std::span<const Integer>(neg)));
  }
  rays_ = ConeRays(pinned, dim_);
}

int Cone::dim() const {
  std::vector<IntVector> gens = rays_;
  gens.insert(gens.end(), lineality_.begin(), lineality_.end());
  return static_cast<int>(Rank(gens));
}

bool Cone::Contains(std::span<const Rational> x) const {
  for (const LinearForm& h : halfspaces_) {
    if (sgn(h.Evaluate(x)) < 0) return false;
  }
  return true;
}

bool Cone::ContainsInInterior(std::span<const Rational> x) const {
  if (!Contains(x)) return false;
  for (const IntVector& e : Equations()) {
    if (sgn(Dot(std::span<const Integer>(e), x)) != 0) return false;
  }
  for (const IntVector& f : Facets()) {
    if (sgn(Dot(std::span<const Integer>(f), x)) <= 0) return false;
  }
  return true;
}

std::vector<IntVector> Cone::Facets() const {
  std::vector<LinearForm> dual;
  for (const IntVector& r : rays_) {
    dual.push_back(Homogeneous(std::span<const Integer>(r)));
  }
  for (const IntVector& l : lineality_) {
    dual.push_back(Homogeneous(std::span<const Integer>(l)));
    IntVector neg = l;
    for (Integer& x : neg) x = -x;
    dual.push_back(Homogeneous(std::span<const Integer>(neg)));
  }
  return FromHalfspaces(dim_, std::move(dual)).rays();
}

std::vector<IntVector> Cone::Equations() const {
  std::vector<IntVector> gens = rays_;
  gens.insert(gens.end(), lineality_.begin(), lineality_.end());
  std::vector<IntVector> out;
  for (const Vector& e :
       NullSpace(ToMatrix(gens), static_cast<std::size_t>(dim_))) {
    out.push_back(CanonicalizeRay(e));
  }
  return out;
}

std::vector<std::vector<int>> Cone::FaceRaySets() const {
  std::vector<int> all(rays_.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> facets;
  for (const IntVector& f : Facets()) {
    std::vector<int> tight;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (sgn(Dot(std::span<const Integer>(f),
                  std::span<const Integer>(rays_[i]))) == 0) {
        tight.push_back(static_cast<int>(i));
      }
    }
    facets.push_back(std::move(tight));
  }
  std::vector<std::vector<int>> faces;
  if (!all.empty()) faces = CloseUnderIntersection(facets, all);
  faces.insert(faces.begin(), std::vector<int>{});
  return faces;
}

Cone IntersectCones(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error("DimensionMismatch",
                "cannot intersect cones in R^" +
                    std::to_string(a.ambient_dim()) + " and R^" +
                    std::to_string(b.ambient_dim()));
  }
  std::vector<LinearForm> h = a.halfspaces();
  h.insert(h.end(), b.halfspaces().begin(), b.halfspaces().end());
  return Cone::FromHalfspaces(a.ambient_dim(), std::move(h));
}

int ConeDim(const Cone& c) { return c.dim(); }

std::vector<std::vector<std::vector<int>>> Fan::FacesByDimension() const {
  std::vector<std::set<std::vector<int>>> by_dim(ambient_dim + 1);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const Cone& cone = cones[c];
    for (const std::vector<int>& local : cone.FaceRaySets()) {
      std::vector<int> global;
      std::vector<IntVector> gens;
      for (int i : local) {
        global.push_back(RayIndex(cone.rays()[i]));
        gens.push_back(cone.rays()[i]);
      }
      std::sort(global.begin(), global.end());
      by_dim[Rank(gens)].insert(std::move(global));
    }
  }
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& s : by_dim) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<std::size_t> Fan::FVector() const {
  const auto faces = FacesByDimension();
  std::vector<std::size_t> f;
  for (int d = 1; d <= ambient_dim; ++d) f.push_back(faces[d].size());
  return f;
}

int Fan::FindCone(const std::vector<int>& ray_indices) const {
  std::vector<int> key = ray_indices;
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < maximal_cones.size(); ++i) {
    if (maximal_cones[i] == key) return static_cast<int>(i);
  }
  return -1;
}

int Fan::RayIndex(std::span<const Integer> ray) const {
  const IntVector key(ray.begin(), ray.end());
  auto it = std::lower_bound(rays.begin(), rays.end(), key);
  if (it == rays.end() || *it != key) return -1;
  return static_cast<int>(it - rays.begin());
}

Fan MakeFan(int ambient_dim, std::vector<Cone> cones, bool complete) {
  Fan fan;
  fan.ambient_dim = ambient_dim;
  fan.complete = complete;
  for (const Cone& c : cones) {
    fan.rays.insert(fan.rays.end(), c.rays().begin(), c.rays().end());
  }
  SortUnique(fan.rays);
  std::vector<std::pair<std::vector<int>, Cone>> keyed;
  for (Cone& c : cones) {
    std::vector<int> idx;
    for (const IntVector& r : c.rays()) idx.push_back(fan.RayIndex(r));
    std::sort(idx.begin(), idx.end());
    keyed.emplace_back(std::move(idx), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [idx, cone] : keyed) {
    fan.maximal_cones.push_back(std::move(idx));
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

std::vector<std::vector<int>> RegularSubdivision(const LiftedPointSet& lift) {
  const std::size_t m = lift.points.size();
  if (lift.heights.size() != m) {
    throw Error("DimensionMismatch", "points and heights differ in length");
  }
  std::vector<int> everything(m);
  std::iota(everything.begin(), everything.end(), 0);
  if (m <= 1) return {everything};

  Matrix q = HomogenizedRows(lift.points, everything);
  for (std::size_t i = 0; i < m; ++i) q[i].push_back(lift.heights[i]);
  const std::size_t cols = q[0].size();
  const std::vector<std::size_t> chosen = IndependentColumns(q, cols);
  // Heights affine on the points: the lift is flat.
  if (chosen.back() != cols - 1) return {everything};

  std::vector<LinearForm> halfspaces;
  std::vector<Vector> reduced;
  for (const Vector& row : q) {
    reduced.push_back(Restrict(row, chosen));
    halfspaces.push_back(Homogeneous(reduced.back()));
  }
  std::set<std::vector<int>> cells;
  for (const IntVector& facet :
       ConeRays(halfspaces, static_cast<int>(chosen.size()))) {
    if (sgn(facet.back()) <= 0) continue;  // vertical or upper
    std::vector<int> cell;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(Dot(std::span<const Integer>(facet),
                  std::span<const Rational>(reduced[i]))) == 0) {
        cell.push_back(static_cast<int>(i));
      }
    }
    cells.insert(std::move(cell));
  }
  return {cells.begin(), cells.end()};
}

int IntersectionDim(const std::vector<IntVector>& points,
                    const std::vector<int>& cell_a,
                    const std::vector<int>& cell_b) {
  std::vector<int> a = cell_a, b = cell_b, shared;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(shared));
  std::vector<IntVector> pts;
  for (int i : shared) pts.push_back(points[i]);
  return AffineDimension(pts);
}

std::vector<std::vector<int>> PolytopeFacets(
    const std::vector<IntVector>& points, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() <= 1) return {};
  const Matrix q = HomogenizedRows(points, sorted);
  const std::vector<std::size_t> chosen = IndependentColumns(q, q[0].size());
  std::vector<LinearForm> halfspaces;
  std::vector<Vector> reduced;
  for (const Vector& row : q) {
    reduced.push_back(Restrict(row, chosen));
    halfspaces.push_back(Homogeneous(reduced.back()));
  }
  std::set<std::vector<int>> facets;
  for (const IntVector& f :
       ConeRays(halfspaces, static_cast<int>(chosen.size()))) {
    std::vector<int> tight;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sgn(Dot(std::span<const Integer>(f),
                  std::span<const Rational>(reduced[i]))) == 0) {
        tight.push_back(sorted[i]);
      }
    }
    if (!tight.empty()) facets.insert(std::move(tight));
  }
  return {facets.begin(), facets.end()};
}

std::vector<std::vector<int>> PolytopeFaces(
    const std::vector<IntVector>& points, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return {};
  return CloseUnderIntersection(PolytopeFacets(points, sorted), sorted);
}

std::vector<int> PolytopeFVector(const std::vector<IntVector>& points,
                                 const std::vector<int>& subset) {
  std::vector<IntVector> pts;
  for (int i : subset) pts.push_back(points[i]);
  const int d = AffineDimension(pts);
  std::vector<int> f(std::max(d, 0) + 1, 0);
  for (const std::vector<int>& face : PolytopeFaces(points, subset)) {
    std::vector<IntVector> fp;
    for (int i : face) fp.push_back(points[i]);
    ++f[AffineDimension(fp)];
  }
  return f;
}

bool PolytopeContains(const std::vector<IntVector>& points,
                      const std::vector<int>& subset,
                      std::span<const Rational> x) {
  if (subset.empty()) return false;
  Matrix q = HomogenizedRows(points, subset);
  Vector hx;
  hx.emplace_back(1);
  hx.insert(hx.end(), x.begin(), x.end());
  const std::size_t rank = Rank(q);
  q.push_back(hx);
  if (Rank(q) != rank) return false;  // outside the affine hull
  q.pop_back();
  const std::vector<std::size_t> chosen = IndependentColumns(q, q[0].size());
  std::vector<LinearForm> halfspaces;
  for (const Vector& row : q) halfspaces.push_back(Homogeneous(Restrict(row, chosen)));
  const Vector rx = Restrict(hx, chosen);
  for (const IntVector& f :
       ConeRays(halfspaces, static_cast<int>(chosen.size()))) {
    if (sgn(Dot(std::span<const Integer>(f), std::span<const Rational>(rx))) <
        0) {
      return false;
    }
  }
  return true;
}

}  // namespace tropd4
