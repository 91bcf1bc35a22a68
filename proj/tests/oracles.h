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

#ifndef TROPD4_TESTS_ORACLES_H_
#define TROPD4_TESTS_ORACLES_H_

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "tropd4/geometry.h"
#include "tropd4/linalg.h"

namespace tropd4::testing {

// Lower-envelope oracle: every affinely independent (d+1)-subset defines an
// affine interpolant of the heights; it supports a lower face iff no lifted
// point lies strictly below it. Maximal cells are the full-dimensional faces.
inline std::set<std::vector<int>> BruteForceLowerCells(const LiftedPointSet& lift) {
  const int m = static_cast<int>(lift.points.size());
  const int d = AffineDimension(lift.points);
  const int dim = static_cast<int>(lift.points[0].size());
  std::set<std::vector<int>> cells;
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + (d + 1), 1);
  std::sort(pick.begin(), pick.end(), std::greater<>());
  do {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) {
      if (pick[i]) idx.push_back(i);
    }
    std::vector<IntVector> pts;
    for (int i : idx) pts.push_back(lift.points[i]);
    if (AffineDimension(pts) != d) continue;
    // Solve for g(x) = c0 + c.x on the affine hull: least-dimension system
    // [1 p] c = h restricted to an independent column set.
    Matrix a;
    for (int i : idx) {
      Vector row{Rational(1)};
      for (const Integer& x : lift.points[i]) row.emplace_back(x);
      a.push_back(row);
    }
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c <= static_cast<std::size_t>(dim) &&
                            cols.size() < idx.size();
         ++c) {
      Matrix sub;
      for (const Vector& row : a) {
        Vector r;
        for (std::size_t k : cols) r.push_back(row[k]);
        r.push_back(row[c]);
        sub.push_back(r);
      }
      if (Rank(sub) == cols.size() + 1) cols.push_back(c);
    }
    Matrix square;
    for (const Vector& row : a) {
      Vector r;
      for (std::size_t k : cols) r.push_back(row[k]);
      square.push_back(r);
    }
    const Matrix inv = Inverse(square);
    Vector coef(cols.size(), Rational(0));
    for (std::size_t r = 0; r < cols.size(); ++r) {
      for (std::size_t k = 0; k < idx.size(); ++k) {
        coef[r] += inv[r][k] * lift.heights[idx[k]];
      }
    }
    auto g = [&](int i) {
      Vector row{Rational(1)};
      for (const Integer& x : lift.points[i]) row.emplace_back(x);
      Rational s = 0;
      for (std::size_t r = 0; r < cols.size(); ++r) s += coef[r] * row[cols[r]];
      return s;
    };
    bool lower = true;
    std::vector<int> cell;
    for (int i = 0; i < m && lower; ++i) {
      const Rational gap = lift.heights[i] - g(i);
      if (sgn(gap) < 0) lower = false;
      if (sgn(gap) == 0) cell.push_back(i);
    }
    if (lower) cells.insert(cell);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return cells;
}

}  // namespace tropd4::testing

#endif  // TROPD4_TESTS_ORACLES_H_
