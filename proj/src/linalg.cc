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

#include "tropd4/linalg.h"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tropd4 {

Rational MakeRational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Vector ToVector(std::span<const Integer> v) {
  Vector out;
  out.reserve(v.size());
  for (const Integer& x : v) out.emplace_back(x);
  return out;
}

Vector ToVector(std::initializer_list<long> v) {
  Vector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

IntVector ToIntVector(std::initializer_list<long> v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

IntVector ToIntVector(std::span<const long> v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational Dot(std::span<const Integer> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer Dot(std::span<const Integer> a, std::span<const Integer> b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool IsZero(std::span<const Rational> v) {
  for (const Rational& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> RowReduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Rank(Matrix m) { return RowReduce(m).size(); }

std::size_t Rank(const std::vector<IntVector>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const IntVector& r : rows) m.push_back(ToVector(r));
  return Rank(std::move(m));
}

std::vector<Vector> NullSpace(Matrix m, std::size_t cols) {
  const std::vector<std::size_t> pivots = RowReduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("Inverse: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const std::vector<std::size_t> pivots = RowReduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw std::invalid_argument("Inverse: singular matrix");
  }
  Matrix inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

int AffineDimension(const std::vector<IntVector>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(Rank(std::move(diffs)));
}

std::string ToString(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string ToString(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace tropd4
