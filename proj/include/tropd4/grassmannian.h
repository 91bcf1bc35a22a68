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

// Web-diagram parametrization of the positive Grassmannian Gr+(3,6), its
// tropicalized Pluecker coordinates, and the fan F36 of their common domains
// of linearity in R^4.

#ifndef TROPD4_GRASSMANNIAN_H_
#define TROPD4_GRASSMANNIAN_H_

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropd4/geometry.h"
#include "tropd4/linalg.h"

namespace tropd4 {

using Exponent = std::array<int, 4>;  // powers of x1..x4

// Integer polynomial in x1..x4. Zero coefficients are never stored.
struct SymbolicPolynomial {
  std::map<Exponent, long> terms;

  static SymbolicPolynomial Constant(long c);
  static SymbolicPolynomial Monomial(const Exponent& e, long c = 1);

  SymbolicPolynomial operator+(const SymbolicPolynomial& o) const;
  SymbolicPolynomial operator-(const SymbolicPolynomial& o) const;
  SymbolicPolynomial operator*(const SymbolicPolynomial& o) const;
  SymbolicPolynomial operator-() const;
  friend bool operator==(const SymbolicPolynomial&,
                         const SymbolicPolynomial&) = default;

  // Terms in decreasing exponent order: "x1x2+x1+1", "-x1-1", "0".
  std::string ToString() const;
  // Sums of signed terms such as "2x1^2x3-1"; a whole expression may be
  // wrapped as "-(...)". Throws "ParseError".
  static SymbolicPolynomial Parse(std::string_view text);
};

// min over integer linear forms with zero constant, each stored as its
// coefficient vector. Forms are sorted and distinct.
struct TropicalPolynomial {
  std::vector<IntVector> forms;

  Rational Evaluate(std::span<const Rational> x) const;
  // Indices of the forms attaining the minimum at x.
  std::vector<int> ArgMin(std::span<const Rational> x) const;
  // "min{0,x1,x1+x2}" or a single form "2x1+x2+x3+x4".
  std::string ToString() const;
  // Accepts the ToString syntax. Throws "ParseError".
  static TropicalPolynomial Parse(std::string_view text);
  friend bool operator==(const TropicalPolynomial&,
                         const TropicalPolynomial&) = default;
};

struct PlueckerIndex {
  int i, j, k;  // 1 <= i < j < k <= 6
  auto operator<=>(const PlueckerIndex&) const = default;

  std::string ToString() const;  // "235"
  // Throws "ParseError" unless three strictly increasing digits in 1..6.
  static PlueckerIndex Parse(std::string_view text);
};

// The 20 indices in lexicographic order.
const std::vector<PlueckerIndex>& AllPlueckerIndices();
// Position of idx in AllPlueckerIndices().
int PlueckerPosition(const PlueckerIndex& idx);

using WebMatrix = std::array<std::array<SymbolicPolynomial, 6>, 3>;

// Entries (-1)^(i+1) times the sum over source-to-sink paths of the product
// of the region variables below each path.
WebMatrix ComputeWebMatrix();

SymbolicPolynomial Minor(const WebMatrix& m, const PlueckerIndex& idx);

// One form per monomial. Throws "PositivityViolated" unless all
// coefficients equal one common unit (+1 or -1), i.e. the polynomial is
// subtraction free up to a global sign.
TropicalPolynomial Tropicalize(const SymbolicPolynomial& p);
TropicalPolynomial TropicalMinor(const PlueckerIndex& idx);

// One full-dimensional maximal cone per form l, namely the region where l
// attains the minimum. Cones with lineality keep only the rays of their
// pointed part in Fan::rays.
Fan LinearityFan(const TropicalPolynomial& p);

// Common refinement of the 20 linearity fans. Computed once and cached.
const Fan& ComputeFanF36();

// The 20 tropical minors evaluated at x, lexicographic index order.
std::vector<Rational> TropPhi2(std::span<const Rational> x);

}  // namespace tropd4

#endif  // TROPD4_GRASSMANNIAN_H_
