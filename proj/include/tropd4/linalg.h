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

#ifndef TROPD4_LINALG_H_
#define TROPD4_LINALG_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tropd4 {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;
// Row-major.
using Matrix = std::vector<Vector>;

Rational MakeRational(long numerator, long denominator = 1);

Vector ToVector(std::span<const Integer> v);
Vector ToVector(std::initializer_list<long> v);
IntVector ToIntVector(std::initializer_list<long> v);
IntVector ToIntVector(std::span<const long> v);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);
Rational Dot(std::span<const Integer> a, std::span<const Rational> b);
Integer Dot(std::span<const Integer> a, std::span<const Integer> b);

bool IsZero(std::span<const Rational> v);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> RowReduce(Matrix& m);

std::size_t Rank(Matrix m);
std::size_t Rank(const std::vector<IntVector>& rows);

// Basis of {x : m x = 0}, one vector per free column, in RREF order.
std::vector<Vector> NullSpace(Matrix m, std::size_t cols);

// Inverse of a square non-singular matrix.
Matrix Inverse(const Matrix& m);

// Affine rank of a point set: rank of the differences to the first point.
// Returns -1 for an empty set.
int AffineDimension(const std::vector<IntVector>& points);

std::string ToString(std::span<const Integer> v);
std::string ToString(std::span<const Rational> v);

}  // namespace tropd4

#endif  // TROPD4_LINALG_H_
