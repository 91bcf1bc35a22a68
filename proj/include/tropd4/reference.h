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

// Published reference values that the computations are checked against.
// Nothing here feeds a computation; it is compared with the output only.

#ifndef TROPD4_REFERENCE_H_
#define TROPD4_REFERENCE_H_

#include <array>
#include <string>
#include <vector>

namespace tropd4::reference {

// The 3x6 web matrix, row by row, in the text syntax of SymbolicPolynomial.
const std::array<std::array<std::string, 6>, 3>& WebMatrix();

struct MinorEntry {
  std::string index;  // "235"
  std::string value;  // "min{0,x1,x1+x2}" or a single form such as "x1"
};
// All 20 tropical minors in lexicographic index order.
const std::vector<MinorEntry>& TropicalMinors();

// Rays r1..r16 in label order.
const std::vector<std::array<long, 4>>& Rays();

// One row of the ray / root / chord-pair bijection.
struct BijectionRow {
  int ray;            // 1..16
  std::string root;   // Root::ToString syntax
  std::string chord;  // Configuration::ParseChord syntax
};
const std::vector<BijectionRow>& Bijection();

// The two five-ray maximal cones with their two apexes (ray labels).
struct Bipyramid {
  std::vector<int> rays;
  std::array<int, 2> apexes;
};
const std::vector<Bipyramid>& Bipyramids();

// Compatible root pairs whose rays span a diagonal of a bipyramid.
const std::vector<std::array<int, 2>>& ExceptionalPairs();

// Roots compatible with -a1.
const std::vector<std::string>& CompatibleWithMinusA1();

// Plane type -> maximal cones (ray labels) of that type.
struct TypeRow {
  std::string type;
  std::vector<std::vector<int>> cones;
};
const std::vector<TypeRow>& Table1();

// Class label -> counts per plane type (types with a zero count omitted).
struct ClassRow {
  std::string label;  // "T1".."T7"
  std::vector<std::pair<std::string, int>> split;
};
const std::vector<ClassRow>& Table2();

// The six realized plane type names.
const std::vector<std::string>& PlaneTypeNames();

}  // namespace tropd4::reference

#endif  // TROPD4_REFERENCE_H_
