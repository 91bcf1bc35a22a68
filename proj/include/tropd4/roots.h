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

// Almost positive roots of D4 attached to chord pairs through the snake
// pseudotriangulation {0L, 0R, 03, 13}, the compatibility degree, and the
// cluster complex as a clique complex.

#ifndef TROPD4_ROOTS_H_
#define TROPD4_ROOTS_H_

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tropd4/cluster.h"

namespace tropd4 {

// Coefficients over the simple roots a1..a4 (a2 is the branch node).
struct Root {
  std::array<int, 4> coeffs{};
  auto operator<=>(const Root&) const = default;

  bool IsNegativeSimple() const;
  // "-a1", "a1+2a2+a3+a4".
  std::string ToString() const;
  static Root Parse(std::string_view text);
};

Root NegativeSimple(int i);  // i in 1..4

// The sixteen almost positive roots: -a1..-a4 then the twelve positive roots,
// listed from the root system (not from the chord model).
const std::vector<Root>& AlmostPositiveRootsD4();

// The snake pairs labelled -a1 (13), -a2 (03), -a3 (0L), -a4 (0R).
std::array<ChordPair, 4> SnakePairs(const Configuration& d4);
Pseudotriangulation Snake(const Configuration& d4);

// Throws "InvalidRank" unless config.n() == 4.
Root RootOfPair(const Configuration& d4, const ChordPair& p);
// Inverse of RootOfPair. Throws "UnknownRoot".
ChordPair PairOfRoot(const Configuration& d4, const Root& r);

// Rotation on roots induced by Tau on chords.
Root TauRoot(const Configuration& d4, const Root& r);

// (a || b): crossing count of the corresponding chord pairs, -1 for a == b.
int CompatibilityDegree(const Configuration& d4, const Root& a, const Root& b);
bool Compatible(const Configuration& d4, const Root& a, const Root& b);

std::vector<Root> ClusterOf(const Configuration& d4,
                            const Pseudotriangulation& t);

struct SimplicialComplex {
  std::size_t vertex_count = 0;
  // faces[k] holds the k-dimensional faces (k+1 vertices), each sorted.
  std::vector<std::vector<std::vector<int>>> faces;

  std::vector<std::size_t> FVector() const;
  std::vector<std::vector<int>> Facets() const;
};

// Clique complex of an adjacency relation on vertex_count vertices.
SimplicialComplex CliqueComplex(
    std::size_t vertex_count, const std::vector<std::vector<bool>>& adjacent);

// Vertices are AlmostPositiveRootsD4() in that order.
SimplicialComplex ClusterComplex(const Configuration& d4);

}  // namespace tropd4

#endif  // TROPD4_ROOTS_H_
