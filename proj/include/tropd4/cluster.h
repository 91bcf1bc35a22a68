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

// Pseudotriangulation model of the cluster algebra of type D_n: a regular
// 2n-gon with a small disk at its center. Vertices are 0..2n-1 counter-
// clockwise; vertex p+n is the antipode ("p bar") of p.

#ifndef TROPD4_CLUSTER_H_
#define TROPD4_CLUSTER_H_

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tropd4 {

enum class Side { kLeft, kRight };

// A diagonal of the 2n-gon that is neither an edge nor a long diagonal.
struct PolygonChord {
  int p;  // p < q
  int q;
  auto operator<=>(const PolygonChord&) const = default;
};

// The segment from vertex p tangent to the disk, on the disk's left or right
// as seen from p.
struct CentralChord {
  int p;
  Side side;
  auto operator<=>(const CentralChord&) const = default;
};

using Chord = std::variant<PolygonChord, CentralChord>;

// A centrally symmetric pair {c, c bar}, stored by its smaller member.
struct ChordPair {
  Chord representative;
  auto operator<=>(const ChordPair&) const = default;
};

// A maximal set of pairwise non-crossing chord pairs, sorted.
struct Pseudotriangulation {
  std::vector<ChordPair> pairs;
  auto operator<=>(const Pseudotriangulation&) const = default;
  bool Contains(const ChordPair& p) const;
};

struct SymmetryOp {
  enum class Kind { kRho, kReflect, kTau, kSigma };
  Kind kind = Kind::kRho;
  int axis = 0;  // Reflect only: k -> axis - k (mod 2n)

  static SymmetryOp Rho() { return {Kind::kRho, 0}; }
  static SymmetryOp Reflect(int axis) { return {Kind::kReflect, axis}; }
  static SymmetryOp Tau() { return {Kind::kTau, 0}; }
  static SymmetryOp Sigma() { return {Kind::kSigma, 0}; }

  auto operator<=>(const SymmetryOp&) const = default;
};

struct FlipResult {
  Pseudotriangulation result;
  ChordPair entering;
};

struct FlipGraph {
  std::vector<Pseudotriangulation> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  std::vector<int> Degrees() const;
  bool Connected() const;
};

// The configuration D_n for n >= 3.
class Configuration {
 public:
  explicit Configuration(int n);

  int n() const { return n_; }
  int vertex_count() const { return 2 * n_; }
  int Antipode(int v) const { return (v + n_) % (2 * n_); }

  Chord Polygon(int a, int b) const;  // validates and orders endpoints
  Chord Central(int p, Side side) const;
  ChordPair Pair(const Chord& c) const;
  Chord Symmetric(const Chord& c) const;
  bool IsValid(const Chord& c) const;

  // Geometric crossing of two chords (interiors meet). Chords sharing an
  // endpoint never cross.
  bool Crossing(const Chord& a, const Chord& b) const;
  // No chord of a crosses a chord of b.
  bool Compatible(const ChordPair& a, const ChordPair& b) const;
  // Number of chords of b crossed by the representative of a. Throws
  // "SamePair" when a == b.
  int PairCrossingCount(const ChordPair& a, const ChordPair& b) const;

  std::vector<ChordPair> AllChordPairs() const;
  std::vector<Pseudotriangulation> EnumeratePseudotriangulations() const;
  // Throws "NotInPseudotriangulation" if p is not in t.
  FlipResult Flip(const Pseudotriangulation& t, const ChordPair& p) const;
  FlipGraph MakeFlipGraph() const;

  Chord Apply(const SymmetryOp& op, const Chord& c) const;
  ChordPair Apply(const SymmetryOp& op, const ChordPair& p) const;
  Pseudotriangulation Apply(const SymmetryOp& op,
                            const Pseudotriangulation& t) const;
  // Rho, every Reflect, Tau, Sigma.
  std::vector<SymmetryOp> FullSymmetryGroupGenerators() const;
  // Reflections through two opposite vertices (even axes) plus Sigma.
  std::vector<SymmetryOp> ParityPreservingGenerators() const;

  // Text syntax: vertex "3" or "3b" (the antipode of 3); polygon chords
  // concatenate two vertices ("0b2"), central chords append L or R ("0L").
  std::string Format(const Chord& c) const;
  std::string Format(const ChordPair& p) const;
  std::string Format(const Pseudotriangulation& t) const;
  Chord ParseChord(std::string_view text) const;
  Pseudotriangulation ParsePseudotriangulation(std::string_view text) const;

 private:
  int Mod(int v) const;
  std::string VertexLabel(int v) const;

  int n_;
};

// Orbits of `items` under the group generated by `generators`, as index lists
// into `items`; orbits are sorted and ordered by their smallest member.
std::vector<std::vector<int>> ClassifyModulo(
    const Configuration& config, const std::vector<Pseudotriangulation>& items,
    const std::vector<SymmetryOp>& generators);

}  // namespace tropd4

#endif  // TROPD4_CLUSTER_H_
