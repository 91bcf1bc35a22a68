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

// The bijection psi between rays of F36, almost positive roots of D4 and
// chord pairs, and the checks relating fan cones, clusters and plane types.

#ifndef TROPD4_CORRESPONDENCE_H_
#define TROPD4_CORRESPONDENCE_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropd4/cluster.h"
#include "tropd4/geometry.h"
#include "tropd4/roots.h"

namespace tropd4 {

struct PsiEntry {
  int label = 0;  // 1..16
  IntVector ray;
  Root root;
  ChordPair pair;
};

class PsiTable {
 public:
  PsiTable() = default;
  // Throws "InvalidTable" unless labels, rays, roots and pairs are each
  // pairwise distinct.
  explicit PsiTable(std::vector<PsiEntry> entries);
  // The published three-column table.
  static PsiTable Printed(const Configuration& d4);

  const std::vector<PsiEntry>& entries() const { return entries_; }
  // Throws "UnknownRay".
  Root Psi(std::span<const Integer> ray) const;
  // Throws "UnknownRoot".
  const IntVector& RayOf(const Root& root) const;

 private:
  std::vector<PsiEntry> entries_;
};

// Label 1..16 of a printed ray. Throws "UnknownRay".
int RayLabel(std::span<const Integer> ray);

// Differences between the table and the computed objects: rays that are not
// rays of the fan, and roots that differ from RootOfPair of their pair.
std::vector<std::string> PsiTableDiff(const PsiTable& psi,
                                      const Configuration& d4, const Fan& fan);

// Index of the maximal cone whose rays contain psi^-1 of the cluster of t.
// Throws "NoContainingCone".
int ConeOfCluster(const Fan& fan, const PsiTable& psi, const Configuration& d4,
                  const Pseudotriangulation& t);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;  // diffs or witnesses on failure
};

// Everything the table and theorem checks consume, computed once.
struct Analysis {
  Configuration d4{4};
  const Fan* fan = nullptr;
  PsiTable psi;
  std::vector<Pseudotriangulation> clusters;
  std::vector<std::string> cone_types;  // per maximal cone of *fan
  std::vector<int> cluster_cone;        // -1 if no containing cone
  std::vector<std::string> cluster_types;
  std::vector<std::vector<int>> classes;  // orbits under the full group
  std::vector<std::string> class_labels;  // "T1".."T7", "?" if unmatched
};

// Classifies the 48 cones on up to ThreadCount() threads.
Analysis Analyze(const PsiTable& psi);

// Literal reading: fan edges under psi equal the compatible pairs minus the
// six printed exceptional pairs.
CheckResult CheckEdgesMinusExceptional(const Analysis& a);
// Fan edges under psi equal the compatible pairs, the six printed pairs are
// among them, -a1 has the printed partners, and splitting both bipyramids
// at their apexes yields maximal cones in bijection with the 50 clusters
// whose face complex is the cluster complex.
CheckResult CheckClusterFanCorrespondence(const Analysis& a);

// Computed cone -> type map against the published partition.
CheckResult CheckTable1(const Analysis& a);
// Class x type incidence against the published table.
CheckResult CheckTable2(const Analysis& a);
// Sufficiency over 4 parity-preserving reflections with and without Sigma,
// and necessity for EEEG and FFFGG.
CheckResult CheckParityReflectionTheorem(const Analysis& a);

// Reflections through two opposite vertices.
std::vector<SymmetryOp> ParityPreservingReflections(const Configuration& d4);

// type -> list of cones (ray labels) in Table 1 layout.
std::map<std::string, std::vector<std::vector<int>>> Table1Rows(
    const Analysis& a);
// class label -> (type -> count), plus class sizes.
std::map<std::string, std::map<std::string, int>> Table2Rows(const Analysis& a);

}  // namespace tropd4

#endif  // TROPD4_CORRESPONDENCE_H_
