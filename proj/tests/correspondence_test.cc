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

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "test_util.h"
#include "tropd4/correspondence.h"
#include "tropd4/error.h"
#include "tropd4/grassmannian.h"
#include "tropd4/parallel.h"

namespace tropd4 {
namespace {

using testing::Ray;

std::string ErrorKind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

const Analysis& Shared() {
  static const Analysis kAnalysis = Analyze(PsiTable::Printed(Configuration(4)));
  return kAnalysis;
}

std::vector<int> Labels(const Fan& fan, int cone) {
  std::vector<int> out;
  for (int i : fan.maximal_cones[cone]) out.push_back(RayLabel(fan.rays[i]));
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("Psi lookups") {
  const Configuration d4(4);
  const PsiTable psi = PsiTable::Printed(d4);
  CHECK(psi.Psi(Ray(1)).ToString() == "-a1");
  CHECK(psi.Psi(Ray(16)).ToString() == "a1+2a2+a3+a4");
  CHECK(psi.Psi(Ray(7)).ToString() == "a2");
  CHECK(d4.Format(PairOfRoot(d4, psi.Psi(Ray(16)))) == "12b");
  CHECK(d4.Format(PairOfRoot(d4, psi.Psi(Ray(7)))) == "01b");
  for (const PsiEntry& e : psi.entries()) {
    CHECK(psi.RayOf(e.root) == e.ray);
    CHECK(RayLabel(e.ray) == e.label);
  }
  CHECK(ErrorKind([&] { psi.Psi(ToIntVector({1, 1, 1, 1})); }) == "UnknownRay");
  CHECK(ErrorKind([] { RayLabel(ToIntVector({2, 0, 0, 0})); }) == "UnknownRay");

  auto entries = psi.entries();
  entries[1].root = entries[0].root;
  CHECK(ErrorKind([&] { PsiTable{entries}; }) == "InvalidTable");
}

TEST_CASE("PsiTableDiff") {
  const Configuration d4(4);
  const PsiTable psi = PsiTable::Printed(d4);
  CHECK(PsiTableDiff(psi, d4, ComputeFanF36()).empty());

  // Swapping two roots is caught on both rows.
  auto entries = psi.entries();
  std::swap(entries[2].root, entries[5].root);
  const auto diffs = PsiTableDiff(PsiTable(entries), d4, ComputeFanF36());
  CHECK(diffs.size() == 2);
}

TEST_CASE("ConeOfCluster") {
  const Analysis& a = Shared();
  const Configuration& d4 = a.d4;
  const auto snake = d4.ParsePseudotriangulation("0L,0R,03,13");
  const int cone = ConeOfCluster(*a.fan, a.psi, d4, snake);
  CHECK(Labels(*a.fan, cone) == std::vector<int>{1, 5, 7, 11, 13});
  std::vector<int> snake_rays;
  for (const Root& r : ClusterOf(d4, snake)) snake_rays.push_back(RayLabel(a.psi.RayOf(r)));
  std::sort(snake_rays.begin(), snake_rays.end());
  CHECK(snake_rays == std::vector<int>{1, 5, 11, 13});

  // Injective off the bipyramids, two-to-one onto each bipyramid.
  std::map<int, int> hits;
  for (int c : a.cluster_cone) {
    REQUIRE(c >= 0);
    ++hits[c];
  }
  CHECK(hits.size() == 48);
  int doubled = 0;
  for (const auto& [c, n] : hits) {
    if (a.fan->maximal_cones[c].size() == 5) {
      CHECK(n == 2);
      ++doubled;
    } else {
      CHECK(n == 1);
    }
  }
  CHECK(doubled == 2);
}

TEST_CASE("Correspondence checks") {
  const Analysis& a = Shared();
  const CheckResult faithful = CheckClusterFanCorrespondence(a);
  CHECK(faithful.passed);
  for (const auto& d : faithful.details) MESSAGE(d);

  // All six printed pairs are genuine fan edges, so the literal reading
  // finds exactly those six extra edges.
  const CheckResult literal = CheckEdgesMinusExceptional(a);
  CHECK_FALSE(literal.passed);
  CHECK(literal.details.size() == 6);
  for (const auto& d : literal.details) {
    CHECK(d.find("in fan edges but not compatible minus exceptional") !=
          std::string::npos);
  }
}

TEST_CASE("Table 1") {
  const Analysis& a = Shared();
  const CheckResult r = CheckTable1(a);
  CHECK(r.passed);
  for (const auto& d : r.details) MESSAGE(d);
  std::map<std::string, std::size_t> counts;
  for (const auto& [type, cones] : Table1Rows(a)) counts[type] = cones.size();
  CHECK(counts == std::map<std::string, std::size_t>{{"EEEG", 4}, {"EEFFa", 12},
                                                     {"EEFFb", 6}, {"EEFG", 12},
                                                     {"EFFG", 12}, {"FFFGG", 2}});
}

TEST_CASE("Plane types of clusters") {
  const Analysis& a = Shared();
  const auto snake = a.d4.ParsePseudotriangulation("0L,0R,03,13");
  const auto it = std::lower_bound(a.clusters.begin(), a.clusters.end(), snake);
  REQUIRE(it != a.clusters.end());
  const std::size_t i = it - a.clusters.begin();
  CHECK(a.cluster_types[i] == "FFFGG");
  const auto reflected = a.d4.Apply(SymmetryOp::Reflect(0), snake);
  const std::size_t j =
      std::lower_bound(a.clusters.begin(), a.clusters.end(), reflected) -
      a.clusters.begin();
  CHECK(a.cluster_types[j] == "FFFGG");
  // The type factors through the cone.
  for (std::size_t k = 0; k < a.clusters.size(); ++k) {
    CHECK(a.cluster_types[k] == a.cone_types[a.cluster_cone[k]]);
  }
}

TEST_CASE("Table 2") {
  const Analysis& a = Shared();
  const CheckResult r = CheckTable2(a);
  CHECK(r.passed);
  for (const auto& d : r.details) MESSAGE(d);
  const auto rows = Table2Rows(a);
  CHECK(rows.size() == 7);
  CHECK(rows.at("T1") == std::map<std::string, int>{{"EEFG", 8}, {"EFFG", 8}});
  CHECK(rows.at("T7") == std::map<std::string, int>{{"EEFFa", 2}});
}

TEST_CASE("Parity reflection theorem") {
  const Analysis& a = Shared();
  CHECK(ParityPreservingReflections(a.d4).size() == 4);
  const CheckResult r = CheckParityReflectionTheorem(a);
  CHECK(r.passed);
  for (const auto& d : r.details) MESSAGE(d);

  // The fibers of every type are unions of finer classes.
  const auto finer =
      ClassifyModulo(a.d4, a.clusters, a.d4.ParityPreservingGenerators());
  for (const auto& cls : finer) {
    for (int i : cls) CHECK(a.cluster_types[i] == a.cluster_types[cls.front()]);
  }

  // Negative control: a relabelled type breaks sufficiency.
  Analysis broken = a;
  broken.cluster_types[0] = broken.cluster_types[0] == "EEEG" ? "EEFG" : "EEEG";
  CHECK_FALSE(CheckParityReflectionTheorem(broken).passed);
}

TEST_CASE("ThreadCount honours TROPD4_THREADS") {
  setenv("TROPD4_THREADS", "3", 1);
  CHECK(ThreadCount() == 3);
  setenv("TROPD4_THREADS", "0", 1);
  CHECK(ThreadCount() >= 1);
  unsetenv("TROPD4_THREADS");
}

}  // namespace
}  // namespace tropd4
