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

#include "tropd4/correspondence.h"

#include <algorithm>
#include <set>

#include "tropd4/error.h"
#include "tropd4/grassmannian.h"
#include "tropd4/matroid.h"
#include "tropd4/parallel.h"
#include "tropd4/reference.h"

namespace tropd4 {
namespace {

using RootPair = std::pair<Root, Root>;

RootPair Ordered(const Root& a, const Root& b) {
  return a < b ? RootPair{a, b} : RootPair{b, a};
}

std::string PairText(const RootPair& p) {
  return "(" + p.first.ToString() + ", " + p.second.ToString() + ")";
}

std::string LabelText(int label) { return "r" + std::to_string(label); }

std::string LabelsText(const std::vector<int>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) s += ",";
    s += LabelText(labels[i]);
  }
  return s + "}";
}

IntVector PrintedRay(int label) {
  return ToIntVector(reference::Rays().at(label - 1));
}

std::vector<int> SortedLabels(const Fan& fan, const std::vector<int>& cone) {
  std::vector<int> labels;
  for (int i : cone) labels.push_back(RayLabel(fan.rays[i]));
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::set<RootPair> CompatiblePairs(const Configuration& d4) {
  const auto& roots = AlmostPositiveRootsD4();
  std::set<RootPair> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (Compatible(d4, roots[i], roots[j])) {
        out.insert(Ordered(roots[i], roots[j]));
      }
    }
  }
  return out;
}

std::set<RootPair> FanEdgesUnderPsi(const Analysis& a) {
  std::set<RootPair> out;
  const auto faces = a.fan->FacesByDimension();
  for (const auto& edge : faces.at(2)) {
    out.insert(Ordered(a.psi.Psi(a.fan->rays[edge[0]]),
                       a.psi.Psi(a.fan->rays[edge[1]])));
  }
  return out;
}

std::set<RootPair> ExceptionalPairs(const Analysis& a) {
  std::set<RootPair> out;
  for (const auto& [x, y] : reference::ExceptionalPairs()) {
    out.insert(Ordered(a.psi.Psi(PrintedRay(x)), a.psi.Psi(PrintedRay(y))));
  }
  return out;
}

void DiffSets(const std::set<RootPair>& got, const std::set<RootPair>& want,
              const std::string& got_name, const std::string& want_name,
              std::vector<std::string>& details) {
  for (const RootPair& p : got) {
    if (!want.count(p)) {
      details.push_back(PairText(p) + " in " + got_name + " but not " + want_name);
    }
  }
  for (const RootPair& p : want) {
    if (!got.count(p)) {
      details.push_back(PairText(p) + " in " + want_name + " but not " + got_name);
    }
  }
}

}  // namespace

PsiTable::PsiTable(std::vector<PsiEntry> entries) : entries_(std::move(entries)) {
  std::set<int> labels;
  std::set<IntVector> rays;
  std::set<Root> roots;
  std::set<ChordPair> pairs;
  for (const PsiEntry& e : entries_) {
    labels.insert(e.label);
    rays.insert(e.ray);
    roots.insert(e.root);
    pairs.insert(e.pair);
  }
  const std::size_t n = entries_.size();
  if (labels.size() != n || rays.size() != n || roots.size() != n ||
      pairs.size() != n) {
    throw Error("InvalidTable", "psi table columns are not bijective");
  }
}

PsiTable PsiTable::Printed(const Configuration& d4) {
  std::vector<PsiEntry> entries;
  for (const reference::BijectionRow& row : reference::Bijection()) {
    entries.push_back({row.ray, PrintedRay(row.ray), Root::Parse(row.root),
                       d4.Pair(d4.ParseChord(row.chord))});
  }
  return PsiTable(std::move(entries));
}

Root PsiTable::Psi(std::span<const Integer> ray) const {
  for (const PsiEntry& e : entries_) {
    if (std::equal(e.ray.begin(), e.ray.end(), ray.begin(), ray.end())) {
      return e.root;
    }
  }
  throw Error("UnknownRay", ToString(ray) + " is not in the psi table");
}

const IntVector& PsiTable::RayOf(const Root& root) const {
  for (const PsiEntry& e : entries_) {
    if (e.root == root) return e.ray;
  }
  throw Error("UnknownRoot", root.ToString() + " is not in the psi table");
}

int RayLabel(std::span<const Integer> ray) {
  const auto& rays = reference::Rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (std::equal(ray.begin(), ray.end(), rays[i].begin(), rays[i].end(),
                   [](const Integer& a, long b) { return a == b; })) {
      return static_cast<int>(i) + 1;
    }
  }
  throw Error("UnknownRay", ToString(ray) + " is not a printed ray");
}

std::vector<std::string> PsiTableDiff(const PsiTable& psi,
                                      const Configuration& d4, const Fan& fan) {
  std::vector<std::string> diffs;
  if (psi.entries().size() != fan.rays.size()) {
    diffs.push_back("table has " + std::to_string(psi.entries().size()) +
                    " rows, fan has " + std::to_string(fan.rays.size()) +
                    " rays");
  }
  for (const PsiEntry& e : psi.entries()) {
    const std::string row = LabelText(e.label) + " " + ToString(e.ray);
    if (fan.RayIndex(e.ray) < 0) diffs.push_back(row + " is not a ray of F36");
    const Root computed = RootOfPair(d4, e.pair);
    if (computed != e.root) {
      diffs.push_back(row + ": table root " + e.root.ToString() + ", chord " +
                      d4.Format(e.pair) + " has root " + computed.ToString());
    }
  }
  return diffs;
}

int ConeOfCluster(const Fan& fan, const PsiTable& psi, const Configuration& d4,
                  const Pseudotriangulation& t) {
  std::vector<int> rays;
  for (const Root& r : ClusterOf(d4, t)) {
    const int idx = fan.RayIndex(psi.RayOf(r));
    if (idx < 0) {
      throw Error("NoContainingCone", "ray of " + r.ToString() + " not in fan");
    }
    rays.push_back(idx);
  }
  std::sort(rays.begin(), rays.end());
  for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
    const auto& cone = fan.maximal_cones[c];
    if (std::includes(cone.begin(), cone.end(), rays.begin(), rays.end())) {
      return static_cast<int>(c);
    }
  }
  throw Error("NoContainingCone",
              "no maximal cone contains the rays of " + d4.Format(t));
}

Analysis Analyze(const PsiTable& psi) {
  Analysis a;
  a.fan = &ComputeFanF36();
  a.psi = psi;
  a.clusters = a.d4.EnumeratePseudotriangulations();

  a.cone_types.assign(a.fan->cones.size(), "");
  ReferencePlaneTypes();  // build the references once, before fanning out
  ParallelFor(a.fan->cones.size(), [&](std::size_t c) {
    a.cone_types[c] = ClassifyPlaneType(a.fan->cones[c]).name;
  });

  for (const Pseudotriangulation& t : a.clusters) {
    int cone = -1;
    try {
      cone = ConeOfCluster(*a.fan, a.psi, a.d4, t);
    } catch (const Error& e) {
      if (e.kind() != "NoContainingCone" && e.kind() != "UnknownRoot") throw;
    }
    a.cluster_cone.push_back(cone);
    a.cluster_types.push_back(cone < 0 ? "?" : a.cone_types[cone]);
  }

  a.classes = ClassifyModulo(a.d4, a.clusters, a.d4.FullSymmetryGroupGenerators());
  for (const auto& orbit : a.classes) {
    std::map<std::string, int> split;
    for (int i : orbit) ++split[a.cluster_types[i]];
    std::string label = "?";
    for (const reference::ClassRow& row : reference::Table2()) {
      const std::map<std::string, int> want(row.split.begin(), row.split.end());
      if (want == split) label = row.label;
    }
    a.class_labels.push_back(label);
  }
  return a;
}

CheckResult CheckEdgesMinusExceptional(const Analysis& a) {
  CheckResult r{"fan edges = compatible pairs minus the six printed pairs", false, {}};
  std::set<RootPair> expected = CompatiblePairs(a.d4);
  for (const RootPair& p : ExceptionalPairs(a)) expected.erase(p);
  DiffSets(FanEdgesUnderPsi(a), expected, "fan edges",
           "compatible minus exceptional", r.details);
  r.passed = r.details.empty();
  return r;
}

CheckResult CheckClusterFanCorrespondence(const Analysis& a) {
  CheckResult r{"fan edges = compatible pairs; split fan = cluster complex", false, {}};
  const std::set<RootPair> compatible = CompatiblePairs(a.d4);
  const std::set<RootPair> edges = FanEdgesUnderPsi(a);
  DiffSets(edges, compatible, "fan edges", "compatible pairs", r.details);

  for (const RootPair& p : ExceptionalPairs(a)) {
    if (!compatible.count(p)) r.details.push_back(PairText(p) + " not compatible");
    if (!edges.count(p)) r.details.push_back(PairText(p) + " not a fan edge");
  }

  std::set<std::string> partners;
  for (const Root& b : AlmostPositiveRootsD4()) {
    if (Compatible(a.d4, NegativeSimple(1), b)) partners.insert(b.ToString());
  }
  const auto& printed = reference::CompatibleWithMinusA1();
  if (partners != std::set<std::string>(printed.begin(), printed.end())) {
    r.details.push_back("-a1 is compatible with " +
                        std::to_string(partners.size()) +
                        " roots, not the printed nine");
  }

  // Split both bipyramids at their apexes and compare with the clusters.
  std::set<std::vector<int>> split;
  std::set<std::vector<int>> bipyramids;
  for (const reference::Bipyramid& b : reference::Bipyramids()) {
    bipyramids.insert(b.rays);
    for (int apex : b.apexes) {
      std::vector<int> half;
      for (int l : b.rays) {
        if (l != apex) half.push_back(l);
      }
      split.insert(half);
    }
  }
  for (const auto& cone : a.fan->maximal_cones) {
    const std::vector<int> labels = SortedLabels(*a.fan, cone);
    if (cone.size() == 4) {
      split.insert(labels);
    } else if (!bipyramids.count(labels)) {
      r.details.push_back("unexpected non-simplicial cone " + LabelsText(labels));
    }
  }
  std::set<std::vector<int>> cluster_cones;
  std::map<std::vector<int>, int> per_bipyramid;
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    std::vector<int> labels;
    for (const Root& root : ClusterOf(a.d4, a.clusters[i])) {
      labels.push_back(RayLabel(a.psi.RayOf(root)));
    }
    std::sort(labels.begin(), labels.end());
    cluster_cones.insert(labels);
    if (a.cluster_cone[i] < 0) {
      r.details.push_back(a.d4.Format(a.clusters[i]) + " lies in no maximal cone");
      continue;
    }
    const std::vector<int> host =
        SortedLabels(*a.fan, a.fan->maximal_cones[a.cluster_cone[i]]);
    if (host.size() == 5) ++per_bipyramid[host];
  }
  if (cluster_cones.size() != a.clusters.size()) {
    r.details.push_back("two clusters share a ray set");
  }
  for (const auto& c : cluster_cones) {
    if (!split.count(c)) {
      r.details.push_back("cluster rays " + LabelsText(c) + " are not a split cone");
    }
  }
  for (const auto& c : split) {
    if (!cluster_cones.count(c)) {
      r.details.push_back("split cone " + LabelsText(c) + " has no cluster");
    }
  }
  for (const auto& b : bipyramids) {
    if (per_bipyramid[b] != 2) {
      r.details.push_back(LabelsText(b) + " hosts " +
                          std::to_string(per_bipyramid[b]) + " clusters");
    }
  }
  r.passed = r.details.empty();
  return r;
}

std::map<std::string, std::vector<std::vector<int>>> Table1Rows(
    const Analysis& a) {
  std::map<std::string, std::vector<std::vector<int>>> rows;
  for (std::size_t c = 0; c < a.fan->maximal_cones.size(); ++c) {
    rows[a.cone_types[c]].push_back(SortedLabels(*a.fan, a.fan->maximal_cones[c]));
  }
  for (auto& [type, cones] : rows) std::sort(cones.begin(), cones.end());
  return rows;
}

CheckResult CheckTable1(const Analysis& a) {
  CheckResult r{"cone partition into plane types", false, {}};
  std::map<std::vector<int>, std::string> printed;
  for (const reference::TypeRow& row : reference::Table1()) {
    for (std::vector<int> cone : row.cones) {
      std::sort(cone.begin(), cone.end());
      printed[cone] = row.type;
    }
  }
  std::set<std::string> names;
  std::size_t matched = 0;
  for (const auto& [type, cones] : Table1Rows(a)) {
    names.insert(type);
    for (const auto& cone : cones) {
      const auto it = printed.find(cone);
      if (it == printed.end()) {
        r.details.push_back(LabelsText(cone) + " is not a printed cone");
      } else if (it->second != type) {
        r.details.push_back(LabelsText(cone) + " computed " + type +
                            ", printed " + it->second);
      } else {
        ++matched;
      }
    }
  }
  if (matched != printed.size()) {
    r.details.push_back(std::to_string(matched) + " of " +
                        std::to_string(printed.size()) + " cones match");
  }
  const auto& six = reference::PlaneTypeNames();
  if (names != std::set<std::string>(six.begin(), six.end())) {
    r.details.push_back(std::to_string(names.size()) + " type names occur");
  }
  r.passed = r.details.empty();
  return r;
}

std::map<std::string, std::map<std::string, int>> Table2Rows(const Analysis& a) {
  std::map<std::string, std::map<std::string, int>> rows;
  for (std::size_t k = 0; k < a.classes.size(); ++k) {
    auto& row = rows[a.class_labels[k]];
    for (int i : a.classes[k]) ++row[a.cluster_types[i]];
  }
  return rows;
}

CheckResult CheckTable2(const Analysis& a) {
  CheckResult r{"class x plane type incidence", false, {}};
  std::map<std::string, std::map<std::string, int>> printed;
  for (const reference::ClassRow& row : reference::Table2()) {
    printed[row.label] = {row.split.begin(), row.split.end()};
  }
  const std::set<std::string> labels(a.class_labels.begin(), a.class_labels.end());
  const auto rows = Table2Rows(a);
  if (labels.size() != a.class_labels.size() || labels.count("?")) {
    for (std::size_t k = 0; k < a.classes.size(); ++k) {
      std::string split;
      for (const auto& [type, n] : rows.at(a.class_labels[k])) {
        split += " " + type + ":" + std::to_string(n);
      }
      r.details.push_back("class of size " + std::to_string(a.classes[k].size()) +
                          " labelled " + a.class_labels[k] + " (" + split + " )");
    }
  }
  if (rows != printed) {
    r.details.push_back("incidence differs from the printed table");
  }
  r.passed = r.details.empty();
  return r;
}

std::vector<SymmetryOp> ParityPreservingReflections(const Configuration& d4) {
  std::vector<SymmetryOp> ops;
  for (int axis = 0; axis < d4.vertex_count(); axis += 2) {
    ops.push_back(SymmetryOp::Reflect(axis));
  }
  return ops;
}

CheckResult CheckParityReflectionTheorem(const Analysis& a) {
  CheckResult r{"parity-preserving reflections and Sigma keep the plane type", false, {}};
  auto index_of = [&](const Pseudotriangulation& t) {
    const auto it = std::lower_bound(a.clusters.begin(), a.clusters.end(), t);
    if (it == a.clusters.end() || *it != t) {
      throw Error("NotClosed", a.d4.Format(t) + " is not a pseudotriangulation");
    }
    return static_cast<int>(it - a.clusters.begin());
  };
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    for (const SymmetryOp& op : ParityPreservingReflections(a.d4)) {
      for (bool sigma : {false, true}) {
        Pseudotriangulation image = a.d4.Apply(op, a.clusters[i]);
        if (sigma) image = a.d4.Apply(SymmetryOp::Sigma(), image);
        const int j = index_of(image);
        if (a.cluster_types[j] != a.cluster_types[i]) {
          r.details.push_back(a.d4.Format(a.clusters[i]) + " (" +
                              a.cluster_types[i] + ") -> reflect " +
                              std::to_string(op.axis) + (sigma ? " + sigma" : "") +
                              " -> " + a.d4.Format(image) + " (" +
                              a.cluster_types[j] + ")");
        }
      }
    }
  }
  const auto finer =
      ClassifyModulo(a.d4, a.clusters, a.d4.ParityPreservingGenerators());
  for (const std::string type : {"EEEG", "FFFGG"}) {
    std::vector<int> fiber;
    for (std::size_t i = 0; i < a.clusters.size(); ++i) {
      if (a.cluster_types[i] == type) fiber.push_back(static_cast<int>(i));
    }
    int meeting = 0;
    bool equal = false;
    for (const auto& cls : finer) {
      if (std::find_first_of(cls.begin(), cls.end(), fiber.begin(), fiber.end()) !=
          cls.end()) {
        ++meeting;
        equal = cls == fiber;
      }
    }
    if (fiber.empty() || meeting != 1 || !equal) {
      r.details.push_back(type + " fiber of size " + std::to_string(fiber.size()) +
                          " meets " + std::to_string(meeting) + " finer classes");
    }
  }
  r.passed = r.details.empty();
  return r;
}

}  // namespace tropd4
