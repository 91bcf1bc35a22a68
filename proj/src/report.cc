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

#include "tropd4/report.h"

#include <algorithm>
#include <set>

#include "tropd4/error.h"
#include "tropd4/matroid.h"
#include "tropd4/reference.h"
#include "tropd4/roots.h"

namespace tropd4 {
namespace {

std::vector<int> SortedLabels(const Fan& fan, const std::vector<int>& cone) {
  std::vector<int> out;
  for (int i : cone) out.push_back(RayLabel(fan.rays[i]));
  std::sort(out.begin(), out.end());
  return out;
}

Json IntegerArray(std::span<const Integer> v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(x.get_si());
  return out;
}

Json RationalArray(std::span<const Rational> v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(x.get_str());
  return out;
}

Json InvariantJson(const CellInvariant& c) {
  return {{"fvector", c.fvector}, {"vertices", c.vertex_count}};
}

Json SignatureJson(const Signature& s) {
  Json cells = Json::array();
  for (const CellInvariant& c : s.cells) cells.push_back(InvariantJson(c));
  Json incidences = Json::array();
  for (const auto& [a, b, dim] : s.incidences) {
    incidences.push_back({InvariantJson(a), InvariantJson(b), dim});
  }
  return {{"cells", cells},
          {"incidences", incidences},
          {"intersection_dims", s.intersection_dims}};
}

std::string Quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json EnumerationJson(const Configuration& config, const FlipGraph& graph) {
  Json items = Json::array();
  for (const Pseudotriangulation& t : graph.vertices) items.push_back(config.Format(t));
  Json edges = Json::array();
  for (const auto& [i, j] : graph.edges) edges.push_back({i, j});
  return {{"count", graph.vertices.size()},
          {"flip_edges", edges},
          {"n", config.n()},
          {"pseudotriangulations", items}};
}

std::string FlipGraphDot(const Configuration& config, const FlipGraph& graph) {
  std::string out = "graph flips {\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    out += "  " + std::to_string(i) + " [label=" +
           Quote(config.Format(graph.vertices[i])) + "];\n";
  }
  for (const auto& [i, j] : graph.edges) {
    out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
  }
  return out + "}\n";
}

Json FanJson(const Fan& fan) {
  std::vector<const IntVector*> by_label(fan.rays.size());
  for (const IntVector& r : fan.rays) by_label.at(RayLabel(r) - 1) = &r;
  Json rays = Json::array();
  for (const IntVector* r : by_label) rays.push_back(IntegerArray(*r));

  std::vector<std::vector<int>> cones;
  for (const auto& c : fan.maximal_cones) cones.push_back(SortedLabels(fan, c));
  std::sort(cones.begin(), cones.end());
  Json bipyramids = Json::array();
  for (const auto& c : cones) {
    if (c.size() != static_cast<std::size_t>(fan.ambient_dim)) bipyramids.push_back(c);
  }
  return {{"bipyramids", bipyramids},
          {"f_vector", fan.FVector()},
          {"maximal_cones", cones},
          {"rays", rays}};
}

int ConeByLabels(const Fan& fan, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
    if (SortedLabels(fan, fan.maximal_cones[c]) == labels) return static_cast<int>(c);
  }
  std::string text;
  for (int l : labels) text += (text.empty() ? "r" : ",r") + std::to_string(l);
  throw Error("UnknownCone", "{" + text + "} is not a maximal cone");
}

Json SubdivisionJson(const Fan& fan, int cone) {
  const Vector x = InteriorPoint(fan.cones.at(cone));
  const auto cells = InducedSubdivision(TropPhi2(x));
  Json cell_list = Json::array();
  bool matroidal = true;
  for (const SubdivisionCell& c : cells) {
    Json bases = Json::array();
    for (const PlueckerIndex& b : c.bases) bases.push_back(b.ToString());
    cell_list.push_back(bases);
    matroidal = matroidal && IsMatroidBasisSet(c.bases);
  }
  const Signature s = SubdivisionSignature(cells);
  return {{"cells", cell_list},
          {"cone", SortedLabels(fan, fan.maximal_cones[cone])},
          {"matroidal", matroidal},
          {"point", RationalArray(x)},
          {"signature", SignatureJson(s)},
          {"type", MatchPlaneType(s).name}};
}

Json ClustersJson(const Analysis& a) {
  std::vector<int> class_of(a.clusters.size(), -1);
  for (std::size_t k = 0; k < a.classes.size(); ++k) {
    for (int i : a.classes[k]) class_of[i] = static_cast<int>(k);
  }
  Json out = Json::array();
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    Json roots = Json::array(), rays = Json::array();
    for (const Root& r : ClusterOf(a.d4, a.clusters[i])) {
      roots.push_back(r.ToString());
      rays.push_back(RayLabel(a.psi.RayOf(r)));
    }
    const int cone = a.cluster_cone[i];
    out.push_back({{"class", class_of[i] < 0 ? "?" : a.class_labels[class_of[i]]},
                   {"cone", cone < 0 ? Json() : Json(SortedLabels(*a.fan, a.fan->maximal_cones[cone]))},
                   {"index", i},
                   {"pseudotriangulation", a.d4.Format(a.clusters[i])},
                   {"rays", rays},
                   {"roots", roots},
                   {"type", a.cluster_types[i]}});
  }
  return out;
}

Json Table1Json(const Analysis& a) {
  Json out = Json::array();
  for (const auto& [type, cones] : Table1Rows(a)) {
    out.push_back({{"cones", cones}, {"count", cones.size()}, {"type", type}});
  }
  return out;
}

Json Table2Json(const Analysis& a) {
  Json out = Json::array();
  for (const auto& [label, split] : Table2Rows(a)) {
    int size = 0;
    for (const auto& [type, n] : split) size += n;
    out.push_back({{"class", label}, {"size", size}, {"types", split}});
  }
  return out;
}

std::string Table1Csv(const Analysis& a) {
  std::string out = "type,cone\n";
  for (const auto& [type, cones] : Table1Rows(a)) {
    for (const auto& cone : cones) {
      std::string labels;
      for (int l : cone) labels += (labels.empty() ? "r" : " r") + std::to_string(l);
      out += type + "," + labels + "\n";
    }
  }
  return out;
}

std::string Table2Csv(const Analysis& a) {
  const auto& names = reference::PlaneTypeNames();
  std::string out = "class,size";
  for (const std::string& n : names) out += "," + n;
  out += "\n";
  for (const auto& [label, split] : Table2Rows(a)) {
    int size = 0;
    for (const auto& [type, n] : split) size += n;
    out += label + "," + std::to_string(size);
    for (const std::string& n : names) {
      const auto it = split.find(n);
      out += "," + std::to_string(it == split.end() ? 0 : it->second);
    }
    out += "\n";
  }
  return out;
}

Json VerifyReport(const AcceptanceRun& run) {
  Json checks = Json::array();
  Json violations = Json::array();
  for (const CriterionResult& r : run.criteria) {
    checks.push_back({{"details", r.details},
                      {"known_unattainable", r.known_unattainable},
                      {"number", r.number},
                      {"passed", r.passed},
                      {"title", r.title}});
    if (r.passed) continue;
    for (const std::string& d : r.details) {
      if (d.rfind("note: ", 0) == 0) continue;
      violations.push_back("criterion " + std::to_string(r.number) + ": " + d);
    }
  }
  Json tables = Json::object();
  Json fvectors = {{"cluster_complex", ClusterComplex(Configuration(4)).FVector()}};
  const Analysis& a = run.analysis;
  if (a.fan != nullptr) {
    tables = {{"table1", Table1Json(a)}, {"table2", Table2Json(a)}};
    fvectors["fan"] = a.fan->FVector();
  }
  return {{"checks", checks},
          {"fvectors", fvectors},
          {"tables", tables},
          {"violations", violations}};
}

PsiTable PsiTableFromJson(const Json& rows, const Configuration& d4) {
  if (!rows.is_array()) throw Error("InvalidTable", "expected an array of rows");
  std::vector<PsiEntry> entries;
  try {
    for (const Json& row : rows) {
      const int label = row.at("ray").get<int>();
      if (label < 1 || label > static_cast<int>(reference::Rays().size())) {
        throw Error("InvalidTable", "ray label " + std::to_string(label));
      }
      const auto& printed = reference::Rays()[label - 1];
      entries.push_back({label, ToIntVector(printed),
                         Root::Parse(row.at("root").get<std::string>()),
                         d4.Pair(d4.ParseChord(row.at("chord").get<std::string>()))});
    }
  } catch (const Json::exception& e) {
    throw Error("InvalidTable", e.what());
  }
  return PsiTable(std::move(entries));
}

}  // namespace tropd4
