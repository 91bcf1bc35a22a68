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

// Machine-readable artifacts. Objects have sorted keys and arrays are in
// canonical order, so equal inputs give byte-identical output.

#ifndef TROPD4_REPORT_H_
#define TROPD4_REPORT_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "tropd4/acceptance.h"
#include "tropd4/cluster.h"
#include "tropd4/correspondence.h"
#include "tropd4/geometry.h"

namespace tropd4 {

using Json = nlohmann::json;

// Pseudotriangulations in canonical text form plus the flip edges.
Json EnumerationJson(const Configuration& config, const FlipGraph& graph);
std::string FlipGraphDot(const Configuration& config, const FlipGraph& graph);

// Rays in printed label order, maximal cones as sorted label lists,
// f-vector and the ray sets of the non-simplicial cones.
Json FanJson(const Fan& fan);

// Ray labels -> maximal cone index of fan. Throws "UnknownCone".
int ConeByLabels(const Fan& fan, std::vector<int> labels);
// The subdivision at the interior point of a maximal cone.
Json SubdivisionJson(const Fan& fan, int cone);

// One row per cluster: cone, roots, rays, type and symmetry class.
Json ClustersJson(const Analysis& a);
Json Table1Json(const Analysis& a);
Json Table2Json(const Analysis& a);
std::string Table1Csv(const Analysis& a);
std::string Table2Csv(const Analysis& a);

// {"checks", "fvectors", "tables", "violations"}. Timings are left out so
// the report depends only on the inputs.
Json VerifyReport(const AcceptanceRun& run);

// Rows {"ray": label, "root": text, "chord": text}. Throws "InvalidTable".
PsiTable PsiTableFromJson(const Json& rows, const Configuration& d4);

}  // namespace tropd4

#endif  // TROPD4_REPORT_H_
