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

// tropd4: command-line front end. Exit codes: 0 pass, 1 verification
// failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropd4/acceptance.h"
#include "tropd4/error.h"
#include "tropd4/grassmannian.h"
#include "tropd4/report.h"

namespace {

using tropd4::Json;

constexpr int kPass = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  std::string output_path;
  int n = 4;
  std::string cone;
  std::uint64_t seed = 0;
  std::string psi_path;
};

void Emit(const RunConfig& config, const std::string& text) {
  if (config.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output_path);
  if (!out) throw UsageError("cannot write " + config.output_path);
  out << text;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

void RequireFormat(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  throw UsageError("format " + config.format + " is not supported by this command");
}

std::vector<int> ParseLabels(const std::string& text) {
  std::vector<int> labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty() && (item[0] == 'r' || item[0] == 'R')) item.erase(0, 1);
    try {
      std::size_t used = 0;
      labels.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad ray label '" + item + "'");
    }
  }
  if (labels.empty()) throw UsageError("--cone needs ray labels such as r1,r5,r7,r11,r13");
  return labels;
}

int Enumerate(const RunConfig& config) {
  RequireFormat(config, {"text", "json", "dot"});
  const tropd4::Configuration d(config.n);
  const tropd4::FlipGraph graph = d.MakeFlipGraph();
  if (config.format == "dot") {
    Emit(config, tropd4::FlipGraphDot(d, graph));
  } else if (config.format == "json") {
    Emit(config, Dump(tropd4::EnumerationJson(d, graph)));
  } else {
    std::string out = std::to_string(graph.vertices.size()) + " pseudotriangulations\n";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
      out += std::to_string(i) + " " + d.Format(graph.vertices[i]) + "\n";
    }
    Emit(config, out);
  }
  return kPass;
}

int Fan(const RunConfig& config) {
  RequireFormat(config, {"json"});
  Emit(config, Dump(tropd4::FanJson(tropd4::ComputeFanF36())));
  return kPass;
}

int Subdivision(const RunConfig& config) {
  RequireFormat(config, {"json"});
  const tropd4::Fan& fan = tropd4::ComputeFanF36();
  int cone = -1;
  try {
    cone = tropd4::ConeByLabels(fan, ParseLabels(config.cone));
  } catch (const tropd4::Error& e) {
    throw UsageError(e.what());
  }
  const Json j = tropd4::SubdivisionJson(fan, cone);
  Emit(config, Dump(j));
  return j.at("matroidal").get<bool>() ? kPass : kVerificationFailure;
}

tropd4::Analysis PrintedAnalysis() {
  return tropd4::Analyze(tropd4::PsiTable::Printed(tropd4::Configuration(4)));
}

int ClassifyClusters(const RunConfig& config) {
  RequireFormat(config, {"json"});
  Emit(config, Dump(tropd4::ClustersJson(PrintedAnalysis())));
  return kPass;
}

int Table(const RunConfig& config, int which) {
  RequireFormat(config, {"json", "csv"});
  const tropd4::Analysis a = PrintedAnalysis();
  const tropd4::CheckResult check =
      which == 1 ? tropd4::CheckTable1(a) : tropd4::CheckTable2(a);
  if (config.format == "csv") {
    Emit(config, which == 1 ? tropd4::Table1Csv(a) : tropd4::Table2Csv(a));
  } else {
    Emit(config, Dump(which == 1 ? tropd4::Table1Json(a) : tropd4::Table2Json(a)));
  }
  for (const std::string& d : check.details) std::cerr << d << "\n";
  return check.passed ? kPass : kVerificationFailure;
}

int VerifyAll(const RunConfig& config) {
  RequireFormat(config, {"json"});
  tropd4::AcceptanceOptions options;
  options.seed = config.seed;
  if (!config.psi_path.empty()) {
    std::ifstream in(config.psi_path);
    if (!in) throw UsageError("cannot read " + config.psi_path);
    try {
      options.psi = tropd4::PsiTableFromJson(Json::parse(in), tropd4::Configuration(4));
    } catch (const Json::exception& e) {
      throw UsageError(config.psi_path + ": " + e.what());
    } catch (const tropd4::Error& e) {
      throw UsageError(config.psi_path + ": " + e.what());
    }
  }
  const tropd4::AcceptanceRun run = tropd4::RunAcceptance(options);
  for (const tropd4::CriterionResult& r : run.criteria) {
    std::cerr << tropd4::FormatCriterion(r) << "\n";
  }
  Emit(config, Dump(tropd4::VerifyReport(run)));
  return run.AllPassed() ? kPass : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive tropical planes and the D4 cluster complex"};
  app.require_subcommand(1);
  RunConfig config;
  app.add_option("--format", config.format, "json, csv, dot or text")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("-o,--output", config.output_path, "Write to a file instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "List pseudotriangulations of Dn");
  enumerate->add_option("-n", config.n, "Half the polygon size, 3 to 5")
      ->check(CLI::Range(3, 5));
  auto* fan = app.add_subcommand("fan", "Rays, maximal cones and f-vector of the fan");
  auto* subdivision =
      app.add_subcommand("subdivision", "Matroid subdivision at a cone's interior point");
  subdivision->add_option("--cone", config.cone, "Ray labels, e.g. r1,r5,r7,r11,r13")
      ->required();
  auto* clusters =
      app.add_subcommand("classify-clusters", "Plane type and class of every cluster");
  auto* table1 = app.add_subcommand("table1", "Cones of the fan by plane type");
  auto* table2 = app.add_subcommand("table2", "Symmetry classes by plane type");
  auto* verify = app.add_subcommand("verify-all", "Run every acceptance check");
  verify->add_option("--seed", config.seed, "Seed for sampled checks");
  verify->add_option("--psi", config.psi_path, "JSON ray/root/chord table replacing the published one");
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("--format", config.format, "json, csv, dot or text")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_option("-o,--output", config.output_path, "Write to a file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsageError;
  }
  // enumerate prints plain text unless asked otherwise.
  if (enumerate->parsed() && enumerate->count("--format") == 0 && app.count("--format") == 0) {
    config.format = "text";
  }

  try {
    if (enumerate->parsed()) return Enumerate(config);
    if (fan->parsed()) return Fan(config);
    if (subdivision->parsed()) return Subdivision(config);
    if (clusters->parsed()) return ClassifyClusters(config);
    if (table1->parsed()) return Table(config, 1);
    if (table2->parsed()) return Table(config, 2);
    if (verify->parsed()) return VerifyAll(config);
  } catch (const UsageError& e) {
    std::cerr << "tropd4: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "tropd4: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}
