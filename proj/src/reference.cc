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

#include "tropd4/reference.h"

namespace tropd4::reference {

const std::array<std::array<std::string, 6>, 3>& WebMatrix() {
  static const std::array<std::array<std::string, 6>, 3> kMatrix{{
      {"1", "0", "0", "1", "x1x2+x1+1",
       "x1x2x3x4+x1x2x3+x1x3+x1x2+x1+1"},
      {"0", "-1", "0", "-1", "-(x1+1)", "-(x1x3+x1+1)"},
      {"0", "0", "1", "1", "1", "1"},
  }};
  return kMatrix;
}

const std::vector<MinorEntry>& TropicalMinors() {
  static const std::vector<MinorEntry> kMinors{
      {"123", "0"},
      {"124", "0"},
      {"125", "0"},
      {"126", "0"},
      {"134", "0"},
      {"135", "min{0,x1}"},
      {"136", "min{0,x1,x1+x3}"},
      {"145", "x1"},
      {"146", "min{x1,x1+x3}"},
      {"156", "x1+x3"},
      {"234", "0"},
      {"235", "min{0,x1,x1+x2}"},
      {"236", "min{0,x1,x1+x2,x1+x3,x1+x2+x3,x1+x2+x3+x4}"},
      {"245", "min{x1,x1+x2}"},
      {"246", "min{x1,x1+x2,x1+x3,x1+x2+x3,x1+x2+x3+x4}"},
      {"256", "min{x1+x3,x1+x2+x3,x1+x2+x3+x4}"},
      {"345", "x1+x2"},
      {"346", "min{x1+x2,x1+x2+x3,x1+x2+x3+x4}"},
      {"356", "min{x1+x2+x3,x1+x2+x3+x4,2x1+x2+x3+x4}"},
      {"456", "2x1+x2+x3+x4"},
  };
  return kMinors;
}

const std::vector<std::array<long, 4>>& Rays() {
  static const std::vector<std::array<long, 4>> kRays{
      {0, 0, 1, 0},  {0, 0, -1, 0},  {1, 0, 0, 0},   {1, 0, -1, 0},
      {-1, 0, 0, 0}, {0, 0, 0, 1},   {-1, 0, 0, 1},  {0, 0, 0, -1},
      {0, 0, 1, -1}, {1, 0, 0, -1},  {0, 1, 0, 0},   {0, 1, 0, -1},
      {0, 1, 1, -1}, {0, -1, 0, 0},  {1, -1, 0, 0},  {1, -1, -1, 0},
  };
  return kRays;
}

const std::vector<BijectionRow>& Bijection() {
  static const std::vector<BijectionRow> kRows{
      {1, "-a1", "13"},
      {2, "a1+a2", "02b"},
      {3, "a3", "3R"},
      {4, "a1+a2+a3", "2R"},
      {5, "-a3", "0L"},
      {6, "a2+a3", "1R"},
      {7, "a2", "01b"},
      {8, "a1+a2+a4", "2L"},
      {9, "a4", "3L"},
      {10, "a1+a2+a3+a4", "23b"},
      {11, "-a4", "0R"},
      {12, "a1", "02"},
      {13, "-a2", "03"},
      {14, "a2+a4", "1L"},
      {15, "a2+a3+a4", "13b"},
      {16, "a1+2a2+a3+a4", "12b"},
  };
  return kRows;
}

const std::vector<Bipyramid>& Bipyramids() {
  static const std::vector<Bipyramid> kBipyramids{
      {{1, 5, 7, 11, 13}, {7, 13}},
      {{4, 8, 10, 15, 16}, {10, 16}},
  };
  return kBipyramids;
}

const std::vector<std::array<int, 2>>& ExceptionalPairs() {
  static const std::vector<std::array<int, 2>> kPairs{
      {1, 15}, {5, 8}, {11, 4}, {2, 12}, {6, 3}, {14, 9},
  };
  return kPairs;
}

const std::vector<std::string>& CompatibleWithMinusA1() {
  static const std::vector<std::string> kRoots{
      "-a2", "-a3", "-a4", "a2", "a2+a3", "a2+a4", "a2+a3+a4", "a3", "a4",
  };
  return kRoots;
}

const std::vector<TypeRow>& Table1() {
  static const std::vector<TypeRow> kRows{
      {"EEEG", {{3, 9, 10, 12}, {2, 6, 14, 16}, {3, 9, 12, 13}, {2, 6, 7, 14}}},
      {"EEFFa",
       {{3, 4, 6, 15}, {1, 3, 6, 11}, {2, 5, 8, 12}, {2, 5, 11, 12},
        {1, 3, 6, 15}, {1, 5, 9, 14}, {2, 4, 8, 12}, {3, 4, 6, 11},
        {5, 8, 9, 14}, {8, 9, 14, 15}, {2, 4, 11, 12}, {1, 9, 14, 15}}},
      {"EEFFb",
       {{2, 5, 8, 14}, {1, 3, 9, 15}, {2, 4, 6, 11}, {5, 8, 9, 12},
        {1, 6, 14, 15}, {3, 4, 11, 12}}},
      {"EEFG",
       {{5, 9, 12, 13}, {3, 9, 10, 15}, {3, 4, 10, 12}, {3, 11, 12, 13},
        {1, 3, 9, 13}, {6, 14, 15, 16}, {1, 6, 7, 14}, {2, 8, 14, 16},
        {2, 5, 7, 14}, {8, 9, 10, 12}, {2, 4, 6, 16}, {2, 6, 7, 11}}},
      {"EFFG",
       {{8, 9, 10, 15}, {1, 5, 9, 13}, {1, 5, 7, 14}, {2, 4, 8, 16},
        {1, 3, 11, 13}, {2, 5, 7, 11}, {8, 14, 15, 16}, {3, 4, 10, 15},
        {4, 6, 15, 16}, {5, 11, 12, 13}, {1, 6, 7, 11}, {4, 8, 10, 12}}},
      {"FFFGG", {{4, 8, 10, 15, 16}, {1, 5, 7, 11, 13}}},
  };
  return kRows;
}

const std::vector<ClassRow>& Table2() {
  static const std::vector<ClassRow> kRows{
      {"T1", {{"EEFG", 8}, {"EFFG", 8}}},
      {"T2", {{"EEFG", 4}, {"EFFG", 4}}},
      {"T3", {{"EEEG", 4}, {"FFFGG", 4}}},
      {"T4", {{"EEFFa", 2}, {"EEFFb", 2}}},
      {"T5", {{"EEFFa", 4}}},
      {"T6", {{"EEFFa", 4}, {"EEFFb", 4}}},
      {"T7", {{"EEFFa", 2}}},
  };
  return kRows;
}

const std::vector<std::string>& PlaneTypeNames() {
  static const std::vector<std::string> kNames{"EEEG", "EEFFa", "EEFFb",
                                               "EEFG", "EFFG",  "FFFGG"};
  return kNames;
}

}  // namespace tropd4::reference
