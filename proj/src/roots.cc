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

#include "tropd4/roots.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "tropd4/error.h"

namespace tropd4 {
namespace {

void RequireD4(const Configuration& config) {
  if (config.n() != 4) {
    throw Error("InvalidRank",
                "root labels are defined for D4 only, got n = " +
                    std::to_string(config.n()));
  }
}

}  // namespace

bool Root::IsNegativeSimple() const {
  int negatives = 0, nonzero = 0;
  for (int c : coeffs) {
    negatives += c < 0;
    nonzero += c != 0;
  }
  return negatives == 1 && nonzero == 1;
}

std::string Root::ToString() const {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c);
    s += 'a';
    s += static_cast<char>('1' + i);
  }
  return s.empty() ? "0" : s;
}

Root Root::Parse(std::string_view text) {
  Root r;
  std::size_t pos = 0;
  auto fail = [&] {
    return Error("ParseError", "bad root '" + std::string(text) + "'");
  };
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    int mult = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mult = mult * 10 + (text[pos] - '0');
      ++pos;
    }
    if (mult == 0) mult = 1;
    if (pos >= text.size() || text[pos] != 'a') throw fail();
    ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '4') throw fail();
    r.coeffs[text[pos] - '1'] += sign * mult;
    ++pos;
  }
  return r;
}

Root NegativeSimple(int i) {
  Root r;
  r.coeffs.at(i - 1) = -1;
  return r;
}

const std::vector<Root>& AlmostPositiveRootsD4() {
  // Positive roots of D4 with branch node a2: the simple roots and the sums
  // over connected subdiagrams, plus a1+2a2+a3+a4.
  static const std::vector<Root> kRoots = [] {
    std::vector<Root> roots;
    for (int i = 1; i <= 4; ++i) roots.push_back(NegativeSimple(i));
    const std::vector<std::array<int, 4>> positive{
        {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
        {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0},
        {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {1, 2, 1, 1},
    };
    for (const auto& c : positive) roots.push_back(Root{c});
    return roots;
  }();
  return kRoots;
}

std::array<ChordPair, 4> SnakePairs(const Configuration& d4) {
  RequireD4(d4);
  return {d4.Pair(d4.Polygon(1, 3)), d4.Pair(d4.Polygon(0, 3)),
          d4.Pair(d4.Central(0, Side::kLeft)),
          d4.Pair(d4.Central(0, Side::kRight))};
}

Pseudotriangulation Snake(const Configuration& d4) {
  const auto snake = SnakePairs(d4);
  Pseudotriangulation t{{snake.begin(), snake.end()}};
  std::sort(t.pairs.begin(), t.pairs.end());
  return t;
}

Root RootOfPair(const Configuration& d4, const ChordPair& p) {
  const auto snake = SnakePairs(d4);
  for (int i = 0; i < 4; ++i) {
    if (snake[i] == p) return NegativeSimple(i + 1);
  }
  Root r;
  for (int i = 0; i < 4; ++i) r.coeffs[i] = d4.PairCrossingCount(p, snake[i]);
  return r;
}

ChordPair PairOfRoot(const Configuration& d4, const Root& r) {
  for (const ChordPair& p : d4.AllChordPairs()) {
    if (RootOfPair(d4, p) == r) return p;
  }
  throw Error("UnknownRoot", r.ToString() + " is not an almost positive root");
}

Root TauRoot(const Configuration& d4, const Root& r) {
  return RootOfPair(d4, d4.Apply(SymmetryOp::Tau(), PairOfRoot(d4, r)));
}

int CompatibilityDegree(const Configuration& d4, const Root& a, const Root& b) {
  if (a == b) return -1;
  return d4.PairCrossingCount(PairOfRoot(d4, a), PairOfRoot(d4, b));
}

bool Compatible(const Configuration& d4, const Root& a, const Root& b) {
  return a != b && CompatibilityDegree(d4, a, b) == 0;
}

std::vector<Root> ClusterOf(const Configuration& d4,
                            const Pseudotriangulation& t) {
  std::vector<Root> roots;
  for (const ChordPair& p : t.pairs) roots.push_back(RootOfPair(d4, p));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::size_t> SimplicialComplex::FVector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces) f.push_back(level.size());
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<std::vector<int>> SimplicialComplex::Facets() const {
  std::vector<std::vector<int>> facets;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    for (const auto& face : faces[k]) {
      bool maximal = true;
      if (k + 1 < faces.size()) {
        for (const auto& bigger : faces[k + 1]) {
          if (std::includes(bigger.begin(), bigger.end(), face.begin(),
                            face.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) facets.push_back(face);
    }
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

SimplicialComplex CliqueComplex(
    std::size_t vertex_count, const std::vector<std::vector<bool>>& adjacent) {
  SimplicialComplex c;
  c.vertex_count = vertex_count;
  std::vector<std::vector<int>> level;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    level.push_back({static_cast<int>(v)});
  }
  while (!level.empty()) {
    c.faces.push_back(level);
    std::vector<std::vector<int>> next;
    for (const auto& face : level) {
      for (int v = face.back() + 1; v < static_cast<int>(vertex_count); ++v) {
        bool ok = true;
        for (int u : face) {
          if (!adjacent[u][v]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::vector<int> bigger = face;
        bigger.push_back(v);
        next.push_back(std::move(bigger));
      }
    }
    level = std::move(next);
  }
  return c;
}

SimplicialComplex ClusterComplex(const Configuration& d4) {
  RequireD4(d4);
  const std::vector<Root>& roots = AlmostPositiveRootsD4();
  std::vector<std::vector<bool>> adjacent(roots.size(),
                                          std::vector<bool>(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      adjacent[i][j] = Compatible(d4, roots[i], roots[j]);
    }
  }
  return CliqueComplex(roots.size(), adjacent);
}

}  // namespace tropd4
