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
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "test_util.h"
#include "tropd4/error.h"
#include "tropd4/matroid.h"

namespace tropd4 {
namespace {

using testing::RaysByLabel;

std::string ErrorKind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

std::vector<PlueckerIndex> Triples(std::initializer_list<const char*> names) {
  std::vector<PlueckerIndex> out;
  for (const char* n : names) out.push_back(PlueckerIndex::Parse(n));
  return out;
}

Vector InteriorOf(std::initializer_list<int> labels) {
  return InteriorPoint(Cone::FromRays(4, RaysByLabel(labels)));
}

Signature SignatureOf(std::initializer_list<int> labels) {
  return SignatureAt(InteriorOf(labels));
}

// Edge-direction criterion: a 0/1 polytope with coordinate sum 3 is a
// matroid polytope iff every edge is parallel to some e_i - e_j.
bool EdgesAreRoots(const std::vector<PlueckerIndex>& bases) {
  std::vector<int> idx;
  for (const PlueckerIndex& b : bases) idx.push_back(PlueckerPosition(b));
  std::sort(idx.begin(), idx.end());
  if (idx.size() == 1) return true;
  const auto& v = HypersimplexVertices();
  for (const auto& face : PolytopeFaces(v, idx)) {
    if (face.size() != 2) continue;
    int nonzero = 0;
    for (int c = 0; c < 6; ++c) nonzero += v[face[0]][c] != v[face[1]][c];
    if (nonzero != 2) return false;
  }
  return true;
}

TEST_CASE("HypersimplexVertices") {
  const auto& v = HypersimplexVertices();
  CHECK(v.size() == 20);
  CHECK(v.front() == ToIntVector({1, 1, 1, 0, 0, 0}));
  for (const IntVector& p : v) {
    Integer sum = 0;
    for (const Integer& x : p) {
      CHECK((x == 0 || x == 1));
      sum += x;
    }
    CHECK(sum == 3);
  }
  std::vector<int> all(20);
  for (int i = 0; i < 20; ++i) all[i] = i;
  const auto f = PolytopeFVector(v, all);
  REQUIRE(f.size() == 6);
  CHECK(f[0] == 20);
  CHECK(f[1] == 90);
  CHECK(f[4] == 12);
  CHECK(f[0] - f[1] + f[2] - f[3] + f[4] == 2);
}

TEST_CASE("IsMatroidBasisSet") {
  CHECK(IsMatroidBasisSet(AllPlueckerIndices()));
  CHECK_FALSE(IsMatroidBasisSet(Triples({"123", "456"})));
  std::vector<PlueckerIndex> with_one;
  for (const PlueckerIndex& t : AllPlueckerIndices()) {
    if (t.i == 1) with_one.push_back(t);
  }
  CHECK(IsMatroidBasisSet(with_one));

  // Agrees with the edge-direction criterion on random triple sets.
  std::mt19937_64 rng(3);
  int matroids = 0;
  for (int s = 0; s < 400; ++s) {
    std::vector<PlueckerIndex> bases;
    const unsigned mask = static_cast<unsigned>(rng() & 0xFFFFF);
    const int keep_all = s % 4 == 0;
    for (int i = 0; i < 20; ++i) {
      if (keep_all || (mask >> i & 1)) bases.push_back(AllPlueckerIndices()[i]);
    }
    if (s % 4 == 1) {
      // Bias towards matroids: drop every triple meeting a random pair.
      const int a = 1 + static_cast<int>(rng() % 6), b = 1 + static_cast<int>(rng() % 6);
      bases.clear();
      for (const PlueckerIndex& t : AllPlueckerIndices()) {
        const bool has_a = t.i == a || t.j == a || t.k == a;
        const bool has_b = t.i == b || t.j == b || t.k == b;
        if (!(has_a && has_b)) bases.push_back(t);
      }
    }
    if (bases.empty()) continue;
    const bool exchange = IsMatroidBasisSet(bases);
    matroids += exchange;
    CHECK(exchange == EdgesAreRoots(bases));
  }
  CHECK(matroids > 100);
}

TEST_CASE("InducedSubdivision") {
  const std::vector<Rational> flat(20, Rational(0));
  const auto trivial = InducedSubdivision(flat);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].bases == AllPlueckerIndices());

  for (const auto& labels : {std::vector<int>{3, 9, 10, 12},
                             std::vector<int>{4, 8, 10, 15, 16}}) {
    const Vector x = InteriorPoint(Cone::FromRays(4, [&] {
      std::vector<IntVector> r;
      for (int l : labels) r.push_back(testing::Ray(l));
      return r;
    }()));
    const auto w = TropPhi2(x);
    const auto cells = InducedSubdivision(w);
    std::set<std::vector<int>> computed;
    for (const auto& c : cells) {
      CHECK(IsMatroidBasisSet(c.bases));
      CHECK(c.bases.size() >= 6);
      std::vector<int> idx;
      for (const auto& b : c.bases) idx.push_back(PlueckerPosition(b));
      computed.insert(idx);
    }
    const LiftedPointSet lift{HypersimplexVertices(), w};
    CHECK(computed == testing::BruteForceLowerCells(lift));
  }
  CHECK(ErrorKind([] { InducedSubdivision(std::vector<Rational>(3)); }) ==
        "DimensionMismatch");
}

TEST_CASE("Property: induced cells cover the hypersimplex") {
  const auto cells = InducedSubdivision(TropPhi2(InteriorOf({5, 9, 12, 13})));
  REQUIRE(cells.size() > 1);
  const auto& v = HypersimplexVertices();
  std::vector<std::vector<int>> idx;
  for (const auto& c : cells) {
    idx.emplace_back();
    for (const auto& b : c.bases) idx.back().push_back(PlueckerPosition(b));
  }
  std::mt19937_64 rng(6);
  for (int s = 0; s < 1000; ++s) {
    Vector x(6, Rational(0));
    Rational total = 0;
    for (int i = 0; i < 20; ++i) {
      const Rational lambda = static_cast<long>(rng() % 4);
      total += lambda;
      for (int c = 0; c < 6; ++c) x[c] += lambda * v[i][c];
    }
    if (total == 0) {
      x = ToVector(v[0]);
      total = 1;
    }
    for (auto& c : x) c /= total;
    bool covered = false;
    for (const auto& cell : idx) {
      if (PolytopeContains(v, cell, x)) {
        covered = true;
        break;
      }
    }
    CHECK(covered);
  }
}

TEST_CASE("SubdivisionSignature") {
  const Signature trivial =
      SubdivisionSignature({SubdivisionCell{AllPlueckerIndices()}});
  REQUIRE(trivial.cells.size() == 1);
  CHECK(trivial.cells[0].vertex_count == 20);
  CHECK(trivial.cells[0].fvector.front() == 20);
  CHECK(trivial.intersection_dims.empty());
  CHECK(trivial.incidences.empty());

  const Signature eeffa1 = SignatureOf({3, 4, 6, 15});
  const Signature eeffa2 = SignatureOf({1, 3, 6, 11});
  const Signature eeffb = SignatureOf({2, 5, 8, 14});
  CHECK(eeffa1 == eeffa2);
  CHECK(eeffa1 != eeffb);
  const auto& a = eeffa1.intersection_dims;
  const auto& b = eeffb.intersection_dims;
  CHECK(std::count(a.begin(), a.end(), -1) >= 1);
  CHECK(std::count(b.begin(), b.end(), -1) == 0);
  CHECK(std::count(b.begin(), b.end(), 2) == 3);

  SUBCASE("cell order does not matter") {
    auto cells = InducedSubdivision(TropPhi2(InteriorOf({8, 9, 10, 15})));
    const Signature base = SubdivisionSignature(cells);
    std::mt19937_64 rng(1);
    for (int s = 0; s < 20; ++s) {
      std::shuffle(cells.begin(), cells.end(), rng);
      CHECK(SubdivisionSignature(cells) == base);
    }
  }
}

TEST_CASE("ClassifyPlaneType") {
  auto type = [](std::initializer_list<int> labels) {
    return ClassifyPlaneType(Cone::FromRays(4, RaysByLabel(labels))).name;
  };
  CHECK(type({3, 9, 10, 12}) == "EEEG");
  CHECK(type({1, 5, 7, 11, 13}) == "FFFGG");
  CHECK(type({2, 5, 8, 14}) == "EEFFb");

  const auto& refs = ReferencePlaneTypes();
  CHECK(refs.size() == 6);
  for (std::size_t i = 0; i < refs.size(); ++i) {
    for (std::size_t j = i + 1; j < refs.size(); ++j) {
      CHECK(refs[i].signature != refs[j].signature);
    }
  }
  const Signature trivial =
      SubdivisionSignature({SubdivisionCell{AllPlueckerIndices()}});
  CHECK(ErrorKind([&] { MatchPlaneType(trivial); }) == "UnknownType");
}

TEST_CASE("Property: type is constant on open cones") {
  std::mt19937_64 rng(20);
  for (const auto& labels :
       {std::vector<int>{2, 6, 7, 14}, std::vector<int>{4, 8, 10, 15, 16}}) {
    std::vector<IntVector> rays;
    for (int l : labels) rays.push_back(testing::Ray(l));
    const Signature base = SignatureAt(InteriorPoint(Cone::FromRays(4, rays)));
    for (int s = 0; s < 5; ++s) {
      Vector x(4, Rational(0));
      for (const IntVector& r : rays) {
        const Rational lambda = MakeRational(1 + static_cast<long>(rng() % 9),
                                             1 + static_cast<long>(rng() % 4));
        for (int i = 0; i < 4; ++i) x[i] += lambda * r[i];
      }
      CHECK(SignatureAt(x) == base);
    }
  }
}

}  // namespace
}  // namespace tropd4
