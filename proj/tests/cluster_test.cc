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
#include <random>
#include <set>

#include "doctest.h"
#include "tropd4/cluster.h"
#include "tropd4/error.h"
#include "tropd4/roots.h"

namespace tropd4 {
namespace {

std::string ErrorKind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

long Binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of clusters of type D_n.
long DClusterCount(int n) { return Binomial(2 * n - 2, n - 1) * (3 * n - 2) / n; }

std::vector<Chord> AllChords(const Configuration& c) {
  std::vector<Chord> chords;
  for (const ChordPair& p : c.AllChordPairs()) {
    chords.push_back(p.representative);
    if (c.Symmetric(p.representative) != p.representative) {
      chords.push_back(c.Symmetric(p.representative));
    }
  }
  return chords;
}

std::set<int> Endpoints(const Chord& c) {
  if (const auto* p = std::get_if<PolygonChord>(&c)) return {p->p, p->q};
  return {std::get<CentralChord>(c).p};
}

TEST_CASE("AllChordPairs") {
  const Configuration d4(4);
  const auto pairs = d4.AllChordPairs();
  CHECK(pairs.size() == 16);
  std::set<std::string> central;
  for (const ChordPair& p : pairs) {
    if (std::holds_alternative<CentralChord>(p.representative)) {
      central.insert(d4.Format(p));
    }
  }
  CHECK(central == std::set<std::string>{"0L", "0R", "1L", "1R", "2L", "2R",
                                         "3L", "3R"});
  // D3: three distance-2 polygon pairs and six central pairs, matching the
  // nine almost positive roots of D3 = A3 (six positive plus three simple).
  CHECK(Configuration(3).AllChordPairs().size() == 9);
  CHECK(ErrorKind([] { Configuration(2); }) == "InvalidRank");
}

TEST_CASE("Crossing examples") {
  const Configuration d4(4);
  CHECK(d4.Crossing(d4.ParseChord("0b2"), d4.ParseChord("13")));
  CHECK_FALSE(d4.Crossing(d4.ParseChord("0L"), d4.ParseChord("0R")));
  CHECK_FALSE(d4.Crossing(d4.ParseChord("03"), d4.ParseChord("13")));
  // Antipodal tangents on opposite sides touch the disk at distinct points.
  CHECK_FALSE(d4.Crossing(d4.ParseChord("0L"), d4.ParseChord("0bR")));
  CHECK(d4.Crossing(d4.ParseChord("0R"), d4.ParseChord("1L")));
  CHECK_FALSE(d4.Crossing(d4.ParseChord("0L"), d4.ParseChord("1R")));
}

TEST_CASE("PairCrossingCount examples") {
  const Configuration d4(4);
  auto pair = [&](const char* s) { return d4.Pair(d4.ParseChord(s)); };
  CHECK(d4.PairCrossingCount(pair("1b2"), pair("03")) == 2);
  CHECK(d4.PairCrossingCount(pair("1b2"), pair("13")) == 1);
  CHECK(d4.PairCrossingCount(pair("0b2"), pair("0L")) == 0);
  CHECK(ErrorKind([&] { d4.PairCrossingCount(pair("03"), pair("03")); }) ==
        "SamePair");
}

TEST_CASE("Property: crossing axioms on sampled chord pairs") {
  std::mt19937_64 rng(4);
  int samples = 0;
  for (int n = 3; n <= 5; ++n) {
    const Configuration c(n);
    const auto chords = AllChords(c);
    for (int s = 0; s < 1000; ++s, ++samples) {
      const Chord& a = chords[rng() % chords.size()];
      const Chord& b = chords[rng() % chords.size()];
      CHECK(c.Crossing(a, b) == c.Crossing(b, a));
      CHECK_FALSE(c.Crossing(a, a));
      const auto ea = Endpoints(a), eb = Endpoints(b);
      std::vector<int> shared;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) CHECK_FALSE(c.Crossing(a, b));
      // Half-turn and the two isometries act on chords directly.
      CHECK(c.Crossing(c.Symmetric(a), c.Symmetric(b)) == c.Crossing(a, b));
      for (const SymmetryOp& op :
           {SymmetryOp::Rho(), SymmetryOp::Reflect(static_cast<int>(rng() % (2 * n)))}) {
        CHECK(c.Crossing(c.Apply(op, a), c.Apply(op, b)) == c.Crossing(a, b));
      }
      // Tau and Sigma act on pairs only.
      const ChordPair pa = c.Pair(a), pb = c.Pair(b);
      if (pa != pb) {
        for (const SymmetryOp& op : c.FullSymmetryGroupGenerators()) {
          CHECK(c.Compatible(c.Apply(op, pa), c.Apply(op, pb)) ==
                c.Compatible(pa, pb));
        }
      }
    }
  }
  CHECK(samples == 3000);
}

TEST_CASE("PairCrossingCount does not depend on the representative") {
  const Configuration d4(4);
  for (const ChordPair& a : d4.AllChordPairs()) {
    for (const ChordPair& b : d4.AllChordPairs()) {
      if (a == b) continue;
      const Chord x = a.representative, xb = d4.Symmetric(x);
      const Chord& y = b.representative;
      const Chord yb = d4.Symmetric(y);
      const int from_x = d4.Crossing(x, y) + d4.Crossing(x, yb);
      const int from_xb = d4.Crossing(xb, y) + d4.Crossing(xb, yb);
      CHECK(from_x == from_xb);
      CHECK(d4.PairCrossingCount(a, b) == from_x);
      CHECK(d4.PairCrossingCount(a, b) == d4.PairCrossingCount(b, a));
    }
  }
}

TEST_CASE("EnumeratePseudotriangulations") {
  for (int n = 3; n <= 5; ++n) {
    const Configuration c(n);
    const auto ts = c.EnumeratePseudotriangulations();
    CHECK(static_cast<long>(ts.size()) == DClusterCount(n));
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    for (const auto& t : ts) CHECK(static_cast<int>(t.pairs.size()) == n);
  }
  const Configuration d4(4);
  const auto ts = d4.EnumeratePseudotriangulations();
  CHECK(ts.size() == 50);
  CHECK(std::binary_search(ts.begin(), ts.end(),
                           d4.ParsePseudotriangulation("0L,0R,03,13")));
}

TEST_CASE("Flip") {
  const Configuration d4(4);
  const auto ts = d4.EnumeratePseudotriangulations();
  SUBCASE("involution on every (t, p)") {
    for (const auto& t : ts) {
      for (const ChordPair& p : t.pairs) {
        const FlipResult f = d4.Flip(t, p);
        CHECK(f.entering != p);
        CHECK(std::binary_search(ts.begin(), ts.end(), f.result));
        const FlipResult back = d4.Flip(f.result, f.entering);
        CHECK(back.result == t);
        CHECK(back.entering == p);
        std::vector<ChordPair> common;
        std::set_intersection(t.pairs.begin(), t.pairs.end(),
                              f.result.pairs.begin(), f.result.pairs.end(),
                              std::back_inserter(common));
        CHECK(common.size() == 3);
      }
    }
  }
  SUBCASE("snake flip matches the unique brute-force completion") {
    const auto snake = d4.ParsePseudotriangulation("0L,0R,03,13");
    const ChordPair leaving = d4.Pair(d4.ParseChord("13"));
    std::vector<ChordPair> rest;
    for (const ChordPair& p : snake.pairs) {
      if (p != leaving) rest.push_back(p);
    }
    std::vector<ChordPair> completions;
    for (const ChordPair& q : d4.AllChordPairs()) {
      if (q == leaving || snake.Contains(q)) continue;
      bool ok = true;
      for (const ChordPair& r : rest) {
        for (const Chord& x : {q.representative, d4.Symmetric(q.representative)}) {
          for (const Chord& y : {r.representative, d4.Symmetric(r.representative)}) {
            if (d4.Crossing(x, y)) ok = false;
          }
        }
      }
      if (ok) completions.push_back(q);
    }
    REQUIRE(completions.size() == 1);
    CHECK(d4.Flip(snake, leaving).entering == completions.front());
  }
  SUBCASE("flipping 2L in {1L, 2L, 0b2, 1b2}") {
    const auto t = d4.ParsePseudotriangulation("1L,2L,0b2,1b2");
    REQUIRE(std::binary_search(ts.begin(), ts.end(), t));
    const FlipResult f = d4.Flip(t, d4.Pair(d4.ParseChord("2L")));
    CHECK(std::binary_search(ts.begin(), ts.end(), f.result));
  }
  SUBCASE("leaving pair must belong to t") {
    const auto snake = d4.ParsePseudotriangulation("0L,0R,03,13");
    CHECK(ErrorKind([&] { d4.Flip(snake, d4.Pair(d4.ParseChord("02"))); }) ==
          "NotInPseudotriangulation");
  }
}

TEST_CASE("FlipGraph") {
  const FlipGraph g4 = Configuration(4).MakeFlipGraph();
  CHECK(g4.vertices.size() == 50);
  CHECK(g4.edges.size() == 100);
  for (int d : g4.Degrees()) CHECK(d == 4);
  CHECK(g4.Connected());

  const FlipGraph g3 = Configuration(3).MakeFlipGraph();
  CHECK(g3.vertices.size() == 14);
  CHECK(g3.edges.size() == 21);
  for (int d : g3.Degrees()) CHECK(d == 3);
  CHECK(g3.Connected());
}

TEST_CASE("Symmetry operations") {
  const Configuration d4(4);
  CHECK(d4.Apply(SymmetryOp::Tau(), d4.ParseChord("03")) == d4.ParseChord("10b"));
  CHECK(d4.Apply(SymmetryOp::Tau(), d4.ParseChord("0R")) == d4.ParseChord("1L"));
  CHECK(d4.Apply(SymmetryOp::Reflect(0), d4.ParseChord("1L")) ==
        d4.ParseChord("3bR"));
  const auto ts = d4.EnumeratePseudotriangulations();
  for (const auto& t : ts) {
    CHECK(d4.Apply(SymmetryOp::Sigma(), d4.Apply(SymmetryOp::Sigma(), t)) == t);
    for (const SymmetryOp& op : d4.FullSymmetryGroupGenerators()) {
      CHECK(std::binary_search(ts.begin(), ts.end(), d4.Apply(op, t)));
    }
  }
}

TEST_CASE("ClassifyModulo") {
  const Configuration d4(4);
  const auto ts = d4.EnumeratePseudotriangulations();
  auto sizes = [](const std::vector<std::vector<int>>& orbits) {
    std::multiset<std::size_t> s;
    for (const auto& o : orbits) s.insert(o.size());
    return s;
  };
  const auto full = ClassifyModulo(d4, ts, d4.FullSymmetryGroupGenerators());
  CHECK(full.size() == 7);
  CHECK(sizes(full) == std::multiset<std::size_t>{16, 8, 8, 8, 4, 4, 2});
  for (std::size_t i = 1; i < full.size(); ++i) CHECK(full[i - 1][0] < full[i][0]);

  // Tau and reflections alone give the same partition.
  std::vector<SymmetryOp> smaller{SymmetryOp::Tau()};
  for (int a = 0; a < 8; ++a) smaller.push_back(SymmetryOp::Reflect(a));
  CHECK(ClassifyModulo(d4, ts, smaller) == full);

  CHECK(ClassifyModulo(d4, ts, {}).size() == 50);
}

TEST_CASE("RootOfPair") {
  const Configuration d4(4);
  auto root = [&](const char* chord) {
    return RootOfPair(d4, d4.Pair(d4.ParseChord(chord))).ToString();
  };
  CHECK(root("1b2") == "a1+2a2+a3+a4");
  CHECK(root("03") == "-a2");
  CHECK(root("3R") == "a3");

  // The printed chord/root columns of the ray bijection table.
  const std::map<std::string, std::string> printed{
      {"13", "-a1"},       {"02b", "a1+a2"},       {"3R", "a3"},
      {"2R", "a1+a2+a3"},  {"0L", "-a3"},          {"1R", "a2+a3"},
      {"01b", "a2"},       {"2L", "a1+a2+a4"},     {"3L", "a4"},
      {"23b", "a1+a2+a3+a4"}, {"0R", "-a4"},       {"02", "a1"},
      {"03", "-a2"},       {"1L", "a2+a4"},        {"13b", "a2+a3+a4"},
      {"12b", "a1+2a2+a3+a4"},
  };
  std::set<Root> image;
  for (const ChordPair& p : d4.AllChordPairs()) {
    const Root r = RootOfPair(d4, p);
    image.insert(r);
    REQUIRE(printed.count(d4.Format(p)) == 1);
    CHECK(printed.at(d4.Format(p)) == r.ToString());
    CHECK(PairOfRoot(d4, r) == p);
  }
  const auto& apr = AlmostPositiveRootsD4();
  CHECK(image == std::set<Root>(apr.begin(), apr.end()));
  CHECK(ErrorKind([] { RootOfPair(Configuration(3), {}); }) == "InvalidRank");
}

TEST_CASE("Root text round trip") {
  for (const Root& r : AlmostPositiveRootsD4()) {
    CHECK(Root::Parse(r.ToString()) == r);
  }
  CHECK(ErrorKind([] { Root::Parse("a5"); }) == "ParseError");
}

TEST_CASE("CompatibilityDegree") {
  const Configuration d4(4);
  auto deg = [&](const char* a, const char* b) {
    return CompatibilityDegree(d4, Root::Parse(a), Root::Parse(b));
  };
  CHECK(deg("-a2", "a1+2a2+a3+a4") == 2);
  CHECK(deg("-a1", "a2+a3+a4") == 0);
  CHECK(deg("-a3", "-a3") == -1);

  const auto& roots = AlmostPositiveRootsD4();
  SUBCASE("relation (-ai || b) = b_i for every i and b") {
    for (int i = 1; i <= 4; ++i) {
      for (const Root& b : roots) {
        CHECK(CompatibilityDegree(d4, NegativeSimple(i), b) == b.coeffs[i - 1]);
      }
    }
  }
  SUBCASE("relation (a || b) = (tau a || tau b) for all pairs") {
    for (const Root& a : roots) {
      for (const Root& b : roots) {
        CHECK(CompatibilityDegree(d4, a, b) ==
              CompatibilityDegree(d4, TauRoot(d4, a), TauRoot(d4, b)));
      }
    }
  }
  SUBCASE("-a1 is compatible with exactly nine roots") {
    std::set<std::string> partners;
    for (const Root& b : roots) {
      if (Compatible(d4, NegativeSimple(1), b)) partners.insert(b.ToString());
    }
    CHECK(partners == std::set<std::string>{"-a2", "-a3", "-a4", "a2", "a2+a3",
                                            "a2+a4", "a2+a3+a4", "a3", "a4"});
  }
}

TEST_CASE("ClusterComplex") {
  const Configuration d4(4);
  const SimplicialComplex cc = ClusterComplex(d4);
  CHECK(cc.FVector() == std::vector<std::size_t>{16, 66, 100, 50});
  const auto facets = cc.Facets();
  const auto& roots = AlmostPositiveRootsD4();
  std::set<std::vector<Root>> facet_roots;
  for (const auto& f : facets) {
    CHECK(f.size() == 4);
    std::vector<Root> rs;
    for (int i : f) rs.push_back(roots[i]);
    std::sort(rs.begin(), rs.end());
    facet_roots.insert(rs);
  }
  std::set<std::vector<Root>> clusters;
  for (const auto& t : d4.EnumeratePseudotriangulations()) {
    clusters.insert(ClusterOf(d4, t));
  }
  CHECK(facet_roots == clusters);

  std::vector<std::string> example;
  for (const Root& r : ClusterOf(d4, d4.ParsePseudotriangulation("1L,2L,0b2,1b2"))) {
    example.push_back(r.ToString());
  }
  std::sort(example.begin(), example.end());
  CHECK(example == std::vector<std::string>{"a1+2a2+a3+a4", "a1+a2", "a1+a2+a4",
                                            "a2+a4"});

  // Flip edges are exactly the pairs of facets sharing a ridge.
  const FlipGraph g = d4.MakeFlipGraph();
  std::set<std::pair<std::vector<Root>, std::vector<Root>>> flip_edges, ridges;
  for (const auto& [a, b] : g.edges) {
    auto ra = ClusterOf(d4, g.vertices[a]), rb = ClusterOf(d4, g.vertices[b]);
    flip_edges.emplace(std::min(ra, rb), std::max(ra, rb));
  }
  const std::vector<std::vector<Root>> fr(facet_roots.begin(), facet_roots.end());
  for (std::size_t i = 0; i < fr.size(); ++i) {
    for (std::size_t j = i + 1; j < fr.size(); ++j) {
      std::vector<Root> common;
      std::set_intersection(fr[i].begin(), fr[i].end(), fr[j].begin(),
                            fr[j].end(), std::back_inserter(common));
      if (common.size() == 3) ridges.emplace(fr[i], fr[j]);
    }
  }
  CHECK(flip_edges == ridges);
}

TEST_CASE("Chord text syntax") {
  const Configuration d4(4);
  for (const ChordPair& p : d4.AllChordPairs()) {
    CHECK(d4.Pair(d4.ParseChord(d4.Format(p))) == p);
  }
  CHECK(ErrorKind([&] { d4.ParseChord("04"); }) == "ParseError");
  CHECK(ErrorKind([&] { d4.ParseChord("0b0"); }) == "InvalidChord");
  CHECK(ErrorKind([&] { d4.ParseChord("01"); }) == "InvalidChord");
  CHECK(ErrorKind([&] { d4.ParseChord("0X"); }) == "ParseError");
}

}  // namespace
}  // namespace tropd4
