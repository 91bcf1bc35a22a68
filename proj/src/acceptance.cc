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

#include "tropd4/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "tropd4/error.h"
#include "tropd4/grassmannian.h"
#include "tropd4/matroid.h"
#include "tropd4/parallel.h"
#include "tropd4/reference.h"
#include "tropd4/roots.h"

namespace tropd4 {
namespace {

using Clock = std::chrono::steady_clock;

template <typename T>
std::string Join(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Runs body, records time and turns a thrown Error into a failure.
CriterionResult Run(int number, std::string title, double limit,
                    const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.number = number;
  r.title = std::move(title);
  r.limit_seconds = limit;
  r.passed = true;
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0 && r.seconds > limit) {
    r.passed = false;
    r.details.push_back("took " + std::to_string(r.seconds) + " s, limit " +
                        std::to_string(limit) + " s");
  }
  return r;
}

void Expect(CriterionResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.passed = false;
    r.details.push_back(what);
  }
}

void Absorb(CriterionResult& r, const CheckResult& c) {
  if (!c.passed) {
    r.passed = false;
    for (const std::string& d : c.details) r.details.push_back(c.name + ": " + d);
  }
}

Vector RandomPositiveCombination(const std::vector<IntVector>& rays,
                                 std::mt19937_64& rng) {
  Vector x(rays.front().size(), Rational(0));
  for (const IntVector& r : rays) {
    const Rational lambda = MakeRational(1 + static_cast<long>(rng() % 12),
                                         1 + static_cast<long>(rng() % 6));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += lambda * r[i];
  }
  return x;
}

void Criterion1(CriterionResult& r) {
  const Configuration d4(4);
  const FlipGraph g = d4.MakeFlipGraph();
  Expect(r, g.vertices.size() == 50,
         std::to_string(g.vertices.size()) + " pseudotriangulations");
  Expect(r, g.edges.size() == 100, std::to_string(g.edges.size()) + " flip edges");
  const auto degrees = g.Degrees();
  Expect(r, std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 4; }),
         "flip graph is not 4-regular");
  Expect(r, g.Connected(), "flip graph is disconnected");
}

void Criterion2(CriterionResult& r) {
  const auto f = ClusterComplex(Configuration(4)).FVector();
  Expect(r, f == std::vector<std::size_t>{16, 66, 100, 50},
         "cluster complex f-vector " + Join(f));
}

void Criterion3(CriterionResult& r) {
  const Configuration d4(4);
  const auto orbits = ClassifyModulo(d4, d4.EnumeratePseudotriangulations(),
                                     d4.FullSymmetryGroupGenerators());
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.rbegin(), sizes.rend());
  Expect(r, sizes == std::vector<std::size_t>{16, 8, 8, 8, 4, 4, 2},
         "orbit sizes " + Join(sizes));
}

void Criterion4(CriterionResult& r, const PsiTable& psi) {
  const Configuration d4(4);
  for (const std::string& d : PsiTableDiff(psi, d4, ComputeFanF36())) {
    Expect(r, false, "table: " + d);
  }
  // The table must also be the published one, row for row.
  for (const reference::BijectionRow& row : reference::Bijection()) {
    const auto it = std::find_if(psi.entries().begin(), psi.entries().end(),
                                 [&](const PsiEntry& e) { return e.label == row.ray; });
    if (it == psi.entries().end()) {
      Expect(r, false, "r" + std::to_string(row.ray) + " missing");
      continue;
    }
    const std::string printed = row.root + " <-> " + row.chord;
    const std::string got = it->root.ToString() + " <-> " + d4.Format(it->pair);
    const IntVector ray = ToIntVector(reference::Rays().at(row.ray - 1));
    Expect(r, it->ray == ray,
           "r" + std::to_string(row.ray) + " coordinates " + ToString(it->ray) +
               ", printed " + ToString(ray));
    Expect(r, got == printed,
           "r" + std::to_string(row.ray) + ": " + got + ", printed " + printed);
    Expect(r, RootOfPair(d4, d4.Pair(d4.ParseChord(row.chord))).ToString() == row.root,
           "chord " + row.chord + " does not compute to " + row.root);
  }
  const auto& roots = AlmostPositiveRootsD4();
  for (int i = 1; i <= 4; ++i) {
    for (const Root& b : roots) {
      Expect(r, CompatibilityDegree(d4, NegativeSimple(i), b) == b.coeffs[i - 1],
             "relation (1) fails at (-a" + std::to_string(i) + ", " + b.ToString() + ")");
    }
  }
  for (const Root& a : roots) {
    for (const Root& b : roots) {
      Expect(r,
             CompatibilityDegree(d4, a, b) ==
                 CompatibilityDegree(d4, TauRoot(d4, a), TauRoot(d4, b)),
             "relation (2) fails at (" + a.ToString() + ", " + b.ToString() + ")");
    }
  }
}

void Criterion5(CriterionResult& r) {
  const WebMatrix m = ComputeWebMatrix();
  const auto& printed = reference::WebMatrix();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 6; ++j) {
      Expect(r, m[i][j] == SymbolicPolynomial::Parse(printed[i][j]),
             "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") is " + m[i][j].ToString() + ", printed " + printed[i][j]);
    }
  }
  for (const reference::MinorEntry& e : reference::TropicalMinors()) {
    const PlueckerIndex idx = PlueckerIndex::Parse(e.index);
    const TropicalPolynomial got = TropicalMinor(idx);
    Expect(r, got == TropicalPolynomial::Parse(e.value),
           "P" + e.index + " = " + got.ToString() + ", printed " + e.value);
  }
  // Subtraction-free positivity. Column 2 of the printed matrix carries a
  // sign, so minors using it are negated; after rescaling that column by -1
  // (which leaves every tropical minor unchanged) every coefficient is +1.
  int literal = 0;
  for (const PlueckerIndex& idx : AllPlueckerIndices()) {
    const bool uses_column_2 = idx.i == 2 || idx.j == 2 || idx.k == 2;
    const long want = uses_column_2 ? -1 : 1;
    bool all_plus = true;
    for (const auto& [e, c] : Minor(m, idx).terms) {
      Expect(r, c == want, "P" + idx.ToString() + " has coefficient " +
                               std::to_string(c) + " after the column-2 sign");
      all_plus = all_plus && c == 1;
    }
    literal += all_plus;
  }
  r.details.push_back("note: " + std::to_string(literal) +
                      " of 20 minors have all coefficients +1 before the "
                      "column-2 rescaling; all 20 do after it");
}

void Criterion6(CriterionResult& r) {
  const Fan& fan = ComputeFanF36();
  std::set<IntVector> printed;
  for (const auto& ray : reference::Rays()) printed.insert(ToIntVector(ray));
  const std::set<IntVector> got(fan.rays.begin(), fan.rays.end());
  for (const IntVector& v : got) {
    Expect(r, printed.count(v) > 0, "extra ray " + ToString(v));
  }
  for (const IntVector& v : printed) {
    Expect(r, got.count(v) > 0, "missing ray " + ToString(v));
  }
  const auto f = fan.FVector();
  Expect(r, f == std::vector<std::size_t>{16, 66, 98, 48}, "fan f-vector " + Join(f));
  std::set<std::vector<int>> five;
  for (const auto& cone : fan.maximal_cones) {
    if (cone.size() == 4) continue;
    std::vector<int> labels;
    for (int i : cone) labels.push_back(RayLabel(fan.rays[i]));
    std::sort(labels.begin(), labels.end());
    five.insert(labels);
  }
  std::set<std::vector<int>> want;
  for (const auto& b : reference::Bipyramids()) want.insert(b.rays);
  Expect(r, five == want,
         std::to_string(five.size()) + " non-simplicial cones, not the two bipyramids");
}

void RequireAnalysis(const Analysis& a) {
  if (a.fan == nullptr) throw Error("Skipped", "cone classification did not run");
}

void Criterion7(CriterionResult& r, const Analysis& a) {
  RequireAnalysis(a);
  const CheckResult literal = CheckEdgesMinusExceptional(a);
  const CheckResult faithful = CheckClusterFanCorrespondence(a);
  Absorb(r, literal);
  Absorb(r, faithful);
  // The printed exceptional pairs are fan edges, so the literal identity
  // can only fail, and then on exactly those six pairs.
  const bool only_the_six =
      !literal.passed && literal.details.size() == reference::ExceptionalPairs().size() &&
      std::all_of(literal.details.begin(), literal.details.end(),
                  [](const std::string& d) {
                    return d.find("in fan edges but not") != std::string::npos;
                  });
  if (!r.passed && faithful.passed && only_the_six) {
    r.known_unattainable = true;
    r.details.push_back(
        "note: the six printed pairs are compatible and are edges of F36; the "
        "fan has 66 edges and 66 compatible pairs, so 'compatible minus six' "
        "cannot equal the edge set. Edges = compatible pairs holds, and the "
        "split fan matches the 50 clusters.");
  }
}

void Criterion8(CriterionResult& r, const Analysis& a) {
  Absorb(r, CheckTable1(a));
  std::map<std::string, std::size_t> counts;
  for (const auto& [type, cones] : Table1Rows(a)) counts[type] = cones.size();
  const std::map<std::string, std::size_t> want{{"EEEG", 4},  {"EEFFa", 12},
                                                {"EEFFb", 6}, {"EEFG", 12},
                                                {"EFFG", 12}, {"FFFGG", 2}};
  Expect(r, counts == want, "type multiset differs");
}

void Criterion9(CriterionResult& r, std::uint64_t seed) {
  const Fan& fan = ComputeFanF36();
  std::vector<std::string> failures(fan.cones.size());
  ReferencePlaneTypes();
  ParallelFor(fan.cones.size(), [&](std::size_t c) {
    std::mt19937_64 rng(seed * 1000003u + c);
    // SignatureAt throws NotMatroidal on a non-matroid cell.
    const Signature base = SignatureAt(InteriorPoint(fan.cones[c]));
    for (int s = 0; s < kInteriorSamplesPerCone; ++s) {
      const Vector x = RandomPositiveCombination(fan.cones[c].rays(), rng);
      if (SignatureAt(x) != base) {
        failures[c] = "cone " + std::to_string(c) + ": signature changes at " +
                      ToString(x);
        return;
      }
    }
  });
  for (const std::string& f : failures) {
    if (!f.empty()) Expect(r, false, f);
  }
}

void Criterion10(CriterionResult& r, const Analysis& a) {
  RequireAnalysis(a);
  Absorb(r, CheckTable2(a));
}

void Criterion11(CriterionResult& r, const Analysis& a) {
  RequireAnalysis(a);
  Absorb(r, CheckParityReflectionTheorem(a));
}

void GeometryRoundTrip(CriterionResult& r, std::mt19937_64& rng) {
  const Fan& fan = ComputeFanF36();
  std::vector<Cone> from_rays;
  for (const Cone& c : fan.cones) {
    const Cone v = Cone::FromRays(4, c.rays());
    std::vector<LinearForm> h;
    for (const IntVector& n : v.Facets()) h.push_back(Homogeneous(n));
    Expect(r, Cone::FromHalfspaces(4, h).rays() == c.rays(),
           "H/V round trip changes the rays of a cone");
    from_rays.push_back(v);
  }
  for (int s = 0; s < kPropertySamples; ++s) {
    Vector x(4);
    for (auto& v : x) {
      v = MakeRational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    }
    bool covered = false;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
      const bool h = fan.cones[c].Contains(x);
      covered = covered || h;
      if (h != from_rays[c].Contains(x)) {
        Expect(r, false, "H and V membership disagree at " + ToString(x));
      }
    }
    Expect(r, covered, "fan misses " + ToString(x));
  }
}

void SubdivisionCover(CriterionResult& r, std::mt19937_64& rng) {
  const Fan& fan = ComputeFanF36();
  const auto& v = HypersimplexVertices();
  std::vector<std::vector<std::vector<int>>> cells(fan.cones.size());
  ParallelFor(fan.cones.size(), [&](std::size_t c) {
    for (const SubdivisionCell& cell :
         InducedSubdivision(TropPhi2(InteriorPoint(fan.cones[c])))) {
      std::vector<int> idx;
      for (const PlueckerIndex& b : cell.bases) idx.push_back(PlueckerPosition(b));
      cells[c].push_back(idx);
    }
  });
  for (int s = 0; s < kPropertySamples; ++s) {
    const std::size_t c = rng() % cells.size();
    Vector x(6, Rational(0));
    Rational total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational lambda = static_cast<long>(rng() % 4);
      total += lambda;
      for (int k = 0; k < 6; ++k) x[k] += lambda * v[i][k];
    }
    if (total == 0) continue;
    for (auto& coord : x) coord /= total;
    const bool covered = std::any_of(cells[c].begin(), cells[c].end(),
                                     [&](const std::vector<int>& cell) {
                                       return PolytopeContains(v, cell, x);
                                     });
    Expect(r, covered, "subdivision of cone " + std::to_string(c) + " misses " +
                           ToString(x));
  }
}

void CrossingAxioms(CriterionResult& r, std::mt19937_64& rng) {
  for (int n = 3; n <= 5; ++n) {
    const Configuration config(n);
    std::vector<Chord> chords;
    for (const ChordPair& p : config.AllChordPairs()) {
      chords.push_back(p.representative);
      const Chord bar = config.Symmetric(p.representative);
      if (bar != p.representative) chords.push_back(bar);
    }
    for (int s = 0; s < kPropertySamples; ++s) {
      const Chord& a = chords[rng() % chords.size()];
      const Chord& b = chords[rng() % chords.size()];
      const bool cross = config.Crossing(a, b);
      Expect(r, cross == config.Crossing(b, a), "crossing is not symmetric");
      Expect(r, !config.Crossing(a, a), "a chord crosses itself");
      const SymmetryOp reflect = SymmetryOp::Reflect(static_cast<int>(rng() % (2 * n)));
      for (const SymmetryOp& op : {SymmetryOp::Rho(), reflect}) {
        Expect(r, config.Crossing(config.Apply(op, a), config.Apply(op, b)) == cross,
               "an isometry changes crossing of " + config.Format(a) + ", " +
                   config.Format(b));
      }
      const ChordPair pa = config.Pair(a), pb = config.Pair(b);
      if (pa == pb) continue;
      for (const SymmetryOp& op : config.FullSymmetryGroupGenerators()) {
        Expect(r,
               config.Compatible(config.Apply(op, pa), config.Apply(op, pb)) ==
                   config.Compatible(pa, pb),
               "a symmetry changes compatibility of " + config.Format(pa) + ", " +
                   config.Format(pb));
      }
    }
  }
}

void Criterion12(CriterionResult& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeometryRoundTrip(r, rng);
  SubdivisionCover(r, rng);
  CrossingAxioms(r, rng);
  r.details.push_back("note: " + std::to_string(kPropertySamples) +
                      " samples per suite, seed " + std::to_string(seed));
}

}  // namespace

bool AcceptanceRun::AllPassed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

bool AcceptanceRun::OnlyKnownFailures() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) {
    return r.passed || r.known_unattainable;
  });
}

AcceptanceRun RunAcceptance(const AcceptanceOptions& options) {
  AcceptanceRun run;
  const PsiTable psi = options.psi ? *options.psi : PsiTable::Printed(Configuration(4));
  auto& out = run.criteria;
  out.push_back(Run(1, "enumeration and flip graph", kEnumerationLimit, Criterion1));
  out.push_back(Run(2, "cluster complex f-vector", kEnumerationLimit, Criterion2));
  out.push_back(Run(3, "symmetry classes", kEnumerationLimit, Criterion3));
  out.push_back(Run(5, "web matrix, tropical minors, positivity", 0, Criterion5));
  // The fan is computed here first, so this timing covers its construction.
  out.push_back(Run(6, "fan F36", kFanLimit, Criterion6));
  out.push_back(Run(4, "ray / root / chord bijection and compatibility relations", 0,
                    [&](CriterionResult& r) { Criterion4(r, psi); }));
  out.push_back(Run(8, "cone partition into plane types", 0, [&](CriterionResult& r) {
    run.analysis = Analyze(psi);
    Criterion8(r, run.analysis);
  }));
  out.push_back(Run(7, "cone / cluster correspondence", 0,
                    [&](CriterionResult& r) { Criterion7(r, run.analysis); }));
  out.push_back(Run(9, "matroidality and type constancy", kMatroidalityLimit,
                    [&](CriterionResult& r) { Criterion9(r, options.seed); }));
  out.push_back(Run(10, "class x plane type incidence", 0,
                    [&](CriterionResult& r) { Criterion10(r, run.analysis); }));
  out.push_back(Run(11, "parity reflection theorem", 0,
                    [&](CriterionResult& r) { Criterion11(r, run.analysis); }));
  out.push_back(Run(12, "property suites", 0,
                    [&](CriterionResult& r) { Criterion12(r, options.seed); }));
  std::sort(out.begin(), out.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.number < b.number;
            });
  return run;
}

std::string FormatCriterion(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "criterion %2d %s  %7.3f s", r.number,
                r.passed ? "PASS" : "FAIL", r.seconds);
  std::string line = std::string(head) + "  " + r.title;
  if (r.limit_seconds > 0) {
    char limit[32];
    std::snprintf(limit, sizeof limit, " (limit %.0f s)", r.limit_seconds);
    line += limit;
  }
  if (r.known_unattainable) line += "  [unattainable as stated]";
  return line;
}

}  // namespace tropd4
