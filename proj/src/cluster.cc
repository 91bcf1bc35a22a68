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

#include "tropd4/cluster.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

#include "tropd4/error.h"

namespace tropd4 {
namespace {

Side Swap(Side s) { return s == Side::kLeft ? Side::kRight : Side::kLeft; }

// Strictly inside the counterclockwise open arc from `from` of length `len`.
bool OnArc(int v, int from, int len, int size) {
  const int offset = ((v - from) % size + size) % size;
  return offset > 0 && offset < len;
}

}  // namespace

bool Pseudotriangulation::Contains(const ChordPair& p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

std::vector<int> FlipGraph::Degrees() const {
  std::vector<int> degree(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  return degree;
}

bool FlipGraph::Connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == vertices.size();
}

Configuration::Configuration(int n) : n_(n) {
  if (n < 3) {
    throw Error("InvalidRank", "type D_n needs n >= 3, got " + std::to_string(n));
  }
}

int Configuration::Mod(int v) const {
  const int size = vertex_count();
  return ((v % size) + size) % size;
}

Chord Configuration::Polygon(int a, int b) const {
  const Chord c = PolygonChord{std::min(Mod(a), Mod(b)), std::max(Mod(a), Mod(b))};
  if (!IsValid(c)) {
    throw Error("InvalidChord", "no polygon chord between " + VertexLabel(Mod(a)) +
                                    " and " + VertexLabel(Mod(b)));
  }
  return c;
}

Chord Configuration::Central(int p, Side side) const {
  return CentralChord{Mod(p), side};
}

bool Configuration::IsValid(const Chord& c) const {
  if (const auto* pc = std::get_if<PolygonChord>(&c)) {
    if (pc->p < 0 || pc->q >= vertex_count() || pc->p >= pc->q) return false;
    const int d = pc->q - pc->p;
    const int cyclic = std::min(d, vertex_count() - d);
    return cyclic >= 2 && cyclic != n_;
  }
  const auto& cc = std::get<CentralChord>(c);
  return cc.p >= 0 && cc.p < vertex_count();
}

Chord Configuration::Symmetric(const Chord& c) const {
  if (const auto* pc = std::get_if<PolygonChord>(&c)) {
    const int a = Antipode(pc->p), b = Antipode(pc->q);
    return PolygonChord{std::min(a, b), std::max(a, b)};
  }
  const auto& cc = std::get<CentralChord>(c);
  return CentralChord{Antipode(cc.p), cc.side};
}

ChordPair Configuration::Pair(const Chord& c) const {
  return ChordPair{std::min(c, Symmetric(c))};
}

bool Configuration::Crossing(const Chord& a, const Chord& b) const {
  const int size = vertex_count();
  const auto* pa = std::get_if<PolygonChord>(&a);
  const auto* pb = std::get_if<PolygonChord>(&b);
  if (pa && pb) {
    if (pa->p == pb->p || pa->p == pb->q || pa->q == pb->p || pa->q == pb->q) {
      return false;
    }
    const bool first = pa->p < pb->p && pb->p < pa->q;
    const bool second = pa->p < pb->q && pb->q < pa->q;
    return first != second;
  }
  if (pa || pb) {
    const PolygonChord& poly = pa ? *pa : *pb;
    const CentralChord& cent = std::get<CentralChord>(pa ? b : a);
    // The central chord crosses iff its vertex lies on the short side of the
    // polygon chord, away from the disk.
    const int forward = poly.q - poly.p;
    if (forward < n_) return OnArc(cent.p, poly.p, forward, size);
    return OnArc(cent.p, poly.q, size - forward, size);
  }
  const auto& ca = std::get<CentralChord>(a);
  const auto& cb = std::get<CentralChord>(b);
  if (ca.p == cb.p || ca.side == cb.side) return false;
  // Opposite sides: p^R meets q^L near the disk iff q lies strictly within
  // the half-turn counterclockwise from p.
  const CentralChord& right = ca.side == Side::kRight ? ca : cb;
  const CentralChord& left = ca.side == Side::kRight ? cb : ca;
  return OnArc(left.p, right.p, n_, size);
}

bool Configuration::Compatible(const ChordPair& a, const ChordPair& b) const {
  const Chord& x = a.representative;
  const Chord& y = b.representative;
  // Crossing(x bar, y bar) == Crossing(x, y) by the half-turn.
  return !Crossing(x, y) && !Crossing(x, Symmetric(y));
}

int Configuration::PairCrossingCount(const ChordPair& a,
                                     const ChordPair& b) const {
  if (a == b) {
    throw Error("SamePair", "crossing count of " + Format(a) + " with itself");
  }
  const Chord& x = a.representative;
  return static_cast<int>(Crossing(x, b.representative)) +
         static_cast<int>(Crossing(x, Symmetric(b.representative)));
}

std::vector<ChordPair> Configuration::AllChordPairs() const {
  std::set<ChordPair> pairs;
  for (int p = 0; p < vertex_count(); ++p) {
    for (int q = p + 1; q < vertex_count(); ++q) {
      const Chord c = PolygonChord{p, q};
      if (IsValid(c)) pairs.insert(Pair(c));
    }
    pairs.insert(Pair(CentralChord{p, Side::kLeft}));
    pairs.insert(Pair(CentralChord{p, Side::kRight}));
  }
  return {pairs.begin(), pairs.end()};
}

std::vector<Pseudotriangulation>
Configuration::EnumeratePseudotriangulations() const {
  const std::vector<ChordPair> pairs = AllChordPairs();
  const int m = static_cast<int>(pairs.size());
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      compatible[i][j] = i != j && Compatible(pairs[i], pairs[j]);
    }
  }
  // Bron-Kerbosch without pivoting; at most 25 vertices in the tested range.
  std::vector<Pseudotriangulation> out;
  std::vector<int> clique;
  auto expand = [&](auto&& self, std::vector<int> candidates,
                    std::vector<int> excluded) -> void {
    if (candidates.empty() && excluded.empty()) {
      Pseudotriangulation t;
      for (int i : clique) t.pairs.push_back(pairs[i]);
      std::sort(t.pairs.begin(), t.pairs.end());
      out.push_back(std::move(t));
      return;
    }
    while (!candidates.empty()) {
      const int v = candidates.front();
      std::vector<int> next_candidates, next_excluded;
      for (int w : candidates) {
        if (compatible[v][w]) next_candidates.push_back(w);
      }
      for (int w : excluded) {
        if (compatible[v][w]) next_excluded.push_back(w);
      }
      clique.push_back(v);
      self(self, std::move(next_candidates), std::move(next_excluded));
      clique.pop_back();
      candidates.erase(candidates.begin());
      excluded.push_back(v);
    }
  };
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  expand(expand, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

FlipResult Configuration::Flip(const Pseudotriangulation& t,
                               const ChordPair& p) const {
  if (!t.Contains(p)) {
    throw Error("NotInPseudotriangulation",
                Format(p) + " is not in {" + Format(t) + "}");
  }
  std::vector<ChordPair> rest;
  for (const ChordPair& q : t.pairs) {
    if (q != p) rest.push_back(q);
  }
  std::vector<ChordPair> entering;
  for (const ChordPair& candidate : AllChordPairs()) {
    if (candidate == p || t.Contains(candidate)) continue;
    bool ok = true;
    for (const ChordPair& q : rest) {
      if (!Compatible(candidate, q)) {
        ok = false;
        break;
      }
    }
    if (ok) entering.push_back(candidate);
  }
  if (entering.size() != 1) {
    throw Error("FlipNotUnique", "flipping " + Format(p) + " in {" + Format(t) +
                                     "} has " + std::to_string(entering.size()) +
                                     " completions");
  }
  rest.push_back(entering.front());
  std::sort(rest.begin(), rest.end());
  return FlipResult{Pseudotriangulation{std::move(rest)}, entering.front()};
}

FlipGraph Configuration::MakeFlipGraph() const {
  FlipGraph g;
  g.vertices = EnumeratePseudotriangulations();
  std::map<Pseudotriangulation, int> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    index.emplace(g.vertices[i], static_cast<int>(i));
  }
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (const ChordPair& p : g.vertices[i].pairs) {
      const int j = index.at(Flip(g.vertices[i], p).result);
      edges.emplace(std::min<int>(i, j), std::max<int>(i, j));
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

Chord Configuration::Apply(const SymmetryOp& op, const Chord& c) const {
  auto vertex = [&](int v) {
    switch (op.kind) {
      case SymmetryOp::Kind::kRho:
      case SymmetryOp::Kind::kTau:
        return Mod(v + 1);
      case SymmetryOp::Kind::kReflect:
        return Mod(op.axis - v);
      case SymmetryOp::Kind::kSigma:
        return v;
    }
    return v;
  };
  const bool swap_sides = op.kind != SymmetryOp::Kind::kRho;
  if (const auto* pc = std::get_if<PolygonChord>(&c)) {
    const int a = vertex(pc->p), b = vertex(pc->q);
    return PolygonChord{std::min(a, b), std::max(a, b)};
  }
  const auto& cc = std::get<CentralChord>(c);
  return CentralChord{vertex(cc.p), swap_sides ? Swap(cc.side) : cc.side};
}

ChordPair Configuration::Apply(const SymmetryOp& op, const ChordPair& p) const {
  return Pair(Apply(op, p.representative));
}

Pseudotriangulation Configuration::Apply(const SymmetryOp& op,
                                         const Pseudotriangulation& t) const {
  Pseudotriangulation out;
  for (const ChordPair& p : t.pairs) out.pairs.push_back(Apply(op, p));
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::vector<SymmetryOp> Configuration::FullSymmetryGroupGenerators() const {
  std::vector<SymmetryOp> ops{SymmetryOp::Rho()};
  for (int a = 0; a < vertex_count(); ++a) ops.push_back(SymmetryOp::Reflect(a));
  ops.push_back(SymmetryOp::Tau());
  ops.push_back(SymmetryOp::Sigma());
  return ops;
}

std::vector<SymmetryOp> Configuration::ParityPreservingGenerators() const {
  std::vector<SymmetryOp> ops;
  for (int a = 0; a < vertex_count(); a += 2) ops.push_back(SymmetryOp::Reflect(a));
  ops.push_back(SymmetryOp::Sigma());
  return ops;
}

std::string Configuration::VertexLabel(int v) const {
  std::string s = std::to_string(v % n_);
  if (v >= n_) s += 'b';
  return s;
}

std::string Configuration::Format(const Chord& c) const {
  if (const auto* pc = std::get_if<PolygonChord>(&c)) {
    return VertexLabel(pc->p) + VertexLabel(pc->q);
  }
  const auto& cc = std::get<CentralChord>(c);
  return VertexLabel(cc.p) + (cc.side == Side::kLeft ? "L" : "R");
}

std::string Configuration::Format(const ChordPair& p) const {
  return Format(p.representative);
}

std::string Configuration::Format(const Pseudotriangulation& t) const {
  std::string s;
  for (std::size_t i = 0; i < t.pairs.size(); ++i) {
    if (i) s += ',';
    s += Format(t.pairs[i]);
  }
  return s;
}

Chord Configuration::ParseChord(std::string_view text) const {
  std::size_t pos = 0;
  auto fail = [&]() -> Error {
    return Error("ParseError", "bad chord '" + std::string(text) + "'");
  };
  auto vertex = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    // Labels are single digits for n <= 10; longer runs are ambiguous.
    if (pos == start) throw fail();
    if (n_ <= 10) pos = start + 1;
    const int label = std::stoi(std::string(text.substr(start, pos - start)));
    if (label >= n_) throw fail();
    if (pos < text.size() && text[pos] == 'b') {
      ++pos;
      return label + n_;
    }
    return label;
  };
  const int first = vertex();
  if (pos < text.size() && (text[pos] == 'L' || text[pos] == 'R')) {
    const Side side = text[pos] == 'L' ? Side::kLeft : Side::kRight;
    if (++pos != text.size()) throw fail();
    return CentralChord{first, side};
  }
  const int second = vertex();
  if (pos != text.size()) throw fail();
  return Polygon(first, second);
}

Pseudotriangulation Configuration::ParsePseudotriangulation(
    std::string_view text) const {
  Pseudotriangulation t;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) t.pairs.push_back(Pair(ParseChord(token)));
    start = end + 1;
  }
  std::sort(t.pairs.begin(), t.pairs.end());
  t.pairs.erase(std::unique(t.pairs.begin(), t.pairs.end()), t.pairs.end());
  return t;
}

std::vector<std::vector<int>> ClassifyModulo(
    const Configuration& config, const std::vector<Pseudotriangulation>& items,
    const std::vector<SymmetryOp>& generators) {
  std::map<Pseudotriangulation, int> index;
  for (std::size_t i = 0; i < items.size(); ++i) {
    index.emplace(items[i], static_cast<int>(i));
  }
  std::vector<int> orbit_of(items.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (std::size_t start = 0; start < items.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{static_cast<int>(start)};
    orbit_of[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const SymmetryOp& g : generators) {
        const auto it = index.find(config.Apply(g, items[orbit[k]]));
        if (it == index.end()) {
          throw Error("NotClosed", "generator maps {" +
                                       config.Format(items[orbit[k]]) +
                                       "} outside the input set");
        }
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = id;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace tropd4
