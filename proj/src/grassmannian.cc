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

#include "tropd4/grassmannian.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "tropd4/error.h"

namespace tropd4 {
namespace {

Error ParseFailure(std::string_view what, std::string_view text) {
  return Error("ParseError",
               "bad " + std::string(what) + " '" + std::string(text) + "'");
}

std::string StripSpaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  return s;
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// "2x1+x2", "0", "-x3".
std::string FormToString(std::span<const Integer> f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Integer& c = f[i];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    const Integer a = abs(c);
    if (a != 1) s += a.get_str();
    s += 'x';
    s += std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

IntVector ParseForm(std::string_view text) {
  const SymbolicPolynomial p = SymbolicPolynomial::Parse(text);
  IntVector form(4, Integer(0));
  for (const auto& [e, c] : p.terms) {
    int degree = 0, var = -1;
    for (int i = 0; i < 4; ++i) {
      degree += e[i];
      if (e[i] != 0) var = i;
    }
    if (degree != 1) throw ParseFailure("linear form", text);
    form[var] = c;
  }
  return form;
}

// Region variable of the web diagram in strip c (between grid columns c and
// c+1) and row band r (between grid rows r and r+1).
int RegionVariable(int strip, int band) {
  static constexpr int kVar[2][2] = {{3, 2}, {1, 0}};  // x4 x3 / x2 x1
  return kVar[strip][band];
}

// Sum over lattice paths from grid node (2, row) to (column, 2), moving left
// or down. A left step into strip c at grid row r puts the regions of that
// strip in bands >= r below the path.
SymbolicPolynomial PathSum(int source_row, int sink_column) {
  SymbolicPolynomial total;
  std::function<void(int, int, Exponent)> walk = [&](int c, int r, Exponent e) {
    if (c == sink_column && r == 2) {
      total = total + SymbolicPolynomial::Monomial(e);
      return;
    }
    if (r < 2) walk(c, r + 1, e);
    if (c > sink_column) {
      Exponent next = e;
      for (int band = r; band < 2; ++band) ++next[RegionVariable(c - 1, band)];
      walk(c - 1, r, next);
    }
  };
  walk(2, source_row, Exponent{});
  return total;
}

}  // namespace

SymbolicPolynomial SymbolicPolynomial::Constant(long c) {
  return Monomial(Exponent{}, c);
}

SymbolicPolynomial SymbolicPolynomial::Monomial(const Exponent& e, long c) {
  SymbolicPolynomial p;
  if (c != 0) p.terms[e] = c;
  return p;
}

SymbolicPolynomial SymbolicPolynomial::operator+(
    const SymbolicPolynomial& o) const {
  SymbolicPolynomial r = *this;
  for (const auto& [e, c] : o.terms) {
    if ((r.terms[e] += c) == 0) r.terms.erase(e);
  }
  return r;
}

SymbolicPolynomial SymbolicPolynomial::operator-() const {
  SymbolicPolynomial r = *this;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

SymbolicPolynomial SymbolicPolynomial::operator-(
    const SymbolicPolynomial& o) const {
  return *this + (-o);
}

SymbolicPolynomial SymbolicPolynomial::operator*(
    const SymbolicPolynomial& o) const {
  SymbolicPolynomial r;
  for (const auto& [ea, ca] : terms) {
    for (const auto& [eb, cb] : o.terms) {
      Exponent e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      r = r + Monomial(e, ca * cb);
    }
  }
  return r;
}

std::string SymbolicPolynomial::ToString() const {
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    const long a = c < 0 ? -c : c;
    const bool constant = e == Exponent{};
    if (a != 1 || constant) s += std::to_string(a);
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      s += 'x';
      s += static_cast<char>('1' + i);
      if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
  }
  return s.empty() ? "0" : s;
}

SymbolicPolynomial SymbolicPolynomial::Parse(std::string_view text) {
  const std::string s = StripSpaces(text);
  if (s.size() >= 3 && s.compare(0, 2, "-(") == 0 && s.back() == ')') {
    return -Parse(std::string_view(s).substr(2, s.size() - 3));
  }
  if (s.empty()) throw ParseFailure("polynomial", text);
  SymbolicPolynomial p;
  std::size_t pos = 0;
  auto number = [&] {
    long v = 0;
    while (pos < s.size() && IsDigit(s[pos])) v = v * 10 + (s[pos++] - '0');
    return v;
  };
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseFailure("polynomial", text);
    }
    const std::size_t start = pos;
    long coeff = 1;
    if (pos < s.size() && IsDigit(s[pos])) coeff = number();
    Exponent e{};
    while (pos < s.size() && s[pos] == 'x') {
      ++pos;
      if (pos >= s.size() || s[pos] < '1' || s[pos] > '4') {
        throw ParseFailure("polynomial", text);
      }
      const int var = s[pos++] - '1';
      int power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !IsDigit(s[pos])) {
          throw ParseFailure("polynomial", text);
        }
        power = static_cast<int>(number());
      }
      e[var] += power;
    }
    if (pos == start) throw ParseFailure("polynomial", text);
    p = p + Monomial(e, sign * coeff);
  }
  return p;
}

Rational TropicalPolynomial::Evaluate(std::span<const Rational> x) const {
  Rational best = Dot(forms.front(), x);
  for (std::size_t i = 1; i < forms.size(); ++i) {
    best = std::min(best, Dot(forms[i], x));
  }
  return best;
}

std::vector<int> TropicalPolynomial::ArgMin(std::span<const Rational> x) const {
  const Rational best = Evaluate(x);
  std::vector<int> hits;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (Dot(forms[i], x) == best) hits.push_back(static_cast<int>(i));
  }
  return hits;
}

std::string TropicalPolynomial::ToString() const {
  if (forms.size() == 1) return FormToString(forms.front());
  std::string s = "min{";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i > 0) s += ',';
    s += FormToString(forms[i]);
  }
  return s + "}";
}

TropicalPolynomial TropicalPolynomial::Parse(std::string_view text) {
  const std::string s = StripSpaces(text);
  TropicalPolynomial p;
  if (s.compare(0, 4, "min{") == 0) {
    if (s.back() != '}') throw ParseFailure("tropical polynomial", text);
    const std::string body = s.substr(4, s.size() - 5);
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      p.forms.push_back(ParseForm(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    p.forms.push_back(ParseForm(s));
  }
  std::sort(p.forms.begin(), p.forms.end());
  if (std::adjacent_find(p.forms.begin(), p.forms.end()) != p.forms.end()) {
    throw ParseFailure("tropical polynomial (repeated form)", text);
  }
  return p;
}

std::string PlueckerIndex::ToString() const {
  return std::to_string(i) + std::to_string(j) + std::to_string(k);
}

PlueckerIndex PlueckerIndex::Parse(std::string_view text) {
  const std::string s = StripSpaces(text);
  if (s.size() != 3) throw ParseFailure("Pluecker index", text);
  int d[3];
  for (int t = 0; t < 3; ++t) {
    if (s[t] < '1' || s[t] > '6') throw ParseFailure("Pluecker index", text);
    d[t] = s[t] - '0';
  }
  if (!(d[0] < d[1] && d[1] < d[2])) throw ParseFailure("Pluecker index", text);
  return {d[0], d[1], d[2]};
}

const std::vector<PlueckerIndex>& AllPlueckerIndices() {
  static const std::vector<PlueckerIndex> kIndices = [] {
    std::vector<PlueckerIndex> v;
    for (int i = 1; i <= 6; ++i) {
      for (int j = i + 1; j <= 6; ++j) {
        for (int k = j + 1; k <= 6; ++k) v.push_back({i, j, k});
      }
    }
    return v;
  }();
  return kIndices;
}

int PlueckerPosition(const PlueckerIndex& idx) {
  const auto& all = AllPlueckerIndices();
  const auto it = std::lower_bound(all.begin(), all.end(), idx);
  if (it == all.end() || *it != idx) {
    throw Error("InvalidIndex", idx.ToString() + " is not a Pluecker index");
  }
  return static_cast<int>(it - all.begin());
}

WebMatrix ComputeWebMatrix() {
  WebMatrix m;
  for (int i = 0; i < 3; ++i) {
    const long sign = i % 2 == 0 ? 1 : -1;
    // Sinks 1..3 sit on the sources' own boundary edges.
    m[i][i] = SymbolicPolynomial::Constant(sign);
    // Sinks 4, 5, 6 leave the bottom of grid columns 2, 1, 0.
    for (int j = 3; j < 6; ++j) {
      m[i][j] = PathSum(i, 5 - j) * SymbolicPolynomial::Constant(sign);
    }
  }
  return m;
}

SymbolicPolynomial Minor(const WebMatrix& m, const PlueckerIndex& idx) {
  const int c[3] = {idx.i - 1, idx.j - 1, idx.k - 1};
  auto at = [&](int r, int k) -> const SymbolicPolynomial& { return m[r][c[k]]; };
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

TropicalPolynomial Tropicalize(const SymbolicPolynomial& p) {
  if (p.terms.empty()) {
    throw Error("PositivityViolated", "polynomial vanishes identically");
  }
  const long unit = p.terms.begin()->second;
  TropicalPolynomial t;
  for (const auto& [e, c] : p.terms) {
    if (c != unit || (c != 1 && c != -1)) {
      throw Error("PositivityViolated",
                  "coefficients of " + p.ToString() + " are not one common unit");
    }
    t.forms.push_back(IntVector(e.begin(), e.end()));
  }
  std::sort(t.forms.begin(), t.forms.end());
  return t;
}

TropicalPolynomial TropicalMinor(const PlueckerIndex& idx) {
  static const std::vector<TropicalPolynomial> kMinors = [] {
    const WebMatrix web = ComputeWebMatrix();
    std::vector<TropicalPolynomial> minors;
    for (const PlueckerIndex& i : AllPlueckerIndices()) {
      minors.push_back(Tropicalize(Minor(web, i)));
    }
    return minors;
  }();
  return kMinors[PlueckerPosition(idx)];
}

Fan LinearityFan(const TropicalPolynomial& p) {
  std::vector<Cone> cones;
  for (std::size_t a = 0; a < p.forms.size(); ++a) {
    std::vector<LinearForm> halfspaces;
    for (std::size_t b = 0; b < p.forms.size(); ++b) {
      if (b == a) continue;
      IntVector diff(4);
      for (int i = 0; i < 4; ++i) diff[i] = p.forms[b][i] - p.forms[a][i];
      halfspaces.push_back(Homogeneous(diff));
    }
    Cone c = Cone::FromHalfspaces(4, std::move(halfspaces));
    if (c.dim() == 4) cones.push_back(std::move(c));
  }
  return MakeFan(4, std::move(cones), true);
}

const Fan& ComputeFanF36() {
  static const Fan kFan = [] {
    std::vector<Cone> current{Cone::FromHalfspaces(4, {})};
    for (const PlueckerIndex& idx : AllPlueckerIndices()) {
      const Fan f = LinearityFan(TropicalMinor(idx));
      if (f.cones.size() == 1) continue;
      std::vector<Cone> next;
      for (const Cone& c : current) {
        for (const Cone& d : f.cones) {
          const Cone meet = IntersectCones(c, d);
          if (meet.dim() != 4) continue;
          // Keep the H side irredundant so later intersections stay small.
          std::vector<LinearForm> facets;
          for (const IntVector& n : meet.Facets()) facets.push_back(Homogeneous(n));
          next.push_back(Cone::FromHalfspaces(4, std::move(facets)));
        }
      }
      current = std::move(next);
    }
    // Distinct linearity regions can share a closure only if they coincide;
    // deduplicate by ray set all the same.
    std::set<std::vector<IntVector>> seen;
    std::vector<Cone> unique;
    for (Cone& c : current) {
      if (seen.insert(c.rays()).second) unique.push_back(std::move(c));
    }
    return MakeFan(4, std::move(unique), true);
  }();
  return kFan;
}

std::vector<Rational> TropPhi2(std::span<const Rational> x) {
  std::vector<Rational> w;
  for (const PlueckerIndex& idx : AllPlueckerIndices()) {
    w.push_back(TropicalMinor(idx).Evaluate(x));
  }
  return w;
}

}  // namespace tropd4
