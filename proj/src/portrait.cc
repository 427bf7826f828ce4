// Copyright 2026 The dynw Authors
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

#include "dynw/portrait.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "dynw/dynatomic.h"
#include "dynw/errors.h"

namespace dynw {

namespace {

// Per-vertex structure shared by canonical labeling and automorphisms.
// Vertices are 0-indexed here.
struct Shape {
  std::vector<bool> periodic;
  std::vector<std::vector<int>> tree_children;  // off-cycle preimages
  std::vector<std::string> code;                // AHU code of hanging tree
  // Each cycle listed from its least-code rotation start.
  std::vector<std::vector<int>> cycles;
};

Shape ComputeShape(const Portrait& p) {
  const int n = p.n();
  Shape s;
  s.periodic = p.Periodic();
  s.tree_children.resize(n);
  for (int v = 0; v < n; ++v) {
    if (!s.periodic[v]) s.tree_children[p.image()[v] - 1].push_back(v);
  }
  const std::vector<int> pre = p.Preperiods();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pre[a] > pre[b]; });
  s.code.assign(n, "");
  for (int v : order) {
    std::vector<std::string> parts;
    for (int u : s.tree_children[v]) parts.push_back(s.code[u]);
    std::sort(parts.begin(), parts.end());
    std::string code = "(";
    for (const auto& part : parts) code += part;
    s.code[v] = code + ")";
  }
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (!s.periodic[v] || seen[v]) continue;
    std::vector<int> cycle;
    for (int w = v; !seen[w]; w = p.image()[w] - 1) {
      seen[w] = true;
      cycle.push_back(w);
    }
    const size_t len = cycle.size();
    auto codes_from = [&](size_t start) {
      std::vector<std::string> out(len);
      for (size_t i = 0; i < len; ++i) out[i] = s.code[cycle[(start + i) % len]];
      return out;
    };
    size_t best = 0;
    std::vector<std::string> best_codes = codes_from(0);
    for (size_t r = 1; r < len; ++r) {
      std::vector<std::string> candidate = codes_from(r);
      if (candidate < best_codes) {
        best_codes = std::move(candidate);
        best = r;
      }
    }
    std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
    s.cycles.push_back(std::move(cycle));
  }
  return s;
}

std::vector<std::string> CycleCodes(const Shape& s, const std::vector<int>& cycle) {
  std::vector<std::string> out;
  for (int v : cycle) out.push_back(s.code[v]);
  return out;
}

// Components sorted by (cycle length descending, code sequence).
std::vector<size_t> ComponentOrder(const Shape& s) {
  std::vector<size_t> order(s.cycles.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (s.cycles[a].size() != s.cycles[b].size()) {
      return s.cycles[a].size() > s.cycles[b].size();
    }
    return CycleCodes(s, s.cycles[a]) < CycleCodes(s, s.cycles[b]);
  });
  return order;
}

// Vertex order used by canonical labeling: per component, cycle vertices
// then breadth-first with children sorted by code.
std::vector<int> CanonicalVisitOrder(const Shape& s) {
  std::vector<int> visit;
  for (size_t c : ComponentOrder(s)) {
    const size_t start = visit.size();
    for (int v : s.cycles[c]) visit.push_back(v);
    for (size_t i = start; i < visit.size(); ++i) {
      std::vector<int> kids = s.tree_children[visit[i]];
      std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
        return s.code[a] < s.code[b];
      });
      for (int k : kids) visit.push_back(k);
    }
  }
  return visit;
}

}  // namespace

Portrait::Portrait(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  for (int t : image_) {
    if (t < 1 || t > n) {
      throw InvalidArgument("portrait image entry " + std::to_string(t) +
                            " outside 1.." + std::to_string(n));
    }
  }
}

Portrait Portrait::Parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("portrait must look like N:t1,...,tN");
  }
  auto parse_int = [](std::string_view s) {
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw ParseError("bad integer '" + std::string(s) + "' in portrait");
    }
    return std::stoi(std::string(s));
  };
  const int n = parse_int(trim(text.substr(0, colon)));
  std::vector<int> image;
  std::string_view rest = trim(text.substr(colon + 1));
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    image.push_back(parse_int(trim(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) throw ParseError("trailing comma in portrait");
  }
  if (static_cast<int>(image.size()) != n) {
    throw ParseError("portrait declares " + std::to_string(n) + " vertices but lists " +
                     std::to_string(image.size()));
  }
  try {
    return Portrait(std::move(image));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string Portrait::ToString() const {
  std::string out = std::to_string(n()) + ":";
  for (size_t i = 0; i < image_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(image_[i]);
  }
  return out;
}

std::vector<int> Portrait::InDegrees() const {
  std::vector<int> deg(n(), 0);
  for (int t : image_) ++deg[t - 1];
  return deg;
}

std::vector<std::vector<int>> Portrait::Preimages() const {
  std::vector<std::vector<int>> pre(n());
  for (int v = 1; v <= n(); ++v) pre[Image(v) - 1].push_back(v);
  return pre;
}

std::vector<bool> Portrait::Periodic() const {
  const int size = n();
  std::vector<bool> periodic(size, false);
  for (int v = 0; v < size; ++v) {
    int w = v;
    for (int step = 0; step < size; ++step) w = image_[w] - 1;
    periodic[w] = true;  // after n steps every orbit sits on its cycle
  }
  // Close under the map so whole cycles are marked.
  for (int v = 0; v < size; ++v) {
    if (!periodic[v]) continue;
    for (int w = image_[v] - 1; !periodic[w]; w = image_[w] - 1) periodic[w] = true;
  }
  return periodic;
}

std::vector<int> Portrait::Preperiods() const {
  const std::vector<bool> periodic = Periodic();
  std::vector<int> pre(n(), 0);
  for (int v = 0; v < n(); ++v) {
    int w = v;
    while (!periodic[w]) {
      w = image_[w] - 1;
      ++pre[v];
    }
  }
  return pre;
}

std::vector<int> Portrait::EventualPeriods() const {
  const std::vector<bool> periodic = Periodic();
  std::vector<int> period(n(), 0);
  for (int v = 0; v < n(); ++v) {
    int w = v;
    while (!periodic[w]) w = image_[w] - 1;
    int len = 1;
    for (int u = image_[w] - 1; u != w; u = image_[u] - 1) ++len;
    period[v] = len;
  }
  return period;
}

CycleStructure CycleStructure::Parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  CycleStructure sigma;
  size_t pos = 0;
  while (pos < s.size()) {
    const size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma - pos);
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw ParseError("bad cycle length '" + item + "'");
    }
    const int len = std::stoi(item);
    if (len < 1) throw ParseError("cycle lengths must be positive");
    sigma.lengths.push_back(len);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::sort(sigma.lengths.rbegin(), sigma.lengths.rend());
  return sigma;
}

std::string CycleStructure::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(lengths[i]);
  }
  return out + ")";
}

int CycleStructure::Total() const {
  return std::accumulate(lengths.begin(), lengths.end(), 0);
}

std::string RuleName(GenericRule rule) {
  switch (rule) {
    case GenericRule::kInDegree:
      return "InDegree";
    case GenericRule::kCycleCount:
      return "CycleCount";
    case GenericRule::kFixedPointPair:
      return "FixedPointPair";
  }
  return "Unknown";
}

std::string Violation::Describe() const {
  switch (rule) {
    case GenericRule::kInDegree:
      return "vertex " + std::to_string(vertex) + " has in-degree " + std::to_string(count);
    case GenericRule::kCycleCount:
      return std::to_string(count) + " cycles of length " + std::to_string(cycle_length) +
             " exceed the bound";
    case GenericRule::kFixedPointPair:
      return std::to_string(count) + " fixed points (need 0 or 2)";
  }
  return "";
}

CycleStructure GetCycleStructure(const Portrait& p) {
  const std::vector<bool> periodic = p.Periodic();
  std::vector<bool> seen(p.n(), false);
  CycleStructure sigma;
  for (int v = 0; v < p.n(); ++v) {
    if (!periodic[v] || seen[v]) continue;
    int len = 0;
    for (int w = v; !seen[w]; w = p.image()[w] - 1) {
      seen[w] = true;
      ++len;
    }
    sigma.lengths.push_back(len);
  }
  std::sort(sigma.lengths.rbegin(), sigma.lengths.rend());
  return sigma;
}

GenericityReport ValidateGeneric(const Portrait& p) {
  GenericityReport report;
  const std::vector<int> deg = p.InDegrees();
  for (int v = 0; v < p.n(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) {
      report.violations.push_back({GenericRule::kInDegree, v + 1, 0, deg[v]});
    }
  }
  std::map<int, int> counts;
  for (int len : GetCycleStructure(p).lengths) ++counts[len];
  for (const auto& [len, count] : counts) {
    if (BigInt(count) > D0(len)) {
      report.violations.push_back({GenericRule::kCycleCount, 0, len, count});
    }
  }
  const int fixed = counts.count(1) ? counts[1] : 0;
  if (fixed != 0 && fixed != 2) {
    report.violations.push_back({GenericRule::kFixedPointPair, 0, 1, fixed});
  }
  report.is_generic = report.violations.empty();
  return report;
}

bool IsAdmissible(const CycleStructure& sigma) {
  std::map<int, int> counts;
  for (int len : sigma.lengths) {
    if (len < 1) return false;
    ++counts[len];
  }
  for (const auto& [len, count] : counts) {
    if (BigInt(count) > D0(len)) return false;
  }
  return !counts.count(1) || counts[1] == 2;
}

void CheckAdmissible(const CycleStructure& sigma) {
  if (!IsAdmissible(sigma)) {
    throw InadmissibleCycleStructure("cycle structure " + sigma.ToString() +
                                     " cannot occur in a generic portrait");
  }
}

Portrait MinimalPortrait(const CycleStructure& sigma) {
  CheckAdmissible(sigma);
  std::vector<int> image;
  for (int len : sigma.lengths) {
    const int base = static_cast<int>(image.size());
    for (int i = 1; i <= len; ++i) image.push_back(base + (i % len) + 1);
    for (int i = 1; i <= len; ++i) image.push_back(base + i);
  }
  return Portrait(std::move(image));
}

Portrait AddPreimagePair(const Portrait& p, int v) {
  if (v < 1 || v > p.n()) throw InvalidArgument("vertex out of range");
  std::vector<int> image = p.image();
  image.push_back(v);
  image.push_back(v);
  return Portrait(std::move(image));
}

Portrait DisjointUnion(const Portrait& p, const Portrait& q) {
  std::vector<int> image = p.image();
  for (int t : q.image()) image.push_back(t + p.n());
  return Portrait(std::move(image));
}

Portrait Relabel(const Portrait& p, const std::vector<int>& perm) {
  const int n = p.n();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
  std::vector<int> image(n, 0);
  for (int v = 1; v <= n; ++v) image[perm[v - 1] - 1] = perm[p.Image(v) - 1];
  return Portrait(std::move(image));
}

Portrait InducedSubportrait(const Portrait& p, const std::vector<int>& vertices) {
  std::vector<int> index(p.n() + 1, 0);
  for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i) + 1;
  std::vector<int> image;
  for (int v : vertices) {
    const int t = index[p.Image(v)];
    if (t == 0) throw InvalidArgument("vertex set is not forward closed");
    image.push_back(t);
  }
  return Portrait(std::move(image));
}

Portrait CanonicalForm(const Portrait& p) {
  const Shape s = ComputeShape(p);
  const std::vector<int> visit = CanonicalVisitOrder(s);
  std::vector<int> perm(p.n());
  for (size_t i = 0; i < visit.size(); ++i) perm[visit[i]] = static_cast<int>(i) + 1;
  return Relabel(p, perm);
}

bool Isomorphic(const Portrait& a, const Portrait& b) {
  return a.n() == b.n() && CanonicalForm(a) == CanonicalForm(b);
}

std::vector<std::vector<int>> AutomorphismGroup(const Portrait& p) {
  if (p.n() > kMaxSearchVertices) {
    throw BudgetExceeded("automorphism search limited to " +
                         std::to_string(kMaxSearchVertices) + " vertices");
  }
  const int n = p.n();
  const Shape s = ComputeShape(p);
  const std::vector<int> visit = CanonicalVisitOrder(s);
  std::vector<int> cycle_len(n, 0);
  std::vector<bool> cycle_start(n, false);
  for (const auto& cycle : s.cycles) {
    cycle_start[cycle[0]] = true;
    for (int v : cycle) cycle_len[v] = static_cast<int>(cycle.size());
  }
  std::vector<int> pi(n, -1);
  std::vector<bool> used(n, false);
  std::vector<std::vector<int>> group;
  auto f = [&](int v) { return p.image()[v] - 1; };

  auto search = [&](auto&& self, size_t pos) -> void {
    if (pos == visit.size()) {
      if (group.size() >= kMaxMapsListed) throw BudgetExceeded("automorphism group too large");
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = pi[v] + 1;
      group.push_back(std::move(perm));
      return;
    }
    const int v = visit[pos];
    if (pi[v] >= 0) {  // forced along a cycle already
      self(self, pos + 1);
      return;
    }
    if (s.periodic[v]) {
      // Only cycle starts reach here; map the whole cycle at once.
      const int len = cycle_len[v];
      for (int w = 0; w < n; ++w) {
        if (!s.periodic[w] || used[w] || cycle_len[w] != len) continue;
        bool ok = true;
        for (int i = 0, a = v, b = w; i < len; ++i, a = f(a), b = f(b)) {
          if (used[b] || s.code[a] != s.code[b]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (int i = 0, a = v, b = w; i < len; ++i, a = f(a), b = f(b)) {
          pi[a] = b;
          used[b] = true;
        }
        self(self, pos + 1);
        for (int i = 0, a = v, b = w; i < len; ++i, a = f(a), b = f(b)) {
          pi[a] = -1;
          used[b] = false;
        }
      }
      return;
    }
    for (int w : s.tree_children[pi[f(v)]]) {
      if (used[w] || s.code[w] != s.code[v]) continue;
      pi[v] = w;
      used[w] = true;
      self(self, pos + 1);
      pi[v] = -1;
      used[w] = false;
    }
  };
  search(search, 0);
  std::sort(group.begin(), group.end());
  return group;
}

namespace {

// Backtracking over p's vertices in parent-before-child order. Cycle starts
// try every q vertex on a cycle of the same length; the rest of the cycle is
// forced; tree vertices take an unused preimage of their parent's image.
// `visit` returns false to stop the search.
template <class Visit>
void SearchEmbeddings(const Portrait& p, const Portrait& q, Visit visit) {
  if (p.n() > q.n()) return;
  const Shape s = ComputeShape(p);
  const std::vector<int> order = CanonicalVisitOrder(s);
  const std::vector<bool> q_periodic = q.Periodic();
  const std::vector<int> q_period = q.EventualPeriods();
  const std::vector<std::vector<int>> q_pre = q.Preimages();
  std::vector<int> cycle_len(p.n(), 0);
  for (const auto& cycle : s.cycles) {
    for (int v : cycle) cycle_len[v] = static_cast<int>(cycle.size());
  }
  std::vector<int> psi(p.n(), -1);
  std::vector<bool> used(q.n(), false);
  auto fp = [&](int v) { return p.image()[v] - 1; };
  auto fq = [&](int v) { return q.image()[v] - 1; };
  bool stop = false;

  auto search = [&](auto&& self, size_t pos) -> void {
    if (stop) return;
    if (pos == order.size()) {
      stop = !visit(psi);
      return;
    }
    const int v = order[pos];
    if (psi[v] >= 0) {
      self(self, pos + 1);
      return;
    }
    if (s.periodic[v]) {
      const int len = cycle_len[v];
      for (int w = 0; w < q.n() && !stop; ++w) {
        if (!q_periodic[w] || used[w] || q_period[w] != len) continue;
        bool ok = true;
        for (int i = 0, b = w; i < len; ++i, b = fq(b)) ok = ok && !used[b];
        if (!ok) continue;
        for (int i = 0, a = v, b = w; i < len; ++i, a = fp(a), b = fq(b)) {
          psi[a] = b;
          used[b] = true;
        }
        self(self, pos + 1);
        for (int i = 0, a = v, b = w; i < len; ++i, a = fp(a), b = fq(b)) {
          psi[a] = -1;
          used[b] = false;
        }
      }
      return;
    }
    for (int w1 : q_pre[psi[fp(v)]]) {
      const int w = w1 - 1;
      if (used[w]) continue;
      psi[v] = w;
      used[w] = true;
      self(self, pos + 1);
      psi[v] = -1;
      used[w] = false;
      if (stop) return;
    }
  };
  search(search, 0);
}

}  // namespace

std::vector<std::vector<int>> Embeddings(const Portrait& p, const Portrait& q) {
  if (q.n() > kMaxSearchVertices) {
    throw BudgetExceeded("embedding search limited to " +
                         std::to_string(kMaxSearchVertices) + " vertices");
  }
  std::vector<std::vector<int>> maps;
  SearchEmbeddings(p, q, [&](const std::vector<int>& psi) {
    if (maps.size() >= kMaxMapsListed) throw BudgetExceeded("too many embeddings");
    std::vector<int> out(psi.size());
    for (size_t i = 0; i < psi.size(); ++i) out[i] = psi[i] + 1;
    maps.push_back(std::move(out));
    return true;
  });
  std::sort(maps.begin(), maps.end());
  return maps;
}

bool Embeds(const Portrait& p, const Portrait& q) {
  bool found = false;
  SearchEmbeddings(p, q, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace dynw
