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

#include "dynw/enumerate.h"

#include <algorithm>
#include <set>

#include "dynw/errors.h"

namespace dynw {

namespace {

std::vector<Portrait> GrowByPairs(const Portrait& p) {
  std::vector<Portrait> out;
  const std::vector<int> deg = p.InDegrees();
  for (int v = 1; v <= p.n(); ++v) {
    if (deg[v - 1] == 0) out.push_back(CanonicalForm(AddPreimagePair(p, v)));
  }
  return out;
}

std::vector<Portrait> NextLevelSerial(const std::vector<Portrait>& level) {
  std::set<Portrait> next;
  for (const Portrait& p : level) {
    for (Portrait& q : GrowByPairs(p)) next.insert(std::move(q));
  }
  return {next.begin(), next.end()};
}

std::vector<Portrait> NextLevelParallel(const std::vector<Portrait>& level) {
  std::vector<std::vector<Portrait>> grown(level.size());
  const long count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic) num_threads(Jobs())
  for (long i = 0; i < count; ++i) grown[i] = GrowByPairs(level[i]);
  std::set<Portrait> next;
  for (auto& batch : grown) {
    for (Portrait& q : batch) next.insert(std::move(q));
  }
  return {next.begin(), next.end()};
}

}  // namespace

std::vector<Portrait> EnumerateGeneric(int n, const CycleStructure& sigma,
                                       Exec exec) {
  if (n < 0 || n % 2 != 0 || n > kMaxEnumerationVertices) {
    throw InvalidArgument("vertex count must be even and at most " +
                          std::to_string(kMaxEnumerationVertices));
  }
  CheckAdmissible(sigma);
  const int base = 2 * sigma.Total();
  if (n < base) return {};
  std::vector<Portrait> level = {CanonicalForm(MinimalPortrait(sigma))};
  for (int size = base; size < n; size += 2) {
    level = exec == Exec::kParallel ? NextLevelParallel(level)
                                    : NextLevelSerial(level);
  }
  return level;
}

std::vector<Portrait> MinimalExtensions(const Portrait& p, int bound) {
  if (bound < 1) throw InvalidArgument("cycle-length bound must be >= 1");
  if (!ValidateGeneric(p).is_generic) {
    throw NotGeneric("minimal extensions need a generic portrait");
  }
  const CycleStructure sigma = GetCycleStructure(p);
  if (!sigma.lengths.empty() && sigma.lengths.front() > bound) {
    throw InvalidArgument("portrait already has a cycle longer than the bound");
  }
  std::set<Portrait> candidates;
  for (Portrait& q : GrowByPairs(p)) candidates.insert(std::move(q));
  for (int len = 2; len <= bound; ++len) {
    CycleStructure grown = sigma;
    grown.lengths.push_back(len);
    std::sort(grown.lengths.rbegin(), grown.lengths.rend());
    if (IsAdmissible(grown)) {
      candidates.insert(CanonicalForm(
          DisjointUnion(p, MinimalPortrait(CycleStructure{{len}}))));
    }
  }
  const bool has_fixed =
      std::find(sigma.lengths.begin(), sigma.lengths.end(), 1) != sigma.lengths.end();
  if (!has_fixed) {
    candidates.insert(CanonicalForm(
        DisjointUnion(p, MinimalPortrait(CycleStructure{{1, 1}}))));
  }
  if (candidates.size() > kMaxExtensionCandidates) {
    throw BudgetExceeded("too many extension candidates");
  }
  // A candidate that contains a smaller candidate has an intermediate
  // generic portrait and is dropped.
  std::vector<Portrait> all(candidates.begin(), candidates.end());
  std::vector<Portrait> minimal;
  for (const Portrait& c : all) {
    bool keep = true;
    for (const Portrait& d : all) {
      if (d.n() < c.n() && Embeds(d, c)) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(c);
  }
  return minimal;
}

}  // namespace dynw
