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

#include "dynw/classifier.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "dynw/catalog.h"
#include "dynw/errors.h"

namespace dynw {
namespace {

// Candidate envelope of a parameter: points u/m with |u| <= bound.
struct Envelope {
  bool empty = true;
  BigInt m;
  BigInt bound;

  explicit Envelope(const Rational& c) {
    const BigInt den = c.get_den();
    if (!IsPerfectSquare(den)) return;
    empty = false;
    m = FloorSqrt(den);
    const BigInt a = abs(c.get_num());
    bound = (m + CeilSqrt(m * m + 4 * a)) / 2;
  }

  bool Contains(const Rational& v) const {
    if (empty) return false;
    if (!mpz_divisible_p(m.get_mpz_t(), v.get_den_mpz_t())) return false;
    const BigInt u = abs(v.get_num()) * (m / v.get_den());
    return u <= bound;
  }
};

Rational Step(const Rational& x, const Rational& c) { return x * x + c; }

}  // namespace

std::vector<Rational> PreperiodicCandidates(const Rational& c) {
  const Envelope env(c);
  std::vector<Rational> out;
  if (env.empty) return out;
  for (BigInt u = -env.bound; u <= env.bound; ++u) {
    out.push_back(MakeRational(u, env.m));
  }
  return out;
}

OrbitRecord Orbit(const Rational& c, const Rational& x, int max_steps) {
  if (max_steps < 1) throw InvalidArgument("max_steps must be >= 1");
  const Envelope env(c);
  OrbitRecord record;
  record.start = x;
  std::map<Rational, int> seen;
  Rational v = x;
  for (int step = 0;; ++step) {
    record.orbit.push_back(v);
    if (!env.Contains(v)) {
      record.escaped = true;
      return record;
    }
    const auto [it, inserted] = seen.emplace(v, step);
    if (!inserted) {
      record.preperiod = it->second;
      record.eventual_period = step - it->second;
      return record;
    }
    if (step == max_steps) break;
    v = Step(v, c);
  }
  throw StepBudgetExceeded("orbit of " + ToString(x) + " under c = " +
                           ToString(c) + " unresolved after " +
                           std::to_string(max_steps) + " steps");
}

ClassificationRecord Classify(const Rational& c) {
  const std::vector<Rational> cands = PreperiodicCandidates(c);
  std::map<Rational, int> index;
  for (size_t i = 0; i < cands.size(); ++i) index[cands[i]] = static_cast<int>(i);
  const int n = static_cast<int>(cands.size());
  std::vector<int> next(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto it = index.find(Step(cands[i], c));
    if (it != index.end()) next[i] = it->second;
  }
  // 0 unknown, 1 on the current walk, 2 preperiodic, 3 not preperiodic.
  std::vector<int> state(n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> path;
    int v = i;
    while (v >= 0 && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = next[v];
    }
    const int verdict = (v >= 0 && state[v] != 3) ? 2 : 3;
    for (int u : path) state[u] = verdict;
  }
  std::vector<int> vertex_of(n, 0);
  std::vector<Rational> values;
  for (int i = 0; i < n; ++i) {
    if (state[i] != 2) continue;
    values.push_back(cands[i]);
    vertex_of[i] = static_cast<int>(values.size());
  }
  std::vector<int> image;
  for (int i = 0; i < n; ++i) {
    if (state[i] == 2) image.push_back(vertex_of[next[i]]);
  }
  const Portrait raw(image);

  ClassificationRecord record;
  record.c = c;
  record.portrait = CanonicalForm(raw);
  record.point_count = raw.n();
  record.points.resize(values.size());
  if (raw.n() > 0) {
    const std::vector<std::vector<int>> maps = Embeddings(raw, record.portrait);
    for (size_t i = 0; i < values.size(); ++i) {
      record.points[maps.front()[i] - 1] = values[i];
    }
  }
  if (const CatalogEntry* entry = FindByPortrait(record.portrait)) {
    record.label = entry->label;
  }
  const GenericityReport report = ValidateGeneric(record.portrait);
  record.generic = report.is_generic;
  for (const Violation& v : report.violations) {
    record.flags.push_back("NonGeneric(" + v.Describe() + ")");
  }
  return record;
}

std::vector<Rational> SweepParameters(int height) {
  if (height < 1) throw InvalidArgument("height must be >= 1");
  struct Key {
    int h, a, b;
  };
  std::vector<Key> keys;
  for (int m = 1; m * m <= height; ++m) {
    const int b = m * m;
    for (int a = -height; a <= height; ++a) {
      if (std::gcd(a, b) != 1) continue;
      keys.push_back({std::max(std::abs(a), b), a, b});
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
    return std::tie(x.h, x.a, x.b) < std::tie(y.h, y.a, y.b);
  });
  std::vector<Rational> out;
  for (const Key& k : keys) out.push_back(MakeRational(k.a, k.b));
  return out;
}

std::string CsvHeader() {
  return "c_num,c_den,portrait_serialized,canonical_label,generic,point_count,"
         "flags";
}

namespace {

std::string Quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string CsvRow(const ClassificationRecord& r) {
  std::string flags;
  for (const std::string& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
  return ToString(BigInt(r.c.get_num())) + "," +
         ToString(BigInt(r.c.get_den())) + "," + Quote(r.portrait.ToString()) +
         "," + Quote(r.label.value_or("")) + "," +
         (r.generic ? "true" : "false") + "," + std::to_string(r.point_count) +
         "," + Quote(flags);
}

SweepSummary Sweep(int height, std::ostream* csv, Exec exec) {
  const std::vector<Rational> params = SweepParameters(height);
  std::vector<ClassificationRecord> records(params.size());
  const int64_t count = static_cast<int64_t>(params.size());
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::kParallel) num_threads(Jobs())
  for (int64_t i = 0; i < count; ++i) records[i] = Classify(params[i]);

  const auto& expected = RationalPortraitLabels();
  SweepSummary summary;
  summary.height = height;
  if (csv) *csv << CsvHeader() << "\n";
  for (const ClassificationRecord& r : records) {
    if (csv) *csv << CsvRow(r) << "\n";
    ++summary.classified;
    const std::string key = r.label.value_or("?" + r.portrait.ToString());
    ++summary.tallies[key];
    if (!r.generic) continue;
    ++summary.generic;
    const bool known = r.label && std::find(expected.begin(), expected.end(),
                                            *r.label) != expected.end();
    if (!known && std::find(summary.anomalies.begin(), summary.anomalies.end(),
                            key) == summary.anomalies.end()) {
      summary.anomalies.push_back(key);
    }
  }
  return summary;
}

}  // namespace dynw
