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

#ifndef DYNW_CLASSIFIER_H_
#define DYNW_CLASSIFIER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dynw/parallel.h"
#include "dynw/portrait.h"
#include "dynw/rational.h"

namespace dynw {

// Every rational preperiodic point of x^2 + c, possibly with extra points.
//
// Write c = a/b in lowest terms. For p | b with v = v_p(c), a point with
// v_p(x) != v/2 has an iterate of valuation below v/2, after which the
// valuations decrease forever. A preperiodic point therefore has
// v_p(x) = v/2, so b = m^2 and every preperiodic point has denominator m.
// Also |x| <= 1/2 + sqrt(1/4 + |c|), which for x = u/m reads
// |u| <= (m + sqrt(m^2 + 4|a|)) / 2. The square root is rounded up, so the
// list may contain a few extra points.
std::vector<Rational> PreperiodicCandidates(const Rational& c);

struct OrbitRecord {
  Rational start;
  // start, f(start), ...; ends at the first repeated value (preperiodic) or
  // at the first value outside the candidate envelope (escaped).
  std::vector<Rational> orbit;
  int preperiod = 0;
  int eventual_period = 0;  // 0 when escaped
  bool escaped = false;
};

// Throws InvalidArgument for max_steps < 1 and StepBudgetExceeded when the
// orbit neither repeats nor escapes within max_steps applications of f.
OrbitRecord Orbit(const Rational& c, const Rational& x, int max_steps);

struct ClassificationRecord {
  Rational c;
  Portrait portrait;            // canonical form
  std::vector<Rational> points; // points[i] sits at canonical vertex i + 1
  std::optional<std::string> label;
  bool generic = true;
  int point_count = 0;
  std::vector<std::string> flags;
};

ClassificationRecord Classify(const Rational& c);

// All c = a/m^2 in lowest terms with max(|a|, m^2) <= height, ordered by
// (height, a, m^2). Throws InvalidArgument for height < 1.
std::vector<Rational> SweepParameters(int height);

struct SweepSummary {
  int height = 0;
  uint64_t classified = 0;
  uint64_t generic = 0;
  std::map<std::string, uint64_t> tallies;  // label, or "?" + portrait
  // Generic classes outside the twelve expected labels, in first-seen order.
  std::vector<std::string> anomalies;
};

std::string CsvHeader();
std::string CsvRow(const ClassificationRecord& record);

// Classifies every sweep parameter and, when `csv` is set, writes a header
// and one row per parameter in sweep order.
SweepSummary Sweep(int height, std::ostream* csv = nullptr,
                   Exec exec = Exec::kSerial);

}  // namespace dynw

#endif  // DYNW_CLASSIFIER_H_
