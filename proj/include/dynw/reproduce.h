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

#ifndef DYNW_REPRODUCE_H_
#define DYNW_REPRODUCE_H_

#include <string>
#include <vector>

#include "dynw/parallel.h"
#include "dynw/portrait.h"

namespace dynw {

struct ReproduceRow {
  std::string check;
  std::string expected;
  std::string observed;
  bool pass = false;
  bool informational = false;  // reported, never counted as a failure
  double seconds = 0;
};

struct ReproduceReport {
  std::string name;
  std::vector<ReproduceRow> rows;
  bool all_pass = true;
};

// figures, degrees, trace, sweep, bounds.
const std::vector<std::string>& ReportNames();

// Throws UnknownReport.
ReproduceReport Reproduce(const std::string& name, Exec exec = Exec::kSerial);

struct FigureClassCount {
  int n = 0;
  CycleStructure sigma;
  size_t classes = 0;
};

// Class counts shown in the portrait figures.
const std::vector<FigureClassCount>& FigureClassCounts();

}  // namespace dynw

#endif  // DYNW_REPRODUCE_H_
