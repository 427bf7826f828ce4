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

#ifndef DYNW_CONFIG_H_
#define DYNW_CONFIG_H_

#include <cstdint>
#include <functional>
#include <string>

#include "dynw/finite_field.h"

namespace dynw {

enum class OutputFormat { kJson, kCsv, kText };
std::string FormatName(OutputFormat format);
// Throws UsageError.
OutputFormat ParseOutputFormat(const std::string& name);

// Run-wide limits. Precedence: built-in defaults, then DYNW_* environment
// variables, then command-line flags.
struct RunConfig {
  uint64_t enumeration_cap = kDefaultEnumerationCap;
  int max_dynatomic_n = 12;
  int step_budget = 10000;
  OutputFormat output_format = OutputFormat::kText;
  int jobs = 1;
};

// Reads DYNW_ENUMERATION_CAP, DYNW_MAX_DYNATOMIC_N, DYNW_STEP_BUDGET,
// DYNW_OUTPUT_FORMAT and DYNW_JOBS through `getenv` (std::getenv by
// default). Throws UsageError for malformed values.
void ApplyEnvironment(
    RunConfig& config,
    const std::function<const char*(const char*)>& getenv = nullptr);

// Throws UsageError unless every limit is positive.
void ValidateConfig(const RunConfig& config);

}  // namespace dynw

#endif  // DYNW_CONFIG_H_
