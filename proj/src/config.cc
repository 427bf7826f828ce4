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

#include "dynw/config.h"

#include <cstdlib>
#include <limits>

#include "dynw/errors.h"

namespace dynw {
namespace {

uint64_t ParsePositive(const char* name, const std::string& text,
                       uint64_t max) {
  size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-' || value == 0 ||
      value > max) {
    throw UsageError(std::string(name) + ": expected a positive integer, got '" +
                     text + "'");
  }
  return value;
}

}  // namespace

std::string FormatName(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kText:
      return "text";
  }
  return "text";
}

OutputFormat ParseOutputFormat(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw UsageError("unknown output format '" + name + "' (json, csv, text)");
}

void ApplyEnvironment(RunConfig& config,
                      const std::function<const char*(const char*)>& getenv) {
  auto lookup = [&](const char* name) -> const char* {
    return getenv ? getenv(name) : std::getenv(name);
  };
  constexpr uint64_t kIntMax = std::numeric_limits<int>::max();
  if (const char* v = lookup("DYNW_ENUMERATION_CAP")) {
    config.enumeration_cap = ParsePositive("DYNW_ENUMERATION_CAP", v,
                                           std::numeric_limits<uint64_t>::max());
  }
  if (const char* v = lookup("DYNW_MAX_DYNATOMIC_N")) {
    config.max_dynatomic_n =
        static_cast<int>(ParsePositive("DYNW_MAX_DYNATOMIC_N", v, kIntMax));
  }
  if (const char* v = lookup("DYNW_STEP_BUDGET")) {
    config.step_budget =
        static_cast<int>(ParsePositive("DYNW_STEP_BUDGET", v, kIntMax));
  }
  if (const char* v = lookup("DYNW_OUTPUT_FORMAT")) {
    config.output_format = ParseOutputFormat(v);
  }
  if (const char* v = lookup("DYNW_JOBS")) {
    config.jobs = static_cast<int>(ParsePositive("DYNW_JOBS", v, 4096));
  }
}

void ValidateConfig(const RunConfig& config) {
  if (config.enumeration_cap == 0 || config.max_dynatomic_n < 1 ||
      config.step_budget < 1 || config.jobs < 1) {
    throw UsageError("all limits must be positive");
  }
}

}  // namespace dynw
