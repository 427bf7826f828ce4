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

#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <sstream>

#include "dynw/cli.h"
#include "dynw/config.h"
#include "dynw/errors.h"

namespace dynw {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ConfigTest, EnvironmentOverridesDefaults) {
  const std::map<std::string, std::string> env = {
      {"DYNW_ENUMERATION_CAP", "500"},
      {"DYNW_MAX_DYNATOMIC_N", "9"},
      {"DYNW_OUTPUT_FORMAT", "json"},
      {"DYNW_JOBS", "2"}};
  RunConfig config;
  ApplyEnvironment(config, [&](const char* name) -> const char* {
    const auto it = env.find(name);
    return it == env.end() ? nullptr : it->second.c_str();
  });
  EXPECT_EQ(config.enumeration_cap, 500u);
  EXPECT_EQ(config.max_dynatomic_n, 9);
  EXPECT_EQ(config.step_budget, 10000);
  EXPECT_EQ(config.output_format, OutputFormat::kJson);
  EXPECT_EQ(config.jobs, 2);
}

TEST(ConfigTest, RejectsMalformedValues) {
  RunConfig config;
  for (const char* bad : {"0", "-3", "12x", ""}) {
    EXPECT_THROW(ApplyEnvironment(config,
                                  [&](const char* name) -> const char* {
                                    return std::string(name) == "DYNW_STEP_BUDGET"
                                               ? bad
                                               : nullptr;
                                  }),
                 UsageError)
        << bad;
  }
  EXPECT_THROW(ParseOutputFormat("xml"), UsageError);
}

TEST(DispatchTest, PrintsPhiTwo) {
  const CliRun r = Invoke({"dynatomic", "poly", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2 + x + c + 1\n");
}

TEST(DispatchTest, ExitCodes) {
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"dynatomic"}).code, 2);
  EXPECT_EQ(Invoke({"dynatomic", "poly"}).code, 2);
  EXPECT_EQ(Invoke({"dynatomic", "poly", "--n", "abc"}).code, 2);
  EXPECT_EQ(Invoke({"nonsense"}).code, 2);
  EXPECT_EQ(Invoke({"classify", "--c", "1/2", "--format", "xml"}).code, 2);
  EXPECT_EQ(Invoke({"dynatomic", "poly", "--n", "2", "--format", "csv"}).code, 2);
  EXPECT_EQ(Invoke({"dynatomic", "poly", "--n", "13"}).code, 1);
  EXPECT_EQ(Invoke({"model", "full", "--portrait", "3:2,1,1"}).code, 1);
  EXPECT_EQ(Invoke({"reproduce", "everything"}).code, 1);
  EXPECT_EQ(Invoke({"classify", "--c", "1/0"}).code, 1);
  EXPECT_EQ(Invoke({"--help"}).code, 0);
}

TEST(DispatchTest, FlagsOverrideLimits) {
  EXPECT_EQ(Invoke({"dynatomic", "poly", "--n", "3", "--max-dynatomic-n", "2"}).code, 1);
  EXPECT_EQ(Invoke({"ff", "max-period", "--p", "101", "--enumeration-cap", "50"}).code, 1);
}

TEST(DispatchTest, EnumerateFigureFour) {
  const CliRun r = Invoke({"portrait", "enumerate", "--n", "10", "--cycles", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("3 classes\n", 0), 0u);
}

TEST(DispatchTest, ClassifyJsonIsVersioned) {
  const CliRun r = Invoke({"classify", "--c", "-3/4", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_NE(r.out.find("\"label\": \"4(1,1)\""), std::string::npos);
}

TEST(DispatchTest, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"sweep", "--height", "6", "--format", "csv", "--jobs", "2"},
        std::vector<std::string>{"portrait", "catalog", "--format", "json"},
        std::vector<std::string>{"ff", "max-period", "--p", "3", "--k", "2"}}) {
    const CliRun a = Invoke(args), b = Invoke(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace dynw
