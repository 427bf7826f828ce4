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

#ifndef DYNW_ERRORS_H_
#define DYNW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dynw {

// Base class for every failure that the CLI maps to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

#define DYNW_DEFINE_ERROR(Name)                                  \
  class Name : public DomainError {                              \
   public:                                                       \
    explicit Name(const std::string& what) : DomainError(what) {} \
  }

DYNW_DEFINE_ERROR(NonExactDivision);
DYNW_DEFINE_ERROR(BudgetExceeded);
DYNW_DEFINE_ERROR(MissingVariable);
DYNW_DEFINE_ERROR(MixedScalarKinds);
DYNW_DEFINE_ERROR(InadmissibleCycleStructure);
DYNW_DEFINE_ERROR(NotGeneric);
DYNW_DEFINE_ERROR(NotPIntegral);
DYNW_DEFINE_ERROR(StepBudgetExceeded);
DYNW_DEFINE_ERROR(ParseError);
DYNW_DEFINE_ERROR(UnknownReport);
DYNW_DEFINE_ERROR(InvalidArgument);

#undef DYNW_DEFINE_ERROR

// Malformed command lines. Mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dynw

#endif  // DYNW_ERRORS_H_
