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

#ifndef DYNW_ENUMERATE_H_
#define DYNW_ENUMERATE_H_

#include <vector>

#include "dynw/parallel.h"
#include "dynw/portrait.h"

namespace dynw {

inline constexpr int kMaxEnumerationVertices = 16;

// Canonical representatives of every generic portrait with n vertices and
// cycle structure sigma, sorted. Grows the minimal portrait by attaching
// preimage pairs to in-degree-0 vertices, one level at a time.
// Throws InadmissibleCycleStructure, or InvalidArgument for odd n or
// n > 16.
std::vector<Portrait> EnumerateGeneric(int n, const CycleStructure& sigma,
                                       Exec exec = Exec::kParallel);

inline constexpr size_t kMaxExtensionCandidates = 10000;

// Canonical representatives of generic P' strictly containing P with no
// generic portrait strictly between them and no cycle longer than `bound`.
// Throws NotGeneric for non-generic P, InvalidArgument for bound < 1.
std::vector<Portrait> MinimalExtensions(const Portrait& p, int bound);

}  // namespace dynw

#endif  // DYNW_ENUMERATE_H_
