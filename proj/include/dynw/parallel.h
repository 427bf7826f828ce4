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

#ifndef DYNW_PARALLEL_H_
#define DYNW_PARALLEL_H_

namespace dynw {

// Every data-parallel kernel has a serial reference and an OpenMP version
// that must produce identical results.
enum class Exec { kSerial, kParallel };

// Worker count for Exec::kParallel kernels. Defaults to 1.
void SetJobs(int jobs);
int Jobs();

}  // namespace dynw

#endif  // DYNW_PARALLEL_H_
