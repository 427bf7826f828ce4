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

#ifndef DYNW_CURVE_MODEL_H_
#define DYNW_CURVE_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynw/multipoly.h"
#include "dynw/portrait.h"

namespace dynw {

enum class ModelProvenance { kFull, kReduced, kMultiLevel };
std::string ProvenanceName(ModelProvenance provenance);
ModelProvenance ParseProvenance(const std::string& name);

// One derivation step of a propagation plan: target = source^2 + c for an
// image step, target = -source for a sibling step.
struct PropagationStep {
  enum class Kind { kImage, kNegate };
  Kind kind = Kind::kImage;
  std::string target;
  std::string source;
};

// Free variables to enumerate and the steps that determine the others.
struct PropagationPlan {
  std::vector<std::string> free;
  std::vector<PropagationStep> steps;
};

// Affine system: all equations vanish, all inequations are nonzero.
struct CurveModel {
  std::vector<std::string> variables;  // c first
  std::vector<MultiPoly> equations;
  std::vector<MultiPoly> inequations;
  ModelProvenance provenance = ModelProvenance::kFull;
  std::optional<PropagationPlan> propagation;
  std::string diagnostic;
};

// Checks that every polynomial uses declared variables only and that the
// plan, if any, derives every undeclared-free variable exactly once.
// Throws InvalidArgument.
void ValidateModel(const CurveModel& model);

struct ClosureStep {
  enum class Kind { kGenerator, kImage, kSibling };
  Kind kind = Kind::kGenerator;
  int vertex = 0;
  int source = 0;  // 0 for generators
};

struct GeneratorSet {
  std::vector<int> generators;  // in selection order
  std::vector<ClosureStep> closure_trace;
};

// Greedy generating set under the closure rules "v known => f(v) known" and
// "v known => its sibling is -v". Each round takes the vertex with the
// largest closure growth; ties go to the smaller preperiod, then the smaller
// vertex index. Throws NotGeneric.
GeneratorSet MakeGeneratorSet(const Portrait& p);

// Names of point variables for reduced and multi-level models: x, y, z, w
// for up to four points, x1, x2, ... beyond that.
std::vector<std::string> PointVariableNames(int count);

// Variables (c, x1..xN); x_i^2 + c - x_j per edge i -> j and x_i - x_j for
// every pair i < j. Throws NotGeneric.
CurveModel FullModel(const Portrait& p);

// One variable per generator. A generator of preperiod m and eventual
// period n contributes GeneralizedDynatomic(m, n) in its variable; each pair
// of generators with equal eventual period contributes y - f^k(x) for every
// k below m + n, plus x - f^k(y) for 1 <= k < m' + n when y is strictly
// preperiodic. Throws NotGeneric.
CurveModel ReducedModel(const Portrait& p);

// Phi_{n_i}(c, x_i) for each entry and x_j - f^k(x_i) for i < j with equal
// periods, 0 <= k < n_i. Throws InvalidArgument for an increasing list and
// InadmissibleCycleStructure when a length appears more than D0(n) times.
CurveModel MultiLevelModel(const std::vector<int>& periods);

// JSON with schema_version 1: variables, equations and inequations as
// polynomial strings, provenance, optional propagation and diagnostic.
std::string ModelToJson(const CurveModel& model);
// Throws ParseError for malformed documents.
CurveModel ModelFromJson(const std::string& text);

struct TracePoint {
  uint64_t c = 0;
  uint64_t x = 0;
  uint64_t t = 0;
};

struct TraceRelationReport {
  uint64_t p = 0;
  uint64_t points = 0;  // affine (c, x) with Phi_3(c, x) = 0
  // t^2 - 2t + 29 + 16c with t = x + f(x) + f^2(x).
  uint64_t violations = 0;
  std::vector<TracePoint> first_violations;  // at most 10
  // t^2 + t + c + 2, satisfied identically modulo Phi_3.
  uint64_t monic_violations = 0;
  // The first relation with t replaced by 4t + 3.
  uint64_t rescaled_violations = 0;
};

// Exhaustive over F_p x F_p. Throws InvalidArgument unless p is an odd prime
// within the enumeration cap.
TraceRelationReport TraceRelationCheck(uint64_t p);

}  // namespace dynw

#endif  // DYNW_CURVE_MODEL_H_
