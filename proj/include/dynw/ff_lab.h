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

#ifndef DYNW_FF_LAB_H_
#define DYNW_FF_LAB_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynw/curve_model.h"
#include "dynw/finite_field.h"
#include "dynw/parallel.h"
#include "dynw/rational.h"

namespace dynw {

struct PointCountReport {
  std::string model_id;
  uint64_t p = 0;
  int k = 1;
  uint64_t q = 0;
  uint64_t affine_count = 0;
  // Two-variable, one-equation models only: points where some partial
  // derivative of the equation is nonzero.
  std::optional<uint64_t> nonsingular_count;
  // Plane models without inequations are also counted root by root in c;
  // a disagreement between the two counts is reported here.
  std::optional<uint64_t> root_count;
  std::vector<std::string> violations;
};

// Counts F_{p^k}-assignments satisfying every equation and inequation.
// Enumerates the plan's free variables (all variables when the model has no
// plan) and derives the rest. Throws BudgetExceeded when q^(#free) exceeds
// `cap`, InvalidArgument for a bad prime, degree or model.
PointCountReport CountPoints(const CurveModel& model, uint64_t p, int k,
                             Exec exec = Exec::kSerial,
                             uint64_t cap = kDefaultEnumerationCap,
                             const std::string& model_id = "");

// Every solution as a code vector ordered like model.variables, in
// enumeration order. Throws BudgetExceeded beyond `limit` points or when the
// enumeration exceeds `cap`.
std::vector<std::vector<uint64_t>> ListPoints(
    const CurveModel& model, const FFContext& ctx, size_t limit = 1000000,
    uint64_t cap = kDefaultEnumerationCap);

// Affine points of f(c, v) = 0 counted as the sum over v of the number of
// roots in c. `f` must involve at most the variables c and `v`.
uint64_t CountPlaneByRoots(const MultiPoly& f, const std::string& v,
                           const FFContext& ctx, Exec exec = Exec::kSerial);

// ceil(count / (q + 1)). Throws InvalidArgument for count < 0 or q < 2.
BigInt GonalityLowerBound(const BigInt& count, const BigInt& q);

struct CSQuery {
  BigInt g, g1, g2;
  BigInt d1, d2;
};

struct CSResult {
  bool inequality_holds = false;
  BigInt bound;  // d1*g1 + d2*g2 + (d1 - 1)(d2 - 1)
};

// Throws InvalidArgument for negative genera or nonpositive degrees.
CSResult CsObstruction(const CSQuery& query);

// Longest cycle of z -> z^2 + c on F_q.
int MaxCycleLength(const FFContext& ctx, uint64_t c);

struct MaxPeriodReport {
  uint64_t q = 0;
  int max_period = 0;
  uint64_t witness_c = 0;  // smallest code attaining the maximum
  std::string witness_text;
};

// Maximum over every c in F_q. Throws BudgetExceeded when q > cap.
MaxPeriodReport MaxPeriodMod(const std::shared_ptr<const FFContext>& ctx,
                             Exec exec = Exec::kSerial,
                             uint64_t cap = kDefaultEnumerationCap);

// x0 + p, x0 + 2p, ..., x0 + count*p. Throws NotPIntegral when p divides the
// denominator of x0, InvalidArgument for a non-prime p or negative count.
std::vector<Rational> ResidueClassMembers(const Rational& x0, uint64_t p,
                                          int count);

}  // namespace dynw

#endif  // DYNW_FF_LAB_H_
