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

#ifndef DYNW_DYNATOMIC_H_
#define DYNW_DYNATOMIC_H_

#include <string>
#include <vector>

#include "dynw/bivariate.h"
#include "dynw/multipoly.h"
#include "dynw/rational.h"

namespace dynw {

inline constexpr int kDefaultMaxDynatomicN = 12;
inline constexpr int kMaxDegreeReportN = 256;

// Elementary arithmetic functions.
std::vector<int> DivisorsOf(int n);
int Mobius(int n);
int EulerPhi(int n);

// f_c^n(x) for f_c(x) = x^2 + c, in variables (x, c).
MultiPoly IterateFc(int n);
IntBiPoly IterateFcDense(int n);

struct DynatomicTable {
  int n = 0;
  MultiPoly phi;
  int degree_x = 0;
  int degree_c = 0;
};

// Phi_n as the exact quotient of the Mobius products of f^d(x) - x.
// Throws InvalidArgument when n is outside [1, max_n].
DynatomicTable Dynatomic(int n, int max_n = kDefaultMaxDynatomicN);
// Dense form of Phi_n; results are cached for the process lifetime.
const IntBiPoly& DynatomicDense(int n);

// Phi_n(c, f^m(x)) / Phi_n(c, f^(m-1)(x)) for m >= 1; Phi_n for m = 0.
MultiPoly GeneralizedDynatomic(int m, int n);
IntBiPoly GeneralizedDynatomicDense(int m, int n);

// True iff the product of Phi_d over d | n equals f^n(x) - x.
bool ProductIdentityHolds(int n);

BigInt D1(int n);
BigInt D0(int n);
// Count of affine branch points of the parameter map on the quotient curve;
// the proper-divisor sum is empty at n = 1.
BigInt BranchPointCount(int n);

struct DegreeReport {
  int n = 0;
  BigInt d1;
  BigInt d0;
  BigInt branch_points;
  Rational genus_lb;  // 1 + B/2 - D0, never clamped
};

DegreeReport MakeDegreeReport(int n);

struct DegreeBoundsReport {
  int n = 0;
  BigInt d1;
  BigInt d0;
  bool d1_lower = false;  // 2^(n-1) <= D1
  bool d1_upper = false;  // D1 <= 2^n
  bool d1_lower_strict = false;
  bool d1_upper_strict = false;
  bool d0_lower = false;  // 2^(n-1)/n <= D0
  bool d0_upper = false;  // D0 <= 2^n/n
  bool d0_lower_strict = false;
  bool d0_upper_strict = false;
  bool divisible = false;  // n | D1
  bool strict_required = false;
  bool ok = false;
};

DegreeBoundsReport CheckDegreeBounds(int n);

struct ChainStep {
  std::string name;
  bool holds = false;
};

struct AsymptoticReport {
  int n = 0;
  // 2^(n-2) - n*2^floor(n/2) + n against ceil(6*2^n/n).
  BigInt displayed_lhs;
  BigInt displayed_rhs;
  bool displayed_holds = false;
  // Same inequality with the real exponent n/2, decided exactly.
  bool displayed_real_holds = false;
  BigInt branch_points;
  BigInt six_d0;
  bool branch_exceeds_six_d0 = false;
  // Every link of the lower-bound chain for B(n), checked at this n.
  std::vector<ChainStep> chain;
  bool chain_holds = false;
};

// Requires n >= 12.
AsymptoticReport AsymptoticGenusCheck(int n);

}  // namespace dynw

#endif  // DYNW_DYNATOMIC_H_
