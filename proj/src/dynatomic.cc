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

#include "dynw/dynatomic.h"

#include <map>
#include <mutex>

#include "dynw/errors.h"

namespace dynw {

namespace {

BigInt Pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// Process-wide memo tables; entries are never erased, so references stay
// valid.
std::mutex& CacheMutex() {
  static std::mutex m;
  return m;
}

std::map<int, IntBiPoly>& IterateCache() {
  static std::map<int, IntBiPoly> cache;
  return cache;
}

std::map<int, IntBiPoly>& PhiCache() {
  static std::map<int, IntBiPoly> cache;
  return cache;
}

const IntBiPoly& IterateRef(int n) {
  std::lock_guard<std::mutex> lock(CacheMutex());
  auto& cache = IterateCache();
  if (cache.empty()) cache.emplace(0, IntBiPoly::X());
  int top = cache.rbegin()->first;
  while (top < n) {
    const IntBiPoly& prev = cache.at(top);
    cache.emplace(top + 1, Multiply(prev, prev) + IntBiPoly::C());
    ++top;
  }
  return cache.at(n);
}

void CheckN(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw InvalidArgument("period n must lie in [1, " + std::to_string(max_n) +
                          "], got " + std::to_string(n));
  }
}

}  // namespace

std::vector<int> DivisorsOf(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

int Mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

int EulerPhi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntBiPoly IterateFcDense(int n) {
  if (n < 0) throw InvalidArgument("iteration count must be >= 0");
  return IterateRef(n);
}

MultiPoly IterateFc(int n) { return IterateFcDense(n).ToMultiPoly(); }

const IntBiPoly& DynatomicDense(int n) {
  CheckN(n, kMaxDegreeReportN);
  {
    std::lock_guard<std::mutex> lock(CacheMutex());
    const auto it = PhiCache().find(n);
    if (it != PhiCache().end()) return it->second;
  }
  IntBiPoly num = IntBiPoly::Constant(1);
  IntBiPoly den = IntBiPoly::Constant(1);
  for (int d : DivisorsOf(n)) {
    const int mu = Mobius(n / d);
    if (mu == 0) continue;
    const IntBiPoly factor = IterateRef(d) - IntBiPoly::X();
    if (mu == 1) {
      num = Multiply(num, factor);
    } else {
      den = Multiply(den, factor);
    }
  }
  IntBiPoly phi = DivideExact(num, den);
  std::lock_guard<std::mutex> lock(CacheMutex());
  return PhiCache().emplace(n, std::move(phi)).first->second;
}

DynatomicTable Dynatomic(int n, int max_n) {
  CheckN(n, max_n);
  DynatomicTable table;
  table.n = n;
  table.phi = DynatomicDense(n).ToMultiPoly();
  table.degree_x = table.phi.Degree("x");
  table.degree_c = table.phi.Degree("c");
  if (BigInt(table.degree_x) != D1(n) || BigInt(2 * table.degree_c) != D1(n)) {
    throw NonExactDivision("dynatomic degrees disagree with D1(" +
                           std::to_string(n) + ")");
  }
  return table;
}

IntBiPoly GeneralizedDynatomicDense(int m, int n) {
  if (m < 0) throw InvalidArgument("preperiod must be >= 0");
  CheckN(n, kMaxDegreeReportN);
  const IntBiPoly& phi = DynatomicDense(n);
  if (m == 0) return phi;
  const IntBiPoly upper = phi.ComposeX(IterateRef(m));
  const IntBiPoly lower = phi.ComposeX(IterateRef(m - 1));
  return DivideExact(upper, lower);
}

MultiPoly GeneralizedDynatomic(int m, int n) {
  return GeneralizedDynatomicDense(m, n).ToMultiPoly();
}

bool ProductIdentityHolds(int n) {
  CheckN(n, kMaxDegreeReportN);
  IntBiPoly product = IntBiPoly::Constant(1);
  for (int d : DivisorsOf(n)) product = Multiply(product, DynatomicDense(d));
  return product == IterateRef(n) - IntBiPoly::X();
}

BigInt D1(int n) {
  CheckN(n, 1 << 20);
  BigInt sum = 0;
  for (int k : DivisorsOf(n)) sum += Mobius(n / k) * Pow2(k);
  return sum;
}

BigInt D0(int n) { return D1(n) / n; }

BigInt BranchPointCount(int n) {
  BigInt proper = 0;
  for (int k : DivisorsOf(n)) {
    if (k < n) proper += D1(k) * EulerPhi(n / k);
  }
  return (D1(n) - proper) / 2;
}

DegreeReport MakeDegreeReport(int n) {
  CheckN(n, kMaxDegreeReportN);
  DegreeReport r;
  r.n = n;
  r.d1 = D1(n);
  r.d0 = r.d1 / n;
  r.branch_points = BranchPointCount(n);
  r.genus_lb = Rational(1) + Rational(r.branch_points, 2) - Rational(r.d0);
  r.genus_lb.canonicalize();
  return r;
}

DegreeBoundsReport CheckDegreeBounds(int n) {
  CheckN(n, kMaxDegreeReportN);
  DegreeBoundsReport r;
  r.n = n;
  r.d1 = D1(n);
  r.d0 = r.d1 / n;
  const BigInt lo = Pow2(n - 1);
  const BigInt hi = Pow2(n);
  r.d1_lower = lo <= r.d1;
  r.d1_upper = r.d1 <= hi;
  r.d1_lower_strict = lo < r.d1;
  r.d1_upper_strict = r.d1 < hi;
  // Compare D0 with 2^(n-1)/n and 2^n/n after multiplying through by n.
  r.d0_lower = lo <= r.d0 * n;
  r.d0_upper = r.d0 * n <= hi;
  r.d0_lower_strict = lo < r.d0 * n;
  r.d0_upper_strict = r.d0 * n < hi;
  r.divisible = r.d1 % n == 0;
  r.strict_required = n >= 3;
  r.ok = r.d1_lower && r.d1_upper && r.d0_lower && r.d0_upper && r.divisible;
  if (r.strict_required) {
    r.ok = r.ok && r.d1_lower_strict && r.d1_upper_strict &&
           r.d0_lower_strict && r.d0_upper_strict;
  }
  return r;
}

AsymptoticReport AsymptoticGenusCheck(int n) {
  if (n < 12 || n > kMaxDegreeReportN) {
    throw InvalidArgument("asymptotic check needs 12 <= n <= " +
                          std::to_string(kMaxDegreeReportN));
  }
  AsymptoticReport r;
  r.n = n;
  const int half = n / 2;
  const BigInt big_n = n;
  r.displayed_lhs = Pow2(n - 2) - big_n * Pow2(half) + big_n;
  r.displayed_rhs = CeilDiv(6 * Pow2(n), big_n);
  r.displayed_holds = r.displayed_lhs >= r.displayed_rhs;

  // 2^(n-2) - n 2^(n/2) + n >= 6 2^n / n, times n, as L >= n^2 2^(n/2).
  const BigInt l = big_n * Pow2(n - 2) + big_n * big_n - 6 * Pow2(n);
  const BigInt n4 = big_n * big_n * big_n * big_n;
  r.displayed_real_holds = l >= 0 && l * l >= n4 * Pow2(n);

  r.branch_points = BranchPointCount(n);
  r.six_d0 = 6 * D0(n);
  r.branch_exceeds_six_d0 = r.branch_points > r.six_d0;

  BigInt d1_sum = 0;
  BigInt pow_sum = 0;
  for (int k = 1; k <= half; ++k) {
    d1_sum += D1(k);
    pow_sum += Pow2(k);
  }
  const BigInt d1n = D1(n);
  // Each link compares twice the bound to avoid halves.
  const BigInt link1 = d1n - big_n * d1_sum;
  const BigInt link2 = Pow2(n - 1) - big_n * pow_sum;
  const BigInt link3 = 2 * (Pow2(n - 2) - big_n * (Pow2(half) - 1));
  r.chain.push_back({"divisor_sum_bound", 2 * r.branch_points >= link1});
  r.chain.push_back({"degree_bounds", link1 >= link2});
  r.chain.push_back({"geometric_sum", link2 == link3});
  r.chain.push_back({"floor_exponent", Pow2(2 * half) <= Pow2(n)});
  r.chain.push_back({"final_inequality", r.displayed_real_holds});
  const BigInt gap = big_n - 24;
  r.chain.push_back(
      {"parenthesized_positive", gap > 0 && gap * gap * Pow2(n) > 16 * n4});
  r.chain.push_back({"parenthesized_increasing",
                     2 * big_n * big_n > (big_n + 1) * (big_n + 1)});
  r.chain_holds = true;
  for (const auto& step : r.chain) r.chain_holds = r.chain_holds && step.holds;
  return r;
}

}  // namespace dynw
