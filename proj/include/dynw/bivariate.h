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

#ifndef DYNW_BIVARIATE_H_
#define DYNW_BIVARIATE_H_

#include <string>
#include <vector>

#include "dynw/multipoly.h"
#include "dynw/parallel.h"
#include "dynw/rational.h"

namespace dynw {

// Dense integer polynomial in (x, c), stored as rows by x-degree, each row a
// coefficient vector in c. This is the workhorse for dynatomic polynomials,
// whose coefficients are integral.
//
// Products and exact quotients go through Kronecker substitution: the whole
// polynomial is packed into one big integer (c -> 2^b, x -> 2^(b*W)), so GMP's
// fast integer multiplication and exact division do the heavy lifting.
class IntBiPoly {
 public:
  IntBiPoly() = default;
  // rows[i][j] is the coefficient of x^i c^j.
  explicit IntBiPoly(std::vector<std::vector<BigInt>> rows);

  static IntBiPoly X();
  static IntBiPoly C();
  static IntBiPoly Constant(long v);
  // Throws InvalidArgument for non-integral coefficients or other variables.
  static IntBiPoly FromMultiPoly(const MultiPoly& f, const std::string& x = "x",
                                 const std::string& c = "c");
  MultiPoly ToMultiPoly(const std::string& x = "x",
                        const std::string& c = "c") const;

  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
  bool IsZero() const { return rows_.empty(); }
  int DegreeX() const { return static_cast<int>(rows_.size()) - 1; }
  int DegreeC() const;
  size_t TermCount() const;
  // Largest coefficient bit length.
  size_t MaxBits() const;

  IntBiPoly operator-() const;
  friend IntBiPoly operator+(const IntBiPoly& a, const IntBiPoly& b);
  friend IntBiPoly operator-(const IntBiPoly& a, const IntBiPoly& b);
  friend bool operator==(const IntBiPoly& a, const IntBiPoly& b) {
    return a.rows_ == b.rows_;
  }

  // Substitutes `inner` for x.
  IntBiPoly ComposeX(const IntBiPoly& inner, Exec exec = Exec::kParallel) const;

 private:
  void Trim();
  std::vector<std::vector<BigInt>> rows_;
};

IntBiPoly Multiply(const IntBiPoly& a, const IntBiPoly& b,
                   Exec exec = Exec::kParallel);
// Exact quotient; throws NonExactDivision when b does not divide a.
IntBiPoly DivideExact(const IntBiPoly& a, const IntBiPoly& b,
                      Exec exec = Exec::kParallel);

// Kronecker packing primitives, exposed for tests and benchmarks. `bits` must
// be a positive multiple of 64 exceeding every coefficient's bit length plus
// one sign bit; `width` must exceed the c-degree.
BigInt Pack(const IntBiPoly& a, size_t bits, size_t width, Exec exec);
IntBiPoly Unpack(const BigInt& packed, size_t bits, size_t width, Exec exec);

}  // namespace dynw

#endif  // DYNW_BIVARIATE_H_
