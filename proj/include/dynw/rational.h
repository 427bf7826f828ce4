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

#ifndef DYNW_RATIONAL_H_
#define DYNW_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dynw {

// GMP keeps mpq_class canonical (coprime, positive denominator) after every
// arithmetic operation; only raw construction needs an explicit canonicalize.
using BigInt = mpz_class;
using Rational = mpq_class;

// Accepts "a" or "a/b" with an optional sign. Throws ParseError.
Rational ParseRational(std::string_view text);
BigInt ParseBigInt(std::string_view text);

std::string ToString(const Rational& value);
std::string ToString(const BigInt& value);

Rational MakeRational(const BigInt& num, const BigInt& den);

// Floor and ceiling of sqrt(n) for n >= 0.
BigInt FloorSqrt(const BigInt& n);
BigInt CeilSqrt(const BigInt& n);
bool IsPerfectSquare(const BigInt& n);

// Ceiling of a / b for b > 0.
BigInt CeilDiv(const BigInt& a, const BigInt& b);

int64_t ToInt64(const BigInt& value);

}  // namespace dynw

#endif  // DYNW_RATIONAL_H_
