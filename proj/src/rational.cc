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

#include "dynw/rational.h"

#include <cctype>

#include "dynw/errors.h"

namespace dynw {

namespace {

bool IsIntegerToken(std::string_view text) {
  size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt ParseBigInt(std::string_view text) {
  if (!IsIntegerToken(text)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

Rational ParseRational(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseBigInt(text));
  const BigInt num = ParseBigInt(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) +
                     "'");
  }
  const BigInt den = ParseBigInt(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return MakeRational(num, den);
}

Rational MakeRational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) { return value.get_str(10); }
std::string ToString(const BigInt& value) { return value.get_str(10); }

BigInt FloorSqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt CeilSqrt(const BigInt& n) {
  BigInt r = FloorSqrt(n);
  if (r * r < n) ++r;
  return r;
}

bool IsPerfectSquare(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt CeilDiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int64_t ToInt64(const BigInt& value) {
  if (!value.fits_slong_p()) throw InvalidArgument("integer out of range");
  return value.get_si();
}

}  // namespace dynw
