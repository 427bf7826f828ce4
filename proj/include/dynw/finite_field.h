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

#ifndef DYNW_FINITE_FIELD_H_
#define DYNW_FINITE_FIELD_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dynw/multipoly.h"
#include "dynw/rational.h"

namespace dynw {

inline constexpr uint64_t kDefaultEnumerationCap = 10000000;

bool IsPrime(uint64_t n);

// F_q with q = p^k, realised as F_p[a]/(modulus).
//
// Elements are handled as integer codes in [0, q): the code of
// c_0 + c_1 a + ... + c_{k-1} a^{k-1} is sum c_i p^(k-1-i), so increasing
// codes list coefficient vectors in lexicographic order. Hot loops work on
// codes directly; FFElement wraps a code with its context.
class FFContext {
 public:
  // Uses the first monic irreducible of degree k in lexicographic order of
  // its lower coefficients (m_0, ..., m_{k-1}).
  static std::shared_ptr<const FFContext> Create(uint64_t p, int k);
  // `modulus` lists coefficients from constant term up; it must be monic of
  // degree k and irreducible (checked). Throws InvalidArgument.
  static std::shared_ptr<const FFContext> Create(uint64_t p, int k,
                                                 std::vector<uint64_t> modulus);

  uint64_t p() const { return p_; }
  int k() const { return k_; }
  uint64_t q() const { return q_; }
  const std::vector<uint64_t>& modulus() const { return modulus_; }
  bool SameField(const FFContext& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  uint64_t Add(uint64_t a, uint64_t b) const;
  uint64_t Sub(uint64_t a, uint64_t b) const;
  uint64_t Neg(uint64_t a) const;
  uint64_t Mul(uint64_t a, uint64_t b) const;
  uint64_t Pow(uint64_t a, const BigInt& e) const;
  uint64_t Pow(uint64_t a, uint64_t e) const;
  // Throws InvalidArgument for zero.
  uint64_t Inv(uint64_t a) const;
  uint64_t FromInt(int64_t v) const;
  // Throws NotPIntegral when p divides the denominator.
  uint64_t FromRational(const Rational& r) const;
  uint64_t One() const { return place_[0]; }

  std::vector<uint64_t> Coeffs(uint64_t code) const;
  uint64_t Encode(const std::vector<uint64_t>& coeffs) const;
  // Prime-field elements print as integers, others as [c0,c1,...].
  std::string Format(uint64_t code) const;

  // Irreducibility test over F_p by gcd with x^(p^j) - x for j <= k/2.
  static bool IsIrreducible(uint64_t p, const std::vector<uint64_t>& monic);

 private:
  FFContext(uint64_t p, int k, std::vector<uint64_t> modulus);

  uint64_t p_;
  int k_;
  uint64_t q_;
  std::vector<uint64_t> modulus_;
  std::vector<uint64_t> place_;  // place_[i] = p^(k-1-i)
};

class FFElement {
 public:
  FFElement(std::shared_ptr<const FFContext> ctx, uint64_t code);

  const FFContext& context() const { return *ctx_; }
  const std::shared_ptr<const FFContext>& context_ptr() const { return ctx_; }
  uint64_t code() const { return code_; }
  std::vector<uint64_t> coeffs() const { return ctx_->Coeffs(code_); }
  bool IsZero() const { return code_ == 0; }
  std::string ToString() const { return ctx_->Format(code_); }

  FFElement Pow(const BigInt& e) const;
  FFElement Inverse() const;

  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend FFElement operator/(const FFElement& a, const FFElement& b);
  FFElement operator-() const;
  friend bool operator==(const FFElement& a, const FFElement& b);

 private:
  std::shared_ptr<const FFContext> ctx_;
  uint64_t code_;
};

// Deterministic enumeration of all q elements in code order.
class FFRange {
 public:
  class Iterator {
   public:
    Iterator(const std::shared_ptr<const FFContext>* ctx, uint64_t code)
        : ctx_(ctx), code_(code) {}
    FFElement operator*() const { return FFElement(*ctx_, code_); }
    Iterator& operator++() {
      ++code_;
      return *this;
    }
    bool operator!=(const Iterator& other) const { return code_ != other.code_; }

   private:
    const std::shared_ptr<const FFContext>* ctx_;
    uint64_t code_;
  };

  explicit FFRange(std::shared_ptr<const FFContext> ctx) : ctx_(std::move(ctx)) {}
  Iterator begin() const { return Iterator(&ctx_, 0); }
  Iterator end() const { return Iterator(&ctx_, ctx_->q()); }
  uint64_t size() const { return ctx_->q(); }

 private:
  std::shared_ptr<const FFContext> ctx_;
};

// Throws BudgetExceeded when q > cap.
FFRange FFEnumerate(std::shared_ptr<const FFContext> ctx,
                    uint64_t cap = kDefaultEnumerationCap);

// Univariate polynomials over F_q as ascending code vectors, no trailing
// zeros (the zero polynomial is empty).
using FqPoly = std::vector<uint64_t>;

void FqTrim(FqPoly& a);
FqPoly FqMulMod(const FFContext& f, const FqPoly& a, const FqPoly& b,
                const FqPoly& m);
FqPoly FqMod(const FFContext& f, FqPoly a, const FqPoly& m);
FqPoly FqGcd(const FFContext& f, FqPoly a, FqPoly b);
// x^e mod m.
FqPoly FqPowX(const FFContext& f, const BigInt& e, const FqPoly& m);
// Number of distinct roots in F_q of a nonzero polynomial.
uint64_t FqCountRoots(const FFContext& f, const FqPoly& g);

// Evaluation of a MultiPoly with F_q values.
using Scalar = std::variant<Rational, FFElement>;

FFElement Evaluate(const MultiPoly& f,
                   const std::map<std::string, FFElement>& assignment);
// Throws MissingVariable, or MixedScalarKinds when the assignment mixes
// rationals with field elements or elements of different fields.
Scalar PolyEval(const MultiPoly& f, const std::map<std::string, Scalar>& assignment);

// A MultiPoly reduced into F_q for repeated evaluation on code vectors.
class CompiledPoly {
 public:
  CompiledPoly(const MultiPoly& f, const std::vector<std::string>& variables,
               const FFContext& ctx);
  // values[i] is the code of variables[i].
  uint64_t Eval(const std::vector<uint64_t>& values) const;
  bool IsZeroPoly() const { return terms_.empty(); }

 private:
  const FFContext* ctx_;
  std::vector<std::pair<std::vector<uint32_t>, uint64_t>> terms_;
  std::vector<uint32_t> max_exp_;
};

}  // namespace dynw

#endif  // DYNW_FINITE_FIELD_H_
