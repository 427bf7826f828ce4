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

#ifndef DYNW_MULTIPOLY_H_
#define DYNW_MULTIPOLY_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynw/rational.h"

namespace dynw {

using Exponents = std::vector<uint32_t>;

// Graded-lex order, largest first: higher total degree wins, ties go to the
// lexicographically larger exponent vector.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Canonical variable order used by every MultiPoly: names compare by
// alphabetic prefix, then numeric suffix (x < x1 < x2 < x10 < y), and the
// parameter "c" always sorts last.
bool VariableLess(std::string_view a, std::string_view b);

// Sparse multivariate polynomial with exact rational coefficients.
//
// The variable list only ever holds variables that occur with a positive
// exponent, in canonical order, so two equal polynomials always have equal
// representations.
//
// Text grammar (printing and parsing round-trip):
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | identifier ['^' integer]
//   sign   := '+' | '-'
// Identifiers are [A-Za-z_][A-Za-z0-9_]*; whitespace is ignored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT: implicit by intent
  MultiPoly(long constant);             // NOLINT

  static MultiPoly Var(std::string_view name);
  // Builds from raw terms over `variables` (any order, duplicates summed).
  static MultiPoly FromTerms(
      const std::vector<std::string>& variables,
      const std::vector<std::pair<Exponents, Rational>>& terms);
  static MultiPoly Parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool IsZero() const { return terms_.empty(); }
  bool IsConstant() const { return vars_.empty(); }
  Rational ConstantValue() const;

  // Exponent of `var` in the highest term; 0 when the variable is absent.
  int Degree(std::string_view var) const;
  int TotalDegree() const;
  bool HasVariable(std::string_view var) const;

  std::string ToString() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly Pow(unsigned e) const;
  // Replaces `var` by `value` everywhere.
  MultiPoly Substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly Rename(const std::map<std::string, std::string>& renaming) const;
  MultiPoly Derivative(std::string_view var) const;
  // Coefficients in powers of `var`: result[i] multiplies var^i.
  std::vector<MultiPoly> CoefficientsIn(std::string_view var) const;

  // Horner evaluation. `values[i]` is the value of variables()[i]; `lift`
  // maps a rational coefficient into T. T needs +, * and copy.
  template <class T, class Lift>
  T Evaluate(const std::vector<T>& values, const T& zero, Lift lift) const;

 private:
  void Normalize();  // prunes unused variables and sorts them canonically

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Returns q with numerator == q * denominator. Throws NonExactDivision when
// no such polynomial exists, InvalidArgument for a zero denominator.
MultiPoly ExactDivide(const MultiPoly& numerator, const MultiPoly& denominator);

// All rational roots of a univariate polynomial, ascending. The zero
// polynomial throws InvalidArgument.
std::vector<Rational> RationalRoots(const MultiPoly& f);

Rational Evaluate(const MultiPoly& f,
                  const std::map<std::string, Rational>& assignment);

template <class T, class Lift>
T MultiPoly::Evaluate(const std::vector<T>& values, const T& zero,
                      Lift lift) const {
  // Terms sorted lexicographically (first variable most significant) form
  // nested groups; each group is evaluated as a univariate Horner scheme.
  std::vector<std::pair<const Exponents*, const Rational*>> order;
  order.reserve(terms_.size());
  for (const auto& [e, coeff] : terms_) order.emplace_back(&e, &coeff);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return *a.first > *b.first; });
  const size_t nvars = vars_.size();
  auto power = [&](const T& base, uint32_t e) {
    T result = lift(Rational(1));
    T b = base;
    while (e > 0) {
      if (e & 1u) result = result * b;
      e >>= 1;
      if (e > 0) b = b * b;
    }
    return result;
  };
  auto eval = [&](auto&& self, size_t lo, size_t hi, size_t var) -> T {
    if (var == nvars) return lift(*order[lo].second);
    T acc = zero;
    uint32_t prev = 0;
    bool first = true;
    size_t i = lo;
    while (i < hi) {
      const uint32_t e = (*order[i].first)[var];
      size_t j = i;
      while (j < hi && (*order[j].first)[var] == e) ++j;
      T inner = self(self, i, j, var + 1);
      if (first) {
        acc = inner;
        first = false;
      } else {
        acc = acc * power(values[var], prev - e) + inner;
      }
      prev = e;
      i = j;
    }
    return acc * power(values[var], prev);
  };
  if (order.empty()) return zero;
  return eval(eval, 0, order.size(), 0);
}

}  // namespace dynw

#endif  // DYNW_MULTIPOLY_H_
