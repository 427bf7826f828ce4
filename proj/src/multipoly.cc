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

#include "dynw/multipoly.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dynw/errors.h"

namespace dynw {

namespace {

uint32_t TotalDegreeOf(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

// Splits a variable name into alphabetic prefix and numeric suffix; a name
// without digits gets suffix -1 so that "x" sorts before "x1".
std::pair<std::string_view, long long> SplitName(std::string_view name) {
  size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) {
    --cut;
  }
  if (cut == name.size() || cut == 0 || name.size() - cut > 17) {
    return {name, -1};
  }
  return {name.substr(0, cut), std::stoll(std::string(name.substr(cut)))};
}

// Re-expresses `terms` over `target`, which must contain every variable of
// `from`.
MultiPoly::TermMap Remap(const MultiPoly::TermMap& terms,
                         const std::vector<std::string>& from,
                         const std::vector<std::string>& target) {
  if (from == target) return terms;
  std::vector<size_t> slot(from.size());
  for (size_t i = 0; i < from.size(); ++i) {
    slot[i] = std::find(target.begin(), target.end(), from[i]) - target.begin();
  }
  MultiPoly::TermMap out;
  for (const auto& [e, coeff] : terms) {
    Exponents f(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) f[slot[i]] = e[i];
    out.emplace(std::move(f), coeff);
  }
  return out;
}

std::vector<std::string> MergeVariables(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             [](const std::string& x, const std::string& y) {
               return VariableLess(x, y);
             });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void AddTerm(MultiPoly::TermMap& terms, const Exponents& e,
             const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly ParsePoly() {
    MultiPoly result;
    SkipSpace();
    bool negative = false;
    if (Peek() == '+' || Peek() == '-') negative = Take() == '-';
    MultiPoly term = ParseTerm();
    result += negative ? -term : term;
    for (SkipSpace(); pos_ < text_.size(); SkipSpace()) {
      const char sign = Take();
      if (sign != '+' && sign != '-') Fail("expected '+' or '-'");
      term = ParseTerm();
      result += sign == '-' ? -term : term;
    }
    return result;
  }

 private:
  MultiPoly ParseTerm() {
    MultiPoly term = ParseFactor();
    for (SkipSpace(); Peek() == '*'; SkipSpace()) {
      Take();
      term *= ParseFactor();
    }
    return term;
  }

  MultiPoly ParseFactor() {
    SkipSpace();
    const char ch = Peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      BigInt num = ParseBigInt(Digits());
      SkipSpace();
      if (Peek() == '/') {
        Take();
        SkipSpace();
        BigInt den = ParseBigInt(Digits());
        if (den == 0) Fail("zero denominator");
        return MultiPoly(MakeRational(num, den));
      }
      return MultiPoly(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      MultiPoly v = MultiPoly::Var(text_.substr(start, pos_ - start));
      SkipSpace();
      if (Peek() == '^') {
        Take();
        SkipSpace();
        const BigInt e = ParseBigInt(Digits());
        if (!e.fits_uint_p()) Fail("exponent too large");
        return v.Pow(e.get_ui());
      }
      return v;
    }
    Fail("expected a number or identifier");
  }

  std::string_view Digits() {
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char Take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " +
                     std::to_string(pos_) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

// Lists divisors of |n| > 0. Trial division is capped; a cofactor that is
// not a probable prime beyond the cap throws BudgetExceeded.
std::vector<BigInt> Divisors(BigInt n) {
  constexpr unsigned long kTrialLimit = 1000000;
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, int>> factors;
  for (unsigned long d = 2; d <= kTrialLimit && BigInt(d) * d <= n; ++d) {
    int mult = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      ++mult;
    }
    if (mult > 0) factors.emplace_back(BigInt(d), mult);
  }
  if (n > 1) {
    if (BigInt(kTrialLimit) * kTrialLimit < n &&
        mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw BudgetExceeded("coefficient too hard to factor for root search");
    }
    factors.emplace_back(n, 1);
  }
  std::vector<BigInt> divisors = {BigInt(1)};
  for (const auto& [prime, mult] : factors) {
    const size_t base = divisors.size();
    BigInt power = 1;
    for (int i = 0; i < mult; ++i) {
      power *= prime;
      for (size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  return divisors;
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a,
                                  const Exponents& b) const {
  const uint32_t da = TotalDegreeOf(a);
  const uint32_t db = TotalDegreeOf(b);
  if (da != db) return da > db;
  return a > b;
}

bool VariableLess(std::string_view a, std::string_view b) {
  const bool a_param = a == "c";
  const bool b_param = b == "c";
  if (a_param != b_param) return b_param;
  const auto [pa, na] = SplitName(a);
  const auto [pb, nb] = SplitName(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPoly::MultiPoly(long constant) : MultiPoly(Rational(constant)) {}

MultiPoly MultiPoly::Var(std::string_view name) {
  MultiPoly p;
  p.vars_.emplace_back(name);
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::FromTerms(
    const std::vector<std::string>& variables,
    const std::vector<std::pair<Exponents, Rational>>& terms) {
  std::vector<std::string> sorted = variables;
  std::sort(sorted.begin(), sorted.end(),
            [](const std::string& x, const std::string& y) {
              return VariableLess(x, y);
            });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("duplicate variable name");
  }
  MultiPoly p;
  p.vars_ = variables;
  for (const auto& [e, coeff] : terms) {
    if (e.size() != variables.size()) {
      throw InvalidArgument("exponent vector length mismatch");
    }
    AddTerm(p.terms_, e, coeff);
  }
  p.terms_ = Remap(p.terms_, variables, sorted);
  p.vars_ = std::move(sorted);
  p.Normalize();
  return p;
}

MultiPoly MultiPoly::Parse(std::string_view text) {
  return Parser(text).ParsePoly();
}

void MultiPoly::Normalize() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, coeff] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) kept.push_back(vars_[i]);
  }
  TermMap out;
  for (const auto& [e, coeff] : terms_) {
    Exponents f;
    f.reserve(kept.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (used[i]) f.push_back(e[i]);
    }
    out.emplace(std::move(f), coeff);
  }
  vars_ = std::move(kept);
  terms_ = std::move(out);
}

Rational MultiPoly::ConstantValue() const {
  if (!IsConstant()) throw InvalidArgument("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::Degree(std::string_view var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const size_t i = it - vars_.begin();
  uint32_t d = 0;
  for (const auto& [e, coeff] : terms_) d = std::max(d, e[i]);
  return static_cast<int>(d);
}

int MultiPoly::TotalDegree() const {
  return terms_.empty() ? 0 : static_cast<int>(TotalDegreeOf(terms_.begin()->first));
}

bool MultiPoly::HasVariable(std::string_view var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

std::string MultiPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, coeff] : terms_) {
    Rational magnitude = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += vars_[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += dynw::ToString(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += dynw::ToString(magnitude) + "*" + monomial;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, coeff] : p.terms_) coeff = -coeff;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (vars_ != other.vars_) {
    std::vector<std::string> merged = MergeVariables(vars_, other.vars_);
    terms_ = Remap(terms_, vars_, merged);
    vars_ = std::move(merged);
  }
  const TermMap rhs = Remap(other.terms_, other.vars_, vars_);
  for (const auto& [e, coeff] : rhs) AddTerm(terms_, e, coeff);
  Normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  return *this += -other;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  if (a.IsZero() || b.IsZero()) return out;
  out.vars_ = MergeVariables(a.vars_, b.vars_);
  const MultiPoly::TermMap ta = Remap(a.terms_, a.vars_, out.vars_);
  const MultiPoly::TermMap tb = Remap(b.terms_, b.vars_, out.vars_);
  const size_t n = out.vars_.size();
  Exponents sum(n);
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (size_t i = 0; i < n; ++i) sum[i] = ea[i] + eb[i];
      AddTerm(out.terms_, sum, ca * cb);
    }
  }
  out.Normalize();
  return out;
}

MultiPoly MultiPoly::Pow(unsigned e) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::Substitute(std::string_view var,
                                const MultiPoly& value) const {
  const std::vector<MultiPoly> coeffs = CoefficientsIn(var);
  MultiPoly acc;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * value + coeffs[i];
  return acc;
}

MultiPoly MultiPoly::Rename(
    const std::map<std::string, std::string>& renaming) const {
  std::vector<std::string> names = vars_;
  for (auto& name : names) {
    const auto it = renaming.find(name);
    if (it != renaming.end()) name = it->second;
  }
  std::vector<std::pair<Exponents, Rational>> raw(terms_.begin(), terms_.end());
  return FromTerms(names, raw);
}

MultiPoly MultiPoly::Derivative(std::string_view var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  MultiPoly out;
  if (it == vars_.end()) return out;
  const size_t i = it - vars_.begin();
  out.vars_ = vars_;
  for (const auto& [e, coeff] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    AddTerm(out.terms_, f, coeff * e[i]);
  }
  out.Normalize();
  return out;
}

std::vector<MultiPoly> MultiPoly::CoefficientsIn(std::string_view var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {*this};
  const size_t i = it - vars_.begin();
  std::vector<MultiPoly> out(Degree(var) + 1);
  for (auto& p : out) p.vars_ = vars_;
  for (const auto& [e, coeff] : terms_) {
    Exponents f = e;
    f[i] = 0;
    out[e[i]].terms_.emplace(std::move(f), coeff);
  }
  for (auto& p : out) p.Normalize();
  return out;
}

MultiPoly ExactDivide(const MultiPoly& numerator,
                      const MultiPoly& denominator) {
  if (denominator.IsZero()) throw InvalidArgument("division by zero polynomial");
  if (numerator.IsZero()) return MultiPoly();
  const std::vector<std::string>& nv = numerator.variables();
  for (const auto& v : denominator.variables()) {
    if (std::find(nv.begin(), nv.end(), v) == nv.end()) {
      throw NonExactDivision("denominator has variable '" + v +
                             "' absent from the numerator");
    }
  }
  const size_t n = nv.size();
  MultiPoly::TermMap rem = numerator.terms();
  const MultiPoly::TermMap den =
      Remap(denominator.terms(), denominator.variables(), nv);
  const auto& [lead_e, lead_c] = *den.begin();
  std::vector<std::pair<Exponents, Rational>> quotient;
  Exponents shift(n);
  // With a monomial order, lt(rem) must stay divisible by lt(den) whenever
  // the division is exact, so a failed test proves inexactness.
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.begin();
    for (size_t i = 0; i < n; ++i) {
      if (re[i] < lead_e[i]) {
        throw NonExactDivision("inexact division: " + numerator.ToString() +
                               " by " + denominator.ToString());
      }
      shift[i] = re[i] - lead_e[i];
    }
    const Rational factor = rc / lead_c;
    quotient.emplace_back(shift, factor);
    Exponents sum(n);
    for (const auto& [de, dc] : den) {
      for (size_t i = 0; i < n; ++i) sum[i] = de[i] + shift[i];
      AddTerm(rem, sum, -factor * dc);
    }
  }
  return MultiPoly::FromTerms(nv, quotient);
}

std::vector<Rational> RationalRoots(const MultiPoly& f) {
  if (f.IsZero()) throw InvalidArgument("rational roots of the zero polynomial");
  if (f.variables().size() > 1) {
    throw InvalidArgument("rational roots need a univariate polynomial");
  }
  if (f.IsConstant()) return {};
  const std::string var = f.variables()[0];
  const std::vector<MultiPoly> coeffs = f.CoefficientsIn(var);
  BigInt den_lcm = 1;
  for (const auto& c : coeffs) {
    const Rational v = c.ConstantValue();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            v.get_den_mpz_t());
  }
  std::vector<BigInt> a;
  for (const auto& c : coeffs) {
    const Rational v = c.ConstantValue() * den_lcm;
    a.push_back(v.get_num());
  }
  std::vector<Rational> roots;
  size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  a.erase(a.begin(), a.begin() + low);
  BigInt content = 0;
  for (const auto& v : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  for (auto& v : a) v /= content;
  if (a.size() > 1) {
    const size_t deg = a.size() - 1;
    // Homogeneous Horner test of sum a_i p^i q^(deg-i) == 0.
    auto check = [&](const BigInt& p, const BigInt& q) {
      BigInt acc = a[deg];
      BigInt qpow = 1;
      for (size_t i = deg; i-- > 0;) {
        qpow *= q;
        acc = acc * p + a[i] * qpow;
      }
      return acc == 0;
    };
    for (const BigInt& p : Divisors(a[0])) {
      for (const BigInt& q : Divisors(a[deg])) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        if (check(p, q)) roots.push_back(MakeRational(p, q));
        if (check(-p, q)) roots.push_back(MakeRational(-p, q));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Rational Evaluate(const MultiPoly& f,
                  const std::map<std::string, Rational>& assignment) {
  std::vector<Rational> values;
  for (const auto& v : f.variables()) {
    const auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw MissingVariable("no value for variable '" + v + "'");
    }
    values.push_back(it->second);
  }
  return f.Evaluate(values, Rational(0), [](const Rational& r) { return r; });
}

}  // namespace dynw
