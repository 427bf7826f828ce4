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

#include "dynw/finite_field.h"

#include <algorithm>

#include "dynw/errors.h"

namespace dynw {

namespace {

constexpr uint64_t kMaxPrime = (uint64_t{1} << 31) - 1;

uint64_t MulModP(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t PowModP(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = MulModP(r, a, p);
    a = MulModP(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FFContext::FFContext(uint64_t p, int k, std::vector<uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  place_.assign(k, 1);
  for (int i = k - 2; i >= 0; --i) place_[i] = place_[i + 1] * p;
  q_ = place_[0] * p;
}

std::shared_ptr<const FFContext> FFContext::Create(uint64_t p, int k) {
  if (!IsPrime(p) || p > kMaxPrime) throw InvalidArgument("p must be a prime below 2^31");
  if (k < 1) throw InvalidArgument("extension degree must be >= 1");
  if (k == 1) return Create(p, 1, {0, 1});
  BigInt q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > BigInt(kMaxPrime) * kMaxPrime) throw BudgetExceeded("field too large");
  std::vector<uint64_t> m(k + 1, 0);
  m[k] = 1;
  // Odometer over (m_0, ..., m_{k-1}) with m_{k-1} changing fastest.
  while (true) {
    if (m[0] != 0 && IsIrreducible(p, m)) return Create(p, k, m);
    int i = k - 1;
    while (i >= 0 && ++m[i] == p) m[i--] = 0;
    if (i < 0) break;
  }
  throw InvalidArgument("no irreducible modulus found");
}

std::shared_ptr<const FFContext> FFContext::Create(
    uint64_t p, int k, std::vector<uint64_t> modulus) {
  if (!IsPrime(p) || p > kMaxPrime) throw InvalidArgument("p must be a prime below 2^31");
  if (k < 1) throw InvalidArgument("extension degree must be >= 1");
  if (modulus.size() != static_cast<size_t>(k) + 1 || modulus[k] != 1) {
    throw InvalidArgument("modulus must be monic of degree k");
  }
  for (uint64_t c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficients must lie in [0, p)");
  }
  if (!IsIrreducible(p, modulus)) {
    throw InvalidArgument("modulus is reducible over F_p");
  }
  double size = 1;
  for (int i = 0; i < k; ++i) size *= static_cast<double>(p);
  if (size > 1.8e19) throw BudgetExceeded("field too large");
  return std::shared_ptr<const FFContext>(new FFContext(p, k, std::move(modulus)));
}

bool FFContext::IsIrreducible(uint64_t p, const std::vector<uint64_t>& monic) {
  const int k = static_cast<int>(monic.size()) - 1;
  if (k <= 1) return k == 1;
  const FFContext prime(p, 1, {0, 1});
  FqPoly m(monic.begin(), monic.end());
  FqPoly xpow = {0, 1};  // x^(p^j) mod m
  for (int j = 1; j <= k / 2; ++j) {
    // Raise to the p-th power by square-and-multiply on polynomials.
    FqPoly base = xpow;
    FqPoly acc = {1};
    uint64_t e = p;
    while (e > 0) {
      if (e & 1) acc = FqMulMod(prime, acc, base, m);
      e >>= 1;
      if (e > 0) base = FqMulMod(prime, base, base, m);
    }
    xpow = acc;
    FqPoly diff = xpow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = prime.Sub(diff[1], 1);
    FqTrim(diff);
    const FqPoly g = FqGcd(prime, m, diff);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<uint64_t> FFContext::Coeffs(uint64_t code) const {
  std::vector<uint64_t> out(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

uint64_t FFContext::Encode(const std::vector<uint64_t>& coeffs) const {
  uint64_t code = 0;
  for (int i = 0; i < k_; ++i) code += (coeffs[i] % p_) * place_[i];
  return code;
}

uint64_t FFContext::Add(uint64_t a, uint64_t b) const {
  if (k_ == 1) {
    const uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t out = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    const uint64_t da = (a / place_[i]) % p_;
    const uint64_t db = (b / place_[i]) % p_;
    const uint64_t s = da + db;
    out += (s >= p_ ? s - p_ : s) * place_[i];
  }
  return out;
}

uint64_t FFContext::Neg(uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  uint64_t out = 0;
  for (int i = 0; i < k_; ++i) {
    const uint64_t d = (a / place_[i]) % p_;
    out += (d == 0 ? 0 : p_ - d) * place_[i];
  }
  return out;
}

uint64_t FFContext::Sub(uint64_t a, uint64_t b) const { return Add(a, Neg(b)); }

uint64_t FFContext::Mul(uint64_t a, uint64_t b) const {
  if (k_ == 1) return MulModP(a, b, p_);
  const std::vector<uint64_t> x = Coeffs(a);
  const std::vector<uint64_t> y = Coeffs(b);
  std::vector<uint64_t> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const uint64_t lead = prod[d];
    if (lead == 0) continue;
    for (int i = 0; i < k_; ++i) {
      prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - lead) * modulus_[i]) % p_;
    }
    prod[d] = 0;
  }
  prod.resize(k_);
  return Encode(prod);
}

uint64_t FFContext::Pow(uint64_t a, uint64_t e) const {
  uint64_t r = One();
  while (e > 0) {
    if (e & 1) r = Mul(r, a);
    e >>= 1;
    if (e > 0) a = Mul(a, a);
  }
  return r;
}

uint64_t FFContext::Pow(uint64_t a, const BigInt& e) const {
  if (e < 0) return Pow(Inv(a), BigInt(-e));
  uint64_t r = One();
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = Mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = Mul(r, a);
  }
  return r;
}

uint64_t FFContext::Inv(uint64_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return Pow(a, q_ - 2);
}

uint64_t FFContext::FromInt(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return static_cast<uint64_t>(r) * place_[0];
}

uint64_t FFContext::FromRational(const Rational& r) const {
  const uint64_t den = mpz_fdiv_ui(r.get_den_mpz_t(), p_);
  if (den == 0) {
    throw NotPIntegral(ToString(r) + " is not integral at " + std::to_string(p_));
  }
  const uint64_t num = mpz_fdiv_ui(r.get_num_mpz_t(), p_);
  return MulModP(num, PowModP(den, p_ - 2, p_), p_) * place_[0];
}

std::string FFContext::Format(uint64_t code) const {
  if (k_ == 1) return std::to_string(code);
  std::string out = "[";
  const std::vector<uint64_t> c = Coeffs(code);
  for (int i = 0; i < k_; ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

FFElement::FFElement(std::shared_ptr<const FFContext> ctx, uint64_t code)
    : ctx_(std::move(ctx)), code_(code) {
  if (code_ >= ctx_->q()) throw InvalidArgument("field element code out of range");
}

namespace {

const FFContext& Common(const FFElement& a, const FFElement& b) {
  if (&a.context() != &b.context() && !a.context().SameField(b.context())) {
    throw MixedScalarKinds("elements of different finite fields");
  }
  return a.context();
}

}  // namespace

FFElement operator+(const FFElement& a, const FFElement& b) {
  return FFElement(a.ctx_, Common(a, b).Add(a.code_, b.code_));
}
FFElement operator-(const FFElement& a, const FFElement& b) {
  return FFElement(a.ctx_, Common(a, b).Sub(a.code_, b.code_));
}
FFElement operator*(const FFElement& a, const FFElement& b) {
  return FFElement(a.ctx_, Common(a, b).Mul(a.code_, b.code_));
}
FFElement operator/(const FFElement& a, const FFElement& b) {
  return FFElement(a.ctx_, Common(a, b).Mul(a.code_, b.ctx_->Inv(b.code_)));
}
FFElement FFElement::operator-() const { return FFElement(ctx_, ctx_->Neg(code_)); }
bool operator==(const FFElement& a, const FFElement& b) {
  return Common(a, b).q() > 0 && a.code_ == b.code_;
}
FFElement FFElement::Pow(const BigInt& e) const {
  return FFElement(ctx_, ctx_->Pow(code_, e));
}
FFElement FFElement::Inverse() const { return FFElement(ctx_, ctx_->Inv(code_)); }

FFRange FFEnumerate(std::shared_ptr<const FFContext> ctx, uint64_t cap) {
  if (ctx->q() > cap) {
    throw BudgetExceeded("field of size " + std::to_string(ctx->q()) +
                         " exceeds enumeration cap " + std::to_string(cap));
  }
  return FFRange(std::move(ctx));
}

void FqTrim(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FqPoly FqMod(const FFContext& f, FqPoly a, const FqPoly& m) {
  FqTrim(a);
  const size_t dm = m.size() - 1;
  if (a.size() <= dm) return a;
  const uint64_t inv_lead = f.Inv(m.back());
  for (size_t d = a.size() - 1; d >= dm; --d) {
    const uint64_t lead = a[d];
    if (lead != 0) {
      const uint64_t factor = f.Mul(lead, inv_lead);
      for (size_t i = 0; i <= dm; ++i) {
        a[d - dm + i] = f.Sub(a[d - dm + i], f.Mul(factor, m[i]));
      }
    }
    if (d == dm) break;
  }
  a.resize(dm);
  FqTrim(a);
  return a;
}

FqPoly FqMulMod(const FFContext& f, const FqPoly& a, const FqPoly& b,
                const FqPoly& m) {
  if (a.empty() || b.empty()) return {};
  FqPoly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = f.Add(prod[i + j], f.Mul(a[i], b[j]));
    }
  }
  return FqMod(f, std::move(prod), m);
}

FqPoly FqGcd(const FFContext& f, FqPoly a, FqPoly b) {
  FqTrim(a);
  FqTrim(b);
  while (!b.empty()) {
    FqPoly r = FqMod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const uint64_t inv = f.Inv(a.back());
    for (auto& v : a) v = f.Mul(v, inv);
  }
  return a;
}

FqPoly FqPowX(const FFContext& f, const BigInt& e, const FqPoly& m) {
  FqPoly r = {f.One()};
  r = FqMod(f, r, m);
  const FqPoly x = FqMod(f, {0, f.One()}, m);
  const size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = FqMulMod(f, r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = FqMulMod(f, r, x, m);
  }
  return r;
}

uint64_t FqCountRoots(const FFContext& f, const FqPoly& g_in) {
  FqPoly g = g_in;
  FqTrim(g);
  if (g.empty()) throw InvalidArgument("roots of the zero polynomial");
  if (g.size() == 1) return 0;
  FqPoly xq = FqPowX(f, BigInt(std::to_string(f.q())), g);
  if (xq.size() < 2) xq.resize(2, 0);
  xq[1] = f.Sub(xq[1], f.One());
  FqTrim(xq);
  if (xq.empty()) return g.size() - 1;  // g divides x^q - x
  return FqGcd(f, g, xq).size() - 1;
}

FFElement Evaluate(const MultiPoly& f,
                   const std::map<std::string, FFElement>& assignment) {
  if (assignment.empty() && !f.IsConstant()) {
    throw MissingVariable("no value for variable '" + f.variables()[0] + "'");
  }
  if (assignment.empty()) throw MixedScalarKinds("no field context available");
  const auto& ctx = assignment.begin()->second.context_ptr();
  std::vector<FFElement> values;
  for (const auto& v : f.variables()) {
    const auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw MissingVariable("no value for variable '" + v + "'");
    }
    values.push_back(it->second);
  }
  for (const auto& [name, value] : assignment) {
    if (!value.context().SameField(*ctx)) {
      throw MixedScalarKinds("elements of different finite fields");
    }
  }
  return f.Evaluate(values, FFElement(ctx, 0), [&](const Rational& r) {
    return FFElement(ctx, ctx->FromRational(r));
  });
}

Scalar PolyEval(const MultiPoly& f,
                const std::map<std::string, Scalar>& assignment) {
  size_t rationals = 0;
  for (const auto& [name, value] : assignment) {
    rationals += std::holds_alternative<Rational>(value) ? 1 : 0;
  }
  if (rationals != 0 && rationals != assignment.size()) {
    throw MixedScalarKinds("assignment mixes rationals and field elements");
  }
  if (rationals == assignment.size()) {
    std::map<std::string, Rational> values;
    for (const auto& [name, value] : assignment) {
      values.emplace(name, std::get<Rational>(value));
    }
    return Evaluate(f, values);
  }
  std::map<std::string, FFElement> values;
  for (const auto& [name, value] : assignment) {
    values.emplace(name, std::get<FFElement>(value));
  }
  return Evaluate(f, values);
}

CompiledPoly::CompiledPoly(const MultiPoly& f,
                           const std::vector<std::string>& variables,
                           const FFContext& ctx)
    : ctx_(&ctx), max_exp_(variables.size(), 0) {
  std::vector<size_t> slot;
  for (const auto& v : f.variables()) {
    const auto it = std::find(variables.begin(), variables.end(), v);
    if (it == variables.end()) {
      throw MissingVariable("polynomial uses undeclared variable '" + v + "'");
    }
    slot.push_back(it - variables.begin());
  }
  for (const auto& [e, coeff] : f.terms()) {
    const uint64_t c = ctx.FromRational(coeff);
    if (c == 0) continue;
    std::vector<uint32_t> exps(variables.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      exps[slot[i]] = e[i];
      max_exp_[slot[i]] = std::max(max_exp_[slot[i]], e[i]);
    }
    terms_.emplace_back(std::move(exps), c);
  }
}

uint64_t CompiledPoly::Eval(const std::vector<uint64_t>& values) const {
  const FFContext& f = *ctx_;
  std::vector<std::vector<uint64_t>> powers(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    powers[i].resize(max_exp_[i] + 1);
    powers[i][0] = f.One();
    for (uint32_t e = 1; e <= max_exp_[i]; ++e) {
      powers[i][e] = f.Mul(powers[i][e - 1], values[i]);
    }
  }
  uint64_t acc = 0;
  for (const auto& [exps, coeff] : terms_) {
    uint64_t t = coeff;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) t = f.Mul(t, powers[i][exps[i]]);
    }
    acc = f.Add(acc, t);
  }
  return acc;
}

}  // namespace dynw
