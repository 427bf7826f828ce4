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

#include "dynw/bivariate.h"

#include <omp.h>

#include <algorithm>
#include <cstring>

#include "dynw/errors.h"

namespace dynw {

namespace {

constexpr size_t kLimbBits = GMP_NUMB_BITS;

size_t RoundUpToLimb(size_t bits) {
  return (bits + kLimbBits - 1) / kLimbBits * kLimbBits;
}

size_t BitLength(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

size_t BitLength(size_t v) {
  size_t n = 0;
  while (v > 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

BigInt OneNorm(const IntBiPoly& a) {
  BigInt sum = 0;
  for (const auto& row : a.rows()) {
    for (const auto& v : row) sum += abs(v);
  }
  return sum;
}

// Writes |coefficients| with the given sign into a zeroed limb buffer.
void FillMagnitudes(const IntBiPoly& a, size_t limbs_per_slot, size_t width,
                    int sign, mp_limb_t* out, Exec exec) {
  const auto& rows = a.rows();
  const long nrows = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::kParallel) num_threads(Jobs())
  for (long i = 0; i < nrows; ++i) {
    const auto& row = rows[i];
    for (size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) != sign) continue;
      size_t count = 0;
      mp_limb_t* slot = out + (i * width + j) * limbs_per_slot;
      mpz_export(slot, &count, -1, sizeof(mp_limb_t), 0, 0, row[j].get_mpz_t());
    }
  }
}

BigInt PackSign(const IntBiPoly& a, size_t limbs_per_slot, size_t width,
                int sign, Exec exec) {
  BigInt out;
  const size_t total = a.rows().size() * width * limbs_per_slot;
  if (total == 0) return out;
  mp_limb_t* limbs = mpz_limbs_write(out.get_mpz_t(), total);
  std::memset(limbs, 0, total * sizeof(mp_limb_t));
  FillMagnitudes(a, limbs_per_slot, width, sign, limbs, exec);
  mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(total));
  return out;
}

}  // namespace

IntBiPoly::IntBiPoly(std::vector<std::vector<BigInt>> rows)
    : rows_(std::move(rows)) {
  Trim();
}

void IntBiPoly::Trim() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

IntBiPoly IntBiPoly::X() { return IntBiPoly({{}, {BigInt(1)}}); }
IntBiPoly IntBiPoly::C() { return IntBiPoly({{BigInt(0), BigInt(1)}}); }
IntBiPoly IntBiPoly::Constant(long v) { return IntBiPoly({{BigInt(v)}}); }

IntBiPoly IntBiPoly::FromMultiPoly(const MultiPoly& f, const std::string& x,
                                   const std::string& c) {
  int xi = -1;
  int ci = -1;
  for (size_t i = 0; i < f.variables().size(); ++i) {
    if (f.variables()[i] == x) {
      xi = static_cast<int>(i);
    } else if (f.variables()[i] == c) {
      ci = static_cast<int>(i);
    } else {
      throw InvalidArgument("unexpected variable '" + f.variables()[i] + "'");
    }
  }
  std::vector<std::vector<BigInt>> rows(std::max(f.Degree(x), 0) + 1);
  for (const auto& [e, coeff] : f.terms()) {
    if (coeff.get_den() != 1) throw InvalidArgument("non-integral coefficient");
    const uint32_t dx = xi >= 0 ? e[xi] : 0;
    const uint32_t dc = ci >= 0 ? e[ci] : 0;
    if (rows[dx].size() <= dc) rows[dx].resize(dc + 1);
    rows[dx][dc] = coeff.get_num();
  }
  return IntBiPoly(std::move(rows));
}

MultiPoly IntBiPoly::ToMultiPoly(const std::string& x,
                                 const std::string& c) const {
  std::vector<std::pair<Exponents, Rational>> terms;
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] != 0) {
        terms.emplace_back(Exponents{static_cast<uint32_t>(i),
                                     static_cast<uint32_t>(j)},
                           Rational(rows_[i][j]));
      }
    }
  }
  return MultiPoly::FromTerms({x, c}, terms);
}

int IntBiPoly::DegreeC() const {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

size_t IntBiPoly::TermCount() const {
  size_t n = 0;
  for (const auto& row : rows_) {
    for (const auto& v : row) n += v != 0;
  }
  return n;
}

size_t IntBiPoly::MaxBits() const {
  size_t bits = 0;
  for (const auto& row : rows_) {
    for (const auto& v : row) bits = std::max(bits, BitLength(v));
  }
  return bits;
}

IntBiPoly IntBiPoly::operator-() const {
  IntBiPoly out = *this;
  for (auto& row : out.rows_) {
    for (auto& v : row) v = -v;
  }
  return out;
}

IntBiPoly operator+(const IntBiPoly& a, const IntBiPoly& b) {
  std::vector<std::vector<BigInt>> rows(std::max(a.rows_.size(), b.rows_.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    const size_t na = i < a.rows_.size() ? a.rows_[i].size() : 0;
    const size_t nb = i < b.rows_.size() ? b.rows_[i].size() : 0;
    rows[i].assign(std::max(na, nb), BigInt(0));
    for (size_t j = 0; j < na; ++j) rows[i][j] += a.rows_[i][j];
    for (size_t j = 0; j < nb; ++j) rows[i][j] += b.rows_[i][j];
  }
  return IntBiPoly(std::move(rows));
}

IntBiPoly operator-(const IntBiPoly& a, const IntBiPoly& b) { return a + (-b); }

BigInt Pack(const IntBiPoly& a, size_t bits, size_t width, Exec exec) {
  if (bits == 0 || bits % kLimbBits != 0) {
    throw InvalidArgument("packing width must be a positive multiple of the limb size");
  }
  if (static_cast<int>(width) <= a.DegreeC()) {
    throw InvalidArgument("packing row width too small");
  }
  const size_t limbs = bits / kLimbBits;
  return PackSign(a, limbs, width, 1, exec) - PackSign(a, limbs, width, -1, exec);
}

IntBiPoly Unpack(const BigInt& packed, size_t bits, size_t width, Exec exec) {
  if (packed == 0) return IntBiPoly();
  const int sign = sgn(packed);
  const BigInt magnitude = abs(packed);
  const size_t limbs_per_slot = bits / kLimbBits;
  const size_t n = mpz_size(magnitude.get_mpz_t());
  const mp_limb_t* limbs = mpz_limbs_read(magnitude.get_mpz_t());
  const size_t slots = (n + limbs_per_slot - 1) / limbs_per_slot + 1;
  const long nslots = static_cast<long>(slots);

  // Phase 1: unsigned digits and the two bits that decide carries.
  std::vector<BigInt> digit(slots);
  std::vector<char> top(slots, 0);
  std::vector<char> just_below_half(slots, 0);
#pragma omp parallel for schedule(static) if (exec == Exec::kParallel) num_threads(Jobs())
  for (long s = 0; s < nslots; ++s) {
    const size_t lo = s * limbs_per_slot;
    if (lo >= n) continue;
    const size_t count = std::min(limbs_per_slot, n - lo);
    mpz_import(digit[s].get_mpz_t(), count, -1, sizeof(mp_limb_t), 0, 0,
               limbs + lo);
    top[s] = mpz_tstbit(digit[s].get_mpz_t(), bits - 1);
    // d == 2^(bits-1) - 1 exactly.
    just_below_half[s] = !top[s] && mpz_scan0(digit[s].get_mpz_t(), 0) == bits - 1;
  }
  // Phase 2: serial carry chain over balanced digits in [-2^(b-1), 2^(b-1)).
  std::vector<char> carry_in(slots + 1, 0);
  for (size_t s = 0; s < slots; ++s) {
    carry_in[s + 1] = top[s] || (carry_in[s] && just_below_half[s]);
  }
  if (carry_in[slots]) throw InvalidArgument("packed value overflows unpack range");
  // Phase 3: apply carries.
  std::vector<std::vector<BigInt>> rows((slots + width - 1) / width);
#pragma omp parallel for schedule(static) if (exec == Exec::kParallel) num_threads(Jobs())
  for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
    rows[r].resize(width);
    for (size_t j = 0; j < width; ++j) {
      const size_t s = r * width + j;
      if (s >= slots) break;
      BigInt v = std::move(digit[s]);
      if (carry_in[s]) v += 1;
      if (carry_in[s + 1]) {
        BigInt base;
        mpz_setbit(base.get_mpz_t(), bits);
        v -= base;
      }
      rows[r][j] = sign < 0 ? BigInt(-v) : v;
    }
  }
  return IntBiPoly(std::move(rows));
}

IntBiPoly Multiply(const IntBiPoly& a, const IntBiPoly& b, Exec exec) {
  if (a.IsZero() || b.IsZero()) return IntBiPoly();
  const size_t width = a.DegreeC() + b.DegreeC() + 1;
  const size_t bound = a.MaxBits() + b.MaxBits() +
                       BitLength(std::min(a.TermCount(), b.TermCount())) + 1;
  const size_t bits = RoundUpToLimb(bound + 1);
  const BigInt product = Pack(a, bits, width, exec) * Pack(b, bits, width, exec);
  return Unpack(product, bits, width, exec);
}

IntBiPoly DivideExact(const IntBiPoly& a, const IntBiPoly& b, Exec exec) {
  if (b.IsZero()) throw InvalidArgument("division by zero polynomial");
  if (a.IsZero()) return IntBiPoly();
  if (b.DegreeX() > a.DegreeX() || b.DegreeC() > a.DegreeC()) {
    throw NonExactDivision("divisor degree exceeds dividend degree");
  }
  const size_t width = a.DegreeC() + 1;
  const size_t norm_bits = BitLength(OneNorm(b));
  size_t guess = a.MaxBits() + 64;
  for (int attempt = 0; attempt < 4; ++attempt, guess *= 2) {
    const size_t bits = RoundUpToLimb(guess + 1);
    const BigInt num = Pack(a, bits, width, exec);
    const BigInt den = Pack(b, bits, width, exec);
    // Exact polynomial division implies exact integer division.
    BigInt quot;
    BigInt rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    if (rem != 0) break;
    IntBiPoly q;
    try {
      q = Unpack(quot, bits, width, exec);
    } catch (const InvalidArgument&) {
      continue;
    }
    // Re-check q * b == a at a wider base where the packing is injective on
    // q * b - a, which turns the integer identity into a polynomial one.
    const size_t check_bits =
        RoundUpToLimb(std::max(bits + norm_bits, a.MaxBits()) + 2);
    const size_t check_width = std::max<int>(q.DegreeC(), 0) + b.DegreeC() + 1;
    const size_t wide = std::max(check_width, width);
    if (Pack(q, check_bits, wide, exec) * Pack(b, check_bits, wide, exec) ==
        Pack(a, check_bits, wide, exec)) {
      return q;
    }
  }
  throw NonExactDivision("bivariate division is not exact");
}

IntBiPoly IntBiPoly::ComposeX(const IntBiPoly& inner, Exec exec) const {
  IntBiPoly acc;
  for (size_t i = rows_.size(); i-- > 0;) {
    acc = Multiply(acc, inner, exec) + IntBiPoly({rows_[i]});
  }
  return acc;
}

namespace {
int g_jobs = 1;
}  // namespace

void SetJobs(int jobs) { g_jobs = std::max(jobs, 1); }
int Jobs() { return g_jobs; }

}  // namespace dynw
