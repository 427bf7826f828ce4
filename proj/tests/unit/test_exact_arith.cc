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

#include <gtest/gtest.h>

#include <random>

#include "dynw/bivariate.h"
#include "dynw/errors.h"
#include "dynw/finite_field.h"
#include "dynw/multipoly.h"
#include "dynw/rational.h"

namespace dynw {
namespace {

MultiPoly RandomPoly(std::mt19937& rng, const std::vector<std::string>& vars,
                     int terms, int max_exp) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 4), e(0, max_exp);
  std::vector<std::pair<Exponents, Rational>> raw;
  for (int t = 0; t < terms; ++t) {
    Exponents ex(vars.size());
    for (auto& x : ex) x = e(rng);
    raw.emplace_back(ex, MakeRational(coeff(rng), den(rng)));
  }
  return MultiPoly::FromTerms(vars, raw);
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(ToString(ParseRational("-6/8")), "-3/4");
  EXPECT_EQ(ToString(ParseRational("+5")), "5");
  EXPECT_EQ(ToString(ParseRational("4/2")), "2");
  EXPECT_THROW(ParseRational("1/0"), ParseError);
  EXPECT_THROW(ParseRational("abc"), ParseError);
  EXPECT_THROW(ParseRational("1/"), ParseError);
}

TEST(RationalTest, IntegerSquareRootsMatchBruteForce) {
  for (int n = 0; n < 2000; ++n) {
    int f = 0;
    while ((f + 1) * (f + 1) <= n) ++f;
    const int c = f * f == n ? f : f + 1;
    EXPECT_EQ(FloorSqrt(n), f) << n;
    EXPECT_EQ(CeilSqrt(n), c) << n;
    EXPECT_EQ(IsPerfectSquare(n), f * f == n) << n;
  }
  EXPECT_EQ(CeilDiv(93, 4), 24);
  EXPECT_EQ(CeilDiv(92, 4), 23);
  EXPECT_EQ(CeilDiv(0, 4), 0);
}

TEST(MultiPolyTest, CanonicalVariableOrder) {
  EXPECT_TRUE(VariableLess("x", "x1"));
  EXPECT_TRUE(VariableLess("x2", "x10"));
  EXPECT_TRUE(VariableLess("x10", "y"));
  EXPECT_TRUE(VariableLess("z", "c"));
  EXPECT_FALSE(VariableLess("c", "a"));
  const MultiPoly f = MultiPoly::Parse("c + y + x10 + x2 + x");
  EXPECT_EQ(f.variables(), (std::vector<std::string>{"x", "x2", "x10", "y", "c"}));
}

TEST(MultiPolyTest, PrintsInGradedOrder) {
  EXPECT_EQ(MultiPoly::Parse("1 + c + x + x^2").ToString(), "x^2 + x + c + 1");
  EXPECT_EQ(MultiPoly::Parse("c^2 + c + x^4 + 2*x^2*c").ToString(),
            "x^4 + 2*x^2*c + c^2 + c");
  EXPECT_EQ(MultiPoly::Parse("-x + 3/2*x^2").ToString(), "3/2*x^2 - x");
  EXPECT_EQ(MultiPoly::Parse("x - x").ToString(), "0");
  EXPECT_THROW(MultiPoly::Parse("x^"), ParseError);
  EXPECT_THROW(MultiPoly::Parse("(x)"), ParseError);
}

TEST(MultiPolyTest, ParsePrintRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly f = RandomPoly(rng, {"x", "y", "c"}, 6, 4);
    EXPECT_EQ(MultiPoly::Parse(f.ToString()), f) << f.ToString();
  }
}

TEST(MultiPolyTest, RingAxioms) {
  std::mt19937 rng(7);
  const std::vector<std::string> vars = {"x", "y", "c"};
  for (int i = 0; i < 30; ++i) {
    const MultiPoly a = RandomPoly(rng, vars, 4, 3);
    const MultiPoly b = RandomPoly(rng, vars, 4, 3);
    const MultiPoly c = RandomPoly(rng, vars, 3, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).IsZero());
    EXPECT_EQ(a * MultiPoly(1), a);
  }
}

TEST(MultiPolyTest, EvaluationIsARingHomomorphism) {
  std::mt19937 rng(3);
  const std::vector<std::string> vars = {"x", "c"};
  for (int i = 0; i < 30; ++i) {
    const MultiPoly a = RandomPoly(rng, vars, 5, 4);
    const MultiPoly b = RandomPoly(rng, vars, 5, 4);
    const std::map<std::string, Rational> at = {
        {"x", MakeRational(static_cast<int>(rng() % 7) - 3, 2)},
        {"c", MakeRational(static_cast<int>(rng() % 9) - 4, 3)}};
    EXPECT_EQ(Evaluate(a * b, at), Evaluate(a, at) * Evaluate(b, at));
    EXPECT_EQ(Evaluate(a + b, at), Evaluate(a, at) + Evaluate(b, at));
  }
}

TEST(MultiPolyTest, ExactDivision) {
  std::mt19937 rng(5);
  const std::vector<std::string> vars = {"x", "c"};
  for (int i = 0; i < 30; ++i) {
    const MultiPoly a = RandomPoly(rng, vars, 4, 3);
    MultiPoly b = RandomPoly(rng, vars, 3, 2);
    if (b.IsZero()) continue;
    EXPECT_EQ(ExactDivide(a * b, b), a);
  }
  EXPECT_THROW(ExactDivide(MultiPoly::Parse("x + 1"), MultiPoly::Parse("x")),
               NonExactDivision);
  EXPECT_THROW(ExactDivide(MultiPoly::Parse("x"), MultiPoly()), InvalidArgument);
}

TEST(MultiPolyTest, SubstituteRenameDerivative) {
  const MultiPoly f = MultiPoly::Parse("x^2 + c");
  EXPECT_EQ(f.Substitute("x", MultiPoly::Parse("x^2 + c")).ToString(),
            "x^4 + 2*x^2*c + c^2 + c");
  EXPECT_EQ(f.Rename({{"x", "y"}}).ToString(), "y^2 + c");
  EXPECT_EQ(f.Derivative("x").ToString(), "2*x");
  const auto coeffs = MultiPoly::Parse("x^2*c + 3*c + x").CoefficientsIn("c");
  ASSERT_EQ(coeffs.size(), 2u);
  EXPECT_EQ(coeffs[0].ToString(), "x");
  EXPECT_EQ(coeffs[1].ToString(), "x^2 + 3");
}

TEST(MultiPolyTest, RationalRoots) {
  const MultiPoly f = MultiPoly::Parse("2*x^3 + 5*x^2 - 3*x");
  const auto roots = RationalRoots(f);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], -3);
  EXPECT_EQ(roots[1], 0);
  EXPECT_EQ(roots[2], MakeRational(1, 2));
  EXPECT_TRUE(RationalRoots(MultiPoly::Parse("x^2 + 1")).empty());
  EXPECT_THROW(RationalRoots(MultiPoly()), InvalidArgument);
}

TEST(FiniteFieldTest, DefaultModulusIsFirstIrreducible) {
  EXPECT_EQ(FFContext::Create(3, 2)->modulus(), (std::vector<uint64_t>{1, 0, 1}));
  EXPECT_EQ(FFContext::Create(2, 2)->modulus(), (std::vector<uint64_t>{1, 1, 1}));
  EXPECT_THROW(FFContext::Create(4, 1), InvalidArgument);
  EXPECT_THROW(FFContext::Create(3, 2, {1, 1, 1}), InvalidArgument);  // (x-1)^2
}

TEST(FiniteFieldTest, IrreducibilityMatchesRootSearch) {
  // Degrees 2 and 3 are irreducible exactly when rootless.
  for (uint64_t p : {2, 3, 5, 7}) {
    for (int k : {2, 3}) {
      std::vector<uint64_t> m(k + 1, 0);
      m[k] = 1;
      for (uint64_t code = 0; code < static_cast<uint64_t>(std::pow(p, k)); ++code) {
        uint64_t rest = code;
        for (int i = 0; i < k; ++i) {
          m[i] = rest % p;
          rest /= p;
        }
        bool has_root = false;
        for (uint64_t x = 0; x < p && !has_root; ++x) {
          uint64_t v = 0;
          for (int i = k; i >= 0; --i) v = (v * x + m[i]) % p;
          has_root = v == 0;
        }
        EXPECT_EQ(FFContext::IsIrreducible(p, m), !has_root);
      }
    }
  }
}

TEST(FiniteFieldTest, FieldAxiomsAndFrobenius) {
  for (auto [p, k] : std::vector<std::pair<uint64_t, int>>{{3, 2}, {2, 3}, {5, 2}, {7, 1}}) {
    const auto ctx = FFContext::Create(p, k);
    const FFContext& f = *ctx;
    const uint64_t q = f.q();
    for (uint64_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.Add(a, f.Neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(f.Mul(a, f.Inv(a)), f.One());
        EXPECT_EQ(f.Pow(a, q - 1), f.One());
      }
      for (uint64_t b = 0; b < q; b += 3) {
        EXPECT_EQ(f.Mul(a, b), f.Mul(b, a));
        EXPECT_EQ(f.Pow(f.Add(a, b), p), f.Add(f.Pow(a, p), f.Pow(b, p)));
        for (uint64_t c = 0; c < q; c += 5) {
          EXPECT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)));
        }
      }
    }
    EXPECT_THROW(f.Inv(0), InvalidArgument);
  }
}

TEST(FiniteFieldTest, CodesListCoefficientsLexicographically) {
  const auto ctx = FFContext::Create(3, 2);
  EXPECT_EQ(ctx->Coeffs(ctx->One()), (std::vector<uint64_t>{1, 0}));
  EXPECT_EQ(ctx->Encode({0, 1}), 1u);
  EXPECT_EQ(ctx->Format(ctx->Encode({2, 1})), "[2,1]");
  EXPECT_EQ(FFContext::Create(7, 1)->Format(5), "5");
}

TEST(FiniteFieldTest, RationalReduction) {
  const auto ctx = FFContext::Create(7, 1);
  EXPECT_EQ(ctx->FromRational(MakeRational(1, 2)), 4u);
  EXPECT_EQ(ctx->FromRational(MakeRational(-3, 4)), ctx->Mul(ctx->FromInt(-3), 2));
  EXPECT_THROW(ctx->FromRational(MakeRational(1, 7)), NotPIntegral);
}

TEST(FiniteFieldTest, RootCountMatchesBruteForce) {
  std::mt19937 rng(17);
  for (auto [p, k] : std::vector<std::pair<uint64_t, int>>{{5, 1}, {3, 2}, {2, 3}}) {
    const auto ctx = FFContext::Create(p, k);
    for (int trial = 0; trial < 40; ++trial) {
      FqPoly g(1 + rng() % 6);
      for (auto& c : g) c = rng() % ctx->q();
      g.push_back(ctx->One());
      uint64_t brute = 0;
      for (uint64_t x = 0; x < ctx->q(); ++x) {
        uint64_t v = 0;
        for (size_t i = g.size(); i-- > 0;) v = ctx->Add(ctx->Mul(v, x), g[i]);
        brute += v == 0;
      }
      EXPECT_EQ(FqCountRoots(*ctx, g), brute);
    }
  }
}

TEST(FiniteFieldTest, PolyEvalChecksScalars) {
  const MultiPoly f = MultiPoly::Parse("x^2 + c");
  const auto ctx = FFContext::Create(5, 1);
  const Scalar v = PolyEval(f, {{"x", FFElement(ctx, 2)}, {"c", FFElement(ctx, 3)}});
  EXPECT_EQ(std::get<FFElement>(v).code(), 2u);
  EXPECT_EQ(std::get<Rational>(PolyEval(f, {{"x", Rational(2)}, {"c", Rational(1)}})), 5);
  EXPECT_THROW(PolyEval(f, {{"x", Rational(2)}, {"c", FFElement(ctx, 3)}}),
               MixedScalarKinds);
  EXPECT_THROW(PolyEval(f, {{"x", Rational(2)}}), MissingVariable);
  const auto other = FFContext::Create(7, 1);
  EXPECT_THROW(PolyEval(f, {{"x", FFElement(ctx, 1)}, {"c", FFElement(other, 1)}}),
               MixedScalarKinds);
}

TEST(FiniteFieldTest, EnumerationRespectsCap) {
  const auto ctx = FFContext::Create(3, 3);
  uint64_t seen = 0;
  for (const FFElement& e : FFEnumerate(ctx)) {
    EXPECT_EQ(e.code(), seen);
    ++seen;
  }
  EXPECT_EQ(seen, 27u);
  EXPECT_THROW(FFEnumerate(ctx, 26), BudgetExceeded);
}

IntBiPoly RandomBi(std::mt19937& rng, int dx, int dc, int bits) {
  std::vector<std::pair<Exponents, Rational>> raw;
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dc; ++j) {
      BigInt v;
      v = BigInt(static_cast<long>(rng() % 1000003)) * (BigInt(1) << (rng() % bits));
      if (rng() % 2) v = -v;
      if (rng() % 3 == 0) v = 0;
      raw.push_back({{static_cast<uint32_t>(i), static_cast<uint32_t>(j)}, Rational(v)});
    }
  }
  return IntBiPoly::FromMultiPoly(MultiPoly::FromTerms({"x", "c"}, raw));
}

TEST(BivariateTest, MultiplyMatchesSparseProduct) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const IntBiPoly a = RandomBi(rng, 1 + rng() % 6, rng() % 5, 1 + rng() % 150);
    const IntBiPoly b = RandomBi(rng, 1 + rng() % 6, rng() % 5, 1 + rng() % 150);
    const MultiPoly expected = a.ToMultiPoly() * b.ToMultiPoly();
    EXPECT_EQ(Multiply(a, b, Exec::kSerial).ToMultiPoly(), expected);
    EXPECT_EQ(Multiply(a, b, Exec::kParallel), Multiply(a, b, Exec::kSerial));
  }
}

TEST(BivariateTest, DivideExactInvertsMultiply) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const IntBiPoly a = RandomBi(rng, 1 + rng() % 5, rng() % 4, 1 + rng() % 100);
    const IntBiPoly b = RandomBi(rng, 1 + rng() % 5, rng() % 4, 1 + rng() % 100);
    if (b.ToMultiPoly().IsZero()) continue;
    const IntBiPoly ab = Multiply(a, b);
    EXPECT_EQ(DivideExact(ab, b, Exec::kSerial), a);
    EXPECT_EQ(DivideExact(ab, b, Exec::kParallel), a);
  }
  const IntBiPoly x = IntBiPoly::X();
  EXPECT_THROW(DivideExact(x + IntBiPoly::Constant(1), x), NonExactDivision);
}

TEST(BivariateTest, PackUnpackRoundTrip) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const IntBiPoly a = RandomBi(rng, rng() % 5, rng() % 5, 1 + rng() % 200);
    const size_t bits = ((a.MaxBits() + 2) / 64 + 1) * 64;
    const size_t width = std::max(a.DegreeC(), 0) + 1;
    for (Exec exec : {Exec::kSerial, Exec::kParallel}) {
      EXPECT_EQ(Unpack(Pack(a, bits, width, exec), bits, width, exec), a);
    }
  }
}

}  // namespace
}  // namespace dynw
