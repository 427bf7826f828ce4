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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "dynw/catalog.h"
#include "dynw/classifier.h"
#include "dynw/dynatomic.h"
#include "dynw/errors.h"

namespace dynw {
namespace {

Rational F(const Rational& x, const Rational& c) { return x * x + c; }

TEST(CandidatesTest, Examples) {
  const auto cands = PreperiodicCandidates(MakeRational(-3, 4));
  for (const Rational& x : {MakeRational(1, 2), MakeRational(-1, 2),
                            MakeRational(3, 2), MakeRational(-3, 2)}) {
    EXPECT_NE(std::find(cands.begin(), cands.end(), x), cands.end());
  }
  EXPECT_TRUE(PreperiodicCandidates(MakeRational(1, 3)).empty());
  EXPECT_TRUE(PreperiodicCandidates(MakeRational(1, 8)).empty());
  for (const Rational& x : PreperiodicCandidates(5)) {
    EXPECT_EQ(x.get_den(), 1);
    EXPECT_LE(abs(x), 3);
  }
}

TEST(OrbitTest, Examples) {
  const OrbitRecord a = Orbit(-1, 1, 10);
  EXPECT_EQ(a.orbit, (std::vector<Rational>{Rational(1), Rational(0), Rational(-1),
                                            Rational(0)}));
  EXPECT_EQ(a.preperiod, 1);
  EXPECT_EQ(a.eventual_period, 2);
  EXPECT_FALSE(a.escaped);
  const OrbitRecord b = Orbit(0, 0, 5);
  EXPECT_EQ(b.preperiod, 0);
  EXPECT_EQ(b.eventual_period, 1);
  const OrbitRecord e = Orbit(1, 1, 10);
  EXPECT_TRUE(e.escaped);
  EXPECT_EQ(e.orbit.size(), 3u);
  EXPECT_THROW(Orbit(-2, MakeRational(1, 1), 0), InvalidArgument);
  // A point on a 3-cycle needs three steps to repeat.
  EXPECT_THROW(Orbit(MakeRational(-29, 16), MakeRational(-1, 4), 2), StepBudgetExceeded);
}

TEST(ClassifyTest, Examples) {
  const ClassificationRecord a = Classify(MakeRational(-3, 4));
  EXPECT_EQ(a.point_count, 4);
  EXPECT_TRUE(a.generic);
  EXPECT_EQ(a.label, "4(1,1)");
  EXPECT_EQ(std::set<Rational>(a.points.begin(), a.points.end()),
            (std::set<Rational>{MakeRational(3, 2), MakeRational(-3, 2),
                                MakeRational(1, 2), MakeRational(-1, 2)}));
  const ClassificationRecord b = Classify(1);
  EXPECT_EQ(b.point_count, 0);
  EXPECT_EQ(b.label, "∅");
  const ClassificationRecord c = Classify(-1);
  EXPECT_EQ(c.point_count, 3);
  EXPECT_FALSE(c.generic);
  ASSERT_FALSE(c.flags.empty());
  EXPECT_EQ(c.flags[0].rfind("NonGeneric", 0), 0u);
  EXPECT_EQ(Classify(MakeRational(-29, 16)).label, "8(3)");
  EXPECT_EQ(Classify(MakeRational(-21, 16)).label, "8(2,1,1)");
}

TEST(ClassifyTest, PointsSitAtTheirVertices) {
  for (const Rational& c : SweepParameters(12)) {
    const ClassificationRecord r = Classify(c);
    EXPECT_EQ(r.point_count, r.portrait.n());
    EXPECT_EQ(r.label.has_value(), FindByPortrait(r.portrait) != nullptr);
    for (int v = 1; v <= r.portrait.n(); ++v) {
      EXPECT_EQ(F(r.points[v - 1], c), r.points[r.portrait.Image(v) - 1]);
    }
  }
}

TEST(ClassifyTest, SoundnessParityAndCycleCounts) {
  for (const Rational& c : SweepParameters(20)) {
    const ClassificationRecord r = Classify(c);
    for (const Rational& x : r.points) {
      const OrbitRecord o = Orbit(c, x, 100);
      ASSERT_FALSE(o.escaped);
      Rational a = x;
      for (int i = 0; i < o.preperiod; ++i) a = F(a, c);
      Rational b = a;
      for (int i = 0; i < o.eventual_period; ++i) b = F(b, c);
      EXPECT_EQ(a, b);
    }
    if (r.generic) {
      EXPECT_EQ(r.point_count % 2, 0) << ToString(c);
      std::map<int, int> counts;
      for (int len : GetCycleStructure(r.portrait).lengths) ++counts[len];
      for (const auto& [len, count] : counts) EXPECT_LE(BigInt(count), D0(len));
    }
  }
}

// Independent search: x = u/v with small u, v, iterated 64 steps with a
// size cutoff.
bool BruteForcePreperiodic(const Rational& c, const Rational& x) {
  std::set<Rational> seen;
  Rational z = x;
  for (int i = 0; i < 64; ++i) {
    if (!seen.insert(z).second) return true;
    if (mpz_sizeinbase(z.get_num_mpz_t(), 2) > 256 ||
        mpz_sizeinbase(z.get_den_mpz_t(), 2) > 256) {
      return false;
    }
    z = F(z, c);
  }
  return false;
}

TEST(ClassifyTest, CompleteAgainstBruteForce) {
  std::mt19937 rng(47);
  const std::vector<Rational> params = SweepParameters(10);
  for (int trial = 0; trial < 15; ++trial) {
    const Rational c = params[rng() % params.size()];
    const ClassificationRecord r = Classify(c);
    const std::set<Rational> found(r.points.begin(), r.points.end());
    for (int v = 1; v <= 40; ++v) {
      for (int u = -40; u <= 40; ++u) {
        const Rational x = MakeRational(u, v);
        if (BruteForcePreperiodic(c, x)) EXPECT_TRUE(found.count(x)) << ToString(c);
      }
    }
  }
}

TEST(SweepTest, HeightOne) {
  EXPECT_EQ(SweepParameters(1),
            (std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}));
  std::ostringstream csv;
  const SweepSummary s = Sweep(1, &csv);
  EXPECT_EQ(s.classified, 3u);
  EXPECT_EQ(s.generic, 1u);
  EXPECT_TRUE(s.anomalies.empty());
  EXPECT_EQ(csv.str(),
            "c_num,c_den,portrait_serialized,canonical_label,generic,point_count,flags\n"
            "-1,1,\"3:2,1,1\",3(2),false,3,NonGeneric(vertex 2 has in-degree 1)\n"
            "0,1,\"3:1,1,3\",\"3(1,1)\",false,3,NonGeneric(vertex 3 has in-degree 1)\n"
            "1,1,0:,∅,true,0,\n");
  EXPECT_THROW(SweepParameters(0), InvalidArgument);
}

TEST(SweepTest, OrderingAndDeterminism) {
  const std::vector<Rational> params = SweepParameters(20);
  for (size_t i = 1; i < params.size(); ++i) {
    auto key = [](const Rational& c) {
      const BigInt a = c.get_num(), b = c.get_den();
      return std::make_tuple(std::max(BigInt(abs(a)), b), a, b);
    };
    EXPECT_LT(key(params[i - 1]), key(params[i]));
  }
  std::ostringstream serial, parallel;
  const SweepSummary a = Sweep(20, &serial, Exec::kSerial);
  const SweepSummary b = Sweep(20, &parallel, Exec::kParallel);
  EXPECT_EQ(serial.str(), parallel.str());
  EXPECT_EQ(a.tallies, b.tallies);
  EXPECT_TRUE(a.anomalies.empty());
}

}  // namespace
}  // namespace dynw
