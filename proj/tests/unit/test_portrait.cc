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
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dynw/catalog.h"
#include "dynw/dynatomic.h"
#include "dynw/enumerate.h"
#include "dynw/errors.h"
#include "dynw/portrait.h"

namespace dynw {
namespace {

const Portrait kFigureOne = Portrait::Parse("12:2,3,1,1,2,3,8,9,7,7,8,9");

std::vector<int> RandomPermutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// All edge-preserving injections by exhaustive search over permutations of
// the target (small portraits only).
size_t BruteForceEmbeddings(const Portrait& p, const Portrait& q) {
  std::vector<int> perm(q.n());
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<int>> maps;
  do {
    std::vector<int> psi(perm.begin(), perm.begin() + p.n());
    bool ok = true;
    for (int v = 1; v <= p.n() && ok; ++v) {
      ok = q.Image(psi[v - 1]) == psi[p.Image(v) - 1];
    }
    if (ok) maps.insert(psi);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps.size();
}

TEST(PortraitTest, ParseAndPrint) {
  EXPECT_EQ(kFigureOne.ToString(), "12:2,3,1,1,2,3,8,9,7,7,8,9");
  EXPECT_EQ(Portrait::Parse("0:").n(), 0);
  EXPECT_THROW(Portrait::Parse("3:1,2"), ParseError);
  EXPECT_THROW(Portrait::Parse("2:1,3"), ParseError);
  EXPECT_THROW(Portrait(std::vector<int>{1, 3}), InvalidArgument);
  EXPECT_THROW(Portrait::Parse("x"), ParseError);
}

TEST(PortraitTest, OrbitData) {
  const Portrait p = Portrait::Parse("8:2,3,1,1,2,3,4,4");  // 8(3)
  EXPECT_EQ(p.Preperiods(), (std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2}));
  EXPECT_EQ(p.EventualPeriods(), std::vector<int>(8, 3));
  EXPECT_EQ(GetCycleStructure(kFigureOne).ToString(), "(3,3)");
}

TEST(PortraitTest, GenericityRules) {
  EXPECT_TRUE(ValidateGeneric(kFigureOne).is_generic);
  const GenericityReport r = ValidateGeneric(Portrait::Parse("3:2,1,1"));
  ASSERT_FALSE(r.is_generic);
  EXPECT_EQ(r.violations[0].rule, GenericRule::kInDegree);
  const GenericityReport one_fixed = ValidateGeneric(Portrait::Parse("2:1,1"));
  EXPECT_FALSE(one_fixed.is_generic);
  // Two 2-cycles exceed D0(2) = 1.
  const GenericityReport two_twos =
      ValidateGeneric(Portrait::Parse("8:2,1,4,3,1,2,3,4"));
  EXPECT_FALSE(two_twos.is_generic);
}

TEST(PortraitTest, Admissibility) {
  EXPECT_TRUE(IsAdmissible(CycleStructure::Parse("3,3")));
  EXPECT_TRUE(IsAdmissible(CycleStructure::Parse("")));
  EXPECT_FALSE(IsAdmissible(CycleStructure::Parse("1")));
  EXPECT_FALSE(IsAdmissible(CycleStructure::Parse("2,2")));
  EXPECT_FALSE(IsAdmissible(CycleStructure::Parse("1,1,1,1")));
  EXPECT_THROW(CheckAdmissible(CycleStructure::Parse("2,2")),
               InadmissibleCycleStructure);
}

TEST(PortraitTest, MinimalPortraitOfThreeThreeIsFigureOne) {
  const Portrait m = MinimalPortrait(CycleStructure::Parse("3,3"));
  EXPECT_EQ(m, kFigureOne);
  EXPECT_EQ(CanonicalForm(m), m);
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  std::mt19937 rng(41);
  for (const CatalogEntry& e : Catalog()) {
    const Portrait canon = CanonicalForm(e.portrait);
    EXPECT_EQ(canon, e.portrait) << e.label;
    for (int t = 0; t < 5; ++t) {
      const Portrait shuffled = Relabel(e.portrait, RandomPermutation(rng, e.portrait.n()));
      EXPECT_EQ(CanonicalForm(shuffled), canon) << e.label;
      EXPECT_TRUE(Isomorphic(shuffled, e.portrait));
    }
  }
}

TEST(CanonicalFormTest, CatalogClassesAreDistinct) {
  const auto& cat = Catalog();
  for (size_t i = 0; i < cat.size(); ++i) {
    for (size_t j = i + 1; j < cat.size(); ++j) {
      EXPECT_FALSE(Isomorphic(cat[i].portrait, cat[j].portrait))
          << cat[i].label << " " << cat[j].label;
    }
  }
}

TEST(AutomorphismTest, MatchesBruteForceOnSmallPortraits) {
  for (const CatalogEntry& e : Catalog()) {
    if (e.portrait.n() > 8) continue;
    EXPECT_EQ(AutomorphismGroup(e.portrait).size(),
              BruteForceEmbeddings(e.portrait, e.portrait))
        << e.label;
  }
}

// Counts edge-preserving bijections by extending a partial map one vertex at
// a time; usable on every catalog entry.
size_t BacktrackAutomorphismCount(const Portrait& p) {
  const int n = p.n();
  std::vector<int> sigma(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  size_t count = 0;
  std::function<void(int)> extend = [&](int v) {
    if (v > n) {
      ++count;
      return;
    }
    for (int w = 1; w <= n; ++w) {
      if (used[w]) continue;
      sigma[v] = w;
      bool ok = true;
      for (int u = 1; u <= v && ok; ++u) {
        const int image = p.Image(u);
        if (image <= v) ok = p.Image(sigma[u]) == sigma[image];
      }
      if (ok) {
        used[w] = true;
        extend(v + 1);
        used[w] = false;
      }
    }
    sigma[v] = 0;
  };
  extend(1);
  return count;
}

TEST(AutomorphismTest, MatchesBacktrackingOnCatalog) {
  for (const CatalogEntry& e : Catalog()) {
    EXPECT_EQ(AutomorphismGroup(e.portrait).size(), BacktrackAutomorphismCount(e.portrait))
        << e.label;
  }
}

TEST(AutomorphismTest, TwelveVertexTwoOneOneOrders) {
  std::map<std::string, size_t> orders;
  for (const CatalogEntry& e : Catalog()) {
    if (e.label.rfind("12(2,1,1)", 0) == 0) {
      orders[e.label] = BacktrackAutomorphismCount(e.portrait);
    }
  }
  const std::map<std::string, size_t> expected = {
      {"12(2,1,1)a", 16}, {"12(2,1,1)b", 4}, {"12(2,1,1)c", 4},
      {"12(2,1,1)d", 16}, {"12(2,1,1)e", 4}};
  EXPECT_EQ(orders, expected);
}

TEST(AutomorphismTest, GroupIsClosedAndEdgePreserving) {
  for (const CatalogEntry& e : Catalog()) {
    const Portrait& p = e.portrait;
    const auto group = AutomorphismGroup(p);
    const std::set<std::vector<int>> members(group.begin(), group.end());
    EXPECT_EQ(members.size(), group.size());
    EXPECT_EQ(group.size(), Embeddings(p, p).size()) << e.label;
    for (const auto& g : group) {
      for (int v = 1; v <= p.n(); ++v) EXPECT_EQ(p.Image(g[v - 1]), g[p.Image(v) - 1]);
      for (const auto& h : group) {
        std::vector<int> gh(p.n());
        for (int v = 1; v <= p.n(); ++v) gh[v - 1] = g[h[v - 1] - 1];
        EXPECT_TRUE(members.count(gh)) << e.label;
      }
    }
  }
}

TEST(EmbeddingTest, MatchesBruteForce) {
  const Portrait small = FindByLabel("4(1,1)")->portrait;
  for (const char* label : {"6(1,1)", "8(1,1)a", "8(1,1)b", "8(2,1,1)"}) {
    const Portrait& big = FindByLabel(label)->portrait;
    EXPECT_EQ(Embeddings(small, big).size(), BruteForceEmbeddings(small, big)) << label;
  }
  EXPECT_FALSE(Embeds(FindByLabel("4(2)")->portrait, FindByLabel("6(1,1)")->portrait));
}

TEST(EnumerateTest, MatchesExhaustiveSearchUpToSixVertices) {
  for (int n = 2; n <= 6; n += 2) {
    std::map<std::vector<int>, std::set<Portrait>> by_sigma;
    std::vector<int> image(n, 1);
    while (true) {
      const Portrait p(image);
      if (ValidateGeneric(p).is_generic) {
        by_sigma[GetCycleStructure(p).lengths].insert(CanonicalForm(p));
      }
      int i = 0;
      while (i < n && image[i] == n) image[i++] = 1;
      if (i == n) break;
      ++image[i];
    }
    for (const auto& [lengths, classes] : by_sigma) {
      const CycleStructure sigma{lengths};
      const auto found = EnumerateGeneric(n, sigma, Exec::kSerial);
      EXPECT_EQ(std::set<Portrait>(found.begin(), found.end()), classes)
          << n << sigma.ToString();
    }
  }
}

TEST(EnumerateTest, SerialAndParallelAgree) {
  for (const char* sigma : {"1,1", "2,1,1", "3"}) {
    const CycleStructure s = CycleStructure::Parse(sigma);
    EXPECT_EQ(EnumerateGeneric(10, s, Exec::kSerial),
              EnumerateGeneric(10, s, Exec::kParallel));
  }
  EXPECT_THROW(EnumerateGeneric(7, CycleStructure::Parse("1,1")), InvalidArgument);
  EXPECT_THROW(EnumerateGeneric(8, CycleStructure::Parse("2,2")),
               InadmissibleCycleStructure);
}

TEST(ExtensionsTest, FromEmptyPortrait) {
  auto labels = [](const std::vector<Portrait>& ps) {
    std::set<std::string> out;
    for (const Portrait& p : ps) out.insert(FindByPortrait(p)->label);
    return out;
  };
  EXPECT_EQ(labels(MinimalExtensions(Portrait(), 1)), (std::set<std::string>{"4(1,1)"}));
  EXPECT_EQ(labels(MinimalExtensions(Portrait(), 2)),
            (std::set<std::string>{"4(1,1)", "4(2)"}));
  EXPECT_EQ(labels(MinimalExtensions(Portrait(), 3)),
            (std::set<std::string>{"4(1,1)", "4(2)", "6(3)"}));
  EXPECT_THROW(MinimalExtensions(Portrait::Parse("3:2,1,1"), 2), NotGeneric);
}

TEST(CatalogTest, ArrowsAreEmbeddings) {
  for (const DirectedSystem& system : DirectedSystems()) {
    for (const auto& [larger, smaller] : system.arrows) {
      EXPECT_TRUE(Embeds(FindByLabel(smaller)->portrait, FindByLabel(larger)->portrait))
          << larger << " -> " << smaller;
    }
  }
}

TEST(CatalogTest, ClassCountsMatchEnumeration) {
  for (const DirectedSystem& system : DirectedSystems()) {
    for (const auto& [n, count] : system.class_counts) {
      if (n > 12) continue;
      EXPECT_EQ(EnumerateGeneric(n, system.sigma).size(), static_cast<size_t>(count))
          << n << system.sigma.ToString();
    }
  }
}

TEST(CatalogTest, EntriesAreConsistent) {
  for (const CatalogEntry& e : Catalog()) {
    EXPECT_EQ(GetCycleStructure(e.portrait), e.cycle_structure) << e.label;
    EXPECT_EQ(e.degenerate, !ValidateGeneric(e.portrait).is_generic) << e.label;
    EXPECT_EQ(FindByPortrait(e.portrait), &e);
  }
  EXPECT_EQ(FindByLabel("empty"), FindByLabel("∅"));
  for (const std::string& label : RationalPortraitLabels()) {
    EXPECT_NE(FindByLabel(label), nullptr) << label;
  }
}

}  // namespace
}  // namespace dynw
