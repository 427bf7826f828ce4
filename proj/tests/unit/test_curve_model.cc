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

#include "dynw/catalog.h"
#include "dynw/curve_model.h"
#include "dynw/dynatomic.h"
#include "dynw/errors.h"

namespace dynw {
namespace {

const Portrait kFigureOne = Portrait::Parse("12:2,3,1,1,2,3,8,9,7,7,8,9");

TEST(FullModelTest, Shape) {
  const CurveModel m = FullModel(kFigureOne);
  EXPECT_EQ(m.variables.size(), 13u);
  EXPECT_EQ(m.variables.front(), "c");
  EXPECT_EQ(m.equations.size(), 12u);
  EXPECT_EQ(m.inequations.size(), 66u);
  EXPECT_EQ(m.provenance, ModelProvenance::kFull);
  EXPECT_EQ(m.equations[0].ToString(), "x1^2 - x2 + c");
  EXPECT_EQ(m.inequations[0].ToString(), "x1 - x2");
  EXPECT_NO_THROW(ValidateModel(m));
  EXPECT_EQ(FullModel(FindByLabel("4(1,1)")->portrait).equations.size(), 4u);
  EXPECT_THROW(FullModel(Portrait::Parse("3:2,1,1")), NotGeneric);
}

TEST(FullModelTest, EquationCountEqualsVertexCount) {
  for (const CatalogEntry& e : Catalog()) {
    if (e.degenerate || e.portrait.n() == 0) continue;
    EXPECT_EQ(FullModel(e.portrait).equations.size(),
              static_cast<size_t>(e.portrait.n()));
  }
}

TEST(GeneratorSetTest, Examples) {
  EXPECT_EQ(MakeGeneratorSet(kFigureOne).generators, (std::vector<int>{1, 7}));
  const Portrait six = FindByLabel("6(3)")->portrait;
  const GeneratorSet g6 = MakeGeneratorSet(six);
  ASSERT_EQ(g6.generators.size(), 1u);
  EXPECT_EQ(six.Preperiods()[g6.generators[0] - 1], 0);
  const Portrait eight = FindByLabel("8(3)")->portrait;
  const GeneratorSet g8 = MakeGeneratorSet(eight);
  ASSERT_EQ(g8.generators.size(), 1u);
  EXPECT_EQ(eight.Preperiods()[g8.generators[0] - 1], 2);
}

TEST(GeneratorSetTest, ClosureCoversEveryVertexOnce) {
  for (const CatalogEntry& e : Catalog()) {
    if (e.degenerate) continue;
    const Portrait& p = e.portrait;
    const GeneratorSet g = MakeGeneratorSet(p);
    std::vector<int> derived(p.n(), 0);
    std::vector<bool> known(p.n(), false);
    for (const ClosureStep& s : g.closure_trace) {
      ++derived[s.vertex - 1];
      switch (s.kind) {
        case ClosureStep::Kind::kGenerator:
          break;
        case ClosureStep::Kind::kImage:
          ASSERT_TRUE(known[s.source - 1]);
          EXPECT_EQ(p.Image(s.source), s.vertex);
          break;
        case ClosureStep::Kind::kSibling:
          ASSERT_TRUE(known[s.source - 1]);
          EXPECT_EQ(p.Image(s.source), p.Image(s.vertex));
          EXPECT_NE(s.source, s.vertex);
          break;
      }
      known[s.vertex - 1] = true;
    }
    EXPECT_EQ(derived, std::vector<int>(p.n(), 1)) << e.label;
  }
}

TEST(ReducedModelTest, FigureOneMatchesTwoThreeCycles) {
  const CurveModel m = ReducedModel(kFigureOne);
  const MultiPoly phi3 = Dynatomic(3).phi;
  const MultiPoly x = MultiPoly::Var("x"), y = MultiPoly::Var("y"),
                  c = MultiPoly::Var("c");
  EXPECT_EQ(m.variables, (std::vector<std::string>{"c", "x", "y"}));
  EXPECT_EQ(m.equations, (std::vector<MultiPoly>{phi3, phi3.Rename({{"x", "y"}})}));
  const MultiPoly fx = x * x + c;
  EXPECT_EQ(m.inequations, (std::vector<MultiPoly>{y - x, y - fx, y - (fx * fx + c)}));
  EXPECT_EQ(m.provenance, ModelProvenance::kReduced);
}

TEST(ReducedModelTest, OtherExamples) {
  const CurveModel six = ReducedModel(FindByLabel("6(3)")->portrait);
  EXPECT_EQ(six.equations, std::vector<MultiPoly>{Dynatomic(3).phi});
  EXPECT_TRUE(six.inequations.empty());
  const CurveModel eight = ReducedModel(FindByLabel("8(3)")->portrait);
  ASSERT_EQ(eight.equations.size(), 1u);
  EXPECT_EQ(eight.equations[0].Degree("x"), 12);
  EXPECT_EQ(eight.equations[0], GeneralizedDynatomic(2, 3));
}

TEST(ReducedModelTest, MinimalPortraitHasOneVariablePerCycle) {
  for (const char* s : {"1,1", "2", "3", "4", "2,1,1", "3,1,1", "3,2", "3,3"}) {
    const CycleStructure sigma = CycleStructure::Parse(s);
    const CurveModel m = ReducedModel(MinimalPortrait(sigma));
    EXPECT_EQ(m.variables.size(), sigma.lengths.size() + 1) << s;
  }
}

TEST(MultiLevelModelTest, Examples) {
  const CurveModel three_three = MultiLevelModel({3, 3});
  const CurveModel reduced = ReducedModel(kFigureOne);
  EXPECT_EQ(three_three.variables, reduced.variables);
  EXPECT_EQ(three_three.equations, reduced.equations);
  EXPECT_EQ(three_three.inequations, reduced.inequations);
  const CurveModel one = MultiLevelModel({1});
  EXPECT_EQ(one.equations, std::vector<MultiPoly>{Dynatomic(1).phi});
  EXPECT_TRUE(one.inequations.empty());
  const CurveModel mixed = MultiLevelModel({3, 2, 1});
  ASSERT_EQ(mixed.equations.size(), 3u);
  EXPECT_EQ(mixed.equations[1], Dynatomic(2).phi.Rename({{"x", "y"}}));
  EXPECT_EQ(mixed.equations[2], Dynatomic(1).phi.Rename({{"x", "z"}}));
  EXPECT_TRUE(mixed.inequations.empty());
  EXPECT_THROW(MultiLevelModel({2, 2}), InadmissibleCycleStructure);
  EXPECT_THROW(MultiLevelModel({1, 1, 1}), InadmissibleCycleStructure);
  EXPECT_THROW(MultiLevelModel({1, 2}), InvalidArgument);
}

TEST(ModelJsonTest, RoundTrip) {
  for (const CurveModel& m : {FullModel(FindByLabel("8(3)")->portrait),
                              ReducedModel(kFigureOne), MultiLevelModel({2, 1, 1})}) {
    const CurveModel back = ModelFromJson(ModelToJson(m));
    EXPECT_EQ(back.variables, m.variables);
    EXPECT_EQ(back.equations, m.equations);
    EXPECT_EQ(back.inequations, m.inequations);
    EXPECT_EQ(back.provenance, m.provenance);
    ASSERT_TRUE(back.propagation.has_value());
    EXPECT_EQ(back.propagation->free, m.propagation->free);
    EXPECT_EQ(back.propagation->steps.size(), m.propagation->steps.size());
  }
  EXPECT_THROW(ModelFromJson("{"), ParseError);
  EXPECT_THROW(ModelFromJson(R"({"variables":["c"],"equations":["x"]})"), ParseError);
}

TEST(TraceRelationTest, MonicFormHoldsEverywhere) {
  for (uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const TraceRelationReport r = TraceRelationCheck(p);
    EXPECT_EQ(r.monic_violations, 0u) << p;
    EXPECT_EQ(r.rescaled_violations, 0u) << p;
    EXPECT_GT(r.points, 0u) << p;
  }
  EXPECT_EQ(TraceRelationCheck(3).violations, 0u);
  EXPECT_THROW(TraceRelationCheck(2), InvalidArgument);
  EXPECT_THROW(TraceRelationCheck(9), InvalidArgument);
}

TEST(TraceRelationTest, MonicFormIsAnIdentityModuloPhi3) {
  // t^2 + t + c + 2 with t = x + f(x) + f^2(x) is a multiple of Phi_3.
  const MultiPoly x = MultiPoly::Var("x"), c = MultiPoly::Var("c");
  const MultiPoly fx = x * x + c;
  const MultiPoly t = x + fx + fx * fx + c;
  EXPECT_NO_THROW(ExactDivide(t * t + t + c + 2, Dynatomic(3).phi));
}

}  // namespace
}  // namespace dynw
