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

#include "dynw/catalog.h"

#include <algorithm>
#include <map>

namespace dynw {

namespace {

// Minimal portrait of sigma, then a preimage pair over each listed vertex in
// turn. New vertices are numbered after the existing ones, so later steps
// may refer to vertices created by earlier ones.
//
// Minimal layouts used below:
//   (1,1)    fixed 1 <- tail 2, fixed 3 <- tail 4
//   (2)      cycle 1,2; tails 3,4
//   (3)      cycle 1,2,3; tails 4,5,6
//   (4)      cycle 1..4; tails 5..8
//   (2,1,1)  cycle 1,2; tails 3,4; fixed 5 <- 6; fixed 7 <- 8
//   (3,1,1)  cycle 1,2,3; tails 4,5,6; fixed 7 <- 8; fixed 9 <- 10
//   (3,2)    cycle 1,2,3; tails 4,5,6; cycle 7,8; tails 9,10
//   (3,3)    cycle 1,2,3; tails 4,5,6; cycle 7,8,9; tails 10,11,12
Portrait Grow(const std::string& sigma, std::initializer_list<int> pairs) {
  Portrait p = MinimalPortrait(CycleStructure::Parse(sigma));
  for (int v : pairs) p = AddPreimagePair(p, v);
  return p;
}

CatalogEntry Make(std::string label, const Portrait& p, std::optional<int> genus,
                  LetterStatus status, std::string notes) {
  CatalogEntry e;
  e.label = std::move(label);
  e.portrait = CanonicalForm(p);
  e.cycle_structure = GetCycleStructure(p);
  e.genus = genus;
  e.degenerate = !ValidateGeneric(p).is_generic;
  e.letter_status = status;
  e.notes = std::move(notes);
  return e;
}

std::vector<CatalogEntry> BuildCatalog() {
  const auto kU = LetterStatus::kUnique;
  const auto kS = LetterStatus::kStructural;
  std::vector<CatalogEntry> c;
  c.push_back(Make("∅", Portrait(), 0, kU, "no preperiodic points"));
  // Degenerate portraits, each realised at one rational parameter.
  c.push_back(Make("2(1)", Portrait({1, 1}), std::nullopt, kU,
                   "c = 1/4: 1/2 fixed, -1/2 -> 1/2"));
  c.push_back(Make("3(1,1)", Portrait({1, 2, 2}), std::nullopt, kU,
                   "c = 0: 0 and 1 fixed, -1 -> 1"));
  c.push_back(Make("3(2)", Portrait({2, 1, 1}), std::nullopt, kU,
                   "c = -1: 0 <-> -1, 1 -> 0"));
  c.push_back(Make("5(1,1)a", Portrait({1, 1, 2, 4, 4}), std::nullopt, kU,
                   "c = -2: 2 and -1 fixed, -2 -> 2, 0 -> -2, 1 -> -1"));

  c.push_back(Make("4(1,1)", Grow("1,1", {}), 0, kU, "minimal"));
  c.push_back(Make("4(2)", Grow("2", {}), 0, kU, "minimal"));
  c.push_back(Make("6(1,1)", Grow("1,1", {2}), 0, kU, "pair over a fixed-point tail"));
  c.push_back(Make("6(2)", Grow("2", {3}), 0, kU, "pair over a tail"));
  c.push_back(Make("6(3)", Grow("3", {}), 0, kU, "minimal"));
  c.push_back(Make("8(1,1)a", Grow("1,1", {2, 4}), 1, kS,
                   "pairs over both tails"));
  c.push_back(Make("8(1,1)b", Grow("1,1", {2, 5}), 1, kS,
                   "depth-3 chain over one tail; contained in every 10(1,1) class"));
  c.push_back(Make("8(2)a", Grow("2", {3, 4}), 1, kS, "pairs over both tails"));
  c.push_back(Make("8(2)b", Grow("2", {3, 5}), 1, kS,
                   "depth-3 chain over one tail; contained in every 10(2) class"));
  c.push_back(Make("8(2,1,1)", Grow("2,1,1", {}), 0, kU, "minimal"));
  c.push_back(Make("8(3)", Grow("3", {4}), 2, kU, "pair over a tail"));
  c.push_back(Make("8(4)", Grow("4", {}), 2, kU, "minimal"));
  c.push_back(Make("10(1,1)a", Grow("1,1", {2, 5, 6}), 4, kS,
                   "full binary tree of depth 2 over one tail; every 12-vertex "
                   "(1,1) class contains 10(1,1)b or 10(1,1)c but not "
                   "necessarily this one"));
  c.push_back(Make("10(1,1)b", Grow("1,1", {2, 5, 7}), 5, kS,
                   "depth-4 chain over one tail"));
  c.push_back(Make("10(1,1)c", Grow("1,1", {2, 4, 5}), 5, kS,
                   "contains both 8(1,1) classes"));
  c.push_back(Make("10(2)a", Grow("2", {3, 5, 7}), 5, kS,
                   "depth-4 chain over one tail"));
  c.push_back(Make("10(2)b", Grow("2", {3, 4, 5}), 5, kS,
                   "contains both 8(2) classes"));
  c.push_back(Make("10(2)c", Grow("2", {3, 5, 6}), 5, kS,
                   "full binary tree of depth 2 over one tail; two copies of 8(2)b"));
  c.push_back(Make("10(2,1,1)a", Grow("2,1,1", {3}), 1, kS,
                   "pair over a 2-cycle tail"));
  c.push_back(Make("10(2,1,1)b", Grow("2,1,1", {6}), 1, kS,
                   "pair over a fixed-point tail"));
  c.push_back(Make("10(3)a", Grow("3", {4, 7}), 9, kS, "depth-3 chain over one tail"));
  c.push_back(Make("10(3)b", Grow("3", {4, 5}), 9, kS, "pairs over two tails"));
  c.push_back(Make("10(3,1,1)", Grow("3,1,1", {}), 2, kU, "minimal"));
  c.push_back(Make("10(3,2)", Grow("3,2", {}), 2, kU, "minimal"));
  c.push_back(Make("10(4)", Grow("4", {5}), 9, kU, "pair over a tail"));
  c.push_back(Make("12(2,1,1)a", Grow("2,1,1", {3, 4}), 5, kS,
                   "pairs over both 2-cycle tails"));
  c.push_back(Make("12(2,1,1)b", Grow("2,1,1", {6, 9}), 5, kS,
                   "depth-3 chain over a fixed-point tail"));
  c.push_back(Make("12(2,1,1)c", Grow("2,1,1", {3, 9}), 5, kS,
                   "depth-3 chain over a 2-cycle tail"));
  c.push_back(Make("12(2,1,1)d", Grow("2,1,1", {6, 8}), 5, kS,
                   "pairs over both fixed-point tails"));
  c.push_back(Make("12(2,1,1)e", Grow("2,1,1", {3, 6}), 5, kS,
                   "one pair over a 2-cycle tail and one over a fixed-point tail"));
  c.push_back(Make("12(3,1,1)a", Grow("3,1,1", {4}), 9, kS,
                   "pair over a 3-cycle tail; contains 8(3)"));
  c.push_back(Make("12(3,1,1)b", Grow("3,1,1", {8}), 9, kS,
                   "pair over a fixed-point tail"));
  // No structural evidence separates these two; letters follow the
  // lexicographic order of canonical forms.
  {
    CatalogEntry x = Make("", Grow("3,2", {4}), 9, LetterStatus::kUnverified,
                          "pair over a 3-cycle tail");
    CatalogEntry y = Make("", Grow("3,2", {9}), 9, LetterStatus::kUnverified,
                          "pair over a 2-cycle tail");
    if (y.portrait < x.portrait) std::swap(x, y);
    x.label = "12(3,2)a";
    y.label = "12(3,2)b";
    c.push_back(std::move(x));
    c.push_back(std::move(y));
  }
  c.push_back(Make("12(3,3)", Grow("3,3", {}), 4, kU, "minimal"));
  c.push_back(Make("14(3,3)", Grow("3,3", {4}), 16, kU, "pair over a tail"));
  return c;
}

}  // namespace

std::string LetterStatusName(LetterStatus status) {
  switch (status) {
    case LetterStatus::kUnique:
      return "unique";
    case LetterStatus::kStructural:
      return "structural";
    case LetterStatus::kUnverified:
      return "unverified";
  }
  return "unknown";
}

const std::vector<CatalogEntry>& Catalog() {
  static const std::vector<CatalogEntry> catalog = BuildCatalog();
  return catalog;
}

const CatalogEntry* FindByLabel(std::string_view label) {
  if (label == "empty") label = "∅";
  for (const auto& e : Catalog()) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

const CatalogEntry* FindByPortrait(const Portrait& p) {
  static const std::map<Portrait, const CatalogEntry*> index = [] {
    std::map<Portrait, const CatalogEntry*> m;
    for (const auto& e : Catalog()) m.emplace(e.portrait, &e);
    return m;
  }();
  const auto it = index.find(CanonicalForm(p));
  return it == index.end() ? nullptr : it->second;
}

const std::vector<DirectedSystem>& DirectedSystems() {
  static const std::vector<DirectedSystem> systems = {
      {CycleStructure{{1, 1}}, 10,
       {"4(1,1)", "6(1,1)", "8(1,1)a", "8(1,1)b", "10(1,1)a", "10(1,1)b", "10(1,1)c"},
       {{"6(1,1)", "4(1,1)"},
        {"8(1,1)a", "6(1,1)"},
        {"8(1,1)b", "6(1,1)"},
        {"10(1,1)a", "8(1,1)b"},
        {"10(1,1)b", "8(1,1)b"},
        {"10(1,1)c", "8(1,1)a"},
        {"10(1,1)c", "8(1,1)b"}},
       {{4, 1}, {6, 1}, {8, 2}, {10, 3}}},
      {CycleStructure{{2}}, 10,
       {"4(2)", "6(2)", "8(2)a", "8(2)b", "10(2)a", "10(2)b", "10(2)c"},
       {{"6(2)", "4(2)"},
        {"8(2)a", "6(2)"},
        {"8(2)b", "6(2)"},
        {"10(2)a", "8(2)b"},
        {"10(2)b", "8(2)a"},
        {"10(2)b", "8(2)b"},
        {"10(2)c", "8(2)b"}},
       {{4, 1}, {6, 1}, {8, 2}, {10, 3}}},
      {CycleStructure{{3}}, 10,
       {"6(3)", "8(3)", "10(3)a", "10(3)b"},
       {{"8(3)", "6(3)"}, {"10(3)a", "8(3)"}, {"10(3)b", "8(3)"}},
       {{6, 1}, {8, 1}, {10, 2}}},
      {CycleStructure{{4}}, 10, {"8(4)", "10(4)"}, {{"10(4)", "8(4)"}},
       {{8, 1}, {10, 1}}},
      {CycleStructure{{2, 1, 1}}, 12,
       {"8(2,1,1)", "10(2,1,1)a", "10(2,1,1)b", "12(2,1,1)a", "12(2,1,1)b",
        "12(2,1,1)c", "12(2,1,1)d", "12(2,1,1)e"},
       {{"10(2,1,1)a", "8(2,1,1)"},
        {"10(2,1,1)b", "8(2,1,1)"},
        {"12(2,1,1)a", "10(2,1,1)a"},
        {"12(2,1,1)c", "10(2,1,1)a"},
        {"12(2,1,1)e", "10(2,1,1)a"},
        {"12(2,1,1)e", "10(2,1,1)b"},
        {"12(2,1,1)d", "10(2,1,1)b"},
        {"12(2,1,1)b", "10(2,1,1)b"}},
       {{8, 1}, {10, 2}, {12, 5}}},
      {CycleStructure{{3, 1, 1}}, 12,
       {"10(3,1,1)", "12(3,1,1)a", "12(3,1,1)b"},
       {{"12(3,1,1)a", "10(3,1,1)"}, {"12(3,1,1)b", "10(3,1,1)"}},
       {{10, 1}, {12, 2}}},
      {CycleStructure{{3, 2}}, 12,
       {"10(3,2)", "12(3,2)a", "12(3,2)b"},
       {{"12(3,2)a", "10(3,2)"}, {"12(3,2)b", "10(3,2)"}},
       {{10, 1}, {12, 2}}},
      {CycleStructure{{3, 3}}, 14, {"12(3,3)", "14(3,3)"}, {{"14(3,3)", "12(3,3)"}},
       {{12, 1}, {14, 1}}},
  };
  return systems;
}

const std::vector<std::string>& RationalPortraitLabels() {
  static const std::vector<std::string> labels = {
      "∅",    "2(1)", "3(1,1)", "3(2)", "4(1,1)",   "4(2)",
      "5(1,1)a", "6(1,1)", "6(2)", "6(3)", "8(2,1,1)", "8(3)"};
  return labels;
}

}  // namespace dynw
