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

#ifndef DYNW_CATALOG_H_
#define DYNW_CATALOG_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynw/portrait.h"

namespace dynw {

// How a variant letter was pinned to a structure.
enum class LetterStatus {
  kUnique,      // only one class carries this prefix
  kStructural,  // fixed by the containment arrows and accompanying text
  kUnverified,  // no structural evidence; lexicographic order of canonical forms
};
std::string LetterStatusName(LetterStatus status);

struct CatalogEntry {
  std::string label;
  Portrait portrait;  // canonical form
  CycleStructure cycle_structure;
  std::optional<int> genus;
  // Non-generic portraits, realised only at special parameters.
  bool degenerate = false;
  LetterStatus letter_status = LetterStatus::kUnique;
  std::string notes;
};

const std::vector<CatalogEntry>& Catalog();
// Accepts "empty" as an alias for the empty portrait's label.
const CatalogEntry* FindByLabel(std::string_view label);
// Match by isomorphism class.
const CatalogEntry* FindByPortrait(const Portrait& p);

// Directed system of one cycle structure: its labels and containment arrows
// (larger label first).
struct DirectedSystem {
  CycleStructure sigma;
  int max_vertices = 0;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> arrows;
  // Expected number of classes at each vertex count above the minimum.
  std::vector<std::pair<int, int>> class_counts;
};
const std::vector<DirectedSystem>& DirectedSystems();

// The twelve portraits expected for rational parameters.
const std::vector<std::string>& RationalPortraitLabels();

}  // namespace dynw

#endif  // DYNW_CATALOG_H_
