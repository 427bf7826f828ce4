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

#ifndef DYNW_PORTRAIT_H_
#define DYNW_PORTRAIT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dynw/parallel.h"

namespace dynw {

// A finite functional graph. Vertices are 1..n; image()[i - 1] is the
// successor of vertex i. The empty portrait has n = 0.
class Portrait {
 public:
  Portrait() = default;
  // Throws InvalidArgument when an entry lies outside [1, n].
  explicit Portrait(std::vector<int> image);

  // Text form "N:t1,t2,...,tN"; "0:" is the empty portrait.
  static Portrait Parse(std::string_view text);
  std::string ToString() const;

  int n() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  int Image(int v) const { return image_[v - 1]; }

  std::vector<int> InDegrees() const;                // indexed by vertex - 1
  std::vector<std::vector<int>> Preimages() const;   // indexed by vertex - 1
  std::vector<bool> Periodic() const;                // indexed by vertex - 1
  // Preperiod of each vertex (0 on cycles), indexed by vertex - 1.
  std::vector<int> Preperiods() const;
  // Cycle length reached by each vertex, indexed by vertex - 1.
  std::vector<int> EventualPeriods() const;

  friend bool operator==(const Portrait& a, const Portrait& b) {
    return a.image_ == b.image_;
  }
  friend bool operator<(const Portrait& a, const Portrait& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.image_ < b.image_;
  }

 private:
  std::vector<int> image_;
};

struct CycleStructure {
  std::vector<int> lengths;  // nonincreasing

  // Accepts "3,2", "(3,2)", "()" or "".
  static CycleStructure Parse(std::string_view text);
  std::string ToString() const;  // "(3,2)"
  int Total() const;
  friend bool operator==(const CycleStructure& a, const CycleStructure& b) {
    return a.lengths == b.lengths;
  }
};

enum class GenericRule { kInDegree, kCycleCount, kFixedPointPair };
std::string RuleName(GenericRule rule);

struct Violation {
  GenericRule rule;
  int vertex = 0;        // offending vertex for kInDegree, else 0
  int cycle_length = 0;  // offending length for kCycleCount
  int count = 0;         // in-degree, cycle count or fixed-point count
  std::string Describe() const;
};

struct GenericityReport {
  bool is_generic = true;
  std::vector<Violation> violations;
};

GenericityReport ValidateGeneric(const Portrait& p);
CycleStructure GetCycleStructure(const Portrait& p);

// Throws InadmissibleCycleStructure unless every length n appears at most
// D0(n) times and fixed points come in a pair (or not at all).
void CheckAdmissible(const CycleStructure& sigma);
bool IsAdmissible(const CycleStructure& sigma);

// Cycles of the given lengths with one tail per cycle vertex. Components are
// laid out in order: cycle vertices first, then their tails.
Portrait MinimalPortrait(const CycleStructure& sigma);

// Appends two new vertices mapping to v.
Portrait AddPreimagePair(const Portrait& p, int v);
// Appends q after p, shifting q's labels.
Portrait DisjointUnion(const Portrait& p, const Portrait& q);
// Vertex i of p becomes perm[i - 1] (perm is a permutation of 1..n).
Portrait Relabel(const Portrait& p, const std::vector<int>& perm);
// Portrait induced on a forward-closed vertex set (ascending labels).
Portrait InducedSubportrait(const Portrait& p, const std::vector<int>& vertices);

// Relabeled isomorphic copy that depends only on the isomorphism class.
// Trees hanging off cycle vertices get AHU codes, each cycle is rotated to
// its least code sequence, components are sorted, and vertices are numbered
// component by component: cycle vertices, then breadth-first by code.
Portrait CanonicalForm(const Portrait& p);
bool Isomorphic(const Portrait& a, const Portrait& b);

inline constexpr int kMaxSearchVertices = 20;
inline constexpr size_t kMaxMapsListed = 1000000;

// All automorphisms as 1-indexed permutations. Throws BudgetExceeded for
// n > 20 or more than a million results.
std::vector<std::vector<int>> AutomorphismGroup(const Portrait& p);

// All injective edge-preserving maps p -> q as arrays psi[i - 1].
// Throws BudgetExceeded when q.n() > 20 or too many maps exist.
std::vector<std::vector<int>> Embeddings(const Portrait& p, const Portrait& q);
bool Embeds(const Portrait& p, const Portrait& q);

}  // namespace dynw

#endif  // DYNW_PORTRAIT_H_
