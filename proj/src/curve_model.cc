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

#include "dynw/curve_model.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "dynw/dynatomic.h"
#include "dynw/errors.h"
#include "dynw/finite_field.h"
#include "json.hpp"

namespace dynw {
namespace {

using Json = nlohmann::ordered_json;

void RequireGeneric(const Portrait& p) {
  const GenericityReport report = ValidateGeneric(p);
  if (!report.is_generic) {
    std::string what = "portrait is not generic:";
    for (const Violation& v : report.violations) what += " " + v.Describe() + ";";
    throw NotGeneric(what);
  }
}

std::string FullVar(int vertex) { return "x" + std::to_string(vertex); }

// f^k(var) as a polynomial in (var, c).
MultiPoly IterateIn(int k, const std::string& var) {
  MultiPoly f = IterateFc(k);
  if (var == "x") return f;
  return f.Rename({{"x", var}});
}

// Runs the closure from `known` (updated in place) starting with `seed`,
// appending derivation steps to `trace` when it is non-null. Returns the
// number of newly known vertices, seed included.
int Close(const Portrait& p, const std::vector<std::vector<int>>& preimages,
          int seed, std::vector<bool>& known, std::vector<ClosureStep>* trace) {
  if (known[seed - 1]) return 0;
  known[seed - 1] = true;
  if (trace) trace->push_back({ClosureStep::Kind::kGenerator, seed, 0});
  int added = 1;
  std::vector<int> queue = {seed};
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const int w = p.Image(v);
    if (!known[w - 1]) {
      known[w - 1] = true;
      ++added;
      queue.push_back(w);
      if (trace) trace->push_back({ClosureStep::Kind::kImage, w, v});
    }
    for (int u : preimages[w - 1]) {
      if (u == v || known[u - 1]) continue;
      known[u - 1] = true;
      ++added;
      queue.push_back(u);
      if (trace) trace->push_back({ClosureStep::Kind::kSibling, u, v});
    }
  }
  return added;
}

PropagationPlan PlanFromTrace(const GeneratorSet& gens) {
  PropagationPlan plan;
  plan.free.push_back("c");
  for (int g : gens.generators) plan.free.push_back(FullVar(g));
  for (const ClosureStep& s : gens.closure_trace) {
    if (s.kind == ClosureStep::Kind::kGenerator) continue;
    plan.steps.push_back({s.kind == ClosureStep::Kind::kImage
                              ? PropagationStep::Kind::kImage
                              : PropagationStep::Kind::kNegate,
                          FullVar(s.vertex), FullVar(s.source)});
  }
  return plan;
}

CurveModel AllFree(CurveModel model) {
  model.propagation = PropagationPlan{model.variables, {}};
  return model;
}

}  // namespace

std::string ProvenanceName(ModelProvenance provenance) {
  switch (provenance) {
    case ModelProvenance::kFull:
      return "Full";
    case ModelProvenance::kReduced:
      return "Reduced";
    case ModelProvenance::kMultiLevel:
      return "MultiLevel";
  }
  return "Full";
}

ModelProvenance ParseProvenance(const std::string& name) {
  if (name == "Full") return ModelProvenance::kFull;
  if (name == "Reduced") return ModelProvenance::kReduced;
  if (name == "MultiLevel") return ModelProvenance::kMultiLevel;
  throw ParseError("unknown provenance '" + name + "'");
}

void ValidateModel(const CurveModel& model) {
  const std::set<std::string> declared(model.variables.begin(),
                                       model.variables.end());
  if (declared.size() != model.variables.size()) {
    throw InvalidArgument("duplicate model variable");
  }
  auto check = [&](const MultiPoly& f) {
    for (const std::string& v : f.variables()) {
      if (!declared.count(v)) {
        throw InvalidArgument("undeclared variable '" + v + "' in " +
                              f.ToString());
      }
    }
  };
  for (const MultiPoly& f : model.equations) check(f);
  for (const MultiPoly& f : model.inequations) check(f);
  if (!model.propagation) return;
  std::set<std::string> known;
  auto add = [&](const std::string& v) {
    if (!declared.count(v)) throw InvalidArgument("plan names unknown '" + v + "'");
    if (!known.insert(v).second) {
      throw InvalidArgument("plan assigns '" + v + "' twice");
    }
  };
  for (const std::string& v : model.propagation->free) add(v);
  if (!model.propagation->steps.empty() && !known.count("c")) {
    throw InvalidArgument("plan with steps must keep c free");
  }
  for (const PropagationStep& s : model.propagation->steps) {
    if (!known.count(s.source)) {
      throw InvalidArgument("plan uses '" + s.source + "' before it is known");
    }
    add(s.target);
  }
  if (known.size() != declared.size()) {
    throw InvalidArgument("plan leaves variables undetermined");
  }
}

GeneratorSet MakeGeneratorSet(const Portrait& p) {
  RequireGeneric(p);
  const auto preimages = p.Preimages();
  const auto preperiods = p.Preperiods();
  GeneratorSet result;
  std::vector<bool> known(p.n(), false);
  int covered = 0;
  while (covered < p.n()) {
    int best = 0;
    int best_growth = -1;
    for (int v = 1; v <= p.n(); ++v) {
      if (known[v - 1]) continue;
      std::vector<bool> trial = known;
      const int growth = Close(p, preimages, v, trial, nullptr);
      if (growth > best_growth ||
          (growth == best_growth && preperiods[v - 1] < preperiods[best - 1])) {
        best = v;
        best_growth = growth;
      }
    }
    result.generators.push_back(best);
    covered += Close(p, preimages, best, known, &result.closure_trace);
  }
  return result;
}

std::vector<std::string> PointVariableNames(int count) {
  static const char* kLetters[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    names.push_back(count <= 4 ? std::string(kLetters[i])
                               : "x" + std::to_string(i + 1));
  }
  return names;
}

CurveModel FullModel(const Portrait& p) {
  if (p.n() < 1) throw InvalidArgument("full model needs at least one vertex");
  const GeneratorSet gens = MakeGeneratorSet(p);
  CurveModel model;
  model.provenance = ModelProvenance::kFull;
  model.variables.push_back("c");
  for (int i = 1; i <= p.n(); ++i) model.variables.push_back(FullVar(i));
  const MultiPoly c = MultiPoly::Var("c");
  for (int i = 1; i <= p.n(); ++i) {
    const MultiPoly xi = MultiPoly::Var(FullVar(i));
    model.equations.push_back(xi * xi + c - MultiPoly::Var(FullVar(p.Image(i))));
  }
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = i + 1; j <= p.n(); ++j) {
      model.inequations.push_back(MultiPoly::Var(FullVar(i)) -
                                  MultiPoly::Var(FullVar(j)));
    }
  }
  model.propagation = PlanFromTrace(gens);
  return model;
}

CurveModel ReducedModel(const Portrait& p) {
  const GeneratorSet gens = MakeGeneratorSet(p);
  if (static_cast<int>(gens.closure_trace.size()) != p.n()) {
    CurveModel full = FullModel(p);
    full.diagnostic = "generator closure incomplete; returning the full model";
    return full;
  }
  const auto preperiods = p.Preperiods();
  const auto periods = p.EventualPeriods();
  const int r = static_cast<int>(gens.generators.size());
  const std::vector<std::string> names = PointVariableNames(r);
  CurveModel model;
  model.provenance = ModelProvenance::kReduced;
  model.variables.push_back("c");
  for (const std::string& name : names) model.variables.push_back(name);
  for (int i = 0; i < r; ++i) {
    const int g = gens.generators[i];
    MultiPoly eq = GeneralizedDynatomic(preperiods[g - 1], periods[g - 1]);
    if (names[i] != "x") eq = eq.Rename({{"x", names[i]}});
    model.equations.push_back(std::move(eq));
  }
  auto orbit_point = [&](int v, int k) {
    for (int s = 0; s < k; ++s) v = p.Image(v);
    return v;
  };
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const int gi = gens.generators[i];
      const int gj = gens.generators[j];
      if (periods[gi - 1] != periods[gj - 1]) continue;
      const int n = periods[gi - 1];
      const MultiPoly xi = MultiPoly::Var(names[i]);
      const MultiPoly xj = MultiPoly::Var(names[j]);
      for (int k = 0; k < preperiods[gi - 1] + n; ++k) {
        if (orbit_point(gi, k) == gj) continue;
        model.inequations.push_back(xj - IterateIn(k, names[i]));
      }
      if (preperiods[gj - 1] > 0) {
        for (int k = 1; k < preperiods[gj - 1] + n; ++k) {
          if (orbit_point(gj, k) == gi) continue;
          model.inequations.push_back(xi - IterateIn(k, names[j]));
        }
      }
    }
  }
  return AllFree(std::move(model));
}

CurveModel MultiLevelModel(const std::vector<int>& periods) {
  std::map<int, int> multiplicity;
  for (size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] < 1) throw InvalidArgument("periods must be positive");
    if (i > 0 && periods[i] > periods[i - 1]) {
      throw InvalidArgument("periods must be nonincreasing");
    }
    ++multiplicity[periods[i]];
  }
  for (const auto& [n, count] : multiplicity) {
    if (BigInt(count) > D0(n)) {
      throw InadmissibleCycleStructure(
          std::to_string(count) + " cycles of length " + std::to_string(n) +
          " exceed D0(" + std::to_string(n) + ") = " + D0(n).get_str());
    }
  }
  const int m = static_cast<int>(periods.size());
  const std::vector<std::string> names = PointVariableNames(m);
  CurveModel model;
  model.provenance = ModelProvenance::kMultiLevel;
  model.variables.push_back("c");
  for (const std::string& name : names) model.variables.push_back(name);
  for (int i = 0; i < m; ++i) {
    MultiPoly phi = Dynatomic(periods[i]).phi;
    if (names[i] != "x") phi = phi.Rename({{"x", names[i]}});
    model.equations.push_back(std::move(phi));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (periods[i] != periods[j]) continue;
      for (int k = 0; k < periods[i]; ++k) {
        model.inequations.push_back(MultiPoly::Var(names[j]) -
                                    IterateIn(k, names[i]));
      }
    }
  }
  return AllFree(std::move(model));
}

std::string ModelToJson(const CurveModel& model) {
  Json j;
  j["schema_version"] = 1;
  j["provenance"] = ProvenanceName(model.provenance);
  j["variables"] = model.variables;
  Json eqs = Json::array();
  for (const MultiPoly& f : model.equations) eqs.push_back(f.ToString());
  j["equations"] = eqs;
  Json ineqs = Json::array();
  for (const MultiPoly& f : model.inequations) ineqs.push_back(f.ToString());
  j["inequations"] = ineqs;
  if (model.propagation) {
    Json plan;
    plan["free"] = model.propagation->free;
    Json steps = Json::array();
    for (const PropagationStep& s : model.propagation->steps) {
      steps.push_back({{"target", s.target},
                       {"op", s.kind == PropagationStep::Kind::kImage ? "image"
                                                                      : "negate"},
                       {"source", s.source}});
    }
    plan["steps"] = steps;
    j["propagation"] = plan;
  }
  if (!model.diagnostic.empty()) j["diagnostic"] = model.diagnostic;
  return j.dump(2);
}

CurveModel ModelFromJson(const std::string& text) {
  CurveModel model;
  try {
    const Json j = Json::parse(text);
    if (j.value("schema_version", 1) != 1) {
      throw ParseError("unsupported schema_version");
    }
    model.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto& s : j.at("equations")) {
      model.equations.push_back(MultiPoly::Parse(s.get<std::string>()));
    }
    if (j.contains("inequations")) {
      for (const auto& s : j.at("inequations")) {
        model.inequations.push_back(MultiPoly::Parse(s.get<std::string>()));
      }
    }
    model.provenance = ParseProvenance(j.value("provenance", std::string("Full")));
    if (j.contains("propagation")) {
      PropagationPlan plan;
      const Json& pj = j.at("propagation");
      plan.free = pj.at("free").get<std::vector<std::string>>();
      if (pj.contains("steps")) {
        for (const auto& s : pj.at("steps")) {
          const std::string op = s.at("op").get<std::string>();
          if (op != "image" && op != "negate") {
            throw ParseError("unknown propagation op '" + op + "'");
          }
          plan.steps.push_back({op == "image" ? PropagationStep::Kind::kImage
                                              : PropagationStep::Kind::kNegate,
                                s.at("target").get<std::string>(),
                                s.at("source").get<std::string>()});
        }
      }
      model.propagation = std::move(plan);
    }
    model.diagnostic = j.value("diagnostic", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }
  try {
    ValidateModel(model);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }
  return model;
}

TraceRelationReport TraceRelationCheck(uint64_t p) {
  if (p == 2 || !IsPrime(p) || p > kDefaultEnumerationCap) {
    throw InvalidArgument("trace check needs an odd prime within the cap");
  }
  const auto ctx = FFContext::Create(p, 1);
  const FFContext& f = *ctx;
  const CompiledPoly phi3(Dynatomic(3).phi, {"x", "c"}, f);
  auto step = [&](uint64_t z, uint64_t c) { return f.Add(f.Mul(z, z), c); };
  TraceRelationReport report;
  report.p = p;
  const uint64_t two = f.FromInt(2), three = f.FromInt(3), four = f.FromInt(4);
  const uint64_t sixteen = f.FromInt(16), twenty_nine = f.FromInt(29);
  auto literal = [&](uint64_t t, uint64_t c) {
    return f.Add(f.Add(f.Sub(f.Mul(t, t), f.Mul(two, t)), twenty_nine),
                 f.Mul(sixteen, c));
  };
  for (uint64_t c = 0; c < p; ++c) {
    for (uint64_t x = 0; x < p; ++x) {
      if (phi3.Eval({x, c}) != 0) continue;
      ++report.points;
      const uint64_t fx = step(x, c);
      const uint64_t t = f.Add(f.Add(x, fx), step(fx, c));
      if (literal(t, c) != 0) {
        ++report.violations;
        if (report.first_violations.size() < 10) {
          report.first_violations.push_back({c, x, t});
        }
      }
      const uint64_t monic = f.Add(f.Add(f.Add(f.Mul(t, t), t), c), two);
      if (monic != 0) ++report.monic_violations;
      if (literal(f.Add(f.Mul(four, t), three), c) != 0) {
        ++report.rescaled_violations;
      }
    }
  }
  return report;
}

}  // namespace dynw
