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

#include "dynw/ff_lab.h"

#include <algorithm>
#include <map>

#include "dynw/errors.h"

namespace dynw {
namespace {

struct CompiledStep {
  bool image = true;
  size_t target = 0;
  size_t source = 0;
};

}  // namespace

uint64_t CountPlaneByRoots(const MultiPoly& f, const std::string& v,
                           const FFContext& ctx, Exec exec) {
  for (const std::string& name : f.variables()) {
    if (name != "c" && name != v) {
      throw InvalidArgument("plane count: unexpected variable '" + name + "'");
    }
  }
  std::vector<CompiledPoly> coeffs;
  for (const MultiPoly& coeff : f.CoefficientsIn("c")) {
    coeffs.emplace_back(coeff, std::vector<std::string>{v}, ctx);
  }
  const uint64_t q = ctx.q();
  const int64_t q_signed = static_cast<int64_t>(q);
  uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total) if (exec == Exec::kParallel) num_threads(Jobs())
  for (int64_t value = 0; value < q_signed; ++value) {
    const std::vector<uint64_t> point = {static_cast<uint64_t>(value)};
    FqPoly g(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) g[i] = coeffs[i].Eval(point);
    FqTrim(g);
    total += g.empty() ? q : FqCountRoots(ctx, g);
  }
  return total;
}

namespace {

// A model compiled over F_q, enumerable one outer value at a time.
class PreparedModel {
 public:
  PreparedModel(const CurveModel& model, const FFContext& ctx, uint64_t cap)
      : ctx_(ctx), nvars_(model.variables.size()) {
    ValidateModel(model);
    const uint64_t q = ctx.q();
    for (size_t i = 0; i < model.variables.size(); ++i) {
      index_[model.variables[i]] = i;
    }
    const PropagationPlan plan =
        model.propagation ? *model.propagation
                          : PropagationPlan{model.variables, {}};
    for (const std::string& v : plan.free) free_.push_back(index_.at(v));
    for (const PropagationStep& s : plan.steps) {
      steps_.push_back({s.kind == PropagationStep::Kind::kImage,
                        index_.at(s.target), index_.at(s.source)});
    }
    c_index_ = index_.count("c") ? index_.at("c") : 0;
    BigInt work = 1;
    for (size_t i = 0; i < free_.size(); ++i) work *= q;
    if (work > BigInt(std::to_string(cap))) {
      throw BudgetExceeded("enumeration of " + work.get_str() +
                           " assignments exceeds the cap of " +
                           std::to_string(cap));
    }
    for (const MultiPoly& f : model.equations) {
      equations_.emplace_back(f, model.variables, ctx);
    }
    for (const MultiPoly& f : model.inequations) {
      inequations_.emplace_back(f, model.variables, ctx);
    }
    inner_ = 1;
    for (size_t i = 1; i < free_.size(); ++i) inner_ *= q;
  }

  int64_t OuterSize() const {
    return free_.empty() ? 1 : static_cast<int64_t>(ctx_.q());
  }
  bool HasVariable(const std::string& v) const { return index_.count(v) > 0; }
  size_t c_index() const { return c_index_; }

  // Calls visit(values) for every solution whose first free variable is o.
  template <class Visit>
  void ForOuter(int64_t o, Visit&& visit) const {
    const uint64_t q = ctx_.q();
    const size_t nfree = free_.size();
    std::vector<uint64_t> values(nvars_, 0);
    if (nfree > 0) values[free_[0]] = static_cast<uint64_t>(o);
    for (uint64_t t = 0; t < inner_; ++t) {
      uint64_t rest = t;
      for (size_t i = nfree; i-- > 1;) {
        values[free_[i]] = rest % q;
        rest /= q;
      }
      for (const CompiledStep& s : steps_) {
        const uint64_t src = values[s.source];
        values[s.target] = s.image
                               ? ctx_.Add(ctx_.Mul(src, src), values[c_index_])
                               : ctx_.Neg(src);
      }
      if (Satisfies(values)) visit(values);
    }
  }

 private:
  bool Satisfies(const std::vector<uint64_t>& values) const {
    for (const CompiledPoly& f : equations_) {
      if (f.Eval(values) != 0) return false;
    }
    for (const CompiledPoly& f : inequations_) {
      if (f.Eval(values) == 0) return false;
    }
    return true;
  }

  const FFContext& ctx_;
  size_t nvars_;
  std::map<std::string, size_t> index_;
  std::vector<size_t> free_;
  std::vector<CompiledStep> steps_;
  size_t c_index_ = 0;
  uint64_t inner_ = 1;
  std::vector<CompiledPoly> equations_, inequations_;
};

}  // namespace

PointCountReport CountPoints(const CurveModel& model, uint64_t p, int k,
                             Exec exec, uint64_t cap,
                             const std::string& model_id) {
  const auto ctx_ptr = FFContext::Create(p, k);
  const FFContext& ctx = *ctx_ptr;
  const PreparedModel prepared(model, ctx, cap);
  const bool plane = model.variables.size() == 2 && model.equations.size() == 1;
  std::vector<CompiledPoly> partials;
  if (plane) {
    for (const std::string& v : model.variables) {
      partials.emplace_back(model.equations[0].Derivative(v), model.variables,
                            ctx);
    }
  }
  const int64_t outer = prepared.OuterSize();
  uint64_t affine = 0, nonsingular = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : affine, nonsingular) if (exec == Exec::kParallel) num_threads(Jobs())
  for (int64_t o = 0; o < outer; ++o) {
    prepared.ForOuter(o, [&](const std::vector<uint64_t>& values) {
      ++affine;
      for (const CompiledPoly& d : partials) {
        if (d.Eval(values) != 0) {
          ++nonsingular;
          break;
        }
      }
    });
  }

  PointCountReport report;
  report.model_id = model_id;
  report.p = p;
  report.k = k;
  report.q = ctx.q();
  report.affine_count = affine;
  if (plane) report.nonsingular_count = nonsingular;
  if (plane && model.inequations.empty() && prepared.HasVariable("c")) {
    const std::string& v = model.variables[prepared.c_index() == 0 ? 1 : 0];
    report.root_count = CountPlaneByRoots(model.equations[0], v, ctx, exec);
    if (*report.root_count != affine) {
      report.violations.push_back(
          "enumeration found " + std::to_string(affine) +
          " points but root counting in c found " +
          std::to_string(*report.root_count));
    }
  }
  return report;
}

std::vector<std::vector<uint64_t>> ListPoints(const CurveModel& model,
                                              const FFContext& ctx,
                                              size_t limit, uint64_t cap) {
  const PreparedModel prepared(model, ctx, cap);
  std::vector<std::vector<uint64_t>> points;
  for (int64_t o = 0; o < prepared.OuterSize(); ++o) {
    prepared.ForOuter(o, [&](const std::vector<uint64_t>& values) {
      if (points.size() >= limit) {
        throw BudgetExceeded("more than " + std::to_string(limit) + " points");
      }
      points.push_back(values);
    });
  }
  return points;
}

BigInt GonalityLowerBound(const BigInt& count, const BigInt& q) {
  if (count < 0) throw InvalidArgument("point count must be >= 0");
  if (q < 2) throw InvalidArgument("q must be >= 2");
  return CeilDiv(count, q + 1);
}

CSResult CsObstruction(const CSQuery& query) {
  if (query.g < 0 || query.g1 < 0 || query.g2 < 0) {
    throw InvalidArgument("genera must be >= 0");
  }
  if (query.d1 < 1 || query.d2 < 1) throw InvalidArgument("degrees must be >= 1");
  CSResult result;
  result.bound = query.d1 * query.g1 + query.d2 * query.g2 +
                 (query.d1 - 1) * (query.d2 - 1);
  result.inequality_holds = query.g <= result.bound;
  return result;
}

namespace {

// `stamp` and `pos` are scratch buffers of size q, reset by the caller.
int MaxCycleLengthWith(const FFContext& ctx, uint64_t c,
                       std::vector<uint64_t>& stamp,
                       std::vector<uint64_t>& pos) {
  const uint64_t q = ctx.q();
  std::fill(stamp.begin(), stamp.end(), 0);
  int best = 0;
  for (uint64_t start = 0; start < q; ++start) {
    if (stamp[start] != 0) continue;
    const uint64_t id = start + 1;
    uint64_t z = start;
    uint64_t step = 0;
    while (stamp[z] == 0) {
      stamp[z] = id;
      pos[z] = step++;
      z = ctx.Add(ctx.Mul(z, z), c);
    }
    if (stamp[z] == id) {
      best = std::max(best, static_cast<int>(step - pos[z]));
    }
  }
  return best;
}

}  // namespace

int MaxCycleLength(const FFContext& ctx, uint64_t c) {
  std::vector<uint64_t> stamp(ctx.q()), pos(ctx.q());
  return MaxCycleLengthWith(ctx, c, stamp, pos);
}

MaxPeriodReport MaxPeriodMod(const std::shared_ptr<const FFContext>& ctx,
                             Exec exec, uint64_t cap) {
  const uint64_t q = ctx->q();
  if (q > cap) {
    throw BudgetExceeded("q = " + std::to_string(q) + " exceeds the cap of " +
                         std::to_string(cap));
  }
  std::vector<int> per_c(q, 0);
  const int64_t q_signed = static_cast<int64_t>(q);
#pragma omp parallel if (exec == Exec::kParallel) num_threads(Jobs())
  {
    std::vector<uint64_t> stamp(q), pos(q);
#pragma omp for schedule(dynamic, 4)
    for (int64_t c = 0; c < q_signed; ++c) {
      per_c[c] = MaxCycleLengthWith(*ctx, static_cast<uint64_t>(c), stamp, pos);
    }
  }
  MaxPeriodReport report;
  report.q = q;
  for (uint64_t c = 0; c < q; ++c) {
    if (per_c[c] > report.max_period) {
      report.max_period = per_c[c];
      report.witness_c = c;
    }
  }
  report.witness_text = ctx->Format(report.witness_c);
  return report;
}

std::vector<Rational> ResidueClassMembers(const Rational& x0, uint64_t p,
                                          int count) {
  if (!IsPrime(p)) throw InvalidArgument("p must be prime");
  if (count < 0) throw InvalidArgument("count must be >= 0");
  if (mpz_divisible_ui_p(x0.get_den_mpz_t(), p)) {
    throw NotPIntegral(ToString(x0) + " is not " + std::to_string(p) +
                       "-integral");
  }
  std::vector<Rational> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) {
    out.push_back(x0 + Rational(BigInt(std::to_string(p)) * i));
  }
  return out;
}

}  // namespace dynw
