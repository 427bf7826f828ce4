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

#include "dynw/reproduce.h"

#include <chrono>
#include <functional>
#include <tuple>

#include "dynw/classifier.h"
#include "dynw/curve_model.h"
#include "dynw/dynatomic.h"
#include "dynw/enumerate.h"
#include "dynw/errors.h"

namespace dynw {
namespace {

class Table {
 public:
  explicit Table(std::string name) { report_.name = std::move(name); }

  // `run` fills observed and returns whether the check passed.
  void Add(const std::string& check, const std::string& expected,
           const std::function<bool(std::string&)>& run,
           bool informational = false) {
    ReproduceRow row;
    row.check = check;
    row.expected = expected;
    row.informational = informational;
    const auto start = std::chrono::steady_clock::now();
    try {
      row.pass = run(row.observed);
    } catch (const DomainError& e) {
      row.observed = std::string("error: ") + e.what();
      row.pass = false;
    }
    row.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (!row.pass && !row.informational) report_.all_pass = false;
    report_.rows.push_back(std::move(row));
  }

  ReproduceReport Take() { return std::move(report_); }

 private:
  ReproduceReport report_;
};

std::string YesNo(bool b) { return b ? "yes" : "no"; }

ReproduceReport Figures(Exec exec) {
  Table t("figures");
  for (const FigureClassCount& f : FigureClassCounts()) {
    t.Add("classes " + std::to_string(f.n) + f.sigma.ToString(),
          std::to_string(f.classes), [&](std::string& obs) {
            const size_t got = EnumerateGeneric(f.n, f.sigma, exec).size();
            obs = std::to_string(got);
            return got == f.classes;
          });
  }
  return t.Take();
}

ReproduceReport Degrees() {
  Table t("degrees");
  t.Add("Phi_2", "x^2 + x + c + 1", [](std::string& obs) {
    obs = Dynatomic(2).phi.ToString();
    return obs == "x^2 + x + c + 1";
  });
  for (int n = 1; n <= 10; ++n) {
    t.Add("product identity n=" + std::to_string(n), "holds",
          [n](std::string& obs) {
            const bool ok = ProductIdentityHolds(n);
            obs = ok ? "holds" : "fails";
            return ok;
          });
    t.Add("deg_x Phi_" + std::to_string(n), D1(n).get_str(),
          [n](std::string& obs) {
            const int d = Dynatomic(n).degree_x;
            obs = std::to_string(d);
            return BigInt(d) == D1(n);
          });
  }
  return t.Take();
}

ReproduceReport Trace() {
  Table t("trace");
  for (uint64_t p : {5, 7, 11, 13}) {
    const TraceRelationReport r = TraceRelationCheck(p);
    const std::string ps = std::to_string(p);
    t.Add("t^2 - 2t + 29 + 16c = 0 over F_" + ps, "0 violations",
          [&](std::string& obs) {
            obs = std::to_string(r.violations) + " of " +
                  std::to_string(r.points) + " points violate";
            return r.violations == 0;
          });
    t.Add("t^2 + t + c + 2 = 0 over F_" + ps, "0 violations",
          [&](std::string& obs) {
            obs = std::to_string(r.monic_violations) + " of " +
                  std::to_string(r.points) + " points violate";
            return r.monic_violations == 0;
          },
          true);
  }
  return t.Take();
}

ReproduceReport SweepReport(Exec exec) {
  Table t("sweep");
  t.Add("classify -3/4", "4(1,1), generic", [](std::string& obs) {
    const ClassificationRecord r = Classify(MakeRational(-3, 4));
    obs = r.label.value_or("?") + ", " + (r.generic ? "generic" : "non-generic");
    return r.label == "4(1,1)" && r.generic;
  });
  t.Add("classify 1", "∅", [](std::string& obs) {
    const ClassificationRecord r = Classify(1);
    obs = r.label.value_or("?");
    return r.point_count == 0;
  });
  t.Add("classify -1", "non-generic", [](std::string& obs) {
    const ClassificationRecord r = Classify(-1);
    obs = r.generic ? "generic" : "non-generic";
    return !r.generic;
  });
  t.Add("sweep height 20 anomalies", "0", [exec](std::string& obs) {
    const SweepSummary s = Sweep(20, nullptr, exec);
    obs = std::to_string(s.anomalies.size()) + " (" +
          std::to_string(s.classified) + " parameters)";
    return s.anomalies.empty();
  });
  return t.Take();
}

ReproduceReport Bounds() {
  Table t("bounds");
  t.Add("D1 bounds, strict for n >= 3", "n = 1..30", [](std::string& obs) {
    for (int n = 1; n <= 30; ++n) {
      if (!CheckDegreeBounds(n).ok) {
        obs = "fails at n = " + std::to_string(n);
        return false;
      }
    }
    obs = "n = 1..30";
    return true;
  });
  t.Add("n divides D1(n)", "n = 1..64", [](std::string& obs) {
    for (int n = 1; n <= 64; ++n) {
      if (!CheckDegreeBounds(n).divisible) {
        obs = "fails at n = " + std::to_string(n);
        return false;
      }
    }
    obs = "n = 1..64";
    return true;
  });
  t.Add("B(12)", "1959", [](std::string& obs) {
    obs = BranchPointCount(12).get_str();
    return obs == "1959";
  });
  t.Add("genus lower bound at n = 12", "1291/2", [](std::string& obs) {
    obs = ToString(MakeDegreeReport(12).genus_lb);
    return obs == "1291/2";
  });
  t.Add("lower-bound chain", "n = 25..200", [](std::string& obs) {
    for (int n = 25; n <= 200; ++n) {
      if (!AsymptoticGenusCheck(n).chain_holds) {
        obs = "fails at n = " + std::to_string(n);
        return false;
      }
    }
    obs = "n = 25..200";
    return true;
  });
  t.Add("displayed inequality at n = 24", "reported", [](std::string& obs) {
    const AsymptoticReport r = AsymptoticGenusCheck(24);
    obs = r.displayed_lhs.get_str() + " >= " + r.displayed_rhs.get_str() +
          ": " + YesNo(r.displayed_holds);
    return r.displayed_holds;
  }, true);
  return t.Take();
}

}  // namespace

const std::vector<std::string>& ReportNames() {
  static const std::vector<std::string> names = {"figures", "degrees", "trace",
                                                 "sweep", "bounds"};
  return names;
}

ReproduceReport Reproduce(const std::string& name, Exec exec) {
  if (name == "figures") return Figures(exec);
  if (name == "degrees") return Degrees();
  if (name == "trace") return Trace();
  if (name == "sweep") return SweepReport(exec);
  if (name == "bounds") return Bounds();
  throw UnknownReport("unknown report '" + name +
                      "' (figures, degrees, trace, sweep, bounds)");
}

const std::vector<FigureClassCount>& FigureClassCounts() {
  static const std::vector<FigureClassCount> table = [] {
    const std::vector<std::tuple<int, const char*, size_t>> raw = {
        {8, "1,1", 2},   {10, "1,1", 3},    {8, "2", 2},       {10, "2", 3},
        {8, "3", 1},     {10, "3", 2},      {10, "4", 1},      {10, "2,1,1", 2},
        {12, "2,1,1", 5}, {12, "3,1,1", 2}, {12, "3,2", 2},    {12, "3,3", 1},
        {14, "3,3", 1}};
    std::vector<FigureClassCount> out;
    for (const auto& [n, sigma, count] : raw) {
      out.push_back({n, CycleStructure::Parse(sigma), count});
    }
    return out;
  }();
  return table;
}

}  // namespace dynw
