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

#include "dynw/cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dynw/catalog.h"
#include "dynw/classifier.h"
#include "dynw/config.h"
#include "dynw/curve_model.h"
#include "dynw/dynatomic.h"
#include "dynw/enumerate.h"
#include "dynw/errors.h"
#include "dynw/ff_lab.h"
#include "dynw/parallel.h"
#include "dynw/portrait.h"
#include "dynw/reproduce.h"
#include "json.hpp"

namespace dynw {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// One emitted report in every format it supports.
struct Output {
  Json json;
  std::string text;
  std::optional<std::string> csv;
};

Json Versioned() {
  Json j;
  j["schema_version"] = kSchemaVersion;
  return j;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A portrait argument is either a file holding "N:t1,...,tN" or the text
// itself.
Portrait ReadPortrait(const std::string& value) {
  std::string text = value;
  if (std::filesystem::is_regular_file(value)) text = ReadFile(value);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.pop_back();
  }
  return Portrait::Parse(text);
}

std::optional<std::string> LabelOf(const Portrait& p) {
  if (const CatalogEntry* e = FindByPortrait(p)) return e->label;
  return std::nullopt;
}

Json PortraitJson(const Portrait& p) {
  Json j;
  j["portrait"] = p.ToString();
  j["n"] = p.n();
  j["cycle_structure"] = GetCycleStructure(p).ToString();
  const auto label = LabelOf(p);
  j["label"] = label ? Json(*label) : Json(nullptr);
  return j;
}

std::string CsvQuote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string JoinInts(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---- dynatomic -------------------------------------------------------------

Output DynatomicPoly(int n, const RunConfig& config) {
  const DynatomicTable t = Dynatomic(n, config.max_dynatomic_n);
  Output o;
  o.json = Versioned();
  o.json["n"] = n;
  o.json["degree_x"] = t.degree_x;
  o.json["degree_c"] = t.degree_c;
  o.json["terms"] = t.phi.size();
  o.json["poly"] = t.phi.ToString();
  o.text = t.phi.ToString() + "\n";
  return o;
}

Output DynatomicDegrees(int from, int to) {
  Output o;
  o.json = Versioned();
  Json rows = Json::array();
  std::string csv = "n,d1,d0,branch_points,genus_lb\n";
  std::string text = "n D1 D0 B genus_lb\n";
  for (int n = from; n <= to; ++n) {
    const DegreeReport r = MakeDegreeReport(n);
    rows.push_back({{"n", n},
                    {"d1", r.d1.get_str()},
                    {"d0", r.d0.get_str()},
                    {"branch_points", r.branch_points.get_str()},
                    {"genus_lb", ToString(r.genus_lb)}});
    const std::string line = std::to_string(n) + "," + r.d1.get_str() + "," +
                             r.d0.get_str() + "," + r.branch_points.get_str() +
                             "," + ToString(r.genus_lb);
    csv += line + "\n";
    std::string spaced = line;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    text += spaced + "\n";
  }
  o.json["degrees"] = rows;
  o.text = text;
  o.csv = csv;
  return o;
}

Output DynatomicCheckBounds(int from, int to) {
  Output o;
  o.json = Versioned();
  Json rows = Json::array();
  std::string text;
  std::string csv = "n,d1,d0,divisible,strict_required,ok\n";
  bool all_ok = true;
  for (int n = from; n <= to; ++n) {
    const DegreeBoundsReport r = CheckDegreeBounds(n);
    all_ok = all_ok && r.ok;
    rows.push_back({{"n", n},
                    {"d1", r.d1.get_str()},
                    {"d0", r.d0.get_str()},
                    {"d1_lower", r.d1_lower},
                    {"d1_upper", r.d1_upper},
                    {"d1_lower_strict", r.d1_lower_strict},
                    {"d1_upper_strict", r.d1_upper_strict},
                    {"d0_lower", r.d0_lower},
                    {"d0_upper", r.d0_upper},
                    {"divisible", r.divisible},
                    {"strict_required", r.strict_required},
                    {"ok", r.ok}});
    text += "n=" + std::to_string(n) + " D1=" + r.d1.get_str() +
            " D0=" + r.d0.get_str() + (r.ok ? " ok" : " FAIL") + "\n";
    csv += std::to_string(n) + "," + r.d1.get_str() + "," + r.d0.get_str() +
           "," + (r.divisible ? "true" : "false") + "," +
           (r.strict_required ? "true" : "false") + "," +
           (r.ok ? "true" : "false") + "\n";
  }
  o.json["bounds"] = rows;
  o.json["all_ok"] = all_ok;
  o.text = text;
  o.csv = csv;
  return o;
}

Output DynatomicAsymptotic(int from, int to) {
  Output o;
  o.json = Versioned();
  Json rows = Json::array();
  std::string text;
  for (int n = from; n <= to; ++n) {
    const AsymptoticReport r = AsymptoticGenusCheck(n);
    Json chain = Json::object();
    for (const ChainStep& s : r.chain) chain[s.name] = s.holds;
    rows.push_back({{"n", n},
                    {"displayed_lhs", r.displayed_lhs.get_str()},
                    {"displayed_rhs", r.displayed_rhs.get_str()},
                    {"displayed_holds", r.displayed_holds},
                    {"displayed_real_holds", r.displayed_real_holds},
                    {"branch_points", r.branch_points.get_str()},
                    {"six_d0", r.six_d0.get_str()},
                    {"branch_exceeds_six_d0", r.branch_exceeds_six_d0},
                    {"chain", chain},
                    {"chain_holds", r.chain_holds}});
    text += "n=" + std::to_string(n) +
            " displayed=" + (r.displayed_holds ? "holds" : "fails") +
            " B>6D0=" + (r.branch_exceeds_six_d0 ? "yes" : "no") +
            " chain=" + (r.chain_holds ? "holds" : "fails") + "\n";
  }
  o.json["asymptotic"] = rows;
  o.text = text;
  return o;
}

// ---- portrait --------------------------------------------------------------

Output PortraitValidate(const Portrait& p) {
  const GenericityReport report = ValidateGeneric(p);
  const CycleStructure sigma = GetCycleStructure(p);
  const Portrait canonical = CanonicalForm(p);
  Output o;
  o.json = Versioned();
  o.json["portrait"] = p.ToString();
  o.json["n"] = p.n();
  o.json["generic"] = report.is_generic;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"rule", RuleName(v.rule)},
                          {"vertex", v.vertex},
                          {"cycle_length", v.cycle_length},
                          {"count", v.count},
                          {"description", v.Describe()}});
  }
  o.json["violations"] = violations;
  o.json["cycle_structure"] = sigma.ToString();
  o.json["admissible"] = IsAdmissible(sigma);
  o.json["canonical"] = canonical.ToString();
  const auto label = LabelOf(canonical);
  o.json["label"] = label ? Json(*label) : Json(nullptr);
  o.text = std::string(report.is_generic ? "generic" : "not generic") + " " +
           sigma.ToString() + " canonical " + canonical.ToString() +
           (label ? " " + *label : "") + "\n";
  for (const Violation& v : report.violations) o.text += "  " + v.Describe() + "\n";
  return o;
}

Output PortraitList(const std::vector<Portrait>& portraits, Json header) {
  Output o;
  o.json = std::move(header);
  o.json["count"] = portraits.size();
  Json list = Json::array();
  std::string csv = "portrait,label\n";
  std::string text = std::to_string(portraits.size()) + " classes\n";
  for (const Portrait& p : portraits) {
    list.push_back(PortraitJson(p));
    const std::string label = LabelOf(p).value_or("");
    csv += CsvQuote(p.ToString()) + "," + CsvQuote(label) + "\n";
    text += p.ToString() + (label.empty() ? "" : " " + label) + "\n";
  }
  o.json["portraits"] = list;
  o.text = text;
  o.csv = csv;
  return o;
}

Output PortraitEnumerate(int n, const std::string& cycles) {
  const CycleStructure sigma = CycleStructure::Parse(cycles);
  Json header = Versioned();
  header["n"] = n;
  header["cycle_structure"] = sigma.ToString();
  return PortraitList(EnumerateGeneric(n, sigma, Exec::kParallel), header);
}

Output PortraitAutGroup(const Portrait& p) {
  const auto group = AutomorphismGroup(p);
  Output o;
  o.json = Versioned();
  o.json["portrait"] = p.ToString();
  o.json["order"] = group.size();
  o.json["automorphisms"] = group;
  o.text = "order " + std::to_string(group.size()) + "\n";
  for (const auto& g : group) o.text += JoinInts(g) + "\n";
  return o;
}

Output PortraitEmbeds(const Portrait& source, const Portrait& target) {
  const auto maps = Embeddings(source, target);
  Output o;
  o.json = Versioned();
  o.json["source"] = source.ToString();
  o.json["target"] = target.ToString();
  o.json["embeds"] = !maps.empty();
  o.json["count"] = maps.size();
  o.json["first"] = maps.empty() ? Json(nullptr) : Json(maps.front());
  o.text = std::string(maps.empty() ? "no" : "yes") + " (" +
           std::to_string(maps.size()) + " embeddings)\n";
  return o;
}

Output PortraitCatalog(const std::optional<std::string>& label) {
  std::vector<const CatalogEntry*> entries;
  if (label) {
    const CatalogEntry* e = FindByLabel(*label);
    if (!e) throw InvalidArgument("no catalog entry '" + *label + "'");
    entries.push_back(e);
  } else {
    for (const CatalogEntry& e : Catalog()) entries.push_back(&e);
  }
  Output o;
  o.json = Versioned();
  Json list = Json::array();
  std::string csv = "label,portrait,cycle_structure,genus,degenerate,letter_status\n";
  for (const CatalogEntry* e : entries) {
    list.push_back({{"label", e->label},
                    {"portrait", e->portrait.ToString()},
                    {"cycle_structure", e->cycle_structure.ToString()},
                    {"genus", e->genus ? Json(*e->genus) : Json(nullptr)},
                    {"degenerate", e->degenerate},
                    {"letter_status", LetterStatusName(e->letter_status)},
                    {"notes", e->notes}});
    const std::string genus = e->genus ? std::to_string(*e->genus) : "";
    csv += CsvQuote(e->label) + "," + CsvQuote(e->portrait.ToString()) + "," +
           CsvQuote(e->cycle_structure.ToString()) + "," + genus + "," +
           (e->degenerate ? "true" : "false") + "," +
           LetterStatusName(e->letter_status) + "\n";
    o.text += e->label + " " + e->portrait.ToString() +
              (e->genus ? " genus " + genus : "") +
              (e->degenerate ? " degenerate" : "") + "\n";
  }
  o.json["entries"] = list;
  o.csv = csv;
  return o;
}

Output PortraitExtensions(const Portrait& p, int bound) {
  Json header = Versioned();
  header["base"] = p.ToString();
  header["bound"] = bound;
  return PortraitList(MinimalExtensions(p, bound), header);
}

// ---- model -----------------------------------------------------------------

Output ModelOutput(const CurveModel& model) {
  Output o;
  o.json = Json::parse(ModelToJson(model));
  std::string vars;
  for (const std::string& v : model.variables) vars += (vars.empty() ? "" : ", ") + v;
  o.text = ProvenanceName(model.provenance) + " model in (" + vars + ")\n";
  for (const MultiPoly& f : model.equations) o.text += "  " + f.ToString() + " = 0\n";
  for (const MultiPoly& f : model.inequations) {
    o.text += "  " + f.ToString() + " != 0\n";
  }
  if (!model.diagnostic.empty()) o.text += "note: " + model.diagnostic + "\n";
  return o;
}

std::vector<int> ParsePeriods(const std::string& text) {
  return CycleStructure::Parse(text).lengths;
}

Output TraceCheck(uint64_t p) {
  const TraceRelationReport r = TraceRelationCheck(p);
  Output o;
  o.json = Versioned();
  o.json["p"] = r.p;
  o.json["points"] = r.points;
  o.json["violations"] = r.violations;
  Json first = Json::array();
  for (const TracePoint& t : r.first_violations) {
    first.push_back({{"c", t.c}, {"x", t.x}, {"t", t.t}});
  }
  o.json["first_violations"] = first;
  o.json["monic_violations"] = r.monic_violations;
  o.json["rescaled_violations"] = r.rescaled_violations;
  o.text = "p=" + std::to_string(p) + " points=" + std::to_string(r.points) +
           " violations=" + std::to_string(r.violations) +
           " monic_violations=" + std::to_string(r.monic_violations) +
           " rescaled_violations=" + std::to_string(r.rescaled_violations) + "\n";
  return o;
}

// ---- ff --------------------------------------------------------------------

Output FfCount(const std::string& path, uint64_t p, int k, const RunConfig& config) {
  const CurveModel model = ModelFromJson(ReadFile(path));
  const std::string id = std::filesystem::path(path).stem().string();
  const PointCountReport r =
      CountPoints(model, p, k, Exec::kParallel, config.enumeration_cap, id);
  Output o;
  o.json = Versioned();
  o.json["model_id"] = r.model_id;
  o.json["p"] = r.p;
  o.json["k"] = r.k;
  o.json["q"] = r.q;
  o.json["affine_count"] = r.affine_count;
  o.json["nonsingular_count"] =
      r.nonsingular_count ? Json(*r.nonsingular_count) : Json(nullptr);
  o.json["root_count"] = r.root_count ? Json(*r.root_count) : Json(nullptr);
  o.json["violations"] = r.violations;
  o.text = r.model_id + " q=" + std::to_string(r.q) +
           " affine=" + std::to_string(r.affine_count);
  if (r.nonsingular_count) {
    o.text += " nonsingular=" + std::to_string(*r.nonsingular_count);
  }
  o.text += "\n";
  for (const std::string& v : r.violations) o.text += "violation: " + v + "\n";
  return o;
}

Output FfGonality(const std::string& count, const std::string& q) {
  const BigInt bound = GonalityLowerBound(ParseBigInt(count), ParseBigInt(q));
  Output o;
  o.json = Versioned();
  o.json["count"] = count;
  o.json["q"] = q;
  o.json["gonality_lower_bound"] = bound.get_str();
  o.text = bound.get_str() + "\n";
  return o;
}

Output FfCs(const CSQuery& query) {
  const CSResult r = CsObstruction(query);
  Output o;
  o.json = Versioned();
  o.json["g"] = query.g.get_str();
  o.json["d1"] = query.d1.get_str();
  o.json["g1"] = query.g1.get_str();
  o.json["d2"] = query.d2.get_str();
  o.json["g2"] = query.g2.get_str();
  o.json["bound"] = r.bound.get_str();
  o.json["inequality_holds"] = r.inequality_holds;
  o.text = query.g.get_str() + " <= " + r.bound.get_str() + ": " +
           (r.inequality_holds ? "holds" : "fails") + "\n";
  return o;
}

Output FfMaxPeriod(uint64_t p, int k, const RunConfig& config) {
  const auto ctx = FFContext::Create(p, k);
  const MaxPeriodReport r = MaxPeriodMod(ctx, Exec::kParallel, config.enumeration_cap);
  Output o;
  o.json = Versioned();
  o.json["p"] = p;
  o.json["k"] = k;
  o.json["q"] = r.q;
  o.json["max_period"] = r.max_period;
  o.json["witness_c"] = r.witness_text;
  o.text = "q=" + std::to_string(r.q) + " max_period=" +
           std::to_string(r.max_period) + " witness_c=" + r.witness_text + "\n";
  return o;
}

// ---- classify / sweep ------------------------------------------------------

Json RecordJson(const ClassificationRecord& r, const RunConfig& config) {
  Json j;
  j["c"] = ToString(r.c);
  j["portrait"] = r.portrait.ToString();
  j["cycle_structure"] = GetCycleStructure(r.portrait).ToString();
  j["label"] = r.label ? Json(*r.label) : Json(nullptr);
  j["generic"] = r.generic;
  j["point_count"] = r.point_count;
  Json points = Json::array();
  for (size_t i = 0; i < r.points.size(); ++i) {
    const OrbitRecord orbit = Orbit(r.c, r.points[i], config.step_budget);
    points.push_back({{"vertex", i + 1},
                      {"x", ToString(r.points[i])},
                      {"preperiod", orbit.preperiod},
                      {"eventual_period", orbit.eventual_period}});
  }
  j["points"] = points;
  j["flags"] = r.flags;
  return j;
}

Output ClassifyOutput(const std::string& c_text, const RunConfig& config) {
  const ClassificationRecord r = Classify(ParseRational(c_text));
  Output o;
  o.json = Versioned();
  o.json.update(RecordJson(r, config));
  o.text = "c=" + ToString(r.c) + " " + r.portrait.ToString() + " " +
           r.label.value_or("unlabeled") + " " +
           (r.generic ? "generic" : "non-generic") + " points:";
  for (const Rational& x : r.points) o.text += " " + ToString(x);
  o.text += "\n";
  for (const std::string& f : r.flags) o.text += "flag: " + f + "\n";
  o.csv = CsvHeader() + "\n" + CsvRow(r) + "\n";
  return o;
}

Output SweepOutput(int height, const std::optional<std::string>& out_path,
                   const RunConfig& config) {
  std::ostringstream csv;
  const SweepSummary s = Sweep(height, &csv, Exec::kParallel);
  if (out_path) {
    std::ofstream file(*out_path);
    if (!file) throw InvalidArgument("cannot write '" + *out_path + "'");
    file << csv.str();
  }
  (void)config;
  Output o;
  o.json = Versioned();
  o.json["height"] = s.height;
  o.json["classified"] = s.classified;
  o.json["generic"] = s.generic;
  o.json["tallies"] = s.tallies;
  o.json["anomalies"] = s.anomalies;
  o.text = "height " + std::to_string(s.height) + ": " +
           std::to_string(s.classified) + " parameters, " +
           std::to_string(s.generic) + " generic, " +
           std::to_string(s.anomalies.size()) + " anomalies\n";
  for (const auto& [label, count] : s.tallies) {
    o.text += "  " + label + " " + std::to_string(count) + "\n";
  }
  for (const std::string& a : s.anomalies) o.text += "anomaly: " + a + "\n";
  o.csv = csv.str();
  return o;
}

Output ReproduceOutput(const std::string& name, std::ostream& err) {
  const ReproduceReport r = Reproduce(name, Exec::kParallel);
  Output o;
  o.json = Versioned();
  o.json["report"] = r.name;
  Json rows = Json::array();
  std::string csv = "check,expected,observed,status\n";
  size_t width = 0;
  for (const ReproduceRow& row : r.rows) width = std::max(width, row.check.size());
  for (const ReproduceRow& row : r.rows) {
    const std::string status =
        row.informational ? "INFO" : (row.pass ? "PASS" : "FAIL");
    rows.push_back({{"check", row.check},
                    {"expected", row.expected},
                    {"observed", row.observed},
                    {"status", status}});
    csv += CsvQuote(row.check) + "," + CsvQuote(row.expected) + "," +
           CsvQuote(row.observed) + "," + status + "\n";
    std::string check = row.check;
    check.resize(width, ' ');
    o.text += status + "  " + check + "  expected " + row.expected +
              ", observed " + row.observed + "\n";
    err << "[" << r.name << "] " << row.check << ": " << std::fixed
        << std::setprecision(3) << row.seconds << " s\n";
  }
  o.json["rows"] = rows;
  o.json["all_pass"] = r.all_pass;
  o.text += r.all_pass ? "all checks pass\n" : "some checks FAIL\n";
  o.csv = csv;
  return o;
}

void Emit(const Output& o, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson:
      out << o.json.dump(2) << "\n";
      return;
    case OutputFormat::kCsv:
      if (!o.csv) throw UsageError("csv output is not available for this command");
      out << *o.csv;
      return;
    case OutputFormat::kText:
      out << o.text;
      return;
  }
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  RunConfig config;
  try {
    ApplyEnvironment(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact tools for quadratic dynamics: dynatomic polynomials, "
               "preperiodic portraits, curve models and point counts.",
               "dynw"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_flag;
  uint64_t cap_flag = 0;
  int max_n_flag = 0, step_flag = 0, jobs_flag = 0;
  app.add_option("--format", format_flag, "Output format: text, json or csv");
  app.add_option("--jobs", jobs_flag, "Worker threads for parallel kernels")
      ->check(CLI::PositiveNumber);
  app.add_option("--enumeration-cap", cap_flag, "Largest enumeration allowed")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dynatomic-n", max_n_flag, "Largest n for dynatomic poly")
      ->check(CLI::PositiveNumber);
  app.add_option("--step-budget", step_flag, "Orbit step budget")
      ->check(CLI::PositiveNumber);

  std::function<Output()> action;

  // dynatomic
  auto* dyn = app.add_subcommand("dynatomic", "Dynatomic polynomials and degrees");
  dyn->require_subcommand(1);
  int n = 0, from = 0, to = 0;
  auto range = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Single n")->check(CLI::PositiveNumber);
    sub->add_option("--from", from, "First n")->check(CLI::PositiveNumber);
    sub->add_option("--to", to, "Last n")->check(CLI::PositiveNumber);
  };
  auto resolve_range = [&](CLI::App* sub) {
    const bool single = sub->count("--n") > 0;
    const bool ranged = sub->count("--from") > 0 || sub->count("--to") > 0;
    if (single == ranged) throw UsageError("give either --n or --from/--to");
    if (single) return std::pair<int, int>(n, n);
    if (!sub->count("--from") || !sub->count("--to") || from > to) {
      throw UsageError("--from and --to must both be given with from <= to");
    }
    return std::pair<int, int>(from, to);
  };
  auto* dyn_poly = dyn->add_subcommand("poly", "Print Phi_n");
  dyn_poly->add_option("--n", n, "Period")->required()->check(CLI::PositiveNumber);
  dyn_poly->callback([&] { action = [&] { return DynatomicPoly(n, config); }; });
  auto* dyn_deg = dyn->add_subcommand("degrees", "D1, D0, branch points, genus bound");
  range(dyn_deg);
  dyn_deg->callback([&] {
    const auto [a, b] = resolve_range(dyn_deg);
    action = [a, b] { return DynatomicDegrees(a, b); };
  });
  auto* dyn_bounds = dyn->add_subcommand("check-bounds", "Bounds on D1 and D0");
  range(dyn_bounds);
  dyn_bounds->callback([&] {
    const auto [a, b] = resolve_range(dyn_bounds);
    action = [a, b] { return DynatomicCheckBounds(a, b); };
  });
  auto* dyn_asym = dyn->add_subcommand("asymptotic", "Genus lower-bound chain");
  range(dyn_asym);
  dyn_asym->callback([&] {
    const auto [a, b] = resolve_range(dyn_asym);
    action = [a, b] { return DynatomicAsymptotic(a, b); };
  });

  // portrait
  auto* por = app.add_subcommand("portrait", "Preperiodic portraits");
  por->require_subcommand(1);
  std::string portrait_arg, target_arg, cycles, label;
  int bound = 0;
  auto* por_validate = por->add_subcommand("validate", "Genericity and canonical form");
  por_validate->add_option("--portrait", portrait_arg, "File or N:t1,...,tN")->required();
  por_validate->callback([&] {
    action = [&] { return PortraitValidate(ReadPortrait(portrait_arg)); };
  });
  auto* por_enum = por->add_subcommand("enumerate", "Generic portraits by size and cycles");
  por_enum->add_option("--n", n, "Vertex count")->required();
  por_enum->add_option("--cycles", cycles, "Cycle structure, e.g. \"3,3\"")->required();
  por_enum->callback([&] { action = [&] { return PortraitEnumerate(n, cycles); }; });
  auto* por_aut = por->add_subcommand("autgroup", "Automorphism group");
  por_aut->add_option("--portrait", portrait_arg, "File or N:t1,...,tN")->required();
  por_aut->callback([&] {
    action = [&] { return PortraitAutGroup(ReadPortrait(portrait_arg)); };
  });
  auto* por_emb = por->add_subcommand("embeds", "Embeddings of one portrait in another");
  por_emb->add_option("--source", portrait_arg, "File or N:t1,...,tN")->required();
  por_emb->add_option("--target", target_arg, "File or N:t1,...,tN")->required();
  por_emb->callback([&] {
    action = [&] {
      return PortraitEmbeds(ReadPortrait(portrait_arg), ReadPortrait(target_arg));
    };
  });
  auto* por_cat = por->add_subcommand("catalog", "Labeled portrait classes");
  por_cat->add_option("--label", label, "Single label");
  por_cat->callback([&] {
    const bool one = por_cat->count("--label") > 0;
    action = [&, one] {
      return PortraitCatalog(one ? std::optional<std::string>(label) : std::nullopt);
    };
  });
  auto* por_ext = por->add_subcommand("extensions", "Minimal generic extensions");
  por_ext->add_option("--portrait", portrait_arg, "File or N:t1,...,tN")->required();
  por_ext->add_option("--bound", bound, "Largest allowed cycle length")->required();
  por_ext->callback([&] {
    action = [&] { return PortraitExtensions(ReadPortrait(portrait_arg), bound); };
  });

  // model
  auto* mod = app.add_subcommand("model", "Polynomial models of portrait curves");
  mod->require_subcommand(1);
  uint64_t p = 0;
  int k = 1;
  auto* mod_full = mod->add_subcommand("full", "One variable per vertex");
  mod_full->add_option("--portrait", portrait_arg, "File or N:t1,...,tN")->required();
  mod_full->callback([&] {
    action = [&] { return ModelOutput(FullModel(ReadPortrait(portrait_arg))); };
  });
  auto* mod_red = mod->add_subcommand("reduced", "One variable per generator");
  mod_red->add_option("--portrait", portrait_arg, "File or N:t1,...,tN")->required();
  mod_red->callback([&] {
    action = [&] { return ModelOutput(ReducedModel(ReadPortrait(portrait_arg))); };
  });
  auto* mod_multi = mod->add_subcommand("multilevel", "Points of the given periods");
  mod_multi->add_option("--cycles", cycles, "Periods, e.g. \"3,3\"")->required();
  mod_multi->callback([&] {
    action = [&] { return ModelOutput(MultiLevelModel(ParsePeriods(cycles))); };
  });
  auto* mod_trace = mod->add_subcommand("trace-check", "Trace relation on Phi_3 over F_p");
  mod_trace->add_option("--p", p, "Odd prime")->required();
  mod_trace->callback([&] { action = [&] { return TraceCheck(p); }; });

  // ff
  auto* ff = app.add_subcommand("ff", "Finite-field computations");
  ff->require_subcommand(1);
  std::string model_path, count_text, q_text;
  auto* ff_count = ff->add_subcommand("count", "Point count of a model JSON over F_{p^k}");
  ff_count->add_option("--model", model_path, "Model JSON file")->required();
  ff_count->add_option("--p", p, "Prime")->required();
  ff_count->add_option("--k", k, "Extension degree")->check(CLI::PositiveNumber);
  ff_count->callback([&] {
    action = [&] { return FfCount(model_path, p, k, config); };
  });
  auto* ff_gon = ff->add_subcommand("gonality-lb", "ceil(count / (q + 1))");
  ff_gon->add_option("--count", count_text, "Point count")->required();
  ff_gon->add_option("--q", q_text, "Field size")->required();
  ff_gon->callback([&] { action = [&] { return FfGonality(count_text, q_text); }; });
  auto* ff_cs = ff->add_subcommand("cs", "Castelnuovo-Severi bound");
  std::string g_s, d1_s, g1_s, d2_s, g2_s;
  ff_cs->add_option("--g", g_s, "Genus of the curve")->required();
  ff_cs->add_option("--d1", d1_s, "Degree of the first map")->required();
  ff_cs->add_option("--g1", g1_s, "Genus of the first target")->required();
  ff_cs->add_option("--d2", d2_s, "Degree of the second map")->required();
  ff_cs->add_option("--g2", g2_s, "Genus of the second target")->required();
  ff_cs->callback([&] {
    action = [&] {
      return FfCs({ParseBigInt(g_s), ParseBigInt(g1_s), ParseBigInt(g2_s),
                   ParseBigInt(d1_s), ParseBigInt(d2_s)});
    };
  });
  auto* ff_max = ff->add_subcommand("max-period", "Longest cycle of x^2 + c over F_q");
  ff_max->add_option("--p", p, "Prime")->required();
  ff_max->add_option("--k", k, "Extension degree")->check(CLI::PositiveNumber);
  ff_max->callback([&] { action = [&] { return FfMaxPeriod(p, k, config); }; });

  // classify, sweep, reproduce
  std::string c_text;
  auto* cls = app.add_subcommand("classify", "Rational preperiodic portrait of x^2 + c");
  cls->add_option("--c", c_text, "Parameter a/b")->required();
  cls->callback([&] { action = [&] { return ClassifyOutput(c_text, config); }; });
  int height = 0;
  std::string out_path;
  auto* swp = app.add_subcommand("sweep", "Classify all c = a/m^2 up to a height");
  swp->add_option("--height", height, "Height bound")->required();
  swp->add_option("--out", out_path, "CSV file for the records");
  swp->callback([&] {
    const bool to_file = swp->count("--out") > 0;
    action = [&, to_file] {
      return SweepOutput(height,
                         to_file ? std::optional<std::string>(out_path) : std::nullopt,
                         config);
    };
  });
  std::string report_name;
  auto* rep = app.add_subcommand("reproduce", "Run a bundle of checks");
  rep->add_option("report", report_name, "figures, degrees, trace, sweep or bounds")
      ->required();
  rep->callback([&] { action = [&] { return ReproduceOutput(report_name, err); }; });

  std::vector<std::string> argv_storage = {"dynw"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'dynw --help' for usage\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!format_flag.empty()) config.output_format = ParseOutputFormat(format_flag);
    if (cap_flag) config.enumeration_cap = cap_flag;
    if (max_n_flag) config.max_dynatomic_n = max_n_flag;
    if (step_flag) config.step_budget = step_flag;
    if (jobs_flag) config.jobs = jobs_flag;
    ValidateConfig(config);
    SetJobs(config.jobs);
    if (!action) throw UsageError("no command given");
    Emit(action(), config.output_format, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dynw
