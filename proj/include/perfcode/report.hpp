#pragma once

// Reporting layer: per-group analysis records, JSON/CSV/plain-table
// serialization, the catalogue survey, and the self-verification suite
// that the CLI and the test binaries share.

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "perfcode/catalog.hpp"
#include "perfcode/codes.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/group.hpp"
#include "perfcode/lattice.hpp"
#include "perfcode/shapes.hpp"
#include "perfcode/stretch.hpp"
#include "perfcode/theorems.hpp"

namespace perfcode {

inline constexpr const char* kReportSchemaVersion = "perfcode-report/1";

// ---------------------------------------------------------------------------
// Records.

struct DeltaClassRecord {
  std::uint32_t order = 1;
  std::uint64_t class_size = 1;
  std::string shape;
  std::vector<std::string> routes;

  bool operator==(const DeltaClassRecord&) const = default;
};

struct AnalysisRecord {
  std::string spec;  // canonical group-spec string when known
  std::string name;
  std::uint32_t order = 1;
  std::string factored_order;
  std::uint32_t pi = 0;
  bool solvable = true;
  std::string group_shape;
  std::string sylow2_shape;
  std::uint32_t o2_order = 1;
  std::uint32_t involution_classes = 0;
  std::uint32_t delta_count = 0;
  std::vector<DeltaClassRecord> delta_classes;
  std::vector<CheckResult> checks;
  std::uint32_t checks_failed = 0;
  // Derived classification flags, used by survey summaries.
  bool main_equality = false;      // |Δ| = |π|, outside the exceptional families
  bool solvable_equality = false;  // solvable with |Δ| = 2^|π| − 2
  bool empty_delta_family = false; // cyclic / generalized quaternion 2-group, |G| composite

  bool operator==(const AnalysisRecord&) const = default;
};

inline std::string factored_order_string(const PrimeSignature& sig) {
  if (sig.primes.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < sig.primes.size(); ++i) {
    if (i) out += "*";
    out += std::to_string(sig.primes[i]);
    if (sig.exponents[i] > 1) out += "^" + std::to_string(sig.exponents[i]);
  }
  return out;
}

// Builds the full record for one group: Δ report, structural shape data,
// and all five per-group theorem checkers.
inline AnalysisRecord make_record(const GroupTable& g, const Caps& caps = {}, bool audit = false) {
  const GroupAnalysis a = analyze_group(g, caps, audit);
  AnalysisRecord rec;
  rec.spec = g.source.empty() ? g.name : g.source;
  rec.name = g.name;
  rec.order = g.order;
  rec.factored_order = factored_order_string(a.sig);
  rec.pi = a.sig.pi_count();
  rec.solvable = a.solvable;
  rec.group_shape = a.group_shape.to_string();
  rec.sylow2_shape = a.sylow2_shape.to_string();
  rec.o2_order = a.o2_order;
  rec.involution_classes = a.involution_classes;
  rec.delta_count = a.delta_report.delta_count;
  for (const DeltaClassEntry& e : a.delta_report.delta_classes) {
    DeltaClassRecord cr;
    cr.order = e.representative.order();
    cr.class_size = e.class_size;
    cr.shape = recognize_shape(subgroup_table(g, e.representative)).to_string();
    cr.routes = e.routes;
    rec.delta_classes.push_back(std::move(cr));
  }
  rec.checks.push_back(check_empty_delta(g, a, caps));
  rec.checks.push_back(check_main_theorem(g, a, caps));
  rec.checks.push_back(check_pi_plus_one(g, a, caps));
  rec.checks.push_back(check_solvable_bound(g, a, caps));
  rec.checks.push_back(check_small_delta(g, a, caps));
  for (const CheckResult& c : rec.checks)
    if (!c.passed()) ++rec.checks_failed;

  const bool two_group = a.sig.primes.size() == 1 && a.sig.primes[0] == 2;
  const bool prime_order = a.sig.pi_count() == 1 && a.sig.exponents[0] == 1;
  const bool exceptional =
      prime_order || (two_group && (a.group_shape.is_cyclic() ||
                                    a.group_shape.is_generalized_quaternion()));
  rec.main_equality = g.order > 1 && !exceptional && rec.delta_count == rec.pi;
  rec.solvable_equality =
      a.solvable && g.order > 1 &&
      std::int64_t(rec.delta_count) == (std::int64_t(1) << rec.pi) - 2;
  rec.empty_delta_family = two_group && g.order > 2 &&
                           (a.group_shape.is_cyclic() || a.group_shape.is_generalized_quaternion());
  return rec;
}

// ---------------------------------------------------------------------------
// JSON serialization (schema kReportSchemaVersion).

inline nlohmann::json json_of(const CheckResult& c) {
  return nlohmann::json{{"name", c.check_name},
                        {"status", c.status_string()},
                        {"witness", c.witness},
                        {"details", c.details}};
}

inline CheckResult check_of_json(const nlohmann::json& j) {
  CheckResult c;
  c.check_name = j.at("name").get<std::string>();
  const std::string s = j.at("status").get<std::string>();
  c.status = s == "pass"   ? CheckStatus::pass
             : s == "fail" ? CheckStatus::fail
                           : CheckStatus::not_applicable;
  c.witness = j.at("witness").get<std::string>();
  c.details = j.at("details").get<std::string>();
  return c;
}

inline nlohmann::json json_of(const AnalysisRecord& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const DeltaClassRecord& c : r.delta_classes) {
    classes.push_back(nlohmann::json{{"order", c.order},
                                     {"class_size", c.class_size},
                                     {"shape", c.shape},
                                     {"routes", c.routes}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) checks.push_back(json_of(c));
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"kind", "analysis"},
                        {"spec", r.spec},
                        {"name", r.name},
                        {"order", r.order},
                        {"factored_order", r.factored_order},
                        {"pi", r.pi},
                        {"solvable", r.solvable},
                        {"group_shape", r.group_shape},
                        {"sylow2_shape", r.sylow2_shape},
                        {"o2_order", r.o2_order},
                        {"involution_classes", r.involution_classes},
                        {"delta_count", r.delta_count},
                        {"delta_classes", classes},
                        {"checks", checks},
                        {"checks_failed", r.checks_failed},
                        {"main_equality", r.main_equality},
                        {"solvable_equality", r.solvable_equality},
                        {"empty_delta_family", r.empty_delta_family}};
}

inline AnalysisRecord record_of_json(const nlohmann::json& j) {
  AnalysisRecord r;
  r.spec = j.at("spec").get<std::string>();
  r.name = j.at("name").get<std::string>();
  r.order = j.at("order").get<std::uint32_t>();
  r.factored_order = j.at("factored_order").get<std::string>();
  r.pi = j.at("pi").get<std::uint32_t>();
  r.solvable = j.at("solvable").get<bool>();
  r.group_shape = j.at("group_shape").get<std::string>();
  r.sylow2_shape = j.at("sylow2_shape").get<std::string>();
  r.o2_order = j.at("o2_order").get<std::uint32_t>();
  r.involution_classes = j.at("involution_classes").get<std::uint32_t>();
  r.delta_count = j.at("delta_count").get<std::uint32_t>();
  for (const auto& cj : j.at("delta_classes")) {
    DeltaClassRecord c;
    c.order = cj.at("order").get<std::uint32_t>();
    c.class_size = cj.at("class_size").get<std::uint64_t>();
    c.shape = cj.at("shape").get<std::string>();
    c.routes = cj.at("routes").get<std::vector<std::string>>();
    r.delta_classes.push_back(std::move(c));
  }
  for (const auto& cj : j.at("checks")) r.checks.push_back(check_of_json(cj));
  r.checks_failed = j.at("checks_failed").get<std::uint32_t>();
  r.main_equality = j.at("main_equality").get<bool>();
  r.solvable_equality = j.at("solvable_equality").get<bool>();
  r.empty_delta_family = j.at("empty_delta_family").get<bool>();
  return r;
}

// ---------------------------------------------------------------------------
// CSV serialization.

inline constexpr const char* kCsvHeader =
    "spec,order,pi,solvable,sylow2_shape,o2_order,delta_count,checks_failed";

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';  // double embedded quotes per RFC 4180
    out += ch;
  }
  out += "\"";
  return out;
}

inline std::string csv_row(const AnalysisRecord& r) {
  std::string out = csv_quote(r.spec);
  out += "," + std::to_string(r.order);
  out += "," + std::to_string(r.pi);
  out += r.solvable ? ",true" : ",false";
  out += "," + r.sylow2_shape;
  out += "," + std::to_string(r.o2_order);
  out += "," + std::to_string(r.delta_count);
  out += "," + std::to_string(r.checks_failed);
  return out;
}

// ---------------------------------------------------------------------------
// Plain-text rendering.

inline std::string analysis_table(const AnalysisRecord& r) {
  std::ostringstream os;
  os << "group             : " << r.name;
  if (!r.spec.empty() && r.spec != r.name) os << "   (spec " << r.spec << ")";
  os << "\n";
  os << "order             : " << r.order << " = " << r.factored_order << "   pi = " << r.pi
     << "\n";
  os << "solvable          : " << (r.solvable ? "yes" : "no") << "\n";
  os << "group shape       : " << r.group_shape << "\n";
  os << "sylow-2 shape     : " << r.sylow2_shape << "   O2 order " << r.o2_order
     << "   involution classes " << r.involution_classes << "\n";
  os << "delta count       : " << r.delta_count;
  if (r.empty_delta_family) os << "   (empty-delta family: cyclic/quaternion 2-group)";
  if (r.main_equality) os << "   (equality |delta| = |pi|)";
  os << "\n";
  for (std::size_t i = 0; i < r.delta_classes.size(); ++i) {
    const DeltaClassRecord& c = r.delta_classes[i];
    os << "  class " << (i + 1) << ": order " << c.order << ", " << c.class_size
       << " conjugate(s), shape " << c.shape << ", evidence";
    for (const std::string& route : c.routes) os << " " << route;
    os << "\n";
  }
  os << "checks            :";
  for (const CheckResult& c : r.checks) os << " " << c.check_name << "=" << c.status_string();
  os << "  (" << r.checks_failed << " failed)\n";
  for (const CheckResult& c : r.checks) {
    if (!c.passed()) os << "  FAILED " << c.check_name << ": " << c.witness << "\n";
  }
  return os.str();
}

inline std::string survey_row(const AnalysisRecord& r) {
  std::ostringstream os;
  os << r.order << "\t" << r.pi << "\t" << (r.solvable ? "yes" : "no") << "\t" << r.delta_count
     << "\t" << r.checks_failed << "\t" << r.spec;
  return os.str();
}

inline constexpr const char* kSurveyRowHeader = "order\tpi\tsolvable\tdelta\tfailed\tspec";

// ---------------------------------------------------------------------------
// Drivers.

inline AnalysisRecord run_analyze(const std::string& spec_text, const Caps& caps = {},
                                  bool audit = false) {
  const GroupTable g = build(spec_text, caps);
  return make_record(g, caps, audit);
}

enum class SurveyFilter { all, solvable_only, nonsolvable_only };

inline std::string to_string(SurveyFilter f) {
  switch (f) {
    case SurveyFilter::solvable_only:
      return "solvable";
    case SurveyFilter::nonsolvable_only:
      return "nonsolvable";
    case SurveyFilter::all:
      break;
  }
  return "all";
}

struct SurveySummary {
  std::uint32_t group_count = 0;
  std::uint32_t main_equality_count = 0;
  std::uint32_t solvable_equality_count = 0;
  std::uint32_t empty_delta_count = 0;
  std::uint32_t checks_failed = 0;
  bool interrupted = false;
  std::vector<std::string> failures;  // "spec: check: witness"
};

struct SurveyResult {
  std::vector<AnalysisRecord> records;  // ordered by (order, spec)
  SurveySummary summary;
};

// Analyzes the default catalogue up to max_order.  `on_record` (when set)
// sees each record as soon as it is computed, enabling streamed output;
// `stop` (when set) is polled between groups so an interrupt still yields
// a well-formed partial report.
inline SurveyResult run_survey(std::uint32_t max_order, SurveyFilter filter = SurveyFilter::all,
                               const Caps& caps = {}, bool audit = false,
                               const volatile std::sig_atomic_t* stop = nullptr,
                               const std::function<void(const AnalysisRecord&)>& on_record = {}) {
  if (max_order > caps.lattice_order) {
    throw CapExceeded("survey max order " + std::to_string(max_order) +
                      " exceeds the subgroup-enumeration cap of " +
                      std::to_string(caps.lattice_order));
  }
  SurveyResult out;
  for (const CatalogEntry& entry : default_catalogue()) {
    if (entry.order > max_order) continue;
    if (stop && *stop) {
      out.summary.interrupted = true;
      break;
    }
    const GroupTable g = build(entry.spec, caps);
    AnalysisRecord rec = make_record(g, caps, audit);
    if (filter == SurveyFilter::solvable_only && !rec.solvable) continue;
    if (filter == SurveyFilter::nonsolvable_only && rec.solvable) continue;
    if (on_record) on_record(rec);
    out.summary.group_count += 1;
    out.summary.main_equality_count += rec.main_equality ? 1 : 0;
    out.summary.solvable_equality_count += rec.solvable_equality ? 1 : 0;
    out.summary.empty_delta_count += rec.empty_delta_family ? 1 : 0;
    out.summary.checks_failed += rec.checks_failed;
    for (const CheckResult& c : rec.checks) {
      if (!c.passed())
        out.summary.failures.push_back(rec.spec + ": " + c.check_name + ": " + c.witness);
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

inline nlohmann::json json_of(const SurveyResult& s, std::uint32_t max_order, SurveyFilter filter) {
  nlohmann::json records = nlohmann::json::array();
  for (const AnalysisRecord& r : s.records) records.push_back(json_of(r));
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"kind", "survey"},
                        {"max_order", max_order},
                        {"filter", to_string(filter)},
                        {"records", records},
                        {"summary",
                         nlohmann::json{{"group_count", s.summary.group_count},
                                        {"main_equality_count", s.summary.main_equality_count},
                                        {"solvable_equality_count",
                                         s.summary.solvable_equality_count},
                                        {"empty_delta_count", s.summary.empty_delta_count},
                                        {"checks_failed", s.summary.checks_failed},
                                        {"interrupted", s.summary.interrupted},
                                        {"failures", s.summary.failures}}}};
}

inline std::string survey_summary_text(const SurveyResult& s) {
  std::ostringstream os;
  os << "groups analyzed        : " << s.summary.group_count << "\n";
  os << "|delta| = |pi| equality: " << s.summary.main_equality_count << "\n";
  os << "solvable bound equality: " << s.summary.solvable_equality_count << "\n";
  os << "empty-delta 2-groups   : " << s.summary.empty_delta_count << "\n";
  os << "checker failures       : " << s.summary.checks_failed << "\n";
  if (s.summary.interrupted) os << "NOTE: survey interrupted; partial results above\n";
  for (const std::string& f : s.summary.failures) os << "  FAILED " << f << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Verification suite: the named criteria that gate the build, each
// producing one or more CheckResults.  The survey over the catalogue is
// computed once and shared.

struct VerifyContext {
  Caps caps;
  bool audit = false;

 private:
  std::shared_ptr<SurveyResult> survey200_;

 public:
  explicit VerifyContext(const Caps& c = {}) : caps(c) {}

  const SurveyResult& survey200() {
    if (!survey200_) {
      survey200_ = std::make_shared<SurveyResult>(
          run_survey(200, SurveyFilter::all, caps, /*audit=*/false));
    }
    return *survey200_;
  }
};

namespace report_detail {

inline CheckResult expect_eq_u64(const std::string& name, std::uint64_t actual,
                                 std::uint64_t expected, const std::string& context) {
  if (actual == expected)
    return check_pass(name, context + ": " + std::to_string(actual));
  return check_fail(name,
                    context + ": got " + std::to_string(actual) + ", expected " +
                        std::to_string(expected),
                    context);
}

inline const AnalysisRecord* find_record(const SurveyResult& s, const std::string& spec) {
  for (const AnalysisRecord& r : s.records)
    if (r.spec == spec) return &r;
  return nullptr;
}

}  // namespace report_detail

// Criterion 1: the alternating group on 5 letters has exactly 7 classes.
inline std::vector<CheckResult> criterion_a5(VerifyContext& ctx) {
  const GroupTable g = build("perm:(1,2,3,4,5);(1,2,3)", ctx.caps);
  const DeltaReport rep = delta(g, ctx.caps);
  return {report_detail::expect_eq_u64("a5-delta-count", rep.delta_count, 7, "delta classes of A5")};
}

// Criterion 2: SL(2,5) has 4 classes, of orders {3, 5, 8, 24} with the
// order-8 class generalized quaternion.
inline std::vector<CheckResult> criterion_sl25(VerifyContext& ctx) {
  std::vector<CheckResult> out;
  const GroupTable g = build("sl2:5", ctx.caps);
  const DeltaReport rep = delta(g, ctx.caps);
  out.push_back(report_detail::expect_eq_u64("sl25-delta-count", rep.delta_count, 4,
                                             "delta classes of SL(2,5)"));
  std::vector<std::uint32_t> orders;
  for (const DeltaClassEntry& e : rep.delta_classes) orders.push_back(e.representative.order());
  std::sort(orders.begin(), orders.end());
  const std::vector<std::uint32_t> expected{3, 5, 8, 24};
  if (orders != expected) {
    std::string got;
    for (const auto o : orders) got += std::to_string(o) + " ";
    out.push_back(check_fail("sl25-class-orders", "class orders {" + got + "} differ from {3 5 8 24}",
                             "SL(2,5) delta class orders"));
  } else {
    out.push_back(check_pass("sl25-class-orders", "class orders 3, 5, 8, 24"));
    for (const DeltaClassEntry& e : rep.delta_classes) {
      if (e.representative.order() != 8) continue;
      const ShapeTag tag = recognize_shape(subgroup_table(g, e.representative));
      if (tag.is_generalized_quaternion())
        out.push_back(check_pass("sl25-sylow2-class", "order-8 class is " + tag.to_string()));
      else
        out.push_back(check_fail("sl25-sylow2-class", "order-8 class is " + tag.to_string(),
                                 "expected generalized_quaternion(8)"));
    }
  }
  return out;
}

// Criterion 3: cyclic prime-power ladders have |Δ(Z_{p^n})| = n − 1.
inline std::vector<CheckResult> criterion_prime_power_ladder(VerifyContext& ctx) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges{{3, 5}, {5, 3}, {7, 3}};
  for (const auto& [p, n_max] : ranges) {
    std::uint64_t power = 1;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      power *= p;
      const GroupTable g = build("cyclic:" + std::to_string(power), ctx.caps);
      const DeltaReport rep = delta(g, ctx.caps);
      out.push_back(report_detail::expect_eq_u64(
          "prime-power-ladder-" + std::to_string(p) + "-" + std::to_string(n), rep.delta_count,
          n - 1, "delta of cyclic group of order " + std::to_string(power)));
    }
  }
  return out;
}

// Criterion 4: every equality-table row instance has |Δ| = |π| and is
// recognized as its row.
inline std::vector<CheckResult> criterion_equality_rows(VerifyContext& ctx) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::string, std::string>> rows{
      {"cyclic:9", "Z_{p^2}"},
      {"cyclic:25", "Z_{p^2}"},
      {"cyclic:49", "Z_{p^2}"},
      {"semidirect:cyclic:7:cyclic:3:exp=2", "Z_q:Z_p"},
      {"semidirect:cyclic:11:cyclic:5:exp=3", "Z_q:Z_p"},
      {"cyclic:12", "Z_p:Z_{2^n}"},
      {"semidirect:cyclic:5:cyclic:8:exp=2", "Z_p:Z_{2^n}"},
      {"product:cyclic:5*cyclic:8", "Z_p:Z_{2^n}"},
      {"product:cyclic:3*quaternion:8", "Z_p:Q_{2^n}"},
      {"semidirect:cyclic:5:quaternion:8:exp=4", "Z_p:Q_{2^n}"},
      {"sl2:3", "Q_8:Z_3"},
      {"binary_octahedral", "SL(2,3).Z_2"},
  };
  for (const auto& [spec, row] : rows) {
    const GroupTable g = build(spec, ctx.caps);
    const GroupAnalysis a = analyze_group(g, ctx.caps);
    const std::string name = "equality-row(" + spec + ")";
    if (a.delta_report.delta_count != a.sig.pi_count()) {
      out.push_back(check_fail(name,
                               "delta " + std::to_string(a.delta_report.delta_count) +
                                   " != pi " + std::to_string(a.sig.pi_count()),
                               "equality instance " + spec));
      continue;
    }
    const std::string matched = detail::equality_row_match(g, a, ctx.caps);
    if (matched == row)
      out.push_back(check_pass(name, "delta = pi = " + std::to_string(a.sig.pi_count()) +
                                         ", row " + row));
    else
      out.push_back(check_fail(name, "matched row '" + matched + "', expected '" + row + "'",
                               "equality instance " + spec));
  }
  return out;
}

// Criterion 5: among composite-order catalogue groups up to 200, Δ = ∅
// exactly for the cyclic and generalized quaternion 2-groups.
inline std::vector<CheckResult> criterion_empty_delta_inventory(VerifyContext& ctx) {
  const SurveyResult& s = ctx.survey200();
  std::set<std::string> empty_specs;
  std::vector<std::string> wrong;
  for (const AnalysisRecord& r : s.records) {
    const auto sig = prime_signature_of(r.order);
    const bool composite = r.order > 1 && !(sig.pi_count() == 1 && sig.exponents[0] == 1);
    if (!composite) continue;
    if ((r.delta_count == 0) != r.empty_delta_family)
      wrong.push_back(r.spec + " delta=" + std::to_string(r.delta_count) +
                      (r.empty_delta_family ? " but in" : " but not in") + " the empty family");
    if (r.delta_count == 0) empty_specs.insert(r.spec);
  }
  if (!wrong.empty())
    return {check_fail("empty-delta-inventory", wrong.front(),
                       std::to_string(wrong.size()) + " empty-delta mismatches")};
  // The eight smallest instances, plus the remaining cyclic/quaternion
  // 2-groups that the catalogue holds below 200.
  const std::set<std::string> expected{"cyclic:4",      "cyclic:8",      "cyclic:16",
                                       "cyclic:32",     "cyclic:64",     "cyclic:128",
                                       "quaternion:8",  "quaternion:16", "quaternion:32",
                                       "quaternion:64", "quaternion:128"};
  if (empty_specs != expected) {
    std::string diff;
    for (const auto& e : empty_specs)
      if (!expected.count(e)) diff += "+" + e + " ";
    for (const auto& e : expected)
      if (!empty_specs.count(e)) diff += "-" + e + " ";
    return {check_fail("empty-delta-inventory", "set difference: " + diff,
                       "empty-delta specs differ from the classification")};
  }
  return {check_pass("empty-delta-inventory",
                     "delta = 0 exactly for the 11 cyclic/quaternion 2-groups <= 200 "
                     "(Z_4..Z_128, Q_8..Q_128)")};
}

// Criterion 6: the lower-bound theorem holds across the catalogue.
inline std::vector<CheckResult> criterion_main_sweep(VerifyContext& ctx) {
  const SurveyResult& s = ctx.survey200();
  std::uint32_t failures = 0;
  std::string first;
  for (const AnalysisRecord& r : s.records) {
    for (const CheckResult& c : r.checks) {
      if (c.check_name == "main-theorem" && !c.passed()) {
        ++failures;
        if (first.empty()) first = r.spec + ": " + c.witness;
      }
    }
  }
  if (failures)
    return {check_fail("main-theorem-sweep", first, std::to_string(failures) + " failures")};
  return {check_pass("main-theorem-sweep", "all " + std::to_string(s.summary.group_count) +
                                               " catalogue groups <= 200 pass")};
}

// Criterion 7: the solvable lower bound 2^|π| − 2, with its equality cases.
inline std::vector<CheckResult> criterion_solvable_bound(VerifyContext& ctx) {
  std::vector<CheckResult> out;
  const SurveyResult& s = ctx.survey200();
  const AnalysisRecord* z30 = report_detail::find_record(s, "cyclic:30");
  if (!z30)
    out.push_back(check_fail("z30-equality", "cyclic:30 missing from catalogue", ""));
  else if (z30->delta_count != 6 || !z30->solvable_equality)
    out.push_back(check_fail("z30-equality",
                             "delta " + std::to_string(z30->delta_count) + ", equality flag " +
                                 (z30->solvable_equality ? "set" : "unset"),
                             "expected delta 6 = 2^3 - 2 with equality"));
  else
    out.push_back(check_pass("z30-equality", "delta(Z_30) = 6 = 2^3 - 2, equality conditions hold"));

  const GroupTable a4 = build("perm:(1,2,3);(2,3,4)", ctx.caps);
  const AnalysisRecord a4rec = make_record(a4, ctx.caps);
  if (a4rec.delta_count != 3 || a4rec.solvable_equality)
    out.push_back(check_fail("a4-strict",
                             "delta " + std::to_string(a4rec.delta_count) + ", equality flag " +
                                 (a4rec.solvable_equality ? "set" : "unset"),
                             "expected delta 3 > 2 = 2^2 - 2, equality absent"));
  else
    out.push_back(check_pass("a4-strict", "delta(A_4) = 3 > 2 = 2^2 - 2, strict"));

  std::uint32_t failures = 0;
  std::string first;
  for (const AnalysisRecord& r : s.records) {
    if (!r.solvable) continue;
    for (const CheckResult& c : r.checks) {
      if (c.check_name == "solvable-bound" && !c.passed()) {
        ++failures;
        if (first.empty()) first = r.spec + ": " + c.witness;
      }
    }
  }
  if (failures)
    out.push_back(
        check_fail("solvable-bound-sweep", first, std::to_string(failures) + " failures"));
  else
    out.push_back(check_pass("solvable-bound-sweep", "all solvable catalogue groups <= 200 pass"));
  return out;
}

// Criterion 8: the |Δ| = |π| + 1 classification on its three witnesses.
inline std::vector<CheckResult> criterion_pi_plus_one(VerifyContext& ctx) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::string, std::string>> instances{
      {"cyclic:27", "cyclic Z_{p^3}"},
      {"perm:(1,2,3);(2,3,4)", "elementary 2-core with cyclic odd quotient"},
      {"sl2:5", "quaternion Sylow over cyclic 2-core with simple quotient"},
  };
  for (const auto& [spec, what] : instances) {
    const GroupTable g = build(spec, ctx.caps);
    const CheckResult c = check_pi_plus_one(g, ctx.caps);
    const std::string name = "pi-plus-one(" + spec + ")";
    if (c.status == CheckStatus::pass)
      out.push_back(check_pass(name, what + ": " + c.details));
    else
      out.push_back(check_fail(name,
                               c.status == CheckStatus::fail ? c.witness
                                                             : "checker not applicable: " + c.details,
                               what));
  }
  return out;
}

// Criterion 9: |Δ| ≤ 3 forces solvable with |π| ≤ 2 across the catalogue.
inline std::vector<CheckResult> criterion_small_delta_solvable(VerifyContext& ctx) {
  const SurveyResult& s = ctx.survey200();
  for (const AnalysisRecord& r : s.records) {
    if (r.order <= 1 || r.delta_count > 3) continue;
    if (!r.solvable || r.pi > 2)
      return {check_fail("small-delta-solvable",
                         r.spec + ": delta " + std::to_string(r.delta_count) + " with " +
                             (r.solvable ? "solvable" : "non-solvable") + " group, pi " +
                             std::to_string(r.pi),
                         "small delta must force solvable with pi <= 2")};
  }
  return {check_pass("small-delta-solvable", "every catalogue group with delta <= 3 is solvable "
                                             "with at most two prime divisors")};
}

// Criterion 10: maximal subgroup tables of the two smallest simple
// projective groups.
inline std::vector<CheckResult> criterion_maximal_tables(VerifyContext& ctx) {
  std::vector<CheckResult> out;
  {
    const GroupTable g = build("psl2:5", ctx.caps);
    const SubgroupClassSet maxes = maximal_subgroups(g, ctx.caps);
    std::vector<std::uint32_t> orders;
    for (const auto& cls : maxes.classes) orders.push_back(cls.representative.order());
    std::sort(orders.begin(), orders.end());
    if (orders != std::vector<std::uint32_t>{6, 10, 12}) {
      std::string got;
      for (const auto o : orders) got += std::to_string(o) + " ";
      out.push_back(check_fail("psl25-maximals", "maximal orders {" + got + "}",
                               "expected {6, 10, 12}"));
    } else {
      bool shapes_ok = true;
      std::string why;
      const GroupTable a4 = build("perm:(1,2,3);(2,3,4)", ctx.caps);
      for (const auto& cls : maxes.classes) {
        const GroupTable sub = subgroup_table(g, cls.representative);
        const ShapeTag tag = recognize_shape(sub);
        if (cls.representative.order() == 6 && !(tag.is_dihedral() && tag.order == 6)) {
          shapes_ok = false;
          why = "order-6 maximal is " + tag.to_string() + ", expected dihedral(6)";
        }
        if (cls.representative.order() == 10 && !(tag.is_dihedral() && tag.order == 10)) {
          shapes_ok = false;
          why = "order-10 maximal is " + tag.to_string() + ", expected dihedral(10)";
        }
        if (cls.representative.order() == 12) {
          const IsoVerdict v = bounded_isomorphic(sub, a4);
          if (!v.isomorphic) {
            shapes_ok = false;
            why = "order-12 maximal is not the alternating group on 4 letters";
          }
        }
      }
      if (shapes_ok)
        out.push_back(check_pass("psl25-maximals", "maximal classes are S_3, D_10, A_4"));
      else
        out.push_back(check_fail("psl25-maximals", why, "maximal shape mismatch"));
    }
  }
  {
    const GroupTable g = build("psl2:7", ctx.caps);
    const SubgroupClassSet maxes = maximal_subgroups(g, ctx.caps);
    std::vector<std::uint32_t> orders;
    for (const auto& cls : maxes.classes) orders.push_back(cls.representative.order());
    std::sort(orders.begin(), orders.end());
    if (orders != std::vector<std::uint32_t>{21, 24, 24}) {
      std::string got;
      for (const auto o : orders) got += std::to_string(o) + " ";
      out.push_back(check_fail("psl27-maximals", "maximal orders {" + got + "}",
                               "expected {21, 24, 24}"));
    } else {
      out.push_back(check_pass("psl27-maximals", "maximal class orders are 21, 24, 24"));
    }
  }
  return out;
}

// Criterion 11: across all catalogue groups up to 120, the three
// membership routes agree on every subgroup, and every found transversal
// verifies inside its Cayley graph.
inline std::vector<CheckResult> criterion_route_agreement(VerifyContext& ctx) {
  std::uint64_t subgroups_checked = 0, codes_found = 0;
  for (const CatalogEntry& entry : default_catalogue()) {
    if (entry.order > 120) continue;
    const GroupTable g = build(entry.spec, ctx.caps);
    for (const Subgroup& h : all_subgroups(g, ctx.caps)) {
      ++subgroups_checked;
      const bool via_criterion = is_perfect_code_criterion(g, h);
      const bool via_sylow = is_perfect_code_sylow_reduction(g, h);
      const auto transversal = find_inverse_closed_transversal(g, h, ctx.caps);
      if (via_criterion != via_sylow || via_criterion != transversal.has_value()) {
        return {check_fail("evidence-route-agreement",
                           entry.spec + ": subgroup of order " + std::to_string(h.order()) +
                               ": criterion=" + (via_criterion ? "yes" : "no") +
                               " sylow=" + (via_sylow ? "yes" : "no") +
                               " transversal=" + (transversal ? "yes" : "no"),
                           "route disagreement")};
      }
      if (transversal) {
        ++codes_found;
        if (!verify_in_cayley(g, h, *transversal)) {
          return {check_fail("evidence-route-agreement",
                             entry.spec + ": transversal for subgroup of order " +
                                 std::to_string(h.order()) + " fails the Cayley-graph check",
                             "invalid transversal")};
        }
      }
    }
  }
  return {check_pass("evidence-route-agreement",
                     std::to_string(subgroups_checked) + " subgroups checked, " +
                         std::to_string(codes_found) + " perfect codes cross-verified")};
}

// Criterion 12: the arithmetic scans and the quaternion normal-structure
// observation.
inline std::vector<CheckResult> criterion_scans(VerifyContext& ctx) {
  const auto rows = lemma_scans(60, 1000000);
  std::vector<CheckResult> out(rows.begin(), rows.end());
  out.push_back(check_observation_quaternion(6, ctx.caps));
  return out;
}

// Criterion 13: a record of what stays beyond desk scale, and why.
inline std::vector<CheckResult> criterion_exclusions(VerifyContext&) {
  return {check_pass(
      "desk-scale-exclusions",
      "excluded from the default suite: SL(2,257) (order 17374560, expected delta 5) and "
      "every group with a Suzuki Sz(8) socle section (order >= 29120) exceed the caps; the "
      "double cover 2.PGL(2,23) (order 24288, expected delta 6) runs only behind "
      "--include-stretch via the odd-order/odd-index restriction")};
}

// Optional stretch computation: Δ(2.PGL(2,23)) = 6.
inline std::vector<CheckResult> criterion_stretch(VerifyContext&) {
  const StretchReport rep = stretch_delta();
  std::ostringstream os;
  os << rep.group_name << " order " << rep.group_order << ", pi " << rep.pi_count << ";";
  for (const StretchClass& c : rep.classes)
    os << " [" << c.shape << " order " << c.order << " x" << c.class_size << " via " << c.route
       << "]";
  std::vector<CheckResult> out;
  if (rep.group_order != 24288 || rep.pi_count != 4)
    out.push_back(check_fail("double-cover-structure",
                             "order " + std::to_string(rep.group_order) + ", pi " +
                                 std::to_string(rep.pi_count),
                             "expected order 24288 with 4 prime divisors"));
  else
    out.push_back(check_pass("double-cover-structure", "order 24288 = 2^5*3*11*23"));
  out.push_back(
      report_detail::expect_eq_u64("double-cover-delta", rep.delta_count, 6, os.str()));
  return out;
}

struct NamedCriterion {
  std::string label;
  std::function<std::vector<CheckResult>(VerifyContext&)> run;
};

// The default verification suite, in execution order.  The catalogue
// survey is built by the first criterion that needs it (the main-theorem
// sweep), so it is listed before the other survey consumers.
inline std::vector<NamedCriterion> verification_criteria() {
  return {
      {"criterion 1: delta(A5) = 7", criterion_a5},
      {"criterion 2: delta(SL(2,5)) = 4 with classes {3,5,8,24}", criterion_sl25},
      {"criterion 3: delta(Z_{p^n}) = n-1 ladders", criterion_prime_power_ladder},
      {"criterion 4: equality-table rows", criterion_equality_rows},
      {"criterion 6: lower-bound sweep over the catalogue", criterion_main_sweep},
      {"criterion 5: empty-delta inventory", criterion_empty_delta_inventory},
      {"criterion 7: solvable bound 2^pi - 2", criterion_solvable_bound},
      {"criterion 8: pi-plus-one instances", criterion_pi_plus_one},
      {"criterion 9: small delta forces solvable", criterion_small_delta_solvable},
      {"criterion 10: maximal subgroup tables", criterion_maximal_tables},
      {"criterion 11: evidence-route agreement <= 120", criterion_route_agreement},
      {"criterion 12: arithmetic scans and quaternion observation", criterion_scans},
      {"criterion 13: desk-scale exclusions", criterion_exclusions},
  };
}

struct VerifyResult {
  std::vector<CheckResult> results;
  bool all_passed = true;
  bool stretch_run = false;
};

// Runs the verification suite; `on_result` (when set) streams each
// CheckResult as it is produced.
inline VerifyResult run_verify_theorems(
    bool include_stretch = false, const Caps& caps = {},
    const std::function<void(const std::string&, const CheckResult&)>& on_result = {}) {
  VerifyContext ctx(caps);
  VerifyResult out;
  auto run_one = [&](const NamedCriterion& c) {
    for (CheckResult& r : c.run(ctx)) {
      if (!r.passed()) out.all_passed = false;
      if (on_result) on_result(c.label, r);
      out.results.push_back(std::move(r));
    }
  };
  for (const NamedCriterion& c : verification_criteria()) run_one(c);
  if (include_stretch) {
    out.stretch_run = true;
    run_one(NamedCriterion{"stretch: delta(2.PGL(2,23)) = 6", criterion_stretch});
  }
  return out;
}

inline nlohmann::json json_of(const VerifyResult& v, bool include_stretch) {
  nlohmann::json results = nlohmann::json::array();
  for (const CheckResult& c : v.results) results.push_back(json_of(c));
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"kind", "verify"},
                        {"include_stretch", include_stretch},
                        {"results", results},
                        {"all_passed", v.all_passed}};
}

}  // namespace perfcode
