// perfcode: analyze finite groups for subgroup perfect codes.
//
//   perfcode analyze <spec> [--json|--csv] [--audit] [--cap N]
//   perfcode survey --max-order N [--filter solvable|nonsolvable] [--json]
//   perfcode verify [--include-stretch] [--json]
//
// Exit codes: 0 success; 1 verification failures; 2 invalid input
// (spec grammar, family parameters, action descriptors); 3 size cap
// exceeded; 4 internal error.  The PERFCODE_CAP environment variable
// overrides the construction and subgroup-enumeration caps; the --cap
// flag overrides both.

#include <csignal>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "perfcode/report.hpp"

namespace {

volatile std::sig_atomic_t g_interrupted = 0;

void on_sigint(int) { g_interrupted = 1; }

perfcode::Caps caps_from_env() {
  perfcode::Caps caps;
  if (const char* env = std::getenv("PERFCODE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (env[0] != '\0' && end && *end == '\0' && v > 0 && v <= 0xffffffffULL) {
      caps.group_order = static_cast<std::uint32_t>(v);
      caps.lattice_order = static_cast<std::uint32_t>(v);
    } else {
      std::cerr << "warning: ignoring malformed PERFCODE_CAP value '" << env << "'\n";
    }
  }
  return caps;
}

int run_analyze_cmd(const std::string& spec, bool json, bool csv, bool audit,
                    const perfcode::Caps& caps) {
  const perfcode::AnalysisRecord rec = perfcode::run_analyze(spec, caps, audit);
  if (json) {
    std::cout << perfcode::json_of(rec).dump(2) << "\n";
  } else if (csv) {
    std::cout << perfcode::kCsvHeader << "\n" << perfcode::csv_row(rec) << "\n";
  } else {
    std::cout << perfcode::analysis_table(rec);
  }
  return rec.checks_failed == 0 ? 0 : 1;
}

int run_survey_cmd(std::uint32_t max_order, const std::string& filter_name, bool json, bool csv,
                   const perfcode::Caps& caps) {
  perfcode::SurveyFilter filter = perfcode::SurveyFilter::all;
  if (filter_name == "solvable") filter = perfcode::SurveyFilter::solvable_only;
  if (filter_name == "nonsolvable") filter = perfcode::SurveyFilter::nonsolvable_only;

  // Stream rows as they are produced so an interrupt still leaves usable
  // output on stdout; JSON mode buffers records and emits one document.
  std::function<void(const perfcode::AnalysisRecord&)> on_record;
  if (csv) {
    std::cout << perfcode::kCsvHeader << "\n";
    on_record = [](const perfcode::AnalysisRecord& r) {
      std::cout << perfcode::csv_row(r) << "\n" << std::flush;
    };
  } else if (!json) {
    std::cout << perfcode::kSurveyRowHeader << "\n";
    on_record = [](const perfcode::AnalysisRecord& r) {
      std::cout << perfcode::survey_row(r) << "\n" << std::flush;
    };
  }
  const perfcode::SurveyResult result =
      perfcode::run_survey(max_order, filter, caps, /*audit=*/false, &g_interrupted, on_record);
  if (json) {
    std::cout << perfcode::json_of(result, max_order, filter).dump(2) << "\n";
  } else if (!csv) {
    std::cout << "\n" << perfcode::survey_summary_text(result);
  }
  if (result.summary.interrupted) return 130;
  return result.summary.checks_failed == 0 ? 0 : 1;
}

int run_verify_cmd(bool include_stretch, bool json, const perfcode::Caps& caps) {
  std::function<void(const std::string&, const perfcode::CheckResult&)> on_result;
  if (!json) {
    on_result = [](const std::string& label, const perfcode::CheckResult& r) {
      std::cout << (r.passed() ? "PASS" : "FAIL") << "  [" << label << "] " << r.check_name;
      if (!r.details.empty()) std::cout << " — " << r.details;
      if (!r.witness.empty()) std::cout << "\n      witness: " << r.witness;
      std::cout << "\n" << std::flush;
    };
  }
  const perfcode::VerifyResult result =
      perfcode::run_verify_theorems(include_stretch, caps, on_result);
  if (json) {
    std::cout << perfcode::json_of(result, include_stretch).dump(2) << "\n";
  } else {
    std::cout << (result.all_passed ? "all checks passed" : "SOME CHECKS FAILED") << " ("
              << result.results.size() << " results)\n";
  }
  return result.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group subgroup perfect-code analyzer"};
  app.require_subcommand(1);

  std::string spec;
  bool a_json = false, a_csv = false, a_audit = false;
  std::uint32_t cap_override = 0;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one group given by a spec string");
  analyze->add_option("spec", spec, "group spec, e.g. sl2:5, cyclic:12, perm:(1,2,3);(1,2)")
      ->required();
  analyze->add_flag("--json", a_json, "emit one JSON document");
  analyze->add_flag("--csv", a_csv, "emit a CSV header plus one row");
  analyze->add_flag("--audit", a_audit,
                    "re-derive each perfect-code class through the transversal and "
                    "Cayley-graph routes");
  analyze->add_option("--cap", cap_override, "override the construction and enumeration caps");

  std::uint32_t max_order = 0;
  std::string filter_name;
  bool s_json = false, s_csv = false;
  CLI::App* survey = app.add_subcommand("survey", "analyze every catalogue group up to a bound");
  survey->add_option("--max-order", max_order, "largest group order to include")->required();
  survey->add_option("--filter", filter_name, "restrict to solvable or nonsolvable groups")
      ->check(CLI::IsMember({"solvable", "nonsolvable"}));
  survey->add_flag("--json", s_json, "emit one JSON document");
  survey->add_flag("--csv", s_csv, "emit CSV rows");

  bool v_stretch = false, v_json = false;
  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_flag("--include-stretch", v_stretch,
                   "also compute the order-24288 double-cover class count");
  verify->add_flag("--json", v_json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help/--version
  }

  perfcode::Caps caps = caps_from_env();
  if (analyze->parsed() && cap_override > 0) {
    caps.group_order = cap_override;
    caps.lattice_order = cap_override;
  }

  std::signal(SIGINT, on_sigint);

  try {
    if (analyze->parsed()) return run_analyze_cmd(spec, a_json, a_csv, a_audit, caps);
    if (survey->parsed()) return run_survey_cmd(max_order, filter_name, s_json, s_csv, caps);
    return run_verify_cmd(v_stretch, v_json, caps);
  } catch (const perfcode::ParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const perfcode::InvalidParams& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const perfcode::InvalidAction& e) {
    std::cerr << "action error: " << e.what() << "\n";
    return 2;
  } catch (const perfcode::InvalidGenerator& e) {
    std::cerr << "generator error: " << e.what() << "\n";
    return 2;
  } catch (const perfcode::InvalidRange& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return 2;
  } catch (const perfcode::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
