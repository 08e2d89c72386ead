#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ltl2dra/errors.hh"
#include "ltl2dra/oracle.hh"
#include "ltl2dra/parser.hh"
#include "ltl2dra/pipeline.hh"

using namespace ltl2dra;

namespace {

int translate_one(const std::string& text, const PipelineOptions& opts,
                  OutputFormat format, const std::string& check) {
  PipelineResult result = run_pipeline(text, opts);
  std::cout << format_output(result, format);
  if (!check.empty()) {
    auto comma = check.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--check expects <maxPrefix>,<maxPeriod>");
    int max_prefix = std::stoi(check.substr(0, comma));
    int max_period = std::stoi(check.substr(comma + 1));
    EquivalenceReport report =
        cross_check(result.original, max_prefix, max_period);
    if (!report.ok()) {
      std::cerr << "self-check failed on " << report.mismatches.size()
                << " of " << report.lassos_checked << " lasso words:\n"
                << report.to_tsv();
      return 4;
    }
    std::cerr << "self-check passed on " << report.lassos_checked
              << " lasso words\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL to deterministic Rabin automata translator"};

  std::string formula;
  std::string stage_name = "dra";
  std::string format_name = "hoa";
  std::string check;
  bool no_simplify_formula = false, no_simplify_vwaa = false;
  bool no_simplify_acceptance = false, no_simplify_states = false;
  size_t cap_states = 1u << 20;

  app.add_option("-f,--formula", formula,
                 "formula to translate; omit to read one per line from stdin");
  app.add_option("--stage", stage_name, "stop after this stage")
      ->check(CLI::IsMember({"vwaa", "tgdra", "dra"}));
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"hoa", "dstar", "dot", "stats"}));
  app.add_flag("--no-simplify-formula", no_simplify_formula,
               "skip formula rewriting");
  app.add_flag("--no-simplify-vwaa", no_simplify_vwaa,
               "skip alternating-automaton simplification");
  app.add_flag("--no-simplify-acceptance", no_simplify_acceptance,
               "skip Rabin pair simplification");
  app.add_flag("--no-simplify-states", no_simplify_states,
               "skip state merging");
  app.add_option("--check", check,
                 "<maxPrefix>,<maxPeriod>: compare all stages against the "
                 "formula on every lasso word within the bounds");
  app.add_option("--cap-states", cap_states, "abort above this state count");

  CLI11_PARSE(app, argc, argv);

  PipelineOptions opts;
  opts.simplify_formula = !no_simplify_formula;
  opts.simplify_vwaa = !no_simplify_vwaa;
  opts.simplify_acceptance = !no_simplify_acceptance;
  opts.simplify_states = !no_simplify_states;
  opts.cap_states = cap_states;
  opts.stage = stage_name == "vwaa"    ? Stage::Vwaa
               : stage_name == "tgdra" ? Stage::Tgdra
                                       : Stage::Dra;
  OutputFormat format = format_name == "dstar"  ? OutputFormat::Dstar
                        : format_name == "dot"  ? OutputFormat::Dot
                        : format_name == "stats" ? OutputFormat::Stats
                                                 : OutputFormat::Hoa;

  try {
    if (!formula.empty()) return translate_one(formula, opts, format, check);
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (int rc = translate_one(line, opts, format, check); rc != 0)
        return rc;
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": "
              << e.what() << "\n";
    return 1;
  } catch (const NegationNotEliminable& e) {
    std::cerr << "unsupported fragment: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFragment& e) {
    std::cerr << "unsupported fragment: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedCombination& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}
