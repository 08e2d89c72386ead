#include <doctest.h>

#include <string>

#include "ltl2dra/errors.hh"
#include "ltl2dra/labels.hh"
#include "ltl2dra/oracle.hh"
#include "ltl2dra/parser.hh"
#include "ltl2dra/pipeline.hh"

using namespace ltl2dra;

namespace {

size_t count_occurrences(const std::string& haystack, const std::string& s) {
  size_t n = 0;
  for (size_t pos = haystack.find(s); pos != std::string::npos;
       pos = haystack.find(s, pos + 1))
    ++n;
  return n;
}

} // namespace

TEST_CASE("letter groups render as small formulas") {
  Alphabet ab({"a", "b"});
  CHECK(label_formula({1, 2, 3}, ab, LabelStyle::Names) == "a | b");
  CHECK(label_formula({0, 1, 2, 3}, ab, LabelStyle::Names) == "tt");
  CHECK(label_formula({}, ab, LabelStyle::Names) == "ff");
  CHECK(label_formula({2}, ab, LabelStyle::HoaIndices) == "!0&1");
  CHECK(label_formula({0, 2}, ab, LabelStyle::HoaIndices) == "!0");
  Alphabet none(std::vector<std::string>{});
  CHECK(label_formula({0}, none, LabelStyle::HoaIndices) == "t");
}

TEST_CASE("identical invocations produce identical bytes") {
  PipelineOptions opts;
  for (OutputFormat format :
       {OutputFormat::Hoa, OutputFormat::Dstar, OutputFormat::Dot}) {
    std::string one = format_output(run_pipeline("G (a | F b)", opts), format);
    std::string two = format_output(run_pipeline("G (a | F b)", opts), format);
    CHECK(one == two);
    CHECK(!one.empty());
  }
}

TEST_CASE("stats line") {
  PipelineResult r = run_pipeline("F a & F !a");
  std::string line = r.stats_line();
  CHECK(line.find("F a & F !a\t") == 0);
  CHECK(line.find("dra=4(1)") != std::string::npos);
  CHECK(line.find("tgdra=4") != std::string::npos);
  CHECK(line.find("vwaa=2") != std::string::npos);
  CHECK(line.find("time_ms=") != std::string::npos);
}

TEST_CASE("alternating automaton dot output shows four states") {
  PipelineOptions opts;
  opts.stage = Stage::Vwaa;
  PipelineResult r = run_pipeline("G (X F a & X F b) | G b", opts);
  std::string dot = format_output(r, OutputFormat::Dot);
  CHECK(count_occurrences(dot, "shape=circle") +
            count_occurrences(dot, "shape=doublecircle") ==
        4);
  CHECK(count_occurrences(dot, "shape=doublecircle") == 2);
}

TEST_CASE("trivial formula gives a one-state automaton accepting all words") {
  PipelineResult r = run_pipeline("tt");
  CHECK(r.dra->state_count() == 1);
  REQUIRE(r.dra->pairs.size() == 1);
  CHECK(r.dra->pairs[0].fin.empty());
  CHECK(r.dra->pairs[0].inf == std::vector<int>{0});
  std::string hoa = format_output(r, OutputFormat::Hoa);
  CHECK(hoa.find("States: 1\n") != std::string::npos);
  CHECK(hoa.find("acc-name: Rabin 1\n") != std::string::npos);
}

TEST_CASE("hoa output of the Rabin automaton") {
  std::string hoa = format_output(run_pipeline("G (a | F b)"), OutputFormat::Hoa);
  CHECK(hoa.find("HOA: v1\n") == 0);
  CHECK(hoa.find("acc-name: Rabin 2\n") != std::string::npos);
  CHECK(hoa.find("Acceptance: 4 (Fin(0) & Inf(1)) | (Fin(2) & Inf(3))\n") !=
        std::string::npos);
  CHECK(hoa.find("--BODY--\n") != std::string::npos);
  CHECK(hoa.find("--END--\n") != std::string::npos);
  CHECK(hoa.find("state-acc") != std::string::npos);
}

TEST_CASE("hoa output of the generalized automaton") {
  PipelineOptions opts;
  opts.stage = Stage::Tgdra;
  std::string hoa =
      format_output(run_pipeline("G (a | F b)", opts), OutputFormat::Hoa);
  CHECK(hoa.find("acc-name: generalized-Rabin 2") != std::string::npos);
  CHECK(hoa.find("trans-acc") != std::string::npos);
}

TEST_CASE("dstar output") {
  std::string out = format_output(run_pipeline("F (a | b)"), OutputFormat::Dstar);
  CHECK(out.find("DRA v2 explicit\n") == 0);
  CHECK(out.find("States: 2\n") != std::string::npos);
  CHECK(out.find("Acceptance-Pairs: 1\n") != std::string::npos);
  CHECK(out.find("AP: 2 \"a\" \"b\"\n") != std::string::npos);
  CHECK(out.find("Acc-Sig:") != std::string::npos);
  // One successor line per letter per state: 2 states x 4 letters.
  size_t lines = count_occurrences(out, "\n");
  CHECK(lines >= 2 * 4 + 8);
}

TEST_CASE("format and stage combinations") {
  PipelineOptions vwaa_stage;
  vwaa_stage.stage = Stage::Vwaa;
  PipelineResult rv = run_pipeline("G (a | F b)", vwaa_stage);
  CHECK_THROWS_AS(format_output(rv, OutputFormat::Hoa), UnsupportedCombination);
  CHECK_THROWS_AS(format_output(rv, OutputFormat::Dstar),
                  UnsupportedCombination);
  CHECK_NOTHROW(format_output(rv, OutputFormat::Dot));
  CHECK_NOTHROW(format_output(rv, OutputFormat::Stats));

  PipelineOptions tgdra_stage;
  tgdra_stage.stage = Stage::Tgdra;
  PipelineResult rt = run_pipeline("G (a | F b)", tgdra_stage);
  CHECK_THROWS_AS(format_output(rt, OutputFormat::Dstar),
                  UnsupportedCombination);
  CHECK_NOTHROW(format_output(rt, OutputFormat::Hoa));
}

TEST_CASE("ablation switches change intermediate sizes only as expected") {
  PipelineOptions raw;
  raw.simplify_formula = false;
  raw.simplify_vwaa = false;
  raw.simplify_acceptance = false;
  raw.simplify_states = false;
  PipelineResult r = run_pipeline("G F (a | b)", raw);
  PipelineResult s = run_pipeline("G F (a | b)");
  CHECK(r.dra->state_count() >= s.dra->state_count());
  CHECK(r.vwaa.state_count() >= s.vwaa.state_count());
}

TEST_CASE("the unsimplified pipeline is already language-correct") {
  PipelineOptions raw;
  raw.simplify_formula = false;
  raw.simplify_vwaa = false;
  raw.simplify_acceptance = false;
  raw.simplify_states = false;
  for (const char* text : {"G F (F a | G F b | F G (a | b))", "G (a | F b)",
                           "a U (b U c)", "F a & F !a"}) {
    Formula f = parse(text);
    PipelineResult r = run_pipeline(f, raw);
    Alphabet sigma = Alphabet::of_formula(f);
    CAPTURE(text);
    for (const LassoWord& w : enumerate_lassos(sigma, 2, 2)) {
      if (dra_accepts_lasso(*r.dra, w) != eval_lasso(f, w)) {
        CAPTURE(w.to_string());
        REQUIRE(dra_accepts_lasso(*r.dra, w) == eval_lasso(f, w));
      }
    }
  }
}
