#pragma once

#include <optional>
#include <string>

#include "ltl2dra/dra.hh"
#include "ltl2dra/formula.hh"
#include "ltl2dra/tgdra.hh"
#include "ltl2dra/vwaa.hh"

namespace ltl2dra {

enum class Stage : uint8_t { Vwaa, Tgdra, Dra };
enum class OutputFormat : uint8_t { Hoa, Dstar, Dot, Stats };

struct PipelineOptions {
  bool simplify_formula = true;
  bool simplify_vwaa = true;
  bool simplify_acceptance = true;
  bool simplify_states = true;
  Stage stage = Stage::Dra;
  size_t cap_states = 1u << 20;
};

struct PipelineResult {
  Formula original;
  Formula pnf;
  Formula simplified;
  VwaaClass vclass = VwaaClass::Other;

  Vwaa vwaa;                      // after normalization/simplification
  std::optional<Tgdra> tgdra_raw; // before acceptance/state simplification
  std::optional<Tgdra> tgdra;
  std::optional<Dra> dra_raw;     // before state merging
  std::optional<Dra> dra;

  double formula_ms = 0.0; // parse-to-simplified rewriting
  double vwaa_ms = 0.0;
  double tgdra_ms = 0.0;
  double dra_ms = 0.0;
  double time_ms = 0.0;

  std::string dra_size() const;  // "s(r)"
  std::string stats_line() const;
};

PipelineResult run_pipeline(const Formula& f, const PipelineOptions& opts = {});
PipelineResult run_pipeline(const std::string& text,
                            const PipelineOptions& opts = {});

// Renders the automaton of the stage the pipeline stopped at. dstar is
// DRA-only; hoa covers TGDRA and DRA; dot covers every stage.
std::string format_output(const PipelineResult& result, OutputFormat format);

} // namespace ltl2dra
