#include "ltl2dra/pipeline.hh"

#include <chrono>

#include "ltl2dra/errors.hh"
#include "ltl2dra/parser.hh"

namespace ltl2dra {

std::string PipelineResult::dra_size() const {
  return dra ? dra->size_string() : std::string("-");
}

std::string PipelineResult::stats_line() const {
  std::string out = to_string(original);
  if (dra) out += "\tdra=" + dra->size_string();
  if (tgdra) out += "\ttgdra=" + std::to_string(tgdra->state_count());
  out += "\tvwaa=" + std::to_string(vwaa.state_count());
  out += "\ttime_ms=" + std::to_string(static_cast<long long>(time_ms + 0.5));
  return out;
}

PipelineResult run_pipeline(const Formula& f, const PipelineOptions& opts) {
  auto mark = std::chrono::steady_clock::now();
  auto lap = [&mark] {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - mark).count();
    mark = now;
    return ms;
  };

  PipelineResult r;
  r.original = f;
  r.pnf = to_positive_normal_form(f);
  r.simplified = opts.simplify_formula ? simplify_formula(r.pnf) : r.pnf;

  if (classify_fragment(r.simplified) == FragmentClass::Unsupported)
    throw UnsupportedFragment(
        "subformula outside the supported fragment: " +
        to_string(unsupported_witness(r.simplified)));
  r.formula_ms = lap();

  Vwaa v = translate_ltl_to_vwaa(r.simplified);
  r.vclass = v.structure;
  if (v.structure == VwaaClass::Mmaa) v = normalize_accepting_set(std::move(v));
  if (opts.simplify_vwaa) v = simplify_vwaa(std::move(v));
  r.vwaa = std::move(v);
  r.vwaa_ms = lap();

  if (opts.stage != Stage::Vwaa) {
    r.tgdra_raw = build_tgdra(r.vwaa, opts.cap_states);
    TgdraSimplifyOptions topts;
    topts.acceptance = opts.simplify_acceptance;
    topts.states = opts.simplify_states;
    r.tgdra = simplify_tgdra(*r.tgdra_raw, topts);
    r.tgdra_ms = lap();

    if (opts.stage == Stage::Dra) {
      r.dra_raw = degeneralize(*r.tgdra, opts.cap_states);
      r.dra = opts.simplify_states ? simplify_dra(*r.dra_raw) : *r.dra_raw;
      r.dra_ms = lap();
    }
  }

  r.time_ms = r.formula_ms + r.vwaa_ms + r.tgdra_ms + r.dra_ms;
  return r;
}

PipelineResult run_pipeline(const std::string& text,
                            const PipelineOptions& opts) {
  return run_pipeline(parse(text), opts);
}

std::string format_output(const PipelineResult& r, OutputFormat format) {
  std::string name = to_string(r.original);
  switch (format) {
    case OutputFormat::Stats:
      return r.stats_line() + "\n";
    case OutputFormat::Dstar:
      if (!r.dra)
        throw UnsupportedCombination(
            "the ltl2dstar format is defined for the dra stage only");
      return to_dstar(*r.dra);
    case OutputFormat::Hoa:
      if (r.dra) return to_hoa(*r.dra, name);
      if (r.tgdra) return to_hoa(*r.tgdra, name);
      throw UnsupportedCombination("no HOA output for the vwaa stage");
    case OutputFormat::Dot:
      if (r.dra) return to_dot(*r.dra);
      if (r.tgdra) return to_dot(*r.tgdra);
      return to_dot(r.vwaa);
  }
  throw std::logic_error("unreachable");
}

} // namespace ltl2dra
