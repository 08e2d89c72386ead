#include "ltl2dra/oracle.hh"

#include <algorithm>
#include <optional>

#include "ltl2dra/errors.hh"
#include "ltl2dra/pipeline.hh"

namespace ltl2dra {

std::vector<LassoWord> enumerate_lassos(const Alphabet& alphabet,
                                        int max_prefix, int max_period,
                                        size_t cap) {
  if (max_period < 1)
    throw std::invalid_argument("enumerate_lassos needs max_period >= 1");
  size_t sigma = alphabet.letter_count();

  size_t prefixes = 0, periods = 0, pow = 1;
  for (int p = 0; p <= max_prefix; ++p) {
    prefixes += pow;
    pow *= sigma;
  }
  pow = sigma;
  for (int q = 1; q <= max_period; ++q) {
    periods += pow;
    pow *= sigma;
  }
  if (prefixes * periods > cap)
    throw ResourceLimit("lasso enumeration of " +
                        std::to_string(prefixes * periods) +
                        " words exceeds the cap");

  std::vector<std::vector<Letter>> prefix_words, period_words;
  std::vector<Letter> cur;
  auto grow = [&](auto&& self, std::vector<std::vector<Letter>>& out,
                  int min_len, int max_len) -> void {
    if (static_cast<int>(cur.size()) >= min_len) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (Letter a = 0; a < sigma; ++a) {
      cur.push_back(a);
      self(self, out, min_len, max_len);
      cur.pop_back();
    }
  };
  grow(grow, prefix_words, 0, max_prefix);
  grow(grow, period_words, 1, max_period);

  // Recursion emits words in prefix (depth-first) order; reorder by length
  // first, keeping the lexicographic order within a length.
  auto by_length = [](const std::vector<Letter>& a,
                      const std::vector<Letter>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  std::sort(prefix_words.begin(), prefix_words.end(), by_length);
  std::sort(period_words.begin(), period_words.end(), by_length);

  std::vector<LassoWord> out;
  out.reserve(prefix_words.size() * period_words.size());
  for (const auto& pre : prefix_words)
    for (const auto& per : period_words)
      out.emplace_back(alphabet, pre, per);
  return out;
}

std::string EquivalenceReport::to_tsv() const {
  std::string out;
  for (const Mismatch& m : mismatches) {
    out += to_string(formula);
    out += '\t';
    out += m.word.to_string();
    out += '\t';
    out += m.stage;
    out += "\texpected=";
    out += m.expected ? '1' : '0';
    out += "\tgot=";
    out += m.got ? '1' : '0';
    out += '\n';
  }
  return out;
}

EquivalenceReport cross_check(const Formula& f, int max_prefix,
                              int max_period) {
  EquivalenceReport report;
  report.formula = f;

  PipelineResult r = run_pipeline(f);

  // The inverse translation reads the untouched tableau automaton.
  std::optional<Formula> back;
  if (r.vclass == VwaaClass::Mmaa)
    back = mmaa_to_ltl(translate_ltl_to_vwaa(r.simplified));

  // Formula simplification can shrink the atom set; the automata then run
  // over the projected word.
  Alphabet full = Alphabet::of_formula(f);
  const Alphabet& sub = r.vwaa.alphabet;
  std::vector<int> proj_bit(full.prop_count(), -1);
  for (size_t p = 0; p < full.prop_count(); ++p)
    proj_bit[p] = sub.index_of(full.props()[p]);
  auto project = [&](const LassoWord& w) {
    auto map_word = [&](const std::vector<Letter>& in) {
      std::vector<Letter> out(in.size(), 0);
      for (size_t i = 0; i < in.size(); ++i)
        for (size_t p = 0; p < full.prop_count(); ++p)
          if (proj_bit[p] >= 0 && full.has(in[i], p))
            out[i] |= Letter{1} << proj_bit[p];
      return out;
    };
    return LassoWord(sub, map_word(w.prefix), map_word(w.period));
  };

  for (const LassoWord& w : enumerate_lassos(full, max_prefix, max_period)) {
    ++report.lassos_checked;
    bool expected = eval_lasso(f, w);
    LassoWord wp = project(w);
    auto check = [&](const char* stage, bool got) {
      if (got != expected)
        report.mismatches.push_back({w, stage, expected, got});
    };
    if (back) check("mmaa-back-translation", eval_lasso(*back, wp));
    check("tgdra-raw", tgdra_accepts_lasso(*r.tgdra_raw, wp));
    check("tgdra", tgdra_accepts_lasso(*r.tgdra, wp));
    check("dra-raw", dra_accepts_lasso(*r.dra_raw, wp));
    check("dra", dra_accepts_lasso(*r.dra, wp));
  }
  return report;
}

} // namespace ltl2dra
