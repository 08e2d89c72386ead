// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "corpus.hh"
#include "ltl2dra/formula.hh"
#include "ltl2dra/oracle.hh"
#include "ltl2dra/parser.hh"
#include "ltl2dra/pipeline.hh"

using namespace ltl2dra;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok,
            const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failures;
}

double run_ms(const Formula& f, PipelineResult& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = run_pipeline(f);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string size_of(const std::string& text) {
  return run_pipeline(parse(text)).dra->size_string();
}

// 1: DRA sizes on the 24-formula benchmark, exact where required.
void criterion1() {
  std::string detail;
  bool ok = true;
  for (const corpus::Row& row : corpus::table1()) {
    PipelineResult r;
    double ms = run_ms(parse(row.text), r);
    int states = static_cast<int>(r.dra->state_count());
    int pairs = static_cast<int>(r.dra->pairs.size());
    bool this_ok = row.exact ? (states == row.states && pairs == row.pairs)
                             : states <= row.states;
    if (ms >= 1000.0) this_ok = false;
    if (!this_ok) {
      ok = false;
      detail += std::string(row.text) + " got " + r.dra->size_string() +
                " want " + std::to_string(row.states) + "(" +
                std::to_string(row.pairs) + "); ";
    }
  }
  report(1, "benchmark DRA sizes (10 exact, 24 bounded, < 1 s each)", ok,
         detail);
}

// 2: generalized-automaton state counts, exact.
void criterion2() {
  struct Item {
    const char* text;
    size_t want;
  };
  const std::vector<Item> items = {{"G (a | F b)", 2},
                                   {"G F (a | b)", 1},
                                   {"F G a | F G b | G F c", 1},
                                   {"F G a | G F b", 1}};
  bool ok = true;
  std::string detail;
  for (const Item& it : items) {
    size_t got = run_pipeline(parse(it.text)).tgdra->state_count();
    if (got != it.want) {
      ok = false;
      detail += std::string(it.text) + " got " + std::to_string(got) +
                " want " + std::to_string(it.want) + "; ";
    }
  }
  report(2, "generalized Rabin automaton sizes, exact", ok, detail);
}

// 3: parametric families, exact sizes, < 10 s each.
void criterion3() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 5; ++n) {
    PipelineResult r;
    double ms = run_ms(parse(corpus::theta(n)), r);
    std::string want = std::to_string(n + 2) + "(1)";
    if (r.dra->size_string() != want || ms >= 10000.0) {
      ok = false;
      detail += "theta(" + std::to_string(n) + ") got " +
                r.dra->size_string() + " want " + want + "; ";
    }
  }
  const char* want_neg[] = {"6(3)", "12(4)", "24(5)"};
  for (int n = 1; n <= 3; ++n) {
    PipelineResult r;
    double ms = run_ms(parse(corpus::neg_theta(n)), r);
    if (r.dra->size_string() != want_neg[n - 1] || ms >= 10000.0) {
      ok = false;
      detail += "neg-theta(" + std::to_string(n) + ") got " +
                r.dra->size_string() + "; ";
    }
  }
  report(3, "parametric scaling theta(1..5), neg-theta(1..3), < 10 s each", ok,
         detail);
}

// 4: until chains; right-nested exact, left-nested bounded.
void criterion4() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 8; ++n) {
    std::string got = size_of(corpus::u_right(n));
    std::string want = std::to_string(n + 1) + "(1)";
    if (got != want) {
      ok = false;
      detail += "U2(" + std::to_string(n) + ") got " + got + " want " + want +
                "; ";
    }
  }
  const int bound[] = {3, 5, 9, 24};
  for (int n = 2; n <= 5; ++n) {
    PipelineResult r = run_pipeline(parse(corpus::u_left(n)));
    int states = static_cast<int>(r.dra->state_count());
    if (states > bound[n - 2] || r.dra->pairs.size() != 1) {
      ok = false;
      detail += "U(" + std::to_string(n) + ") got " + r.dra->size_string() +
                "; ";
    }
  }
  report(4, "until chains: U2(2..8) exact, U(2..5) bounded", ok, detail);
}

// 5: the equivalence oracle over the corpus, < 120 s in total.
void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  size_t formulas = 0, lassos = 0;
  for (const std::string& text : corpus::oracle_corpus()) {
    Formula f = parse(text);
    Alphabet sigma = Alphabet::of_formula(f);
    if (sigma.prop_count() > 3) continue;
    int period = sigma.prop_count() <= 2 ? 4 : 3;
    EquivalenceReport report = cross_check(f, 2, period);
    ++formulas;
    lassos += report.lassos_checked;
    if (!report.ok()) {
      ok = false;
      detail += text + ": " + std::to_string(report.mismatches.size()) +
                " mismatches; ";
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  if (secs >= 120.0) {
    ok = false;
    detail += "took " + std::to_string(secs) + " s; ";
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu formulas, %zu lasso words, %.1f s", formulas, lassos,
                secs);
  report(5, std::string("oracle equivalence across all stages (") + buf + ")",
         ok, detail);
}

// 6: structural properties of every stage.
void criterion6() {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    ok = false;
    if (detail.size() < 400) detail += what + "; ";
  };

  for (const std::string& text : corpus::oracle_corpus()) {
    Formula f = simplify_formula(to_positive_normal_form(parse(text)));
    Vwaa v = translate_ltl_to_vwaa(f);

    if (check_structure(v) == VwaaClass::NotVeryWeak)
      fail(text + ": not very weak");
    if (v.structure != VwaaClass::Mmaa && v.structure != VwaaClass::LimMmaa)
      fail(text + ": bad structure class");
    if (classify_fragment(f) == FragmentClass::StrictFG) {
      if (v.structure != VwaaClass::Mmaa) fail(text + ": strict but not MMAA");
      for (size_t s = 0; s < v.state_count(); ++s)
        if (v.kind_of(static_cast<int>(s)) == StateKind::Other)
          fail(text + ": state outside the three categories");
    }

    PipelineResult r = run_pipeline(parse(text));
    const Tgdra& t = *r.tgdra_raw;
    for (size_t s = 0; s < t.state_count(); ++s) {
      if (t.succ[s].size() != t.letter_count())
        fail(text + ": missing macrotransition");
      for (Letter a = 0; a < t.letter_count(); ++a)
        if (t.succ[s][a] < 0 || t.succ[s][a] >= static_cast<int>(t.state_count()))
          fail(text + ": dangling macrotransition");
      const auto& configs = t.states[s].configs;
      if (!configs.empty() && configs.front() == 0 && configs.size() != 1)
        fail(text + ": empty-configuration collapse violated");
    }

    const Dra& d = *r.dra_raw;
    for (size_t q = 0; q < d.state_count(); ++q)
      for (size_t i = 0; i < r.tgdra->pairs.size(); ++i) {
        int h = static_cast<int>(r.tgdra->pairs[i].infs.size());
        int l = d.states[q].levels[i];
        if (l < 0 || l > h + 1) fail(text + ": level out of range");
      }
  }

  // Lemma-1 shape: an accepted lasso settles inside some allowed set.
  for (const char* text : {"G (a | F b)", "G (F a & F b)", "F a & F !a",
                           "G F (a | b)"}) {
    Formula f = parse(text);
    PipelineResult r = run_pipeline(f);
    const Tgdra& t = *r.tgdra_raw;
    Alphabet sigma = Alphabet::of_formula(f);
    for (const LassoWord& w : enumerate_lassos(sigma, 2, 3)) {
      if (!eval_lasso(f, w)) continue;
      int state = t.initial;
      for (Letter a : w.prefix) state = t.succ[state][a];
      std::map<std::pair<int, size_t>, size_t> seen;
      std::vector<TransId> trail;
      size_t phase = 0;
      std::vector<TransId> cycle;
      for (;;) {
        auto key = std::make_pair(state, phase);
        auto it = seen.find(key);
        if (it != seen.end()) {
          cycle.assign(trail.begin() + it->second, trail.end());
          break;
        }
        seen.emplace(key, trail.size());
        trail.push_back(t.trans_id(state, w.period[phase]));
        state = t.succ[state][w.period[phase]];
        phase = (phase + 1) % w.period.size();
      }
      bool inside = false;
      for (const auto& p : t.pairs) {
        bool hit = false;
        for (TransId rr : cycle)
          if (std::binary_search(p.fin.begin(), p.fin.end(), rr)) hit = true;
        if (!hit) inside = true;
      }
      if (!inside) fail(std::string(text) + ": accepted lasso escapes every Z");
    }
  }

  report(6, "structure properties (very weakness, categories, determinism, "
            "collapse, levels, bounded suffix)",
         ok, detail);
}

// 7: the vendored pattern formulas oracle-check clean; sizes are reported.
void criterion7() {
  bool ok = true;
  std::string detail;
  std::printf("    pattern formula sizes (dra, tgdra):\n");
  for (const std::string& text : corpus::spec_patterns()) {
    Formula f = parse(text);
    Alphabet sigma = Alphabet::of_formula(f);
    PipelineResult r = run_pipeline(f);
    int max_prefix = sigma.prop_count() <= 3 ? 2 : 1;
    int max_period = sigma.prop_count() <= 3 ? 3 : 2;
    EquivalenceReport rep = cross_check(f, max_prefix, max_period);
    std::printf("      %-12s tgdra=%-3zu oracle(%d,%d)=%s  %s\n",
                r.dra->size_string().c_str(), r.tgdra->state_count(),
                max_prefix, max_period, rep.ok() ? "ok" : "MISMATCH",
                text.c_str());
    if (!rep.ok()) {
      ok = false;
      detail += text + " mismatches; ";
    }
  }
  report(7, "vendored specification patterns pass the oracle", ok, detail);
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  return failures;
}
