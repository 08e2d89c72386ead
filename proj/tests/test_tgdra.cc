#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "corpus.hh"
#include "ltl2dra/errors.hh"
#include "ltl2dra/oracle.hh"
#include "ltl2dra/parser.hh"
#include "ltl2dra/pipeline.hh"
#include "ltl2dra/tgdra.hh"

using namespace ltl2dra;

namespace {

Formula prepared(const char* s) {
  return simplify_formula(to_positive_normal_form(parse(s)));
}

// The running example G(Fs a & Fs b) | G b, with letters over {a, b}:
// bit 0 = a, bit 1 = b.
Vwaa running_example() {
  return translate_ltl_to_vwaa(
      to_positive_normal_form(parse("G (X F a & X F b) | G b")));
}

std::set<std::set<Formula>> as_formula_sets(const Vwaa& v,
                                            const std::vector<StateSet>& zs) {
  std::set<std::set<Formula>> out;
  for (StateSet z : zs) {
    std::set<Formula> set;
    for (size_t s = 0; s < v.state_count(); ++s)
      if ((z >> s) & 1) set.insert(v.states[s]);
    out.insert(std::move(set));
  }
  return out;
}

} // namespace

TEST_CASE("macrostate collapse invariant") {
  Macrostate m;
  m.configs = {5, 0, 3, 3};
  m.normalize();
  CHECK(m.configs == std::vector<StateSet>{0});
  Macrostate n;
  n.configs = {5, 3, 3};
  n.normalize();
  CHECK(n.configs == std::vector<StateSet>{3, 5});
}

TEST_CASE("semiautomaton of the running example") {
  Vwaa v = running_example();
  Tgdra t = build_semiautomaton(v);
  REQUIRE(t.state_count() == 3);

  StateSet gpsi = StateSet{1} << v.index_of(parse("G (X F a & X F b)"));
  StateSet gb = StateSet{1} << v.index_of(parse("G b"));
  StateSet big = gpsi | (StateSet{1} << v.index_of(parse("F a"))) |
                 (StateSet{1} << v.index_of(parse("F b")));

  const Macrostate& init = t.states[t.initial];
  std::vector<StateSet> want_init{gpsi, gb};
  std::sort(want_init.begin(), want_init.end());
  CHECK(init.configs == want_init);

  // b-letters stay in {{G psi, Fa, Fb}, {G b}}, !b-letters lose {G b}.
  int m2 = t.succ[t.initial][2];
  int m3 = t.succ[t.initial][0];
  std::vector<StateSet> want_m2{big, gb};
  std::sort(want_m2.begin(), want_m2.end());
  CHECK(t.states[m2].configs == want_m2);
  CHECK(t.states[m3].configs == std::vector<StateSet>{big});
  CHECK(t.succ[t.initial][3] == m2);
  CHECK(t.succ[t.initial][1] == m3);
  CHECK(t.succ[m2][2] == m2);
  CHECK(t.succ[m2][3] == m2);
  CHECK(t.succ[m2][0] == m3);
  CHECK(t.succ[m2][1] == m3);
  for (Letter a = 0; a < 4; ++a) CHECK(t.succ[m3][a] == m3);
}

TEST_CASE("semiautomaton of a bare literal has a rejecting sink") {
  Vwaa v = translate_ltl_to_vwaa(parse("a"));
  Tgdra t = build_semiautomaton(v);
  REQUIRE(t.state_count() == 3);
  int done = t.succ[t.initial][1];  // letter {a}
  int sink = t.succ[t.initial][0];  // letter {}
  CHECK(t.states[done].configs == std::vector<StateSet>{0});
  CHECK(t.states[sink].configs.empty());
  for (Letter a = 0; a < 2; ++a) {
    CHECK(t.succ[done][a] == done);
    CHECK(t.succ[sink][a] == sink);
  }
}

TEST_CASE("a dying configuration contributes nothing") {
  // G b dies on !b while the other configuration survives.
  Vwaa v = running_example();
  Tgdra t = build_semiautomaton(v);
  int m3 = t.succ[t.initial][0];
  CHECK(t.states[m3].configs.size() == 1);
}

TEST_CASE("bounding sets") {
  SUBCASE("running example") {
    Vwaa v = running_example();
    auto zs = compute_bounding_sets(v);
    auto got = as_formula_sets(v, zs);
    std::set<std::set<Formula>> want{
        {parse("G (X F a & X F b)")},
        {parse("G (X F a & X F b)"), parse("F a"), parse("F b")},
        {parse("G b")}};
    CHECK(got == want);
  }
  SUBCASE("single eventuality yields the empty set") {
    Vwaa v = translate_ltl_to_vwaa(prepared("F a"));
    auto zs = compute_bounding_sets(v);
    CHECK(zs == std::vector<StateSet>{0});
  }
  SUBCASE("ordering is by size then state indices") {
    Vwaa v = running_example();
    auto zs = compute_bounding_sets(v);
    for (size_t i = 1; i < zs.size(); ++i)
      CHECK(std::popcount(zs[i - 1]) <= std::popcount(zs[i]));
  }
  SUBCASE("limit automata restrict to must-reachable sets") {
    Vwaa v = translate_ltl_to_vwaa(parse("a U (G b)"));
    auto zs = compute_bounding_sets(v);
    StateSet u = StateSet{1} << v.index_of(parse("a U (G b)"));
    for (StateSet z : zs) CHECK((z & u) == 0);
  }
}

TEST_CASE("allowed macrotransitions") {
  Vwaa v = running_example();
  Tgdra t = build_semiautomaton(v);
  int fa = v.index_of(parse("F a"));
  int fb = v.index_of(parse("F b"));
  StateSet gpsi = StateSet{1} << v.index_of(parse("G (X F a & X F b)"));
  StateSet big = gpsi | (StateSet{1} << fa) | (StateSet{1} << fb);

  SUBCASE("Z = {G psi}: every step leaves the allowed configurations") {
    auto at = allowed_macrotransitions(v, t, gpsi);
    CHECK(at.at.empty());
    CHECK(at.per_f.empty());
  }
  SUBCASE("Z = {G psi, Fa, Fb}: the {a}-selfloop feeds Fa but not Fb") {
    auto at = allowed_macrotransitions(v, t, big);
    CHECK(at.at.size() == t.trans_count()); // every macrotransition allowed
    int m3 = t.succ[t.initial][0];
    TransId loop_a = t.trans_id(m3, 1); // selfloop of {{G psi, Fa, Fb}} on {a}
    auto& la = at.per_f.at(fa);
    auto& lb = at.per_f.at(fb);
    CHECK(std::binary_search(la.begin(), la.end(), loop_a));
    CHECK_FALSE(std::binary_search(lb.begin(), lb.end(), loop_a));
  }
  SUBCASE("Z = {}: allowed steps are those reaching the empty configuration") {
    Vwaa lit = translate_ltl_to_vwaa(parse("a"));
    Tgdra lt = build_semiautomaton(lit);
    auto at = allowed_macrotransitions(lit, lt, 0);
    CHECK(at.per_f.empty());
    int done = lt.succ[lt.initial][1];
    std::vector<TransId> want{lt.trans_id(lt.initial, 1),
                              lt.trans_id(done, 0), lt.trans_id(done, 1)};
    std::sort(want.begin(), want.end());
    CHECK(at.at == want);
  }
}

TEST_CASE("generalized automaton sizes") {
  CHECK(run_pipeline(parse("G (a | F b)")).tgdra->state_count() == 2);
  CHECK(run_pipeline(parse("G F (a | b)")).tgdra->state_count() == 1);
  CHECK(run_pipeline(parse("F G a | F G b | G F c")).tgdra->state_count() == 1);
  CHECK(run_pipeline(parse("F G a | G F b")).tgdra->state_count() == 1);
}

TEST_CASE("acceptance simplification") {
  SUBCASE("pair with an impossible avoidance set is removed") {
    Vwaa v = running_example();
    Tgdra raw = build_tgdra(v);
    REQUIRE(raw.pairs.size() == 3);
    // Z = {G psi} yields fin = every transition.
    bool found = false;
    for (const auto& p : raw.pairs)
      if (p.fin.size() == raw.trans_count()) found = true;
    CHECK(found);
    Tgdra simp = simplify_tgdra(raw, {.acceptance = true, .states = false});
    CHECK(simp.pairs.size() == 2);
    for (const auto& p : simp.pairs) CHECK(p.fin.size() < simp.trans_count());
  }
  SUBCASE("a superset obligation inside a pair is dropped") {
    Tgdra t;
    t.alphabet = Alphabet({"a"});
    t.states.resize(1);
    t.initial = 0;
    t.succ = {{0, 0}};
    GenRabinPair p;
    p.fin = {};
    p.infs = {{0}, {0, 1}};
    p.inf_states = {0, 1};
    t.pairs = {p};
    Tgdra s = simplify_tgdra(t, {.acceptance = true, .states = false});
    REQUIRE(s.pairs.size() == 1);
    CHECK(s.pairs[0].infs == std::vector<std::vector<TransId>>{{0}});
  }
  SUBCASE("already minimal is a fixpoint") {
    Tgdra t = *run_pipeline(parse("G (a | F b)")).tgdra;
    Tgdra s = simplify_tgdra(t);
    CHECK(s.state_count() == t.state_count());
    CHECK(s.pairs.size() == t.pairs.size());
  }
}

TEST_CASE("lasso acceptance of the generalized automaton") {
  PipelineResult r = run_pipeline(parse("G (X F a & X F b) | G b"));
  Alphabet sigma({"a", "b"});
  CHECK(tgdra_accepts_lasso(*r.tgdra, LassoWord(sigma, {}, {1, 0, 2, 3})));
  CHECK_FALSE(tgdra_accepts_lasso(*r.tgdra, LassoWord(sigma, {}, {1})));

  // An empty pair list rejects every word.
  PipelineResult empty =
      run_pipeline(parse("(F F a & G !a) | (G G !a & F a)"));
  CHECK(empty.tgdra->pairs.empty());
  Alphabet one({"a"});
  for (const LassoWord& w : enumerate_lassos(one, 1, 2))
    CHECK_FALSE(tgdra_accepts_lasso(*empty.tgdra, w));
}

TEST_CASE("theorem at desk scale: acceptance matches evaluation") {
  for (const char* text : {"G (a | F b)", "F a | G b", "a U (b U c)",
                           "G F a & F G b", "X a | G b"}) {
    Formula f = parse(text);
    PipelineResult r = run_pipeline(f);
    Alphabet sigma = Alphabet::of_formula(f);
    CAPTURE(text);
    for (const LassoWord& w : enumerate_lassos(sigma, 2, 2)) {
      if (tgdra_accepts_lasso(*r.tgdra_raw, w) != eval_lasso(f, w)) {
        CAPTURE(w.to_string());
        REQUIRE(tgdra_accepts_lasso(*r.tgdra_raw, w) == eval_lasso(f, w));
      }
    }
  }
}

TEST_CASE("accepted lassos have a cycle inside some allowed set") {
  // Every accepting run is eventually bounded by one of the sets the pairs
  // were built from.
  for (const char* text : {"G (a | F b)", "F a | G b", "G (F a & F b)",
                           "G F (a | b)", "F a & F !a"}) {
    Formula f = parse(text);
    PipelineResult r = run_pipeline(f);
    const Tgdra& t = *r.tgdra_raw;
    Alphabet sigma = Alphabet::of_formula(f);
    CAPTURE(text);
    for (const LassoWord& w : enumerate_lassos(sigma, 2, 3)) {
      if (!eval_lasso(f, w)) continue;
      // Simulate to the cycle.
      int state = t.initial;
      for (Letter a : w.prefix) state = t.succ[state][a];
      std::map<std::pair<int, size_t>, size_t> seen;
      std::vector<TransId> trail;
      size_t phase = 0;
      std::set<TransId> cycle;
      for (;;) {
        auto key = std::make_pair(state, phase);
        auto it = seen.find(key);
        if (it != seen.end()) {
          cycle.insert(trail.begin() + it->second, trail.end());
          break;
        }
        seen.emplace(key, trail.size());
        trail.push_back(t.trans_id(state, w.period[phase]));
        state = t.succ[state][w.period[phase]];
        phase = (phase + 1) % w.period.size();
      }
      bool inside_some = false;
      for (const auto& p : t.pairs) {
        bool hit_fin = false;
        for (TransId rr : cycle)
          if (std::binary_search(p.fin.begin(), p.fin.end(), rr)) hit_fin = true;
        if (!hit_fin) inside_some = true;
      }
      CAPTURE(w.to_string());
      CHECK(inside_some);
    }
  }
}

TEST_CASE("determinism and completeness of the macrostate automaton") {
  for (const std::string& text : corpus::oracle_corpus()) {
    PipelineResult r = run_pipeline(parse(text));
    const Tgdra& t = *r.tgdra_raw;
    CAPTURE(text);
    REQUIRE(t.succ.size() == t.state_count());
    for (size_t s = 0; s < t.state_count(); ++s) {
      REQUIRE(t.succ[s].size() == t.letter_count());
      for (Letter a = 0; a < t.letter_count(); ++a) {
        CHECK(t.succ[s][a] >= 0);
        CHECK(t.succ[s][a] < static_cast<int>(t.state_count()));
      }
    }
    // Collapse invariant on every reachable macrostate.
    for (const Macrostate& m : t.states)
      if (std::find(m.configs.begin(), m.configs.end(), 0) != m.configs.end())
        CHECK(m.configs.size() == 1);
  }
}
