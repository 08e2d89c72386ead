#include "ltl2dra/vwaa.hh"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>

#include "ltl2dra/errors.hh"
#include "ltl2dra/labels.hh"

namespace ltl2dra {

namespace {

void sort_unique(std::vector<StateSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename F>
void for_each_bit(StateSet m, F f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

} // namespace

int Vwaa::index_of(const Formula& f) const {
  auto it = std::lower_bound(states.begin(), states.end(), f);
  if (it == states.end() || *it != f) return -1;
  return static_cast<int>(it - states.begin());
}

StateSet Vwaa::must_mask() const {
  StateSet m = 0;
  for (size_t s = 0; s < states.size(); ++s)
    if (kinds[s] == StateKind::Must) m |= StateSet{1} << s;
  return m;
}

StateSet Vwaa::may_mask() const {
  StateSet m = 0;
  for (size_t s = 0; s < states.size(); ++s)
    if (kinds[s] == StateKind::May) m |= StateSet{1} << s;
  return m;
}

bool Vwaa::has_selfloop_every_letter(int s) const {
  StateSet self = StateSet{1} << s;
  for (const auto& configs : delta[s])
    if (!std::binary_search(configs.begin(), configs.end(), self)) return false;
  return true;
}

// Vacuously true for a state with no transitions: a run entering it can
// never leave (it cannot even proceed), which is must-state behaviour.
bool Vwaa::all_transitions_looping(int s) const {
  StateSet bit = StateSet{1} << s;
  for (const auto& configs : delta[s])
    for (StateSet c : configs)
      if (!(c & bit)) return false;
  return true;
}

bool Vwaa::has_looping_transition(int s) const {
  StateSet bit = StateSet{1} << s;
  for (const auto& configs : delta[s])
    for (StateSet c : configs)
      if (c & bit) return true;
  return false;
}

bool Vwaa::has_predecessor(int s) const {
  StateSet bit = StateSet{1} << s;
  for (size_t p = 0; p < states.size(); ++p) {
    if (static_cast<int>(p) == s) continue;
    for (const auto& configs : delta[p])
      for (StateSet c : configs)
        if (c & bit) return true;
  }
  return false;
}

StateKind Vwaa::kind_of(int s) const {
  if (all_transitions_looping(s)) return StateKind::Must;
  if (has_selfloop_every_letter(s)) return StateKind::May;
  if (!has_looping_transition(s) && !has_predecessor(s))
    return StateKind::Loopless;
  return StateKind::Other;
}

void Vwaa::classify() {
  kinds.resize(states.size());
  for (size_t s = 0; s < states.size(); ++s)
    kinds[s] = kind_of(static_cast<int>(s));
  structure = check_structure(*this);
}

std::vector<StateSet> Vwaa::multi_targets(StateSet cfg, Letter a) const {
  std::vector<StateSet> acc{0};
  bool dead = false;
  for_each_bit(cfg, [&](int s) {
    if (dead) return;
    const auto& choices = delta[s][a];
    if (choices.empty()) { // this configuration has no a-step
      dead = true;
      return;
    }
    std::vector<StateSet> next;
    next.reserve(acc.size() * choices.size());
    for (StateSet partial : acc)
      for (StateSet t : choices) next.push_back(partial | t);
    sort_unique(next);
    acc = std::move(next);
  });
  if (dead) return {};
  return acc;
}

namespace {

class Translator {
public:
  explicit Translator(const Formula& f)
      : alphabet_(Alphabet::of_formula(f)) {}

  Vwaa run(const Formula& f) {
    if (classify_fragment(f) == FragmentClass::Unsupported)
      throw UnsupportedFragment("subformula outside the supported fragment: " +
                                to_string(unsupported_witness(f)));
    size_t nletters = alphabet_.letter_count();
    auto initial = bar_initial(f);

    // Explore temporal formulae reachable from the initial configurations.
    std::vector<Formula> work;
    for (const auto& cfg : initial)
      for (const Formula& s : cfg) discover(s, work);
    while (!work.empty()) {
      Formula s = work.back();
      work.pop_back();
      std::vector<std::vector<Config>> rows(nletters);
      for (Letter a = 0; a < nletters; ++a) {
        rows[a] = delta_of(s, a);
        for (const auto& cfg : rows[a])
          for (const Formula& t : cfg) discover(t, work);
      }
      rows_[s] = std::move(rows);
    }

    Vwaa v;
    v.alphabet = alphabet_;
    for (const auto& [s, _] : rows_) v.states.push_back(s);
    std::sort(v.states.begin(), v.states.end());
    if (v.states.size() > 64)
      throw ResourceLimit("alternating automaton needs " +
                          std::to_string(v.states.size()) +
                          " states; at most 64 are supported");

    v.delta.resize(v.states.size());
    for (size_t s = 0; s < v.states.size(); ++s) {
      v.delta[s].resize(nletters);
      const auto& rows = rows_[v.states[s]];
      for (Letter a = 0; a < nletters; ++a) {
        std::vector<StateSet> configs;
        for (const auto& cfg : rows[a]) configs.push_back(to_mask(v, cfg));
        sort_unique(configs);
        v.delta[s][a] = std::move(configs);
      }
    }
    for (const auto& cfg : initial) v.initial.push_back(to_mask(v, cfg));
    sort_unique(v.initial);
    for (size_t s = 0; s < v.states.size(); ++s)
      if (v.states[s].is(Op::Eventually) || v.states[s].is(Op::Until))
        v.cobuchi |= StateSet{1} << s;
    v.classify();
    return v;
  }

private:
  using Config = std::set<Formula>;

  void discover(const Formula& s, std::vector<Formula>& work) {
    if (rows_.count(s)) return;
    rows_[s] = {};
    work.push_back(s);
  }

  static StateSet to_mask(const Vwaa& v, const Config& cfg) {
    StateSet m = 0;
    for (const Formula& s : cfg) {
      int i = v.index_of(s);
      assert(i >= 0);
      m |= StateSet{1} << i;
    }
    return m;
  }

  std::vector<Config> delta_of(const Formula& f, Letter a) {
    switch (f.op()) {
      case Op::True:
        return {{}};
      case Op::False:
        return {};
      case Op::Atom: {
        int idx = alphabet_.index_of(f.name());
        return alphabet_.has(a, idx) ? std::vector<Config>{{}}
                                     : std::vector<Config>{};
      }
      case Op::Not: {
        int idx = alphabet_.index_of(f.arg().name());
        return alphabet_.has(a, idx) ? std::vector<Config>{}
                                     : std::vector<Config>{{}};
      }
      case Op::StrictAlways:
        return {{Formula::always(f.arg())}};
      case Op::StrictEventually:
        return {{Formula::eventually(f.arg())}};
      case Op::Always: {
        auto base = bar(f.arg(), a);
        std::vector<Config> out;
        for (auto& cfg : base) {
          cfg.insert(f);
          out.push_back(std::move(cfg));
        }
        return dedup(std::move(out));
      }
      case Op::Eventually: {
        auto base = bar(f.arg(), a);
        base.push_back({f});
        return dedup(std::move(base));
      }
      case Op::Next:
        return bar_initial(f.arg());
      case Op::Until: {
        auto out = bar(f.arg(1), a);
        auto hold = bar(f.arg(0), a);
        for (auto& cfg : hold) {
          cfg.insert(f);
          out.push_back(std::move(cfg));
        }
        return dedup(std::move(out));
      }
      default:
        throw UnsupportedFragment("no transition rule for " + to_string(f));
    }
  }

  std::vector<Config> bar(const Formula& f, Letter a) {
    if (f.is(Op::Or)) {
      std::vector<Config> out;
      for (const Formula& g : f.args()) {
        auto part = bar(g, a);
        out.insert(out.end(), part.begin(), part.end());
      }
      return dedup(std::move(out));
    }
    if (f.is(Op::And)) {
      std::vector<Config> acc{{}};
      for (const Formula& g : f.args()) acc = product(acc, bar(g, a));
      return acc;
    }
    return delta_of(f, a);
  }

  std::vector<Config> bar_initial(const Formula& f) {
    if (f.is(Op::Or)) {
      std::vector<Config> out;
      for (const Formula& g : f.args()) {
        auto part = bar_initial(g);
        out.insert(out.end(), part.begin(), part.end());
      }
      return dedup(std::move(out));
    }
    if (f.is(Op::And)) {
      std::vector<Config> acc{{}};
      for (const Formula& g : f.args()) acc = product(acc, bar_initial(g));
      return acc;
    }
    return {{f}};
  }

  static std::vector<Config> product(const std::vector<Config>& a,
                                     const std::vector<Config>& b) {
    std::vector<Config> out;
    for (const Config& x : a)
      for (const Config& y : b) {
        Config u = x;
        u.insert(y.begin(), y.end());
        out.push_back(std::move(u));
      }
    return dedup(std::move(out));
  }

  static std::vector<Config> dedup(std::vector<Config> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  Alphabet alphabet_;
  std::map<Formula, std::vector<std::vector<Config>>> rows_;
};

} // namespace

Vwaa translate_ltl_to_vwaa(const Formula& pnf) {
  Translator tr(pnf);
  return tr.run(pnf);
}

StateKind classify_state(const Vwaa& v, int s) {
  StateKind k = v.kind_of(s);
  if (k == StateKind::Other)
    throw StructureViolation("state " + to_string(v.states[s]) +
                             " fits no may/must/loopless category");
  return k;
}

VwaaClass check_structure(const Vwaa& v) {
  size_t n = v.state_count();

  // Very weak: the reaches-relation between distinct states is acyclic.
  std::vector<StateSet> succ(n, 0);
  for (size_t s = 0; s < n; ++s) {
    StateSet all = 0;
    for (const auto& configs : v.delta[s])
      for (StateSet c : configs) all |= c;
    succ[s] = all & ~(StateSet{1} << s);
  }
  std::vector<int> color(n, 0);
  auto dfs = [&](auto&& self, int s) -> bool {
    color[s] = 1;
    bool ok = true;
    for_each_bit(succ[s], [&](int t) {
      if (!ok) return;
      if (color[t] == 1)
        ok = false;
      else if (color[t] == 0 && !self(self, t))
        ok = false;
    });
    color[s] = 2;
    return ok;
  };
  for (size_t s = 0; s < n; ++s)
    if (color[s] == 0 && !dfs(dfs, static_cast<int>(s)))
      return VwaaClass::NotVeryWeak;

  bool mmaa = true;
  for (size_t s = 0; s < n; ++s)
    if (v.kind_of(static_cast<int>(s)) == StateKind::Other) mmaa = false;
  if (mmaa) return VwaaClass::Mmaa;

  // May/must in the limit: only must-states, states without looping
  // transitions, and co-Buchi states; everything reachable from a must-state
  // is a must- or may-state.
  for (size_t s = 0; s < n; ++s) {
    StateKind k = v.kind_of(static_cast<int>(s));
    if (k == StateKind::Must) continue;
    if (!v.has_looping_transition(static_cast<int>(s))) continue;
    if ((v.cobuchi >> s) & 1) continue;
    return VwaaClass::Other;
  }
  // An accepting must-state is dead (a run through it loops there forever
  // and violates acceptance), so nothing reachable only through it can ever
  // matter to an accepting run; the reachability closure skips such states.
  StateSet dead_must = 0;
  std::vector<StateKind> kind(n);
  for (size_t s = 0; s < n; ++s) {
    kind[s] = v.kind_of(static_cast<int>(s));
    if (kind[s] == StateKind::Must && ((v.cobuchi >> s) & 1))
      dead_must |= StateSet{1} << s;
  }
  StateSet from_must = 0;
  for (size_t s = 0; s < n; ++s)
    if (kind[s] == StateKind::Must && !((dead_must >> s) & 1))
      for (const auto& configs : v.delta[s])
        for (StateSet c : configs) from_must |= c;
  for (;;) {
    StateSet grown = from_must;
    for_each_bit(from_must & ~dead_must, [&](int s) {
      for (const auto& configs : v.delta[s])
        for (StateSet c : configs) grown |= c;
    });
    if (grown == from_must) break;
    from_must = grown;
  }
  bool ok = true;
  for_each_bit(from_must, [&](int s) {
    if (kind[s] != StateKind::Must && kind[s] != StateKind::May) ok = false;
  });
  return ok ? VwaaClass::LimMmaa : VwaaClass::Other;
}

namespace {

StateSet full_mask(size_t n) {
  return n >= 64 ? ~StateSet{0} : (StateSet{1} << n) - 1;
}

// Rebuilds the automaton keeping only the states with keep[s]; transitions
// and initial configurations that mention a dropped state are removed.
Vwaa restrict_states(const Vwaa& v, const std::vector<bool>& keep) {
  StateSet kept_mask = 0;
  for (size_t s = 0; s < v.state_count(); ++s)
    if (keep[s]) kept_mask |= StateSet{1} << s;

  std::vector<int> remap(v.state_count(), -1);
  Vwaa out;
  out.alphabet = v.alphabet;
  out.structure = v.structure;
  for (size_t s = 0; s < v.state_count(); ++s) {
    if (!keep[s]) continue;
    remap[s] = static_cast<int>(out.states.size());
    out.states.push_back(v.states[s]);
    out.kinds.push_back(v.kinds[s]);
  }
  auto remap_mask = [&](StateSet m) {
    StateSet r = 0;
    for_each_bit(m, [&](int s) { r |= StateSet{1} << remap[s]; });
    return r;
  };
  out.delta.resize(out.states.size());
  for (size_t s = 0; s < v.state_count(); ++s) {
    if (remap[s] < 0) continue;
    out.delta[remap[s]].resize(v.letter_count());
    for (Letter a = 0; a < v.letter_count(); ++a) {
      std::vector<StateSet> configs;
      for (StateSet c : v.delta[s][a]) {
        if (c & ~kept_mask) continue;
        configs.push_back(remap_mask(c));
      }
      sort_unique(configs);
      out.delta[remap[s]][a] = std::move(configs);
    }
  }
  for (StateSet c : v.initial) {
    if (c & ~kept_mask) continue;
    out.initial.push_back(remap_mask(c));
  }
  sort_unique(out.initial);
  out.cobuchi = remap_mask(v.cobuchi & kept_mask);
  return out;
}

StateSet reachable_states(const Vwaa& v) {
  StateSet seen = 0;
  for (StateSet c : v.initial) seen |= c;
  for (;;) {
    StateSet grown = seen;
    for (size_t s = 0; s < v.state_count(); ++s)
      if ((seen >> s) & 1)
        for (const auto& configs : v.delta[s])
          for (StateSet c : configs) grown |= c;
    if (grown == seen) break;
    seen = grown;
  }
  return seen;
}

StateSet rename_bit(StateSet m, int from, int to) {
  if ((m >> from) & 1) {
    m &= ~(StateSet{1} << from);
    m |= StateSet{1} << to;
  }
  return m;
}

// Rows of j, with j renamed to i, equal to rows of i?
bool rows_equal(const Vwaa& v, int i, int j) {
  for (Letter a = 0; a < v.letter_count(); ++a) {
    std::vector<StateSet> renamed;
    for (StateSet c : v.delta[j][a]) renamed.push_back(rename_bit(c, j, i));
    sort_unique(renamed);
    if (renamed != v.delta[i][a]) return false;
  }
  return true;
}

} // namespace

Vwaa normalize_accepting_set(Vwaa v) {
  // Removing a state can leave another one with looping transitions only,
  // so the rewrite runs to a fixpoint on freshly measured categories.
  for (;;) {
    StateSet loopless = 0, must = 0;
    for (size_t s = 0; s < v.state_count(); ++s) {
      switch (v.kind_of(static_cast<int>(s))) {
        case StateKind::Loopless:
          loopless |= StateSet{1} << s;
          break;
        case StateKind::Must:
          must |= StateSet{1} << s;
          break;
        case StateKind::May:
          break;
        case StateKind::Other:
          throw StructureViolation(
              "normalize_accepting_set requires a may/must automaton");
      }
    }

    // Loopless states never loop, so their membership is irrelevant.
    v.cobuchi &= ~loopless;

    // A run through an accepting must-state loops there forever; drop such
    // states together with every transition touching them.
    StateSet dead = v.cobuchi & must;
    if (!dead) break;
    for (size_t s = 0; s < v.state_count(); ++s)
      for (auto& configs : v.delta[s])
        configs.erase(std::remove_if(configs.begin(), configs.end(),
                                     [&](StateSet c) { return (c & dead) != 0; }),
                      configs.end());
    v.initial.erase(std::remove_if(v.initial.begin(), v.initial.end(),
                                   [&](StateSet c) { return (c & dead) != 0; }),
                    v.initial.end());
    v.cobuchi &= ~dead;
    std::vector<bool> keep(v.state_count());
    for (size_t s = 0; s < v.state_count(); ++s)
      keep[s] = !((dead >> s) & 1);
    v = restrict_states(v, keep);
  }

  v.classify();

  // A non-accepting may-state can always wait on its selfloops; erase it
  // from every target configuration.
  StateSet vacuous = v.may_mask() & ~v.cobuchi;
  if (vacuous) {
    for (size_t s = 0; s < v.state_count(); ++s)
      for (auto& configs : v.delta[s]) {
        for (StateSet& c : configs) c &= ~vacuous;
        sort_unique(configs);
      }
    for (StateSet& c : v.initial) c &= ~vacuous;
    sort_unique(v.initial);
  }

  v.cobuchi = v.may_mask();
  return v;
}

Vwaa simplify_vwaa(Vwaa v) {
  for (;;) {
    // Drop states not reachable from the initial configurations.
    StateSet reach = reachable_states(v);
    if (reach != full_mask(v.state_count())) {
      std::vector<bool> keep(v.state_count());
      for (size_t s = 0; s < v.state_count(); ++s) keep[s] = (reach >> s) & 1;
      v = restrict_states(v, keep);
      continue;
    }

    // Merge a pair of states with the same rows and acceptance.
    bool merged = false;
    for (size_t i = 0; i < v.state_count() && !merged; ++i)
      for (size_t j = i + 1; j < v.state_count() && !merged; ++j) {
        if (((v.cobuchi >> i) & 1) != ((v.cobuchi >> j) & 1)) continue;
        if (!rows_equal(v, static_cast<int>(i), static_cast<int>(j))) continue;
        for (size_t s = 0; s < v.state_count(); ++s)
          for (auto& configs : v.delta[s]) {
            for (StateSet& c : configs)
              c = rename_bit(c, static_cast<int>(j), static_cast<int>(i));
            sort_unique(configs);
          }
        for (StateSet& c : v.initial)
          c = rename_bit(c, static_cast<int>(j), static_cast<int>(i));
        sort_unique(v.initial);
        std::vector<bool> keep(v.state_count(), true);
        keep[j] = false;
        v = restrict_states(v, keep);
        merged = true;
      }
    if (!merged) break;
  }

  // A transition is redundant when a strictly smaller target configuration
  // exists for the same source and letter.
  for (size_t s = 0; s < v.state_count(); ++s)
    for (auto& configs : v.delta[s]) {
      std::vector<StateSet> kept;
      for (StateSet c : configs) {
        bool dominated = false;
        for (StateSet d : configs)
          if (d != c && (d & c) == d) {
            dominated = true;
            break;
          }
        if (!dominated) kept.push_back(c);
      }
      configs = std::move(kept);
    }
  return v;
}

Formula mmaa_to_ltl(const Vwaa& input) {
  if (check_structure(input) != VwaaClass::Mmaa)
    throw NotMmaa("inverse translation requires a may/must automaton");
  // The case split below reads the co-Buchi set as "exactly the may-states".
  Vwaa v = input;
  v.classify();
  v = normalize_accepting_set(std::move(v));

  size_t nprops = v.alphabet.prop_count();
  auto letter_formula = [&](Letter a) {
    std::vector<Formula> lits;
    for (size_t p = 0; p < nprops; ++p) {
      Formula ap = Formula::ap(v.alphabet.props()[p]);
      lits.push_back(v.alphabet.has(a, p) ? ap : Formula::negation(ap));
    }
    return Formula::conj(std::move(lits));
  };

  std::vector<Formula> phi(v.state_count());
  std::vector<bool> done(v.state_count(), false);


  auto build = [&](auto&& self, int s) -> Formula {
    if (done[s]) return phi[s];
    StateSet bit = StateSet{1} << s;
    StateKind kind = v.kinds[s];
    std::vector<Formula> disjuncts;
    for (Letter a = 0; a < v.letter_count(); ++a)
      for (StateSet c : v.delta[s][a]) {
        // Looping transitions of may-states other than the selfloop can be
        // replaced by the selfloop; neither contributes a disjunct.
        if (kind == StateKind::May && (c & bit)) continue;
        std::vector<Formula> conjuncts{letter_formula(a)};
        StateSet rest = (kind == StateKind::Must) ? (c & ~bit) : c;
        for_each_bit(rest, [&](int q) {
          conjuncts.push_back(Formula::next(self(self, q)));
        });
        disjuncts.push_back(Formula::conj(std::move(conjuncts)));
      }
    Formula body = Formula::disj(std::move(disjuncts));
    Formula result;
    switch (kind) {
      case StateKind::May:
        result = Formula::eventually(body);
        break;
      case StateKind::Must:
        result = Formula::always(body);
        break;
      default:
        result = body;
        break;
    }
    phi[s] = result;
    done[s] = true;
    return result;
  };

  std::vector<Formula> choices;
  for (StateSet cfg : v.initial) {
    std::vector<Formula> conjuncts;
    for_each_bit(cfg, [&](int s) { conjuncts.push_back(build(build, s)); });
    choices.push_back(Formula::conj(std::move(conjuncts)));
  }
  return Formula::disj(std::move(choices));
}

std::string to_dot(const Vwaa& v) {
  std::string out = "digraph vwaa {\n  rankdir=TB;\n";
  for (size_t s = 0; s < v.state_count(); ++s) {
    bool acc = (v.cobuchi >> s) & 1;
    out += "  s" + std::to_string(s) + " [label=\"" + to_string(v.states[s]) +
           (acc ? "\", shape=doublecircle];\n" : "\", shape=circle];\n");
  }
  // One edge per (source, target configuration); branching targets go
  // through a point node, the empty configuration ends at a bare point.
  int helper = 0;
  for (size_t s = 0; s < v.state_count(); ++s) {
    std::map<StateSet, std::vector<Letter>> groups;
    for (Letter a = 0; a < v.letter_count(); ++a)
      for (StateSet c : v.delta[s][a]) groups[c].push_back(a);
    for (const auto& [c, letters] : groups) {
      std::string label = label_formula(letters, v.alphabet, LabelStyle::Names);
      std::string src = "s" + std::to_string(s);
      if (std::popcount(c) == 1) {
        out += "  " + src + " -> s" + std::to_string(std::countr_zero(c)) +
               " [label=\"" + label + "\"];\n";
      } else {
        std::string mid = "h" + std::to_string(helper++);
        out += "  " + mid + " [shape=point, width=0.05];\n";
        out += "  " + src + " -> " + mid + " [label=\"" + label +
               "\", arrowhead=none];\n";
        for_each_bit(c, [&](int t) {
          out += "  " + mid + " -> s" + std::to_string(t) + ";\n";
        });
      }
    }
  }
  for (size_t i = 0; i < v.initial.size(); ++i) {
    std::string src = "i" + std::to_string(i);
    out += "  " + src + " [shape=point, style=invis];\n";
    for_each_bit(v.initial[i], [&](int t) {
      out += "  " + src + " -> s" + std::to_string(t) + ";\n";
    });
  }
  out += "}\n";
  return out;
}

} // namespace ltl2dra
