#include "ltl2dra/tgdra.hh"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <unordered_map>

#include "ltl2dra/errors.hh"
#include "ltl2dra/labels.hh"

namespace ltl2dra {

namespace {

template <typename F>
void for_each_bit(StateSet m, F f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> mask_to_indices(StateSet m) {
  std::vector<int> out;
  for_each_bit(m, [&](int s) { out.push_back(s); });
  return out;
}

} // namespace

void Macrostate::normalize() {
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  // A run reaching the empty configuration accepts whatever follows, so the
  // other configurations of the macrostate are irrelevant.
  if (!configs.empty() && configs.front() == 0) configs = {0};
}

Tgdra build_semiautomaton(const Vwaa& v, size_t state_cap) {
  Tgdra t;
  t.alphabet = v.alphabet;
  size_t nletters = v.letter_count();

  std::map<Macrostate, int> index;
  auto intern = [&](Macrostate m) {
    m.normalize();
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(t.states.size());
    if (t.states.size() >= state_cap)
      throw ResourceLimit("macrostate cap of " + std::to_string(state_cap) +
                          " exceeded");
    index.emplace(m, id);
    t.states.push_back(std::move(m));
    t.succ.emplace_back();
    return id;
  };

  Macrostate init;
  init.configs = v.initial;
  t.initial = intern(std::move(init));

  for (size_t s = 0; s < t.states.size(); ++s) {
    t.succ[s].resize(nletters, -1);
    for (Letter a = 0; a < nletters; ++a) {
      Macrostate next;
      for (StateSet cfg : t.states[s].configs) {
        auto targets = v.multi_targets(cfg, a);
        next.configs.insert(next.configs.end(), targets.begin(),
                            targets.end());
      }
      int id = intern(std::move(next)); // may reallocate states/succ
      t.succ[s][a] = id;
    }
  }
  return t;
}

namespace {

void sort_unique(std::vector<StateSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Pairwise unions of two families of state sets.
std::vector<StateSet> cross_union(const std::vector<StateSet>& a,
                                  const std::vector<StateSet>& b) {
  std::vector<StateSet> out;
  out.reserve(a.size() * b.size());
  for (StateSet x : a)
    for (StateSet y : b) out.push_back(x | y);
  sort_unique(out);
  return out;
}

// Evaluates the modest-run reachability functions z and y per state.
//
// Must-states keep spawning their looping targets forever, so their result
// joins one pick per spawned state over every subset of loop targets.
// May-states wait on pure selfloops, so only their exits matter. States
// outside both categories (the co-Buchi loop states of the wider fragment,
// e.g. an until whose left side is temporal) spawn obligations on every
// looping step they take; each spawned instance evolves independently, so
// their contributions are closed under union before joining an exit.
class BoundingSets {
public:
  explicit BoundingSets(const Vwaa& v) : v_(v), must_(v.must_mask()) {
    z_.resize(v.state_count());
    y_.resize(v.state_count());
    z_done_.resize(v.state_count(), false);
    y_done_.resize(v.state_count(), false);
  }

  std::vector<StateSet> initial_union() {
    std::vector<StateSet> out;
    for (StateSet cfg : v_.initial) {
      auto part = y_of_config(cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
    sort_unique(out);
    return out;
  }

private:
  bool is_must(int s) const { return (must_ >> s) & 1; }

  // Unions of subsets of the one-step looping-target remainders of s.
  std::vector<StateSet> target_unions(int s) {
    StateSet bit = StateSet{1} << s;
    std::vector<StateSet> targets;
    for (const auto& configs : v_.delta[s])
      for (StateSet c : configs)
        if (c & bit) targets.push_back(c & ~bit);
    sort_unique(targets);
    std::vector<StateSet> unions{0};
    for (StateSet tset : targets) {
      std::vector<StateSet> grown = unions;
      for (StateSet u : unions) grown.push_back(u | tset);
      sort_unique(grown);
      unions = std::move(grown);
    }
    return unions;
  }

  bool spawns_while_looping(int s) const {
    return v_.kinds[s] == StateKind::Other;
  }

  // All finite unions of loop-spawned contributions of s, including the
  // empty union.
  std::vector<StateSet> loop_spawn_closure(int s) {
    StateSet bit = StateSet{1} << s;
    std::vector<StateSet> picks;
    for (const auto& configs : v_.delta[s])
      for (StateSet c : configs)
        if (c & bit) {
          auto part = y_of_config(c & ~bit);
          picks.insert(picks.end(), part.begin(), part.end());
        }
    sort_unique(picks);
    std::vector<StateSet> closure{0};
    for (;;) {
      std::vector<StateSet> grown = closure;
      for (StateSet u : closure)
        for (StateSet p : picks) grown.push_back(u | p);
      sort_unique(grown);
      if (grown == closure) return closure;
      closure = std::move(grown);
    }
  }

  const std::vector<StateSet>& z_of(int s) {
    if (z_done_[s]) return z_[s];
    std::vector<StateSet> acc;
    if (is_must(s)) {
      for (StateSet u : target_unions(s)) {
        auto part = z_of_config(u);
        acc.insert(acc.end(), part.begin(), part.end());
      }
    } else {
      StateSet bit = StateSet{1} << s;
      for (const auto& configs : v_.delta[s])
        for (StateSet c : configs) {
          if (c & bit) continue;
          auto part = z_of_config(c);
          acc.insert(acc.end(), part.begin(), part.end());
        }
      sort_unique(acc);
      if (spawns_while_looping(s)) acc = cross_union(acc, loop_spawn_closure(s));
    }
    sort_unique(acc);
    for (StateSet& m : acc) m |= StateSet{1} << s;
    sort_unique(acc);
    z_done_[s] = true;
    return z_[s] = std::move(acc);
  }

  const std::vector<StateSet>& y_of(int s) {
    if (y_done_[s]) return y_[s];
    std::vector<StateSet> acc;
    if (is_must(s)) {
      acc = z_of(s);
    } else {
      StateSet bit = StateSet{1} << s;
      for (const auto& configs : v_.delta[s])
        for (StateSet c : configs) {
          if (c & bit) continue;
          auto part = y_of_config(c);
          acc.insert(acc.end(), part.begin(), part.end());
        }
      sort_unique(acc);
      if (spawns_while_looping(s)) acc = cross_union(acc, loop_spawn_closure(s));
    }
    y_done_[s] = true;
    return y_[s] = std::move(acc);
  }

  std::vector<StateSet> z_of_config(StateSet cfg) {
    std::vector<StateSet> acc{0};
    for_each_bit(cfg, [&](int s) {
      if (acc.empty()) return;
      acc = cross_union(acc, z_of(s));
    });
    return acc;
  }

  std::vector<StateSet> y_of_config(StateSet cfg) {
    std::vector<StateSet> acc{0};
    for_each_bit(cfg, [&](int s) {
      if (acc.empty()) return;
      acc = cross_union(acc, y_of(s));
    });
    return acc;
  }

  const Vwaa& v_;
  StateSet must_;
  std::vector<std::vector<StateSet>> z_, y_;
  std::vector<bool> z_done_, y_done_;
};

} // namespace

std::vector<StateSet> compute_bounding_sets(const Vwaa& v) {
  BoundingSets bs(v);
  std::vector<StateSet> zs = bs.initial_union();

  if (v.structure == VwaaClass::LimMmaa) {
    // Pairs are sound only for sets of must-states and may-states reachable
    // from them.
    StateSet must = v.must_mask();
    StateSet may = v.may_mask();
    std::vector<StateSet> filtered;
    for (StateSet z : zs) {
      if (z & ~(must | may)) continue;
      StateSet reach = z & must;
      for (;;) {
        StateSet grown = reach;
        for_each_bit(reach, [&](int s) {
          for (const auto& configs : v.delta[s])
            for (StateSet c : configs) grown |= c;
        });
        if (grown == reach) break;
        reach = grown;
      }
      if ((z & may) & ~reach) continue;
      filtered.push_back(z);
    }
    zs = std::move(filtered);
  }

  std::sort(zs.begin(), zs.end(), [](StateSet a, StateSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_to_indices(a) < mask_to_indices(b);
  });
  return zs;
}

AllowedTransitions allowed_macrotransitions(const Vwaa& v, const Tgdra& t,
                                            StateSet z) {
  StateSet must_all = v.must_mask();
  StateSet must_z = z & must_all;
  StateSet free = z & ~must_all;
  if (std::popcount(free) > 22)
    throw ResourceLimit("allowed-configuration enumeration too large");

  // Allowed configurations: subsets of Z whose must-states are must(Z).
  std::vector<StateSet> ac;
  std::vector<int> free_bits = mask_to_indices(free);
  for (StateSet pick = 0; pick < (StateSet{1} << free_bits.size()); ++pick) {
    StateSet c = must_z;
    for (size_t i = 0; i < free_bits.size(); ++i)
      if ((pick >> i) & 1) c |= StateSet{1} << free_bits[i];
    ac.push_back(c);
  }
  sort_unique(ac);

  size_t nletters = t.letter_count();
  // Allowed configurations reachable from an allowed configuration in one
  // a-step.
  std::vector<std::set<StateSet>> reachable_ac(nletters);
  for (Letter a = 0; a < nletters; ++a)
    for (StateSet c1 : ac)
      for (StateSet c2 : v.multi_targets(c1, a))
        if (std::binary_search(ac.begin(), ac.end(), c2))
          reachable_ac[a].insert(c2);

  AllowedTransitions out;
  for (size_t m = 0; m < t.state_count(); ++m)
    for (Letter a = 0; a < nletters; ++a) {
      const Macrostate& m2 = t.states[t.succ[m][a]];
      bool allowed = false;
      for (StateSet c2 : m2.configs)
        if (reachable_ac[a].count(c2)) {
          allowed = true;
          break;
        }
      if (allowed) out.at.push_back(t.trans_id(static_cast<int>(m), a));
    }

  for_each_bit(v.cobuchi & z, [&](int f) {
    StateSet fbit = StateSet{1} << f;
    std::vector<bool> letter_ok(nletters, false);
    for (Letter a = 0; a < nletters; ++a)
      for (StateSet c : v.delta[f][a])
        if (!(c & fbit) && !(c & ~z)) {
          letter_ok[a] = true;
          break;
        }
    std::vector<TransId> lf;
    for (TransId r : out.at)
      if (letter_ok[r % nletters]) lf.push_back(r);
    out.per_f[f] = std::move(lf);
  });
  return out;
}

Tgdra build_tgdra(const Vwaa& v, size_t state_cap) {
  if (v.structure != VwaaClass::Mmaa && v.structure != VwaaClass::LimMmaa)
    throw NotMmaa("macrostate construction requires a may/must (in the limit) "
                  "automaton");
  Tgdra t = build_semiautomaton(v, state_cap);
  size_t all = t.trans_count();
  for (StateSet z : compute_bounding_sets(v)) {
    AllowedTransitions at = allowed_macrotransitions(v, t, z);
    GenRabinPair pair;
    pair.bounding = mask_to_indices(z);
    std::vector<bool> in_at(all, false);
    for (TransId r : at.at) in_at[r] = true;
    for (TransId r = 0; r < all; ++r)
      if (!in_at[r]) pair.fin.push_back(r);
    for (auto& [f, lf] : at.per_f) {
      pair.inf_states.push_back(f);
      pair.infs.push_back(std::move(lf));
    }
    t.pairs.push_back(std::move(pair));
  }
  return t;
}

namespace {

bool subset_of(const std::vector<TransId>& a, const std::vector<TransId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// fin/infs hold sorted transition id lists; complement of fin.
std::vector<TransId> complement(const std::vector<TransId>& fin, size_t all) {
  std::vector<TransId> out;
  std::vector<bool> in(all, false);
  for (TransId r : fin) in[r] = true;
  for (TransId r = 0; r < all; ++r)
    if (!in[r]) out.push_back(r);
  return out;
}

void simplify_acceptance(Tgdra& t) {
  size_t all = t.trans_count();

  // Unsatisfiable pairs: every transition forbidden, or some obligation
  // impossible.
  std::erase_if(t.pairs, [&](const GenRabinPair& p) {
    if (p.fin.size() == all) return true;
    for (const auto& inf : p.infs)
      if (inf.empty()) return true;
    return false;
  });

  // Within a pair, an obligation implied by a smaller one is dropped.
  for (GenRabinPair& p : t.pairs) {
    std::vector<bool> drop(p.infs.size(), false);
    for (size_t j = p.infs.size(); j-- > 0;) {
      for (size_t l = 0; l < p.infs.size(); ++l) {
        if (l == j || drop[l]) continue;
        if (subset_of(p.infs[l], p.infs[j])) {
          drop[j] = true;
          break;
        }
      }
    }
    for (size_t j = p.infs.size(); j-- > 0;)
      if (drop[j]) {
        p.infs.erase(p.infs.begin() + j);
        p.inf_states.erase(p.inf_states.begin() + j);
      }
  }

  // A pair whose satisfaction forces another retained pair is redundant:
  // fin_j within fin_i, and every obligation of j covered either by an
  // obligation of i or by everything i may still use.
  std::vector<bool> removed(t.pairs.size(), false);
  for (size_t i = 0; i < t.pairs.size(); ++i) {
    const GenRabinPair& pi = t.pairs[i];
    std::vector<TransId> allowed_i = complement(pi.fin, all);
    for (size_t j = 0; j < t.pairs.size(); ++j) {
      if (i == j || removed[j]) continue;
      const GenRabinPair& pj = t.pairs[j];
      if (!subset_of(pj.fin, pi.fin)) continue;
      bool all_covered = true;
      for (const auto& lg : pj.infs) {
        bool covered = subset_of(allowed_i, lg);
        for (const auto& lf : pi.infs) {
          if (covered) break;
          covered = subset_of(lf, lg);
        }
        if (!covered) {
          all_covered = false;
          break;
        }
      }
      if (all_covered) {
        removed[i] = true;
        break;
      }
    }
  }
  for (size_t i = t.pairs.size(); i-- > 0;)
    if (removed[i]) t.pairs.erase(t.pairs.begin() + i);
}

// Per-transition acceptance marks, numbered pair by pair: fin, then infs.
std::vector<std::vector<int>> transition_marks(const Tgdra& t) {
  std::vector<std::vector<int>> marks(t.trans_count());
  int next = 0;
  for (const GenRabinPair& p : t.pairs) {
    for (TransId r : p.fin) marks[r].push_back(next);
    ++next;
    for (const auto& inf : p.infs) {
      for (TransId r : inf) marks[r].push_back(next);
      ++next;
    }
  }
  return marks;
}

void merge_states(Tgdra& t) {
  size_t n = t.state_count();
  size_t nletters = t.letter_count();
  auto marks = transition_marks(t);

  // Transition signatures shared across states.
  std::map<std::vector<int>, int> sig_ids;
  std::vector<std::vector<int>> trans_sig(n, std::vector<int>(nletters));
  for (size_t s = 0; s < n; ++s)
    for (Letter a = 0; a < nletters; ++a) {
      auto& m = marks[t.trans_id(static_cast<int>(s), a)];
      auto [it, _] = sig_ids.emplace(m, static_cast<int>(sig_ids.size()));
      trans_sig[s][a] = it->second;
    }

  // Coarsest partition where equivalent states have, letter by letter,
  // successors in the same class and transitions in the same acceptance
  // sets.
  std::vector<int> cls(n, 0);
  for (;;) {
    std::map<std::vector<int>, int> next_ids;
    std::vector<int> next(n);
    for (size_t s = 0; s < n; ++s) {
      std::vector<int> sig{cls[s]};
      for (Letter a = 0; a < nletters; ++a) {
        sig.push_back(cls[t.succ[s][a]]);
        sig.push_back(trans_sig[s][a]);
      }
      auto [it, _] = next_ids.emplace(std::move(sig),
                                      static_cast<int>(next_ids.size()));
      next[s] = it->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }

  // An initial state without incoming transitions is passed once; merge it
  // with a row-equal state regardless of acceptance.
  int init_cls = cls[t.initial];
  bool incoming = false;
  for (size_t s = 0; s < n && !incoming; ++s)
    for (Letter a = 0; a < nletters && !incoming; ++a)
      if (cls[t.succ[s][a]] == init_cls) incoming = true;
  if (!incoming) {
    for (size_t s = 0; s < n; ++s) {
      if (cls[s] == init_cls) continue;
      bool same_rows = true;
      for (Letter a = 0; a < nletters && same_rows; ++a)
        if (cls[t.succ[s][a]] != cls[t.succ[t.initial][a]]) same_rows = false;
      if (same_rows) {
        t.initial = static_cast<int>(s);
        break;
      }
    }
  }

  // Quotient, renumbered breadth-first from the initial state.
  std::map<int, int> class_new;
  std::vector<int> rep_of_class(n, -1);
  for (size_t s = 0; s < n; ++s)
    if (rep_of_class[cls[s]] < 0) rep_of_class[cls[s]] = static_cast<int>(s);

  std::vector<int> queue{cls[t.initial]};
  class_new[cls[t.initial]] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int c = queue[head];
    int rep = rep_of_class[c];
    for (Letter a = 0; a < nletters; ++a) {
      int tc = cls[t.succ[rep][a]];
      if (!class_new.count(tc)) {
        class_new[tc] = static_cast<int>(queue.size());
        queue.push_back(tc);
      }
    }
  }

  Tgdra out;
  out.alphabet = t.alphabet;
  out.initial = 0;
  out.states.resize(queue.size());
  out.succ.resize(queue.size());
  for (size_t i = 0; i < queue.size(); ++i) {
    int rep = rep_of_class[queue[i]];
    out.states[i] = t.states[rep];
    out.succ[i].resize(nletters);
    for (Letter a = 0; a < nletters; ++a)
      out.succ[i][a] = class_new.at(cls[t.succ[rep][a]]);
  }
  for (const GenRabinPair& p : t.pairs) {
    GenRabinPair q;
    q.bounding = p.bounding;
    q.inf_states = p.inf_states;
    auto project = [&](const std::vector<TransId>& rs) {
      std::vector<TransId> out_rs;
      for (TransId r : rs) {
        int s = static_cast<int>(r / nletters);
        Letter a = static_cast<Letter>(r % nletters);
        auto it = class_new.find(cls[s]);
        if (it == class_new.end()) continue; // unreachable after init merge
        out_rs.push_back(out.trans_id(it->second, a));
      }
      std::sort(out_rs.begin(), out_rs.end());
      out_rs.erase(std::unique(out_rs.begin(), out_rs.end()), out_rs.end());
      return out_rs;
    };
    q.fin = project(p.fin);
    for (const auto& inf : p.infs) q.infs.push_back(project(inf));
    out.pairs.push_back(std::move(q));
  }
  t = std::move(out);
}

} // namespace

Tgdra simplify_tgdra(Tgdra t, TgdraSimplifyOptions opts) {
  if (opts.acceptance) simplify_acceptance(t);
  if (opts.states) merge_states(t);
  return t;
}

bool tgdra_accepts_lasso(const Tgdra& t, const LassoWord& w) {
  if (!(w.alphabet == t.alphabet))
    throw AlphabetMismatch("lasso word alphabet differs from the automaton's");
  int state = t.initial;
  for (Letter a : w.prefix) state = t.succ[state][a];

  std::map<std::pair<int, size_t>, size_t> seen;
  std::vector<TransId> trail;
  size_t phase = 0;
  for (;;) {
    auto key = std::make_pair(state, phase);
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::set<TransId> cycle(trail.begin() + it->second, trail.end());
      for (const GenRabinPair& p : t.pairs) {
        bool ok = true;
        for (TransId r : cycle)
          if (std::binary_search(p.fin.begin(), p.fin.end(), r)) {
            ok = false;
            break;
          }
        for (const auto& inf : p.infs) {
          if (!ok) break;
          bool hit = false;
          for (TransId r : cycle)
            if (std::binary_search(inf.begin(), inf.end(), r)) {
              hit = true;
              break;
            }
          ok = hit;
        }
        if (ok) return true;
      }
      return false;
    }
    seen.emplace(key, trail.size());
    Letter a = w.period[phase];
    trail.push_back(t.trans_id(state, a));
    state = t.succ[state][a];
    phase = (phase + 1) % w.period.size();
  }
}

std::string to_hoa(const Tgdra& t, const std::string& name) {
  std::string out = "HOA: v1\n";
  out += "name: \"" + name + "\"\n";
  out += "States: " + std::to_string(t.state_count()) + "\n";
  out += "Start: " + std::to_string(t.initial) + "\n";
  out += "AP: " + std::to_string(t.alphabet.prop_count());
  for (const auto& p : t.alphabet.props()) out += " \"" + p + "\"";
  out += "\n";
  int nsets = 0;
  for (const GenRabinPair& p : t.pairs)
    nsets += 1 + static_cast<int>(p.infs.size());
  out += "acc-name: generalized-Rabin " + std::to_string(t.pairs.size());
  for (const GenRabinPair& p : t.pairs)
    out += " " + std::to_string(p.infs.size());
  out += "\n";
  if (t.pairs.empty()) {
    out += "Acceptance: 0 f\n";
  } else {
    out += "Acceptance: " + std::to_string(nsets) + " ";
    int mark = 0;
    for (size_t i = 0; i < t.pairs.size(); ++i) {
      if (i) out += " | ";
      out += "(Fin(" + std::to_string(mark++) + ")";
      for (size_t j = 0; j < t.pairs[i].infs.size(); ++j)
        out += " & Inf(" + std::to_string(mark++) + ")";
      out += ")";
    }
    out += "\n";
  }
  out += "properties: trans-labels explicit-labels trans-acc deterministic "
         "complete\n";
  out += "--BODY--\n";
  auto marks = transition_marks(t);
  size_t nletters = t.letter_count();
  for (size_t s = 0; s < t.state_count(); ++s) {
    out += "State: " + std::to_string(s) + "\n";
    // Group letters with the same target and marks.
    std::map<std::pair<int, std::vector<int>>, std::vector<Letter>> groups;
    for (Letter a = 0; a < nletters; ++a)
      groups[{t.succ[s][a], marks[t.trans_id(static_cast<int>(s), a)]}]
          .push_back(a);
    for (const auto& [key, letters] : groups) {
      out += "[" + label_formula(letters, t.alphabet, LabelStyle::HoaIndices) +
             "] " + std::to_string(key.first);
      if (!key.second.empty()) {
        out += " {";
        for (size_t i = 0; i < key.second.size(); ++i) {
          if (i) out += " ";
          out += std::to_string(key.second[i]);
        }
        out += "}";
      }
      out += "\n";
    }
  }
  out += "--END--\n";
  return out;
}

std::string to_dot(const Tgdra& t) {
  std::string out = "digraph tgdra {\n  rankdir=LR;\n"
                    "  init [shape=point, style=invis];\n";
  for (size_t s = 0; s < t.state_count(); ++s)
    out += "  m" + std::to_string(s) + " [shape=box, style=rounded, label=\"m" +
           std::to_string(s) + "\"];\n";
  out += "  init -> m" + std::to_string(t.initial) + ";\n";
  auto marks = transition_marks(t);
  size_t nletters = t.letter_count();
  for (size_t s = 0; s < t.state_count(); ++s) {
    std::map<std::pair<int, std::vector<int>>, std::vector<Letter>> groups;
    for (Letter a = 0; a < nletters; ++a)
      groups[{t.succ[s][a], marks[t.trans_id(static_cast<int>(s), a)]}]
          .push_back(a);
    for (const auto& [key, letters] : groups) {
      std::string label = label_formula(letters, t.alphabet, LabelStyle::Names);
      if (!key.second.empty()) {
        label += " {";
        for (size_t i = 0; i < key.second.size(); ++i) {
          if (i) label += ",";
          label += std::to_string(key.second[i]);
        }
        label += "}";
      }
      out += "  m" + std::to_string(s) + " -> m" + std::to_string(key.first) +
             " [label=\"" + label + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

} // namespace ltl2dra
