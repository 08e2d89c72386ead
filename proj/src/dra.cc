#include "ltl2dra/dra.hh"

#include <algorithm>
#include <map>
#include <set>

#include "ltl2dra/errors.hh"
#include "ltl2dra/labels.hh"

namespace ltl2dra {

std::string Dra::size_string() const {
  return std::to_string(states.size()) + "(" + std::to_string(pairs.size()) +
         ")";
}

Dra degeneralize(const Tgdra& t, size_t state_cap) {
  Dra d;
  d.alphabet = t.alphabet;
  size_t k = t.pairs.size();
  size_t nletters = t.letter_count();

  // Per pair: membership tables for K and each L^j.
  size_t all = t.trans_count();
  std::vector<std::vector<char>> in_fin(k, std::vector<char>(all, 0));
  std::vector<std::vector<std::vector<char>>> in_inf(k);
  for (size_t i = 0; i < k; ++i) {
    for (TransId r : t.pairs[i].fin) in_fin[i][r] = 1;
    in_inf[i].assign(t.pairs[i].infs.size(), std::vector<char>(all, 0));
    for (size_t j = 0; j < t.pairs[i].infs.size(); ++j)
      for (TransId r : t.pairs[i].infs[j]) in_inf[i][j][r] = 1;
  }

  std::map<DraState, int> index;
  auto intern = [&](DraState q) {
    auto it = index.find(q);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(d.states.size());
    if (d.states.size() >= state_cap)
      throw ResourceLimit("degeneralization state cap exceeded");
    index.emplace(q, id);
    d.states.push_back(std::move(q));
    d.succ.emplace_back();
    return id;
  };

  DraState init{t.initial, std::vector<int>(k, 1)};
  d.initial = intern(std::move(init));

  for (size_t s = 0; s < d.states.size(); ++s) {
    d.succ[s].resize(nletters, -1);
    for (Letter a = 0; a < nletters; ++a) {
      DraState cur = d.states[s]; // copy: intern may reallocate
      TransId r = t.trans_id(cur.macro, a);
      DraState next{t.succ[cur.macro][a], std::vector<int>(k, 0)};
      for (size_t i = 0; i < k; ++i) {
        int h = static_cast<int>(t.pairs[i].infs.size());
        int l = cur.levels[i];
        int nl;
        if (in_fin[i][r]) {
          nl = 0;
        } else {
          int start = (l >= 1 && l <= h) ? l : 1;
          nl = start;
          while (nl <= h && in_inf[i][nl - 1][r]) ++nl;
        }
        next.levels[i] = nl;
      }
      int id = intern(std::move(next));
      d.succ[s][a] = id;
    }
  }

  d.pairs.resize(k);
  for (size_t q = 0; q < d.states.size(); ++q)
    for (size_t i = 0; i < k; ++i) {
      int h = static_cast<int>(t.pairs[i].infs.size());
      if (d.states[q].levels[i] == 0) d.pairs[i].fin.push_back(static_cast<int>(q));
      if (d.states[q].levels[i] == h + 1)
        d.pairs[i].inf.push_back(static_cast<int>(q));
    }
  return d;
}

namespace {

std::vector<std::vector<char>> acceptance_profile(const Dra& d) {
  std::vector<std::vector<char>> prof(d.state_count(),
                                      std::vector<char>(2 * d.pairs.size(), 0));
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    for (int q : d.pairs[i].fin) prof[q][2 * i] = 1;
    for (int q : d.pairs[i].inf) prof[q][2 * i + 1] = 1;
  }
  return prof;
}

} // namespace

Dra simplify_dra(Dra d) {
  size_t n = d.state_count();
  size_t nletters = d.letter_count();
  auto prof = acceptance_profile(d);

  // Initial classes by acceptance membership.
  std::map<std::vector<char>, int> prof_ids;
  std::vector<int> cls(n);
  for (size_t s = 0; s < n; ++s) {
    auto [it, _] = prof_ids.emplace(prof[s], static_cast<int>(prof_ids.size()));
    cls[s] = it->second;
  }
  for (;;) {
    std::map<std::vector<int>, int> next_ids;
    std::vector<int> next(n);
    for (size_t s = 0; s < n; ++s) {
      std::vector<int> sig{cls[s]};
      for (Letter a = 0; a < nletters; ++a) sig.push_back(cls[d.succ[s][a]]);
      auto [it, _] =
          next_ids.emplace(std::move(sig), static_cast<int>(next_ids.size()));
      next[s] = it->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }

  // Initial state nothing points at: merge it with any row-equal state,
  // acceptance aside.
  int init_cls = cls[d.initial];
  bool incoming = false;
  for (size_t s = 0; s < n && !incoming; ++s)
    for (Letter a = 0; a < nletters && !incoming; ++a)
      if (cls[d.succ[s][a]] == init_cls) incoming = true;
  if (!incoming) {
    for (size_t s = 0; s < n; ++s) {
      if (cls[s] == init_cls) continue;
      bool same_rows = true;
      for (Letter a = 0; a < nletters && same_rows; ++a)
        if (cls[d.succ[s][a]] != cls[d.succ[d.initial][a]]) same_rows = false;
      if (same_rows) {
        d.initial = static_cast<int>(s);
        break;
      }
    }
  }

  std::vector<int> rep_of_class(n, -1);
  for (size_t s = 0; s < n; ++s)
    if (rep_of_class[cls[s]] < 0) rep_of_class[cls[s]] = static_cast<int>(s);

  std::map<int, int> class_new;
  std::vector<int> queue{cls[d.initial]};
  class_new[cls[d.initial]] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int rep = rep_of_class[queue[head]];
    for (Letter a = 0; a < nletters; ++a) {
      int tc = cls[d.succ[rep][a]];
      if (!class_new.count(tc)) {
        class_new[tc] = static_cast<int>(queue.size());
        queue.push_back(tc);
      }
    }
  }

  Dra out;
  out.alphabet = d.alphabet;
  out.initial = 0;
  out.states.resize(queue.size());
  out.succ.resize(queue.size());
  for (size_t i = 0; i < queue.size(); ++i) {
    int rep = rep_of_class[queue[i]];
    out.states[i] = d.states[rep];
    out.succ[i].resize(nletters);
    for (Letter a = 0; a < nletters; ++a)
      out.succ[i][a] = class_new.at(cls[d.succ[rep][a]]);
  }
  out.pairs.resize(d.pairs.size());
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    std::set<int> fin, inf;
    for (int q : d.pairs[i].fin)
      if (auto it = class_new.find(cls[q]); it != class_new.end())
        fin.insert(it->second);
    for (int q : d.pairs[i].inf)
      if (auto it = class_new.find(cls[q]); it != class_new.end())
        inf.insert(it->second);
    out.pairs[i].fin.assign(fin.begin(), fin.end());
    out.pairs[i].inf.assign(inf.begin(), inf.end());
  }
  return out;
}

bool dra_accepts_lasso(const Dra& d, const LassoWord& w) {
  if (!(w.alphabet == d.alphabet))
    throw AlphabetMismatch("lasso word alphabet differs from the automaton's");
  int state = d.initial;
  for (Letter a : w.prefix) state = d.succ[state][a];

  std::map<std::pair<int, size_t>, size_t> seen;
  std::vector<int> trail;
  size_t phase = 0;
  for (;;) {
    auto key = std::make_pair(state, phase);
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::set<int> cycle(trail.begin() + it->second, trail.end());
      cycle.insert(state); // states on the cycle, including the closing one
      for (const RabinPair& p : d.pairs) {
        bool ok = true;
        for (int q : cycle)
          if (std::binary_search(p.fin.begin(), p.fin.end(), q)) {
            ok = false;
            break;
          }
        if (ok) {
          bool hit = false;
          for (int q : cycle)
            if (std::binary_search(p.inf.begin(), p.inf.end(), q)) {
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
    trail.push_back(state);
    state = d.succ[state][w.period[phase]];
    phase = (phase + 1) % w.period.size();
  }
}

std::string to_hoa(const Dra& d, const std::string& name) {
  std::string out = "HOA: v1\n";
  out += "name: \"" + name + "\"\n";
  out += "States: " + std::to_string(d.state_count()) + "\n";
  out += "Start: " + std::to_string(d.initial) + "\n";
  out += "AP: " + std::to_string(d.alphabet.prop_count());
  for (const auto& p : d.alphabet.props()) out += " \"" + p + "\"";
  out += "\n";
  out += "acc-name: Rabin " + std::to_string(d.pairs.size()) + "\n";
  if (d.pairs.empty()) {
    out += "Acceptance: 0 f\n";
  } else {
    out += "Acceptance: " + std::to_string(2 * d.pairs.size()) + " ";
    for (size_t i = 0; i < d.pairs.size(); ++i) {
      if (i) out += " | ";
      out += "(Fin(" + std::to_string(2 * i) + ") & Inf(" +
             std::to_string(2 * i + 1) + "))";
    }
    out += "\n";
  }
  out += "properties: trans-labels explicit-labels state-acc deterministic "
         "complete\n";
  out += "--BODY--\n";
  auto prof = acceptance_profile(d);
  size_t nletters = d.letter_count();
  for (size_t s = 0; s < d.state_count(); ++s) {
    out += "State: " + std::to_string(s);
    std::string marks;
    for (size_t i = 0; i < 2 * d.pairs.size(); ++i)
      if (prof[s][i]) marks += (marks.empty() ? "" : " ") + std::to_string(i);
    if (!marks.empty()) out += " {" + marks + "}";
    out += "\n";
    std::map<int, std::vector<Letter>> groups;
    for (Letter a = 0; a < nletters; ++a) groups[d.succ[s][a]].push_back(a);
    for (const auto& [target, letters] : groups)
      out += "[" + label_formula(letters, d.alphabet, LabelStyle::HoaIndices) +
             "] " + std::to_string(target) + "\n";
  }
  out += "--END--\n";
  return out;
}

std::string to_dstar(const Dra& d) {
  std::string out = "DRA v2 explicit\n";
  out += "Comment: \"ltl2dra\"\n";
  out += "States: " + std::to_string(d.state_count()) + "\n";
  out += "Acceptance-Pairs: " + std::to_string(d.pairs.size()) + "\n";
  out += "Start: " + std::to_string(d.initial) + "\n";
  out += "AP: " + std::to_string(d.alphabet.prop_count());
  for (const auto& p : d.alphabet.props()) out += " \"" + p + "\"";
  out += "\n---\n";
  auto prof = acceptance_profile(d);
  for (size_t s = 0; s < d.state_count(); ++s) {
    out += "State: " + std::to_string(s) + "\n";
    out += "Acc-Sig:";
    for (size_t i = 0; i < d.pairs.size(); ++i) {
      if (prof[s][2 * i + 1]) out += " +" + std::to_string(i);
      if (prof[s][2 * i]) out += " -" + std::to_string(i);
    }
    out += "\n";
    for (Letter a = 0; a < d.letter_count(); ++a)
      out += std::to_string(d.succ[s][a]) + "\n";
  }
  return out;
}

std::string to_dot(const Dra& d) {
  std::string out = "digraph dra {\n  rankdir=LR;\n"
                    "  init [shape=point, style=invis];\n";
  auto prof = acceptance_profile(d);
  for (size_t s = 0; s < d.state_count(); ++s) {
    std::string label = "q" + std::to_string(s);
    for (size_t i = 0; i < d.pairs.size(); ++i) {
      if (prof[s][2 * i + 1]) label += " +" + std::to_string(i);
      if (prof[s][2 * i]) label += " -" + std::to_string(i);
    }
    out += "  q" + std::to_string(s) + " [shape=circle, label=\"" + label +
           "\"];\n";
  }
  out += "  init -> q" + std::to_string(d.initial) + ";\n";
  for (size_t s = 0; s < d.state_count(); ++s) {
    std::map<int, std::vector<Letter>> groups;
    for (Letter a = 0; a < d.letter_count(); ++a)
      groups[d.succ[s][a]].push_back(a);
    for (const auto& [target, letters] : groups)
      out += "  q" + std::to_string(s) + " -> q" + std::to_string(target) +
             " [label=\"" + label_formula(letters, d.alphabet,
                                          LabelStyle::Names) +
             "\"];\n";
  }
  out += "}\n";
  return out;
}

} // namespace ltl2dra
