#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ltl2dra/lasso.hh"
#include "ltl2dra/vwaa.hh"

namespace ltl2dra {

// Set of alternating-automaton configurations; sorted and distinct. A
// macrostate containing the empty configuration collapses to {empty}; the
// macrostate with no configurations is the rejecting sink.
struct Macrostate {
  std::vector<StateSet> configs;
  void normalize();
  bool operator==(const Macrostate& o) const = default;
  bool operator<(const Macrostate& o) const { return configs < o.configs; }
};

// Macrotransition id: state * letter_count + letter.
using TransId = uint32_t;

struct GenRabinPair {
  std::vector<int> bounding;             // the Z that generated the pair
  std::vector<TransId> fin;              // avoid eventually
  std::vector<std::vector<TransId>> infs; // hit each infinitely often
  std::vector<int> inf_states;           // co-Buchi state per inf set
};

// Deterministic, complete macrostate automaton with transition-based
// generalized Rabin acceptance.
struct Tgdra {
  Alphabet alphabet;
  std::vector<Macrostate> states;
  int initial = 0;
  std::vector<std::vector<int>> succ; // [state][letter]
  std::vector<GenRabinPair> pairs;

  size_t state_count() const { return states.size(); }
  size_t letter_count() const { return alphabet.letter_count(); }
  TransId trans_id(int state, Letter a) const {
    return static_cast<TransId>(state * letter_count() + a);
  }
  size_t trans_count() const { return states.size() * letter_count(); }
};

// Double powerset construction tracking all runs of the alternating
// automaton; reachable macrostates only, one macrotransition per letter.
Tgdra build_semiautomaton(const Vwaa& v, size_t state_cap = 1u << 20);

// The bounding sets Z for which generalized Rabin pairs are built, from the
// modest-run reachability recursion; ordered by (size, state list).
std::vector<StateSet> compute_bounding_sets(const Vwaa& v);

struct AllowedTransitions {
  std::vector<TransId> at;                    // AT_Z
  std::map<int, std::vector<TransId>> per_f;  // AT_Z^f, co-Buchi f in Z
};

AllowedTransitions allowed_macrotransitions(const Vwaa& v, const Tgdra& t,
                                            StateSet z);

Tgdra build_tgdra(const Vwaa& v, size_t state_cap = 1u << 20);

struct TgdraSimplifyOptions {
  bool acceptance = true; // pair and inf-set removal
  bool states = true;     // state merging
};

Tgdra simplify_tgdra(Tgdra t, TgdraSimplifyOptions opts = {});

bool tgdra_accepts_lasso(const Tgdra& t, const LassoWord& w);

std::string to_hoa(const Tgdra& t, const std::string& name);
std::string to_dot(const Tgdra& t);

} // namespace ltl2dra
