#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltl2dra/formula.hh"
#include "ltl2dra/lasso.hh"

namespace ltl2dra {

// A configuration: set of automaton states, bit i = states[i].
using StateSet = uint64_t;

enum class StateKind : uint8_t { May, Must, Loopless, Other };

enum class VwaaClass : uint8_t { Mmaa, LimMmaa, NotVeryWeak, Other };

// Very weak alternating co-Buchi automaton over 2^AP. States are temporal
// formulae; delta[s][a] is the sorted set of target configurations of the
// a-transitions of s. kinds and structure are fixed when the automaton is
// classified and survive later transition pruning.
struct Vwaa {
  Alphabet alphabet;
  std::vector<Formula> states; // sorted by the formula order
  std::vector<std::vector<std::vector<StateSet>>> delta; // [state][letter]
  std::vector<StateSet> initial;                         // sorted, distinct
  StateSet cobuchi = 0;
  std::vector<StateKind> kinds;
  VwaaClass structure = VwaaClass::Other;

  size_t state_count() const { return states.size(); }
  size_t letter_count() const { return alphabet.letter_count(); }
  int index_of(const Formula& f) const;
  StateSet must_mask() const;
  StateSet may_mask() const;

  bool has_selfloop_every_letter(int s) const;
  bool all_transitions_looping(int s) const; // vacuously true with none
  bool has_looping_transition(int s) const;
  bool has_predecessor(int s) const;

  // Measures the state against the may/must/loopless categories; kinds[] is
  // not consulted.
  StateKind kind_of(int s) const;

  // Recomputes kinds[] and structure from the current transitions.
  void classify();

  // All target configurations of a-multitransitions leaving cfg: one
  // a-transition per state of cfg, targets unioned. Empty when some state of
  // cfg has no a-transition.
  std::vector<StateSet> multi_targets(StateSet cfg, Letter a) const;
};

// Tableau construction for positive-normal-form formulae of the supported
// fragment; keeps reachable states only. Throws UnsupportedFragment.
Vwaa translate_ltl_to_vwaa(const Formula& pnf);

// Definition check for a single state; throws StructureViolation when the
// state fits no category.
StateKind classify_state(const Vwaa& v, int s);

// Structural classification from the current transitions.
VwaaClass check_structure(const Vwaa& v);

// Rewrites a may/must automaton so that the co-Buchi set equals the
// may-states: loopless states leave the set, must-states in the set are
// deleted together with incident transitions, may-states outside the set are
// erased from all target configurations.
Vwaa normalize_accepting_set(Vwaa v);

// Unreachable-state removal, merging of states with identical rows and
// acceptance, and removal of transitions dominated by a strictly smaller
// target configuration. kinds/structure are preserved, not recomputed.
Vwaa simplify_vwaa(Vwaa v);

// Inverse translation for may/must automata; the result uses only literals,
// and/or, F, G and the strict variants. Throws NotMmaa.
Formula mmaa_to_ltl(const Vwaa& v);

std::string to_dot(const Vwaa& v);

} // namespace ltl2dra
