#pragma once

#include <string>
#include <vector>

#include "ltl2dra/tgdra.hh"

namespace ltl2dra {

// State-based deterministic Rabin automaton: a macrostate paired with one
// waiting level per generalized Rabin pair.
struct DraState {
  int macro;
  std::vector<int> levels; // level i in 0 .. h_i + 1
  bool operator==(const DraState& o) const = default;
  bool operator<(const DraState& o) const {
    return macro != o.macro ? macro < o.macro : levels < o.levels;
  }
};

struct RabinPair {
  std::vector<int> fin; // K': states whose level is 0
  std::vector<int> inf; // L': states whose level is h + 1
};

struct Dra {
  Alphabet alphabet;
  std::vector<DraState> states;
  int initial = 0;
  std::vector<std::vector<int>> succ; // [state][letter]
  std::vector<RabinPair> pairs;

  size_t state_count() const { return states.size(); }
  size_t letter_count() const { return alphabet.letter_count(); }
  std::string size_string() const; // "s(r)"
};

// Level-tracking product over the generalized pairs; reachable states only.
Dra degeneralize(const Tgdra& t, size_t state_cap = 1u << 20);

// Merges states that share acceptance membership and, class by class,
// successors; an initial state nothing points at merges regardless of
// acceptance.
Dra simplify_dra(Dra d);

bool dra_accepts_lasso(const Dra& d, const LassoWord& w);

std::string to_hoa(const Dra& d, const std::string& name);
std::string to_dstar(const Dra& d);
std::string to_dot(const Dra& d);

} // namespace ltl2dra
