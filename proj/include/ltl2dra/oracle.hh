#pragma once

#include <string>
#include <vector>

#include "ltl2dra/formula.hh"
#include "ltl2dra/lasso.hh"

namespace ltl2dra {

// All lasso words with |prefix| <= max_prefix and 1 <= |period| <=
// max_period, in order (prefix length, prefix letters, period length, period
// letters). No rotation or unrolling canonicalization: the redundancy is
// cheap and a deduplication bug could mask failures.
std::vector<LassoWord> enumerate_lassos(const Alphabet& alphabet,
                                        int max_prefix, int max_period,
                                        size_t cap = 16u << 20);

struct Mismatch {
  LassoWord word;
  std::string stage;
  bool expected;
  bool got;
};

struct EquivalenceReport {
  Formula formula;
  size_t lassos_checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string to_tsv() const; // one tab-separated line per mismatch
};

// Runs the full pipeline on f and compares, on every enumerated lasso word,
// the direct formula evaluation against the inverse-translated formula (for
// automata in the strict F/G fragment) and against acceptance of the
// generalized and plain Rabin automata, before and after simplification.
EquivalenceReport cross_check(const Formula& f, int max_prefix,
                              int max_period);

} // namespace ltl2dra
