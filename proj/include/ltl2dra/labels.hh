#pragma once

#include <string>
#include <vector>

#include "ltl2dra/lasso.hh"

namespace ltl2dra {

enum class LabelStyle { Names, HoaIndices };

// Renders a set of letters as a disjunction of cubes ("a & !b | b"), merging
// adjacent minterms greedily. The full letter set renders as "tt" (Names) or
// "t" (HoaIndices); the empty set as "ff" / "f".
std::string label_formula(const std::vector<Letter>& letters,
                          const Alphabet& alphabet, LabelStyle style);

} // namespace ltl2dra
