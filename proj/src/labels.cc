#include "ltl2dra/labels.hh"

#include <algorithm>
#include <bit>
#include <set>

namespace ltl2dra {

namespace {

// value restricted to the cared bits; care == 0 covers every letter.
struct Cube {
  Letter care;
  Letter value;
  bool operator<(const Cube& o) const {
    return care != o.care ? care < o.care : value < o.value;
  }
  bool operator==(const Cube& o) const = default;
};

} // namespace

std::string label_formula(const std::vector<Letter>& letters,
                          const Alphabet& alphabet, LabelStyle style) {
  const bool hoa = style == LabelStyle::HoaIndices;
  if (letters.empty()) return hoa ? "f" : "ff";

  size_t nprops = alphabet.prop_count();
  Letter all_bits = static_cast<Letter>((uint64_t{1} << nprops) - 1);

  std::set<Cube> cubes;
  for (Letter a : letters) cubes.insert({all_bits, a});

  // Merge cubes differing in exactly one cared bit; a cube may take part in
  // several merges and is dropped only once some merge absorbed it.
  for (;;) {
    std::set<Cube> merged;
    std::set<Cube> used;
    for (auto it = cubes.begin(); it != cubes.end(); ++it)
      for (auto jt = std::next(it); jt != cubes.end(); ++jt) {
        if (it->care != jt->care) continue;
        Letter diff = it->value ^ jt->value;
        if (std::popcount(diff) != 1) continue;
        merged.insert({static_cast<Letter>(it->care & ~diff),
                       static_cast<Letter>(it->value & ~diff)});
        used.insert(*it);
        used.insert(*jt);
      }
    if (merged.empty()) break;
    for (const Cube& c : used) cubes.erase(c);
    cubes.insert(merged.begin(), merged.end());
  }
  // Drop cubes covered by another cube.
  for (auto it = cubes.begin(); it != cubes.end();) {
    bool covered = false;
    for (const Cube& c : cubes) {
      if (c == *it) continue;
      if ((c.care & it->care) == c.care && (it->value & c.care) == c.value) {
        covered = true;
        break;
      }
    }
    it = covered ? cubes.erase(it) : std::next(it);
  }

  if (cubes.size() == 1 && cubes.begin()->care == 0) return hoa ? "t" : "tt";

  std::string out;
  bool first_cube = true;
  for (const Cube& c : cubes) {
    if (!first_cube) out += " | ";
    first_cube = false;
    bool first_lit = true;
    for (size_t p = 0; p < nprops; ++p) {
      if (!((c.care >> p) & 1)) continue;
      if (!first_lit) out += hoa ? "&" : " & ";
      first_lit = false;
      if (!((c.value >> p) & 1)) out += '!';
      out += hoa ? std::to_string(p) : alphabet.props()[p];
    }
    if (first_lit) out += hoa ? "t" : "tt";
  }
  return out;
}

} // namespace ltl2dra
