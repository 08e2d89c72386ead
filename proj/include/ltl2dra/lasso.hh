#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltl2dra/formula.hh"

namespace ltl2dra {

// A letter is a subset of the alphabet's propositions, bit i = props()[i].
using Letter = uint32_t;

class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> props);
  static Alphabet of_formula(const Formula& f);

  size_t prop_count() const { return props_.size(); }
  size_t letter_count() const { return size_t{1} << props_.size(); }
  const std::vector<std::string>& props() const { return props_; }
  int index_of(const std::string& name) const; // -1 when absent
  bool has(Letter a, size_t prop) const { return (a >> prop) & 1; }
  std::string letter_name(Letter a) const; // "{a,b}" set notation

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.props_ == b.props_;
  }

private:
  std::vector<std::string> props_; // sorted, distinct
};

// Ultimately periodic word prefix . period^omega; the period is nonempty.
struct LassoWord {
  LassoWord(Alphabet alphabet, std::vector<Letter> prefix,
            std::vector<Letter> period);

  Alphabet alphabet;
  std::vector<Letter> prefix;
  std::vector<Letter> period;

  size_t position_count() const { return prefix.size() + period.size(); }
  Letter letter_at(size_t i) const {
    return i < prefix.size() ? prefix[i] : period[i - prefix.size()];
  }
  size_t next_position(size_t i) const {
    return i + 1 < position_count() ? i + 1 : prefix.size();
  }
  std::string to_string() const; // "{a}{}({b})^w"
};

// Whether the lasso word satisfies f, by dynamic programming over the
// prefix+period positions with wrap-around. Throws AlphabetMismatch when f
// mentions a proposition outside the word's alphabet.
bool eval_lasso(const Formula& f, const LassoWord& w);

} // namespace ltl2dra
