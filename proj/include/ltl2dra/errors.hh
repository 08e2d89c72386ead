#pragma once

#include <stdexcept>
#include <string>

namespace ltl2dra {

// Thrown by parse(); carries the 1-based position of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

// A negation sits above U or X and no rewrite rule applies.
class NegationNotEliminable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The formula is outside the supported fragment.
class UnsupportedFragment : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A state fits no may/must/loopless category.
class StructureViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation requiring a may/must automaton was given something else.
class NotMmaa : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured cap (states, letters, lassos) was exceeded.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Output format not defined for the requested pipeline stage.
class UnsupportedCombination : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A word and an automaton/formula disagree on atomic propositions.
class AlphabetMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ltl2dra
