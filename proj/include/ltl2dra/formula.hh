#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ltl2dra {

enum class Op : uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Next,
  Until,
  Eventually,
  Always,
  StrictEventually,
  StrictAlways,
};

// Immutable LTL syntax tree in canonical form: And/Or are flattened n-ary
// nodes with children sorted under a fixed total order and deduplicated.
// Strict operators have no surface syntax; Next(F x) and Next(G x) normalize
// to StrictEventually(x) / StrictAlways(x) at construction.
class Formula {
public:
  Formula() = default; // invalid until assigned from a factory

  bool valid() const { return node_ != nullptr; }
  Op op() const;
  bool is(Op o) const { return op() == o; }

  const std::string& name() const;              // Atom only
  const std::vector<Formula>& args() const;     // empty for leaves
  const Formula& arg(size_t i = 0) const;
  size_t hash() const;

  // Topmost operator is neither conjunction nor disjunction.
  bool is_temporal() const;
  // Atom, negated atom, or a boolean constant.
  bool is_literal() const;

  static Formula tt();
  static Formula ff();
  static Formula ap(std::string name);
  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> fs); // empty -> tt, singleton -> f
  static Formula disj(std::vector<Formula> fs); // empty -> ff, singleton -> f
  static Formula next(Formula f);
  static Formula until(Formula l, Formula r);
  static Formula eventually(Formula f);
  static Formula always(Formula f);
  static Formula strict_eventually(Formula f);
  static Formula strict_always(Formula f);

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

  // Total structural order: -1, 0, 1.
  static int compare(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string name, std::vector<Formula> args);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  size_t operator()(const Formula& f) const { return f.hash(); }
};

// Concrete syntax; reparses to a structurally equal formula.
std::string to_string(const Formula& f);

// Pushes negations down to atoms using De Morgan plus the F/G/Fs/Gs duals.
// Throws NegationNotEliminable when a negation is stuck above U or X.
Formula to_positive_normal_form(const Formula& f);

// Rewrites GF/FG subterms to their strict forms and applies the baseline
// reduction rules (FF, GG, FsF, GsG, F tt, G tt, tt/ff units) to a fixpoint.
// Expects positive normal form.
Formula simplify_formula(const Formula& f);

enum class FragmentClass : uint8_t { StrictFG, LimFragment, Unsupported };

// Expects positive normal form. StrictFG: literals, and/or, F, G, Fs, Gs
// only. LimFragment: X and U may additionally appear, but never below an
// F/G/Fs/Gs operator.
FragmentClass classify_fragment(const Formula& f);

// A minimal subformula that puts f outside the supported fragment; invalid
// when f is supported.
Formula unsupported_witness(const Formula& f);

// Sorted, distinct atomic proposition names occurring in f.
std::vector<std::string> atom_names(const Formula& f);

} // namespace ltl2dra
