#include "ltl2dra/formula.hh"

#include <algorithm>
#include <cassert>
#include <set>

#include "ltl2dra/errors.hh"

namespace ltl2dra {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> args;
  size_t hash;
};

namespace {

size_t combine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Formula Formula::make(Op op, std::string name, std::vector<Formula> args) {
  size_t h = combine(0x51ab5, static_cast<size_t>(op));
  h = combine(h, std::hash<std::string>()(name));
  for (const Formula& a : args) h = combine(h, a.hash());
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->args = std::move(args);
  n->hash = h;
  return Formula(std::move(n));
}

Op Formula::op() const {
  assert(node_);
  return node_->op;
}

const std::string& Formula::name() const {
  assert(node_ && node_->op == Op::Atom);
  return node_->name;
}

const std::vector<Formula>& Formula::args() const {
  assert(node_);
  return node_->args;
}

const Formula& Formula::arg(size_t i) const {
  assert(node_ && i < node_->args.size());
  return node_->args[i];
}

size_t Formula::hash() const {
  assert(node_);
  return node_->hash;
}

bool Formula::is_temporal() const {
  return op() != Op::And && op() != Op::Or;
}

bool Formula::is_literal() const {
  switch (op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return true;
    case Op::Not:
      return arg().is(Op::Atom);
    default:
      return false;
  }
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.op() == Op::Atom) {
    int c = a.name().compare(b.name());
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  const auto& xs = a.args();
  const auto& ys = b.args();
  size_t n = std::min(xs.size(), ys.size());
  for (size_t i = 0; i < n; ++i) {
    if (int c = compare(xs[i], ys[i]); c != 0) return c;
  }
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash()) return false;
  return Formula::compare(a, b) == 0;
}

bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

bool operator<(const Formula& a, const Formula& b) {
  return Formula::compare(a, b) < 0;
}

Formula Formula::tt() {
  static const Formula f = make(Op::True, {}, {});
  return f;
}

Formula Formula::ff() {
  static const Formula f = make(Op::False, {}, {});
  return f;
}

Formula Formula::ap(std::string name) {
  return make(Op::Atom, std::move(name), {});
}

Formula Formula::negation(Formula f) {
  return make(Op::Not, {}, {std::move(f)});
}

namespace {

// Flatten same-op children, sort, deduplicate.
std::vector<Formula> normalize_nary(Op op, std::vector<Formula> fs) {
  std::vector<Formula> flat;
  for (Formula& f : fs) {
    if (f.is(op)) {
      for (const Formula& g : f.args()) flat.push_back(g);
    } else {
      flat.push_back(std::move(f));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  return flat;
}

} // namespace

Formula Formula::conj(std::vector<Formula> fs) {
  auto children = normalize_nary(Op::And, std::move(fs));
  if (children.empty()) return tt();
  if (children.size() == 1) return children[0];
  return make(Op::And, {}, std::move(children));
}

Formula Formula::disj(std::vector<Formula> fs) {
  auto children = normalize_nary(Op::Or, std::move(fs));
  if (children.empty()) return ff();
  if (children.size() == 1) return children[0];
  return make(Op::Or, {}, std::move(children));
}

Formula Formula::next(Formula f) {
  // Fs == XF and Gs == XG, so those nexts fold into the strict operators.
  if (f.is(Op::Eventually)) return strict_eventually(f.arg());
  if (f.is(Op::Always)) return strict_always(f.arg());
  return make(Op::Next, {}, {std::move(f)});
}

Formula Formula::until(Formula l, Formula r) {
  return make(Op::Until, {}, {std::move(l), std::move(r)});
}

Formula Formula::eventually(Formula f) {
  return make(Op::Eventually, {}, {std::move(f)});
}

Formula Formula::always(Formula f) {
  return make(Op::Always, {}, {std::move(f)});
}

Formula Formula::strict_eventually(Formula f) {
  return make(Op::StrictEventually, {}, {std::move(f)});
}

Formula Formula::strict_always(Formula f) {
  return make(Op::StrictAlways, {}, {std::move(f)});
}

namespace {

// Binding strength, loosest to tightest: | < & < U < unary < leaf.
int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::Or:
      return 1;
    case Op::And:
      return 2;
    case Op::Until:
      return 3;
    case Op::Not:
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
    case Op::StrictEventually:
    case Op::StrictAlways:
      return 4;
    default:
      return 5;
  }
}

void print_rec(std::string& out, const Formula& f, int parent_prec) {
  int prec = precedence(f);
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (f.op()) {
    case Op::True:
      out += "tt";
      break;
    case Op::False:
      out += "ff";
      break;
    case Op::Atom:
      out += f.name();
      break;
    case Op::Not:
      out += '!';
      print_rec(out, f.arg(), 4);
      break;
    case Op::Next:
      out += "X ";
      print_rec(out, f.arg(), 4);
      break;
    case Op::Eventually:
      out += "F ";
      print_rec(out, f.arg(), 4);
      break;
    case Op::Always:
      out += "G ";
      print_rec(out, f.arg(), 4);
      break;
    case Op::StrictEventually:
      out += "X F ";
      print_rec(out, f.arg(), 4);
      break;
    case Op::StrictAlways:
      out += "X G ";
      print_rec(out, f.arg(), 4);
      break;
    case Op::Until:
      // Right-associative: parenthesize a left child that is itself an U.
      print_rec(out, f.arg(0), f.arg(0).is(Op::Until) ? 4 : 3);
      out += " U ";
      print_rec(out, f.arg(1), 3);
      break;
    case Op::And:
      for (size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += " & ";
        print_rec(out, f.arg(i), 3);
      }
      break;
    case Op::Or:
      for (size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += " | ";
        print_rec(out, f.arg(i), 2);
      }
      break;
  }
  if (parens) out += ')';
}

} // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_rec(out, f, 0);
  return out;
}

namespace {

Formula pnf_rec(const Formula& f, bool neg) {
  switch (f.op()) {
    case Op::True:
      return neg ? Formula::ff() : Formula::tt();
    case Op::False:
      return neg ? Formula::tt() : Formula::ff();
    case Op::Atom:
      return neg ? Formula::negation(f) : f;
    case Op::Not:
      return pnf_rec(f.arg(), !neg);
    case Op::And: {
      std::vector<Formula> out;
      for (const Formula& a : f.args()) out.push_back(pnf_rec(a, neg));
      return neg ? Formula::disj(std::move(out)) : Formula::conj(std::move(out));
    }
    case Op::Or: {
      std::vector<Formula> out;
      for (const Formula& a : f.args()) out.push_back(pnf_rec(a, neg));
      return neg ? Formula::conj(std::move(out)) : Formula::disj(std::move(out));
    }
    case Op::Next:
      if (neg)
        throw NegationNotEliminable("cannot push negation through X in " +
                                    to_string(f));
      return Formula::next(pnf_rec(f.arg(), false));
    case Op::Until:
      if (neg)
        throw NegationNotEliminable("cannot push negation through U in " +
                                    to_string(f));
      return Formula::until(pnf_rec(f.arg(0), false), pnf_rec(f.arg(1), false));
    case Op::Eventually:
      return neg ? Formula::always(pnf_rec(f.arg(), true))
                 : Formula::eventually(pnf_rec(f.arg(), false));
    case Op::Always:
      return neg ? Formula::eventually(pnf_rec(f.arg(), true))
                 : Formula::always(pnf_rec(f.arg(), false));
    case Op::StrictEventually:
      return neg ? Formula::strict_always(pnf_rec(f.arg(), true))
                 : Formula::strict_eventually(pnf_rec(f.arg(), false));
    case Op::StrictAlways:
      return neg ? Formula::strict_eventually(pnf_rec(f.arg(), true))
                 : Formula::strict_always(pnf_rec(f.arg(), false));
  }
  throw std::logic_error("unreachable");
}

// Pure eventuality: the language is stable under prepending any finite word,
// so F mu == mu and phi U mu == mu.
bool is_pure_eventuality(const Formula& f) {
  switch (f.op()) {
    case Op::Eventually:
    case Op::StrictEventually:
      return true;
    case Op::And:
    case Op::Or: {
      for (const Formula& a : f.args())
        if (!is_pure_eventuality(a)) return false;
      return true;
    }
    case Op::Next:
    case Op::Always:
    case Op::StrictAlways:
      return is_pure_eventuality(f.arg());
    case Op::Until:
      return is_pure_eventuality(f.arg(1));
    default:
      return false;
  }
}

// Pure universality: the language is stable under dropping any finite
// prefix, so G nu == nu.
bool is_pure_universality(const Formula& f) {
  switch (f.op()) {
    case Op::Always:
    case Op::StrictAlways:
      return true;
    case Op::And:
    case Op::Or: {
      for (const Formula& a : f.args())
        if (!is_pure_universality(a)) return false;
      return true;
    }
    case Op::Next:
    case Op::Eventually:
    case Op::StrictEventually:
      return is_pure_universality(f.arg());
    default:
      return false;
  }
}

// Suspendable: prefix-independent, e.g. GFb or FG(a|b); absorbed by any
// surrounding X, F, G and splittable out of G(phi | xi) and F(phi & xi).
bool is_suspendable(const Formula& f) {
  return is_pure_eventuality(f) && is_pure_universality(f);
}

// Splits xi-children out of f's argument: G(phi | xi) = G phi | xi and
// F(phi & xi) = F phi & xi. Returns an invalid formula when nothing splits.
Formula split_suspendable(const Formula& f, Op through,
                          Formula (*rebuild)(Formula)) {
  if (!f.arg().is(through)) return {};
  std::vector<Formula> kept, extracted;
  for (const Formula& c : f.arg().args())
    (is_suspendable(c) ? extracted : kept).push_back(c);
  if (extracted.empty()) return {};
  Formula inner = through == Op::Or ? Formula::disj(std::move(kept))
                                    : Formula::conj(std::move(kept));
  extracted.push_back(rebuild(std::move(inner)));
  return through == Op::Or ? Formula::disj(std::move(extracted))
                           : Formula::conj(std::move(extracted));
}

Formula simplify_once(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return f;
    case Op::Not:
      return Formula::negation(simplify_once(f.arg()));
    case Op::Next: {
      Formula s = simplify_once(f.arg());
      if (s.is(Op::True) || s.is(Op::False)) return s;
      if (is_suspendable(s)) return s;
      return Formula::next(std::move(s));
    }
    case Op::Until: {
      Formula l = simplify_once(f.arg(0));
      Formula r = simplify_once(f.arg(1));
      if (r.is(Op::True)) return Formula::tt();
      if (r.is(Op::False)) return Formula::ff();
      if (is_pure_eventuality(r)) return r;
      if (l.is(Op::True)) return Formula::eventually(std::move(r));
      if (l.is(Op::False)) return r;
      return Formula::until(std::move(l), std::move(r));
    }
    case Op::And: {
      std::vector<Formula> out;
      for (const Formula& a : f.args()) {
        Formula s = simplify_once(a);
        if (s.is(Op::False)) return Formula::ff();
        if (!s.is(Op::True)) out.push_back(std::move(s));
      }
      return Formula::conj(std::move(out));
    }
    case Op::Or: {
      std::vector<Formula> out;
      for (const Formula& a : f.args()) {
        Formula s = simplify_once(a);
        if (s.is(Op::True)) return Formula::tt();
        if (!s.is(Op::False)) out.push_back(std::move(s));
      }
      return Formula::disj(std::move(out));
    }
    case Op::Eventually: {
      Formula s = simplify_once(f.arg());
      if (s.is(Op::True)) return Formula::tt();
      if (s.is(Op::False)) return Formula::ff();
      if (is_pure_eventuality(s)) return s;                   // incl. FF -> F
      Formula fs = Formula::eventually(s);
      if (Formula split = split_suspendable(fs, Op::And, &Formula::eventually);
          split.valid())
        return split;
      if (s.is(Op::Always))                                   // FG -> F Gs
        return Formula::eventually(Formula::strict_always(s.arg()));
      return fs;
    }
    case Op::Always: {
      Formula s = simplify_once(f.arg());
      if (s.is(Op::True)) return Formula::tt();
      if (s.is(Op::False)) return Formula::ff();
      if (is_pure_universality(s)) return s;                  // incl. GG -> G
      Formula gs = Formula::always(s);
      if (Formula split = split_suspendable(gs, Op::Or, &Formula::always);
          split.valid())
        return split;
      if (s.is(Op::Eventually))                               // GF -> G Fs
        return Formula::always(Formula::strict_eventually(s.arg()));
      return gs;
    }
    case Op::StrictEventually: {
      Formula s = simplify_once(f.arg());
      if (s.is(Op::True) || s.is(Op::False)) return s;
      if (is_suspendable(s)) return s;
      // Fs s is X F s; when F s is suspendable the X is absorbed.
      if (is_pure_universality(s)) return Formula::eventually(std::move(s));
      Formula fs = Formula::strict_eventually(s);
      if (Formula split =
              split_suspendable(fs, Op::And, &Formula::strict_eventually);
          split.valid())
        return split;
      if (s.is(Op::Eventually)) return Formula::strict_eventually(s.arg());
      return fs;
    }
    case Op::StrictAlways: {
      Formula s = simplify_once(f.arg());
      if (s.is(Op::True) || s.is(Op::False)) return s;
      if (is_suspendable(s)) return s;
      // Gs s is X G s; when G s is suspendable the X is absorbed.
      if (is_pure_eventuality(s)) return Formula::always(std::move(s));
      Formula gs = Formula::strict_always(s);
      if (Formula split =
              split_suspendable(gs, Op::Or, &Formula::strict_always);
          split.valid())
        return split;
      if (s.is(Op::Always)) return Formula::strict_always(s.arg());
      return gs;
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace

Formula to_positive_normal_form(const Formula& f) { return pnf_rec(f, false); }

Formula simplify_formula(const Formula& f) {
  Formula cur = f;
  for (;;) {
    Formula next = simplify_once(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

namespace {

bool is_strict_fg(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return true;
    case Op::Not:
      return f.arg().is(Op::Atom);
    case Op::And:
    case Op::Or: {
      for (const Formula& a : f.args())
        if (!is_strict_fg(a)) return false;
      return true;
    }
    case Op::Eventually:
    case Op::Always:
    case Op::StrictEventually:
    case Op::StrictAlways:
      return is_strict_fg(f.arg());
    default:
      return false;
  }
}

bool is_lim(const Formula& f) {
  if (is_strict_fg(f)) return true;
  switch (f.op()) {
    case Op::And:
    case Op::Or: {
      for (const Formula& a : f.args())
        if (!is_lim(a)) return false;
      return true;
    }
    case Op::Next:
      return is_lim(f.arg());
    case Op::Until:
      return is_lim(f.arg(0)) && is_lim(f.arg(1));
    // F phi is tt U phi, so eventually stays available above the strict
    // fragment; always does not (it would need release).
    case Op::Eventually:
    case Op::StrictEventually:
      return is_lim(f.arg());
    default:
      return false;
  }
}

} // namespace

FragmentClass classify_fragment(const Formula& f) {
  if (is_strict_fg(f)) return FragmentClass::StrictFG;
  if (is_lim(f)) return FragmentClass::LimFragment;
  return FragmentClass::Unsupported;
}

Formula unsupported_witness(const Formula& f) {
  if (is_lim(f)) return {};
  for (const Formula& a : f.args())
    if (Formula w = unsupported_witness(a); w.valid()) return w;
  // No child is to blame, so this node combines them illegally (e.g. an
  // until below always, or a stuck negation).
  return f;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is(Op::Atom)) {
    out.insert(f.name());
    return;
  }
  for (const Formula& a : f.args()) collect_atoms(a, out);
}

} // namespace

std::vector<std::string> atom_names(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

} // namespace ltl2dra
