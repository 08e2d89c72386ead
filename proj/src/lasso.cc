#include "ltl2dra/lasso.hh"

#include <algorithm>
#include <unordered_map>

#include "ltl2dra/errors.hh"

namespace ltl2dra {

Alphabet::Alphabet(std::vector<std::string> props) : props_(std::move(props)) {
  std::sort(props_.begin(), props_.end());
  props_.erase(std::unique(props_.begin(), props_.end()), props_.end());
  if (props_.size() > 20)
    throw ResourceLimit("alphabet of " + std::to_string(props_.size()) +
                        " propositions exceeds the supported maximum of 20");
}

Alphabet Alphabet::of_formula(const Formula& f) {
  return Alphabet(atom_names(f));
}

int Alphabet::index_of(const std::string& name) const {
  auto it = std::lower_bound(props_.begin(), props_.end(), name);
  if (it == props_.end() || *it != name) return -1;
  return static_cast<int>(it - props_.begin());
}

std::string Alphabet::letter_name(Letter a) const {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < props_.size(); ++i) {
    if (!has(a, i)) continue;
    if (!first) out += ',';
    out += props_[i];
    first = false;
  }
  out += '}';
  return out;
}

LassoWord::LassoWord(Alphabet a, std::vector<Letter> pre,
                     std::vector<Letter> per)
    : alphabet(std::move(a)), prefix(std::move(pre)), period(std::move(per)) {
  if (period.empty())
    throw std::invalid_argument("lasso word requires a nonempty period");
}

std::string LassoWord::to_string() const {
  std::string out;
  for (Letter a : prefix) out += alphabet.letter_name(a);
  out += '(';
  for (Letter a : period) out += alphabet.letter_name(a);
  out += ")^w";
  return out;
}

namespace {

class Evaluator {
public:
  explicit Evaluator(const LassoWord& w) : w_(w), n_(w.position_count()) {}

  const std::vector<char>& table(const Formula& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    std::vector<char> row(n_, 0);
    switch (f.op()) {
      case Op::True:
        std::fill(row.begin(), row.end(), 1);
        break;
      case Op::False:
        break;
      case Op::Atom: {
        int idx = w_.alphabet.index_of(f.name());
        if (idx < 0)
          throw AlphabetMismatch("proposition '" + f.name() +
                                 "' is not in the word's alphabet");
        for (size_t i = 0; i < n_; ++i)
          row[i] = w_.alphabet.has(w_.letter_at(i), idx);
        break;
      }
      case Op::Not: {
        const auto& a = table(f.arg());
        for (size_t i = 0; i < n_; ++i) row[i] = !a[i];
        break;
      }
      case Op::And: {
        std::fill(row.begin(), row.end(), 1);
        for (const Formula& g : f.args()) {
          const auto& a = table(g);
          for (size_t i = 0; i < n_; ++i) row[i] = row[i] && a[i];
        }
        break;
      }
      case Op::Or: {
        for (const Formula& g : f.args()) {
          const auto& a = table(g);
          for (size_t i = 0; i < n_; ++i) row[i] = row[i] || a[i];
        }
        break;
      }
      case Op::Next: {
        const auto& a = table(f.arg());
        for (size_t i = 0; i < n_; ++i) row[i] = a[w_.next_position(i)];
        break;
      }
      case Op::Until: {
        const auto& l = table(f.arg(0));
        const auto& r = table(f.arg(1));
        for (size_t i = 0; i < n_; ++i) row[i] = scan_until(l, r, i);
        break;
      }
      case Op::Eventually: {
        const auto& a = table(f.arg());
        for (size_t i = 0; i < n_; ++i) row[i] = scan_exists(a, i);
        break;
      }
      case Op::Always: {
        const auto& a = table(f.arg());
        for (size_t i = 0; i < n_; ++i) row[i] = scan_forall(a, i);
        break;
      }
      case Op::StrictEventually: {
        const auto& a = table(f.arg());
        for (size_t i = 0; i < n_; ++i)
          row[i] = scan_exists(a, w_.next_position(i));
        break;
      }
      case Op::StrictAlways: {
        const auto& a = table(f.arg());
        for (size_t i = 0; i < n_; ++i)
          row[i] = scan_forall(a, w_.next_position(i));
        break;
      }
    }
    return memo_.emplace(f, std::move(row)).first->second;
  }

private:
  // Scanning n_+1 steps from any position covers a full cycle.
  bool scan_until(const std::vector<char>& l, const std::vector<char>& r,
                  size_t start) const {
    size_t j = start;
    for (size_t k = 0; k <= n_; ++k) {
      if (r[j]) return true;
      if (!l[j]) return false;
      j = w_.next_position(j);
    }
    return false;
  }

  bool scan_exists(const std::vector<char>& a, size_t start) const {
    size_t j = start;
    for (size_t k = 0; k <= n_; ++k) {
      if (a[j]) return true;
      j = w_.next_position(j);
    }
    return false;
  }

  bool scan_forall(const std::vector<char>& a, size_t start) const {
    size_t j = start;
    for (size_t k = 0; k <= n_; ++k) {
      if (!a[j]) return false;
      j = w_.next_position(j);
    }
    return true;
  }

  const LassoWord& w_;
  size_t n_;
  std::unordered_map<Formula, std::vector<char>, FormulaHash> memo_;
};

} // namespace

bool eval_lasso(const Formula& f, const LassoWord& w) {
  Evaluator ev(w);
  return ev.table(f)[0];
}

} // namespace ltl2dra
