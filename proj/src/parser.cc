#include "ltl2dra/parser.hh"

#include <cctype>

#include "ltl2dra/errors.hh"

namespace ltl2dra {

namespace {

enum class Tok {
  End,
  Ident,
  TrueLit,
  FalseLit,
  Bang,
  AndSym,
  OrSym,
  Implies,
  Equiv,
  LParen,
  RParen,
  NextOp,
  EvOp,
  AlwOp,
  UntilOp,
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  Tok tok = Tok::End;
  std::string ident;
  int line = 1, column = 1;

  void advance() {
    skip_space();
    line = cur_line_;
    column = cur_col_;
    if (pos_ >= text_.size()) {
      tok = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        take();
      ident = text_.substr(start, pos_ - start);
      if (ident == "tt" || ident == "true")
        tok = Tok::TrueLit;
      else if (ident == "ff" || ident == "false")
        tok = Tok::FalseLit;
      else if (ident == "X")
        tok = Tok::NextOp;
      else if (ident == "F")
        tok = Tok::EvOp;
      else if (ident == "G")
        tok = Tok::AlwOp;
      else if (ident == "U")
        tok = Tok::UntilOp;
      else if (ident == "W" || ident == "R" || ident == "M")
        fail("unsupported operator '" + ident + "'");
      else
        tok = Tok::Ident;
      return;
    }
    switch (c) {
      case '!':
        take();
        tok = Tok::Bang;
        return;
      case '&':
        take();
        if (pos_ < text_.size() && text_[pos_] == '&') take();
        tok = Tok::AndSym;
        return;
      case '|':
        take();
        if (pos_ < text_.size() && text_[pos_] == '|') take();
        tok = Tok::OrSym;
        return;
      case '(':
        take();
        tok = Tok::LParen;
        return;
      case ')':
        take();
        tok = Tok::RParen;
        return;
      case '-':
        take();
        expect('>');
        tok = Tok::Implies;
        return;
      case '<':
        take();
        expect('-');
        expect('>');
        tok = Tok::Equiv;
        return;
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, column);
  }

private:
  void take() {
    if (text_[pos_] == '\n') {
      ++cur_line_;
      cur_col_ = 1;
    } else {
      ++cur_col_;
    }
    ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    take();
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      take();
  }

  const std::string& text_;
  size_t pos_ = 0;
  int cur_line_ = 1, cur_col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Formula run() {
    Formula f = equiv();
    if (lex_.tok != Tok::End) lex_.fail("trailing input");
    return f;
  }

private:
  Formula equiv() {
    Formula l = implies();
    if (lex_.tok == Tok::Equiv) {
      lex_.advance();
      Formula r = equiv();
      return Formula::conj({Formula::disj({Formula::negation(l), r}),
                            Formula::disj({Formula::negation(r), l})});
    }
    return l;
  }

  Formula implies() {
    Formula l = disjunction();
    if (lex_.tok == Tok::Implies) {
      lex_.advance();
      Formula r = implies();
      return Formula::disj({Formula::negation(std::move(l)), std::move(r)});
    }
    return l;
  }

  Formula disjunction() {
    std::vector<Formula> out{conjunction()};
    while (lex_.tok == Tok::OrSym) {
      lex_.advance();
      out.push_back(conjunction());
    }
    return out.size() == 1 ? out[0] : Formula::disj(std::move(out));
  }

  Formula conjunction() {
    std::vector<Formula> out{until_expr()};
    while (lex_.tok == Tok::AndSym) {
      lex_.advance();
      out.push_back(until_expr());
    }
    return out.size() == 1 ? out[0] : Formula::conj(std::move(out));
  }

  Formula until_expr() {
    Formula l = unary();
    if (lex_.tok == Tok::UntilOp) {
      lex_.advance();
      return Formula::until(std::move(l), until_expr());
    }
    return l;
  }

  Formula unary() {
    switch (lex_.tok) {
      case Tok::Bang:
        lex_.advance();
        return Formula::negation(unary());
      case Tok::NextOp:
        lex_.advance();
        return Formula::next(unary());
      case Tok::EvOp:
        lex_.advance();
        return Formula::eventually(unary());
      case Tok::AlwOp:
        lex_.advance();
        return Formula::always(unary());
      default:
        return primary();
    }
  }

  Formula primary() {
    switch (lex_.tok) {
      case Tok::TrueLit:
        lex_.advance();
        return Formula::tt();
      case Tok::FalseLit:
        lex_.advance();
        return Formula::ff();
      case Tok::Ident: {
        Formula f = Formula::ap(lex_.ident);
        lex_.advance();
        return f;
      }
      case Tok::LParen: {
        lex_.advance();
        Formula f = equiv();
        if (lex_.tok != Tok::RParen) lex_.fail("expected ')'");
        lex_.advance();
        return f;
      }
      case Tok::End:
        lex_.fail("unexpected end of input");
      default:
        lex_.fail("unexpected token");
    }
  }

  Lexer lex_;
};

} // namespace

Formula parse(const std::string& text) { return Parser(text).run(); }

} // namespace ltl2dra
