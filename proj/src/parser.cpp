#include "ldlmdp/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ldlmdp {
namespace {

enum class Tok : uint8_t {
  Ident, KwTrue, KwFalse, KwTT, KwFF, KwLast, KwEnd,
  KwIf, KwThen, KwElse, KwWhile, KwDo,
  Not, And, Or, Imp, Iff,
  OpX, OpWX, OpF, OpG, OpU, OpR,
  LAngle, RAngle, LBracket, RBracket, LParen, RParen,
  Plus, Semi, Star, Question,
  EndOfInput,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : src_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::EndOfInput, "", l, c});
        return out;
      }
      Token t = next_token();
      t.line = l;
      t.col = c;
      out.push_back(t);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

  bool try_utf8(const char* seq, Tok kind, Token& t) {
    size_t n = std::string(seq).size();
    if (src_.compare(pos_, n, seq) == 0) {
      advance(n);
      t = {kind, seq, 0, 0};
      return true;
    }
    return false;
  }

  void advance(size_t n) {
    pos_ += n;
    col_ += static_cast<int>(n);
  }

  Token next_token() {
    char ch = src_[pos_];
    Token t;
    // Unicode aliases first.
    if (static_cast<unsigned char>(ch) >= 0x80) {
      if (try_utf8("∧", Tok::And, t)) return t;       // ∧
      if (try_utf8("∨", Tok::Or, t)) return t;        // ∨
      if (try_utf8("¬", Tok::Not, t)) return t;       // ¬
      if (try_utf8("→", Tok::Imp, t)) return t;       // →
      if (try_utf8("↔", Tok::Iff, t)) return t;       // ↔
      if (try_utf8("◇", Tok::OpF, t)) return t;       // ◇
      if (try_utf8("◊", Tok::OpF, t)) return t;       // ◊
      if (try_utf8("□", Tok::OpG, t)) return t;       // □
      if (try_utf8("○", Tok::OpX, t)) return t;       // ○
      if (try_utf8("●", Tok::OpWX, t)) return t;      // ●
      if (try_utf8("⟨", Tok::LAngle, t)) return t;    // ⟨
      if (try_utf8("⟩", Tok::RAngle, t)) return t;    // ⟩
      fail("unrecognized character");
    }
    switch (ch) {
      case '!': advance(1); return {Tok::Not, "!", 0, 0};
      case '&':
        advance(1);
        if (pos_ < src_.size() && src_[pos_] == '&') advance(1);
        return {Tok::And, "&&", 0, 0};
      case '|':
        advance(1);
        if (pos_ < src_.size() && src_[pos_] == '|') advance(1);
        return {Tok::Or, "||", 0, 0};
      case '-':
        advance(1);
        if (pos_ < src_.size() && src_[pos_] == '>') {
          advance(1);
          return {Tok::Imp, "->", 0, 0};
        }
        fail("expected '>' after '-'");
      case '<':
        advance(1);
        if (pos_ < src_.size() && src_[pos_] == '-') {
          if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance(2);
            return {Tok::Iff, "<->", 0, 0};
          }
        }
        return {Tok::LAngle, "<", 0, 0};
      case '>': advance(1); return {Tok::RAngle, ">", 0, 0};
      case '[': advance(1); return {Tok::LBracket, "[", 0, 0};
      case ']': advance(1); return {Tok::RBracket, "]", 0, 0};
      case '(': advance(1); return {Tok::LParen, "(", 0, 0};
      case ')': advance(1); return {Tok::RParen, ")", 0, 0};
      case '+': advance(1); return {Tok::Plus, "+", 0, 0};
      case ';': advance(1); return {Tok::Semi, ";", 0, 0};
      case '*': advance(1); return {Tok::Star, "*", 0, 0};
      case '?': advance(1); return {Tok::Question, "?", 0, 0};
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance(1);
      std::string word = src_.substr(start, pos_ - start);
      if (word == "true") return {Tok::KwTrue, word, 0, 0};
      if (word == "false") return {Tok::KwFalse, word, 0, 0};
      if (word == "tt") return {Tok::KwTT, word, 0, 0};
      if (word == "ff") return {Tok::KwFF, word, 0, 0};
      if (word == "last") return {Tok::KwLast, word, 0, 0};
      if (word == "end") return {Tok::KwEnd, word, 0, 0};
      if (word == "if") return {Tok::KwIf, word, 0, 0};
      if (word == "then") return {Tok::KwThen, word, 0, 0};
      if (word == "else") return {Tok::KwElse, word, 0, 0};
      if (word == "while") return {Tok::KwWhile, word, 0, 0};
      if (word == "do") return {Tok::KwDo, word, 0, 0};
      if (word == "X") return {Tok::OpX, word, 0, 0};
      if (word == "WX") return {Tok::OpWX, word, 0, 0};
      if (word == "F") return {Tok::OpF, word, 0, 0};
      if (word == "G") return {Tok::OpG, word, 0, 0};
      if (word == "U") return {Tok::OpU, word, 0, 0};
      if (word == "R") return {Tok::OpR, word, 0, 0};
      return {Tok::Ident, word, 0, 0};
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(Lexer(text).run()) {}

  FormulaId parse_top() {
    FormulaId f = formula();
    expect(Tok::EndOfInput, "trailing input");
    return f;
  }

 private:
  const Token& cur() const { return toks_[ix_]; }
  bool at(Tok k) const { return cur().kind == k; }

  bool eat(Tok k) {
    if (!at(k)) return false;
    ++ix_;
    return true;
  }

  void expect(Tok k, const char* what) {
    if (!eat(k)) fail(std::string("expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " (got '" + (cur().kind == Tok::EndOfInput ? "<eof>" : cur().text) + "')",
                     cur().line, cur().col);
  }

  FormulaId formula() { return iff(); }

  FormulaId iff() {
    FormulaId lhs = imp();
    while (eat(Tok::Iff)) {
      FormulaId rhs = imp();
      // a <-> b  ==  (a -> b) && (b -> a)
      lhs = f_and(f_or(f_not(lhs), rhs), f_or(f_not(rhs), lhs));
    }
    return lhs;
  }

  FormulaId imp() {
    FormulaId lhs = disj();
    if (eat(Tok::Imp)) {
      FormulaId rhs = imp();
      return f_or(f_not(lhs), rhs);
    }
    return lhs;
  }

  FormulaId disj() {
    FormulaId lhs = conj();
    while (eat(Tok::Or)) lhs = f_or(lhs, conj());
    return lhs;
  }

  FormulaId conj() {
    FormulaId lhs = until();
    while (eat(Tok::And)) lhs = f_and(lhs, until());
    return lhs;
  }

  FormulaId until() {
    FormulaId lhs = unary();
    if (eat(Tok::OpU)) return f_until(lhs, until());
    if (eat(Tok::OpR)) return f_release(lhs, until());
    return lhs;
  }

  FormulaId unary() {
    if (eat(Tok::Not)) return f_not(unary());
    if (eat(Tok::OpX)) return f_next(unary());
    if (eat(Tok::OpWX)) return f_weak_next(unary());
    if (eat(Tok::OpF)) return f_eventually(unary());
    if (eat(Tok::OpG)) return f_always(unary());
    if (eat(Tok::LAngle)) {
      PathId p = path();
      expect(Tok::RAngle, "'>'");
      return f_diamond(p, unary());
    }
    if (eat(Tok::LBracket)) {
      PathId p = path();
      expect(Tok::RBracket, "']'");
      return f_box(p, unary());
    }
    // A bare Golog program at formula level abbreviates <program> end.
    if (at(Tok::KwIf) || at(Tok::KwWhile)) return f_diamond(golog(), f_end());
    return primary();
  }

  FormulaId primary() {
    if (eat(Tok::KwTrue)) return f_true();
    if (eat(Tok::KwFalse)) return f_false();
    if (eat(Tok::KwTT)) return f_tt();
    if (eat(Tok::KwFF)) return f_ff();
    if (eat(Tok::KwLast)) return f_last();
    if (eat(Tok::KwEnd)) return f_end();
    if (at(Tok::Ident)) {
      std::string name = cur().text;
      ++ix_;
      return f_atom(name);
    }
    if (eat(Tok::LParen)) {
      FormulaId f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    fail("expected formula");
  }

  // --- path expressions ------------------------------------------------

  PathId path() {
    PathId lhs = pconcat();
    while (eat(Tok::Plus)) lhs = p_union(lhs, pconcat());
    return lhs;
  }

  PathId pconcat() {
    PathId lhs = pstar();
    while (eat(Tok::Semi)) lhs = p_concat(lhs, pstar());
    return lhs;
  }

  PathId pstar() {
    PathId p = pprim();
    while (eat(Tok::Star)) p = p_star(p);
    return p;
  }

  PathId pprim() {
    if (at(Tok::KwIf) || at(Tok::KwWhile)) return golog();
    // Try to read a formula first: it becomes a test when followed by '?',
    // or a single-step guard when purely propositional.  Backtrack into a
    // parenthesized path otherwise.
    size_t save = ix_;
    try {
      FormulaId f = formula();
      if (eat(Tok::Question)) return p_test(f);
      if (is_propositional(f)) {
        require_guard_props(f);
        return p_guard(f);
      }
      fail("temporal formula used as a step guard (append '?' for a test)");
    } catch (const ParseError&) {
      ix_ = save;
      if (eat(Tok::LParen)) {
        PathId p = path();
        expect(Tok::RParen, "')'");
        return p;
      }
      throw;
    }
  }

  PathId golog() {
    if (eat(Tok::KwIf)) {
      FormulaId phi = prop_condition();
      expect(Tok::KwThen, "'then'");
      PathId d1 = pstar();
      expect(Tok::KwElse, "'else'");
      PathId d2 = pstar();
      // if phi then d1 else d2  ==  (phi?; d1) + (!phi?; d2)
      return p_union(p_concat(p_test(phi), d1),
                     p_concat(p_test(f_not(phi)), d2));
    }
    expect(Tok::KwWhile, "'while'");
    FormulaId phi = prop_condition();
    expect(Tok::KwDo, "'do'");
    PathId body = pstar();
    // while phi do d  ==  (phi?; d)*; !phi?
    return p_concat(p_star(p_concat(p_test(phi), body)), p_test(f_not(phi)));
  }

  FormulaId prop_condition() {
    int l = cur().line, c = cur().col;
    FormulaId f = unary();
    if (!is_propositional(f))
      throw ParseError("condition must be propositional", l, c);
    require_guard_props(f);
    return f;
  }

  void require_guard_props(FormulaId f) {
    std::vector<std::string> props;
    collect_props(f, props);
    for (const auto& p : props)
      if (p == kLastProp)
        fail("reserved proposition 'last' not allowed in guards");
  }

  std::vector<Token> toks_;
  size_t ix_ = 0;
};

}  // namespace

FormulaId parse_formula(const std::string& text) {
  return Parser(text).parse_top();
}

FormulaId parse_prop_formula(const std::string& text) {
  FormulaId f = Parser(text).parse_top();
  if (!is_propositional(f))
    throw ParseError("expected a propositional formula", 1, 1);
  return f;
}

bool is_reserved_word(const std::string& name) {
  return name == "true" || name == "false" || name == "tt" || name == "ff" ||
         name == "last" || name == "end" || name == "if" || name == "then" ||
         name == "else" || name == "while" || name == "do";
}

}  // namespace ldlmdp
