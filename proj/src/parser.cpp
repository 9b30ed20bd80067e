#include "bolano/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;       // number literal or identifier base
  std::string subscript;  // identifier subscript
  bool has_subscript = false;
  std::size_t offset = 0;
};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.offset = i;
    if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      std::size_t j = i;
      while (j < text.size() && (is_digit(text[j]) || text[j] == '.')) ++j;
      t.kind = Tok::Number;
      t.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (is_alpha(c)) {
      std::size_t j = i;
      while (j < text.size() && is_alnum(text[j])) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(text.substr(i, j - i));
      if (j < text.size() && text[j] == '_') {
        std::size_t k = j + 1;
        while (k < text.size() && is_alnum(text[k])) ++k;
        if (k == j + 1) throw ParseError("empty subscript", k, {"subscript"});
        t.has_subscript = true;
        t.subscript = std::string(text.substr(j + 1, k - j - 1));
        j = k;
      }
      i = j;
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case '*':
          if (i + 1 < text.size() && text[i + 1] == '*') {
            t.kind = Tok::Caret;
            ++i;
          } else {
            t.kind = Tok::Star;
          }
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", i,
                           {"number", "identifier", "operator"});
      }
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.offset = text.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail("trailing input", {"+", "-", "*", "/", "^", "end"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw ParseError(what, peek().offset, std::move(expected));
  }
  void expect(Tok kind, const char* name) {
    if (!accept(kind)) fail(std::string("expected '") + name + "'", {name});
  }

  Expr expr() {
    const std::size_t start = peek().offset;
    std::vector<Expr> terms;
    bool negate = false;
    if (accept(Tok::Minus)) {
      negate = true;
    } else {
      accept(Tok::Plus);
    }
    Expr first = term();
    terms.push_back(negate ? make_expr(ast::Negate{first}, start) : first);
    while (true) {
      const std::size_t at = peek().offset;
      if (accept(Tok::Plus)) {
        terms.push_back(term());
      } else if (accept(Tok::Minus)) {
        terms.push_back(make_expr(ast::Negate{term()}, at));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms.front();
    return make_expr(ast::Sum{std::move(terms)}, start);
  }

  Expr term() {
    const std::size_t start = peek().offset;
    Expr lhs = factor();
    std::vector<Expr> factors{lhs};
    while (true) {
      const std::size_t at = peek().offset;
      if (accept(Tok::Star)) {
        factors.push_back(factor());
      } else if (accept(Tok::Slash)) {
        Expr num = factors.size() == 1 ? factors.front()
                                       : make_expr(ast::Product{factors}, start);
        factors = {make_expr(ast::Quotient{num, factor()}, at)};
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors.front();
    return make_expr(ast::Product{std::move(factors)}, start);
  }

  Expr factor() {
    const std::size_t start = peek().offset;
    Expr b = base();
    if (!accept(Tok::Caret)) return b;
    return make_expr(ast::Power{b, exponent()}, start);
  }

  Expr exponent() {
    const std::size_t start = peek().offset;
    bool negate = false;
    if (accept(Tok::Minus)) {
      negate = true;
    } else {
      accept(Tok::Plus);
    }
    Expr e;
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      e = number();
    } else if (t.kind == Tok::Ident && !is_reserved(t)) {
      e = identifier(advance());
    } else if (accept(Tok::LParen)) {
      e = expr();
      expect(Tok::RParen, ")");
    } else {
      fail("expected exponent", {"number", "identifier", "("});
    }
    return negate ? make_expr(ast::Negate{e}, start) : e;
  }

  static bool is_reserved(const Token& t) {
    if (t.has_subscript) return t.text == "b" || t.text == "bd";
    return t.text == "b" || t.text == "bd" || t.text == "I" || t.text == "sum" ||
           t.text == "prod" || t.text == "exp";
  }

  Expr number() {
    const Token& t = advance();
    try {
      return make_expr(ast::Number{rational_from_decimal(t.text)}, t.offset);
    } catch (const ParseError& e) {
      throw ParseError("malformed number '" + t.text + "'", t.offset + e.offset(),
                       {"digit"});
    }
  }

  Expr identifier(const Token& t) {
    return make_expr(ast::Symbol{t.text, t.subscript, t.has_subscript}, t.offset);
  }

  Expr base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return number();
      case Tok::LParen: {
        advance();
        Expr e = expr();
        expect(Tok::RParen, ")");
        return e;
      }
      case Tok::Ident:
        break;
      default:
        fail("expected operand", {"number", "identifier", "b", "bd", "I", "("});
    }
    const Token id = advance();
    if (id.text == "b" || id.text == "bd") {
      return make_expr(ast::Ladder{id.text == "b" ? OpKind::Annihilate : OpKind::Create,
                                   id.subscript},
                       id.offset);
    }
    if (id.has_subscript) return identifier(id);
    if (id.text == "I") return make_expr(ast::Imaginary{}, id.offset);
    if (id.text == "exp") {
      expect(Tok::LParen, "(");
      Expr arg = expr();
      expect(Tok::RParen, ")");
      return make_expr(ast::Exponential{arg}, id.offset);
    }
    if (id.text == "sum" || id.text == "prod") {
      expect(Tok::LParen, "(");
      const Token& index = peek();
      if (index.kind != Tok::Ident || index.has_subscript || is_reserved(index)) {
        fail("expected index name", {"identifier"});
      }
      std::string name = advance().text;
      expect(Tok::Comma, ",");
      Expr lo = expr();
      expect(Tok::Comma, ",");
      Expr hi = expr();
      expect(Tok::Comma, ",");
      Expr body = expr();
      expect(Tok::RParen, ")");
      return make_expr(ast::IndexedRange{id.text == "sum" ? ast::RangeMode::Sum
                                                          : ast::RangeMode::Product,
                                         std::move(name), lo, hi, body},
                       id.offset);
    }
    return identifier(id);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

LadderPoly parse_poly(std::string_view text) { return expand(parse(text)); }

}  // namespace bolano
