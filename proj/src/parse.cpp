#include "seqinfer/parse.hpp"

#include "seqinfer/simplify.hpp"

#include <cctype>
#include <optional>

namespace seqinfer {

ParseError::ParseError(size_t position_, std::string expected_, std::string found_)
    : std::runtime_error("parse error at offset " + std::to_string(position_) +
                         ": expected " + expected_ + ", found " + found_),
      position(position_), expected(std::move(expected_)), found(std::move(found_)) {}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t') { ++i; continue; }
    size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string lex;
      bool seen_digit = false, seen_dot = false;
      while (i < text.size()) {
        char d = text[i];
        if (std::isdigit(static_cast<unsigned char>(d))) { seen_digit = true; lex += d; ++i; }
        else if (d == '.' && !seen_dot) { seen_dot = true; lex += d; ++i; }
        else break;
      }
      if (!seen_digit) throw ParseError(start, "a number", "'.'");
      out.push_back({Token::Kind::Number, lex, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string lex;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])))) {
        lex += static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        ++i;
      }
      out.push_back({Token::Kind::Ident, lex, start});
      continue;
    }
    switch (c) {
      case '(': out.push_back({Token::Kind::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Token::Kind::RParen, ")", start}); ++i; break;
      case '+': case '-': case '/':
        out.push_back({Token::Kind::Op, std::string(1, c), start}); ++i; break;
      case '*':
        if (i + 1 < text.size() && text[i + 1] == '*') {
          out.push_back({Token::Kind::Op, "**", start});
          i += 2;
        } else {
          out.push_back({Token::Kind::Op, "*", start});
          ++i;
        }
        break;
      case '^':  // lenient input alias, never emitted
        out.push_back({Token::Kind::Op, "**", start});
        ++i;
        break;
      default:
        throw ParseError(start, "a token", "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

namespace {

std::optional<FuncSymbol> func_from_name(const std::string& name) {
  if (name == "SIN") return FuncSymbol::Sin;
  if (name == "COS") return FuncSymbol::Cos;
  if (name == "TAN") return FuncSymbol::Tan;
  if (name == "EXP") return FuncSymbol::Exp;
  if (name == "LOG") return FuncSymbol::Log;
  if (name == "SQRT") return FuncSymbol::Sqrt;
  if (name == "ATAN") return FuncSymbol::Atan;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expr run() {
    Expr e = expr();
    if (peek().kind != Token::Kind::End)
      throw ParseError(peek().position, "end of input", describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::End ? "end of input" : "'" + t.lexeme + "'";
  }

  bool at_op(const char* s) const {
    return peek().kind == Token::Kind::Op && peek().lexeme == s;
  }

  Expr expr() {
    Expr e = term();
    while (at_op("+") || at_op("-")) {
      bool add = advance().lexeme == "+";
      Expr r = term();
      e = add ? Expr::add(e, r) : Expr::sub(e, r);
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (at_op("*") || at_op("/")) {
      bool mul = advance().lexeme == "*";
      Expr r = unary();
      e = mul ? Expr::mul(e, r) : Expr::div(e, r);
    }
    return e;
  }

  Expr unary() {
    if (at_op("-")) {
      advance();
      return Expr::neg(unary());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (at_op("**")) {
      advance();
      return Expr::pow(base, power());  // right-associative; '-' needs parens
    }
    return base;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Number:
        advance();
        return Expr::constant(Rational::from_decimal(t.lexeme));
      case Token::Kind::Ident: {
        advance();
        if (t.lexeme == "X") return Expr::variable();
        if (auto f = func_from_name(t.lexeme)) {
          expect(Token::Kind::LParen, "'('");
          Expr arg = expr();
          expect(Token::Kind::RParen, "')'");
          return Expr::func(*f, arg);
        }
        throw ParseError(t.position, "X or a function name", "'" + t.lexeme + "'");
      }
      case Token::Kind::LParen: {
        advance();
        Expr e = expr();
        expect(Token::Kind::RParen, "')'");
        return e;
      }
      default:
        throw ParseError(t.position, "an expression", describe(t));
    }
  }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw ParseError(peek().position, what, describe(peek()));
    advance();
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::string& text) {
  Parser p(tokenize(text));
  return simplify_light(p.run());
}

}  // namespace seqinfer
