#pragma once

#include "seqinfer/expr.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace seqinfer {

struct Token {
  enum class Kind { Number, Ident, Op, LParen, RParen, End };
  Kind kind;
  std::string lexeme;
  size_t position;  // byte offset into the input
};

struct ParseError : std::runtime_error {
  ParseError(size_t position, std::string expected, std::string found);
  size_t position;
  std::string expected;
  std::string found;
};

// Lex ASCII expression text. Identifiers are case-insensitive and uppercased
// here; '^' is turned into '**'. Throws ParseError on an invalid character.
std::vector<Token> tokenize(const std::string& text);

// Grammar (FORTRAN-style, explicit multiplication):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('**' power)?          right-associative
//   atom   := NUMBER | 'X' | FUNC '(' expr ')' | '(' expr ')'
// Unary minus binds looser than '**' (so -2**2 is -(2**2) and X**-2 needs
// parentheses). Numbers are unsigned integer or decimal literals, converted
// exactly. The result is returned after simplify_light.
Expr parse(const std::string& text);

}  // namespace seqinfer
