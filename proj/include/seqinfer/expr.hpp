#pragma once

#include "seqinfer/rational.hpp"

#include <memory>

namespace seqinfer {

// The closed set of supported function symbols.
enum class FuncSymbol { Sin, Cos, Tan, Exp, Log, Sqrt, Atan };

const char* func_name(FuncSymbol f);  // "SIN", "COS", ...

// Immutable expression tree over the single variable X. Nodes are shared;
// copying an Expr is O(1). Structural equality is deep.
//
// NumSlot/FuncSlot are placeholder nodes used by the induction layer's
// skeleton templates; they never appear in parsed or differentiated
// expressions.
class Expr {
 public:
  enum class Kind {
    Constant,
    Variable,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Func,
    Neg,
    NumSlot,
    FuncSlot,
  };

  Expr() = default;  // empty handle; usable only as assignment target

  static Expr constant(Rational value);
  static Expr variable();
  static Expr add(Expr l, Expr r);
  static Expr sub(Expr l, Expr r);
  static Expr mul(Expr l, Expr r);
  static Expr div(Expr l, Expr r);
  static Expr pow(Expr base, Expr exponent);
  static Expr func(FuncSymbol f, Expr arg);
  static Expr neg(Expr operand);
  static Expr num_slot(int id);
  static Expr func_slot(int id, Expr arg);

  bool empty() const { return n_ == nullptr; }
  Kind kind() const;

  bool is_constant(const Rational& v) const;  // Constant node with that value

  const Rational& value() const;  // Constant
  FuncSymbol symbol() const;      // Func
  int slot_id() const;            // NumSlot, FuncSlot
  const Expr& left() const;       // Add, Sub, Mul, Div, Pow
  const Expr& right() const;
  const Expr& child() const;      // Func arg, Neg operand, FuncSlot arg

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

}  // namespace seqinfer
