#include "seqinfer/expr.hpp"

#include <stdexcept>
#include <utility>

namespace seqinfer {

const char* func_name(FuncSymbol f) {
  switch (f) {
    case FuncSymbol::Sin: return "SIN";
    case FuncSymbol::Cos: return "COS";
    case FuncSymbol::Tan: return "TAN";
    case FuncSymbol::Exp: return "EXP";
    case FuncSymbol::Log: return "LOG";
    case FuncSymbol::Sqrt: return "SQRT";
    case FuncSymbol::Atan: return "ATAN";
  }
  throw std::logic_error("func_name: bad symbol");
}

struct Expr::Node {
  Kind kind;
  Rational value;      // Constant
  FuncSymbol symbol;   // Func
  int slot_id = 0;     // NumSlot, FuncSlot
  Expr a, b;           // children: a=left/arg/operand, b=right
};

Expr Expr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::variable() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  return Expr(std::move(n));
}

Expr Expr::add(Expr l, Expr r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->a = std::move(l);
  n->b = std::move(r);
  if (n->a.empty() || n->b.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr Expr::sub(Expr l, Expr r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sub;
  n->a = std::move(l);
  n->b = std::move(r);
  if (n->a.empty() || n->b.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr Expr::mul(Expr l, Expr r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->a = std::move(l);
  n->b = std::move(r);
  if (n->a.empty() || n->b.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr Expr::div(Expr l, Expr r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Div;
  n->a = std::move(l);
  n->b = std::move(r);
  if (n->a.empty() || n->b.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, Expr exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->a = std::move(base);
  n->b = std::move(exponent);
  if (n->a.empty() || n->b.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr Expr::func(FuncSymbol f, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Func;
  n->symbol = f;
  n->a = std::move(arg);
  if (n->a.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr Expr::neg(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->a = std::move(operand);
  if (n->a.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr Expr::num_slot(int id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::NumSlot;
  n->slot_id = id;
  return Expr(std::move(n));
}

Expr Expr::func_slot(int id, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FuncSlot;
  n->slot_id = id;
  n->a = std::move(arg);
  if (n->a.empty()) throw std::logic_error("expr: empty child");
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const {
  if (!n_) throw std::logic_error("expr: empty handle");
  return n_->kind;
}

bool Expr::is_constant(const Rational& v) const {
  return !empty() && n_->kind == Kind::Constant && n_->value == v;
}

const Rational& Expr::value() const {
  if (kind() != Kind::Constant) throw std::logic_error("expr: not a constant");
  return n_->value;
}

FuncSymbol Expr::symbol() const {
  if (kind() != Kind::Func) throw std::logic_error("expr: not a function");
  return n_->symbol;
}

int Expr::slot_id() const {
  Kind k = kind();
  if (k != Kind::NumSlot && k != Kind::FuncSlot)
    throw std::logic_error("expr: not a slot");
  return n_->slot_id;
}

const Expr& Expr::left() const {
  switch (kind()) {
    case Kind::Add: case Kind::Sub: case Kind::Mul: case Kind::Div: case Kind::Pow:
      return n_->a;
    default:
      throw std::logic_error("expr: no left child");
  }
}

const Expr& Expr::right() const {
  switch (kind()) {
    case Kind::Add: case Kind::Sub: case Kind::Mul: case Kind::Div: case Kind::Pow:
      return n_->b;
    default:
      throw std::logic_error("expr: no right child");
  }
}

const Expr& Expr::child() const {
  switch (kind()) {
    case Kind::Func: case Kind::Neg: case Kind::FuncSlot:
      return n_->a;
    default:
      throw std::logic_error("expr: no unary child");
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.n_ == b.n_) return true;
  if (a.empty() || b.empty()) return false;
  if (a.n_->kind != b.n_->kind) return false;
  switch (a.n_->kind) {
    case Expr::Kind::Constant:
      return a.n_->value == b.n_->value;
    case Expr::Kind::Variable:
      return true;
    case Expr::Kind::Add: case Expr::Kind::Sub: case Expr::Kind::Mul:
    case Expr::Kind::Div: case Expr::Kind::Pow:
      return a.n_->a == b.n_->a && a.n_->b == b.n_->b;
    case Expr::Kind::Func:
      return a.n_->symbol == b.n_->symbol && a.n_->a == b.n_->a;
    case Expr::Kind::Neg:
      return a.n_->a == b.n_->a;
    case Expr::Kind::NumSlot:
      return a.n_->slot_id == b.n_->slot_id;
    case Expr::Kind::FuncSlot:
      return a.n_->slot_id == b.n_->slot_id && a.n_->a == b.n_->a;
  }
  return false;
}

}  // namespace seqinfer
