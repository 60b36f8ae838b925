#include "seqinfer/derivative.hpp"

#include "seqinfer/emit.hpp"
#include "seqinfer/simplify.hpp"

#include <utility>

namespace seqinfer {

UnsupportedExprError::UnsupportedExprError(std::string msg)
    : std::runtime_error(std::move(msg)) {}

namespace {

using Kind = Expr::Kind;

Expr rat(long long n) { return Expr::constant(Rational(n)); }

// Raw derivative of a normalized tree; the caller normalizes the result.
Expr d(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      return rat(0);
    case Kind::Variable:
      return rat(1);
    case Kind::Add:
      return Expr::add(d(e.left()), d(e.right()));
    case Kind::Sub:
      return Expr::sub(d(e.left()), d(e.right()));
    case Kind::Neg:
      return Expr::neg(d(e.child()));
    case Kind::Mul:
      return Expr::add(Expr::mul(d(e.left()), e.right()),
                       Expr::mul(e.left(), d(e.right())));
    case Kind::Div:
      return Expr::div(Expr::sub(Expr::mul(d(e.left()), e.right()),
                                 Expr::mul(e.left(), d(e.right()))),
                       Expr::pow(e.right(), rat(2)));
    case Kind::Pow: {
      if (e.right().kind() != Kind::Constant)
        throw UnsupportedExprError("cannot differentiate a power with a non-constant exponent: " +
                                   emit(e));
      const Rational& c = e.right().value();
      Expr stepped = Expr::pow(e.left(), Expr::constant(c - Rational(1)));
      return Expr::mul(Expr::mul(Expr::constant(c), stepped), d(e.left()));
    }
    case Kind::Func: {
      const Expr& u = e.child();
      Expr du = d(u);
      switch (e.symbol()) {
        case FuncSymbol::Sin:
          return Expr::mul(Expr::func(FuncSymbol::Cos, u), du);
        case FuncSymbol::Cos:
          return Expr::mul(Expr::neg(Expr::func(FuncSymbol::Sin, u)), du);
        case FuncSymbol::Tan:
          return Expr::mul(Expr::add(rat(1), Expr::pow(Expr::func(FuncSymbol::Tan, u), rat(2))),
                           du);
        case FuncSymbol::Exp:
          return Expr::mul(Expr::func(FuncSymbol::Exp, u), du);
        case FuncSymbol::Log:
          return Expr::mul(du, Expr::pow(u, rat(-1)));
        case FuncSymbol::Sqrt:
          return Expr::mul(Expr::mul(Expr::constant(Rational(1, 2)),
                                     Expr::pow(u, Expr::constant(Rational(-1, 2)))),
                           du);
        case FuncSymbol::Atan:
          return Expr::div(du, Expr::add(rat(1), Expr::pow(u, rat(2))));
      }
      break;
    }
    case Kind::NumSlot:
    case Kind::FuncSlot:
      throw UnsupportedExprError("cannot differentiate a slot placeholder");
  }
  throw UnsupportedExprError("cannot differentiate expression: " + emit(e));
}

}  // namespace

Expr differentiate(const Expr& e) { return simplify_light(d(simplify_light(e))); }

std::vector<Expr> derivative_sequence(const Expr& e, int k) {
  std::vector<Expr> out;
  out.reserve(k > 0 ? static_cast<size_t>(k) : 0);
  Expr cur = simplify_light(e);
  for (int j = 1; j <= k; ++j) {
    cur = differentiate(cur);
    out.push_back(cur);
  }
  return out;
}

}  // namespace seqinfer
