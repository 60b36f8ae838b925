#include "seqinfer/eval.hpp"

#include <cmath>
#include <string>

namespace seqinfer {

DomainError::DomainError(std::string msg, Expr subtree_, double point_)
    : std::runtime_error(std::move(msg)), subtree(std::move(subtree_)), point(point_) {}

InsufficientPointsError::InsufficientPointsError(int usable_)
    : std::runtime_error("numeric comparison: only " + std::to_string(usable_) +
                         " usable points (need 4)"),
      usable(usable_) {}

namespace {

using Kind = Expr::Kind;

[[noreturn]] void fail(const char* what, const Expr& e, double x) {
  throw DomainError(std::string("domain error at X=") + std::to_string(x) + ": " + what, e, x);
}

double eval_impl(const Expr& e, double x) {
  switch (e.kind()) {
    case Kind::Constant:
      return e.value().to_double();
    case Kind::Variable:
      return x;
    case Kind::Add:
      return eval_impl(e.left(), x) + eval_impl(e.right(), x);
    case Kind::Sub:
      return eval_impl(e.left(), x) - eval_impl(e.right(), x);
    case Kind::Mul: {
      double v = eval_impl(e.left(), x) * eval_impl(e.right(), x);
      if (std::isnan(v)) fail("undefined product", e, x);
      return v;
    }
    case Kind::Div: {
      double den = eval_impl(e.right(), x);
      if (den == 0.0) fail("division by zero", e, x);
      double v = eval_impl(e.left(), x) / den;
      if (std::isnan(v)) fail("undefined quotient", e, x);
      return v;
    }
    case Kind::Pow: {
      double b = eval_impl(e.left(), x);
      double p = eval_impl(e.right(), x);
      if (b == 0.0 && p == 0.0) return 1.0;
      if (b == 0.0 && p < 0.0) fail("zero to a negative power", e, x);
      double v = std::pow(b, p);
      if (std::isnan(v)) fail("fractional power of a negative base", e, x);
      return v;
    }
    case Kind::Neg:
      return -eval_impl(e.child(), x);
    case Kind::Func: {
      double a = eval_impl(e.child(), x);
      switch (e.symbol()) {
        case FuncSymbol::Sin: return std::sin(a);
        case FuncSymbol::Cos: return std::cos(a);
        case FuncSymbol::Tan: {
          double v = std::tan(a);
          if (std::isnan(v)) fail("undefined tangent", e, x);
          return v;
        }
        case FuncSymbol::Exp: return std::exp(a);
        case FuncSymbol::Log:
          if (a <= 0.0) fail("log of a non-positive number", e, x);
          return std::log(a);
        case FuncSymbol::Sqrt:
          if (a < 0.0) fail("square root of a negative number", e, x);
          return std::sqrt(a);
        case FuncSymbol::Atan: return std::atan(a);
      }
      fail("bad function", e, x);
    }
    case Kind::NumSlot:
    case Kind::FuncSlot:
      fail("unresolved slot", e, x);
  }
  fail("bad node", e, x);
}

}  // namespace

double eval(const Expr& e, double x) { return eval_impl(e, x); }

const std::vector<double>& default_points() {
  static const std::vector<double> pts = {-0.3, 0.3, -1.1, 1.1, 1.7, 2.4, 3.6, 5.2};
  return pts;
}

double default_rel_tol() { return 1e-9; }

bool equiv_numeric(const Expr& e1, const Expr& e2,
                   const std::vector<double>& points, double rel_tol) {
  int usable = 0;
  bool all_close = true;
  for (double x : points) {
    double v1, v2;
    try {
      v1 = eval(e1, x);
      v2 = eval(e2, x);
    } catch (const DomainError&) {
      continue;
    }
    ++usable;
    if (!std::isfinite(v1) || !std::isfinite(v2)) {
      if (v1 != v2) all_close = false;  // matching infinities compare equal
      continue;
    }
    if (std::abs(v1 - v2) > rel_tol * std::max(1.0, std::abs(v1))) all_close = false;
  }
  if (usable < 4) throw InsufficientPointsError(usable);
  return all_close;
}

}  // namespace seqinfer
