#include "seqinfer/emit.hpp"

#include "seqinfer/simplify.hpp"

#include <string>

namespace seqinfer {
namespace {

using Kind = Expr::Kind;
using SlotLookup = std::function<std::optional<SlotText>(int, const std::string&)>;

// Precedence: 1 sums (and leading '-'), 2 products and non-atomic constants,
// 3 power, 4 atoms.
struct Rendered {
  std::string text;
  int prec;
};

std::string paren_if(const Rendered& r, int min_prec, bool bar_leading_minus = false) {
  if (r.prec < min_prec || (bar_leading_minus && !r.text.empty() && r.text[0] == '-'))
    return "(" + r.text + ")";
  return r.text;
}

Rendered render_const(const Rational& v) {
  // negative or fractional constants reparse through unary minus / division,
  // so they rank below power precedence
  return {v.str(), v.is_negative() || !v.is_integer() ? 2 : 4};
}

bool is_const(const Expr& e, long long num, long long den) {
  return e.kind() == Kind::Constant && e.value() == Rational(BigInt(num), BigInt(den));
}

struct Renderer {
  const SlotLookup* lookup = nullptr;

  Rendered render(const Expr& e) const;

  Rendered render_factor(const Expr& e) const {
    if (e.kind() != Kind::Pow) return render(e);  // bare function atoms
    const Expr& base = e.left();
    const Expr& exp = e.right();
    if (is_const(exp, 1, 2)) return {"SQRT(" + render(base).text + ")", 4};
    if (is_const(exp, 1, 1)) {
      // exponent 1 suppressed; the factor context guarantees the reparse
      // re-materializes the term around the bare atom, and the caller
      // parenthesizes by the base's own precedence
      return render(base);
    }
    Rendered b = render(base);
    Rendered x = render(exp);
    return {paren_if(b, 4) + "**" + paren_if(x, 3), 3};
  }

  // Left spine of a factor chain: Mul nodes whose left side is not the
  // coefficient.
  Rendered render_chain(const Expr& e) const {
    if (e.kind() == Kind::Mul && e.left().kind() != Kind::Constant) {
      Rendered l = render_chain(e.left());
      Rendered r = render_factor(e.right());
      return {paren_if(l, 2) + "*" + paren_if(r, 3, true), 2};
    }
    return render_factor(e);
  }
};

// True when the chain's own text carries a multiplicative or power marker,
// so dropping a coefficient of 1 still reparses to the same normal form.
// The only unstructured chain a normal form can carry is a lone sum atom at
// exponent 1, which keeps its "1*".
bool structured_chain(const Expr& e) {
  if (e.kind() == Kind::Mul) return true;
  if (e.kind() == Kind::Pow) return !is_const(e.right(), 1, 1);
  return false;
}

Rendered Renderer::render(const Expr& e) const {
  switch (e.kind()) {
    case Kind::Constant:
      return render_const(e.value());
    case Kind::Variable:
      return {"X", 4};
    case Kind::NumSlot: {
      if (lookup && *lookup) {
        if (auto s = (*lookup)(e.slot_id(), std::string())) return {s->text, s->prec};
      }
      return {"C" + std::to_string(e.slot_id()), 4};
    }
    case Kind::FuncSlot: {
      std::string arg = render(e.child()).text;
      if (lookup && *lookup) {
        if (auto s = (*lookup)(e.slot_id(), arg)) return {s->text, s->prec};
      }
      return {"F" + std::to_string(e.slot_id()) + "(" + arg + ")", 4};
    }
    case Kind::Func:
      return {std::string(func_name(e.symbol())) + "(" + render(e.child()).text + ")", 4};
    case Kind::Add: {
      Rendered l = render(e.left());
      Rendered r = render(e.right());
      return {paren_if(l, 1) + "+" + paren_if(r, 2, true), 1};
    }
    case Kind::Sub: {
      Rendered l = render(e.left());
      Rendered r = render(e.right());
      return {paren_if(l, 1) + "-" + paren_if(r, 2, true), 1};
    }
    case Kind::Neg: {
      Rendered c = render(e.child());
      return {"-" + paren_if(c, 2), 1};
    }
    case Kind::Div: {
      Rendered l = render(e.left());
      Rendered r = render(e.right());
      return {paren_if(l, 2) + "/" + paren_if(r, 3, true), 2};
    }
    case Kind::Pow:
      return render_factor(e);
    case Kind::Mul: {
      if (e.left().kind() == Kind::Constant) {
        const Rational& c = e.left().value();
        const Expr& chain = e.right();
        if (c == Rational(1) && structured_chain(chain)) return render_chain(chain);
        if (c == Rational(-1)) return {"-" + paren_if(render_chain(chain), 2), 1};
        // a trailing chain is left-associatively safe after the coefficient
        return {render_const(c).text + "*" + paren_if(render_chain(chain), 2, true), 2};
      }
      Rendered l = render(e.left());
      Rendered r = render(e.right());
      return {paren_if(l, 2) + "*" + paren_if(r, 3, true), 2};
    }
  }
  return {"?", 4};
}

}  // namespace

std::string emit(const Expr& e) {
  Renderer r;
  return r.render(simplify_light(e)).text;
}

std::string emit_with_slots(const Expr& e, const SlotLookup& lookup) {
  Renderer r;
  r.lookup = &lookup;
  return r.render(simplify_light(e)).text;
}

}  // namespace seqinfer
