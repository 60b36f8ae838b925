#include "seqinfer/simplify.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqinfer {
namespace {

using Kind = Expr::Kind;

struct Factor {
  Expr atom;                      // normalized
  std::optional<Rational> exp_q;  // rational exponent when known exactly
  Expr exp_e;                     // opaque exponent otherwise (normalized)
};

struct Parts {
  Rational coeff = 1;
  std::vector<Factor> factors;  // first-occurrence order
};

Expr normalize(const Expr& e);
Parts decompose(const Expr& e);
Expr recompose(Parts parts, bool mat);

// Exponent folding is exact rational arithmetic; cap the magnitude so a
// pathological literal like 2**10**12 cannot allocate unbounded bignums.
std::optional<long long> small_int(const Rational& q) {
  if (!q.is_integer()) return std::nullopt;
  BigInt n = q.numerator();
  if (n > 4096 || n < -4096) return std::nullopt;
  return n.convert_to<long long>();
}

bool const_foldable(const Rational& base, long long e) {
  return !(base.is_zero() && e <= 0);  // 0**0 and 0**negative stay symbolic
}

void add_factor(Parts& parts, Factor f);

void append_parts(Parts& parts, Parts other) {
  parts.coeff *= other.coeff;
  for (auto& f : other.factors) add_factor(parts, std::move(f));
}

// Append a factor, merging with a structurally equal atom (rational
// exponents only). Two cleanups keep normalization idempotent:
//   - constant atoms whose exponent is a small integer fold into the
//     coefficient (SQRT(2)*SQRT(2) merges to 2**1, which must become the
//     coefficient 2, not a retained power);
//   - a wrapped product atom back at exponent 1 dissolves into its own
//     factors (((X**2)**(1/2))**2 merges to exponent 1 over the atom
//     1*X**2, which must become the plain factor X**2).
void add_factor(Parts& parts, Factor f) {
  if (!f.exp_q) {
    parts.factors.push_back(std::move(f));
    return;
  }
  size_t at = parts.factors.size();
  for (size_t i = 0; i < parts.factors.size(); ++i) {
    Factor& g = parts.factors[i];
    if (g.exp_q && g.atom == f.atom) {
      f.exp_q = *f.exp_q + *g.exp_q;
      parts.factors.erase(parts.factors.begin() + i);
      at = i;  // keep first-occurrence order
      break;
    }
  }
  Kind k = f.atom.kind();
  if (*f.exp_q == Rational(1) &&
      (k == Kind::Mul || k == Kind::Div || k == Kind::Pow)) {
    Parts sub = decompose(f.atom);
    parts.coeff *= sub.coeff;
    for (auto& h : sub.factors) add_factor(parts, std::move(h));
    return;
  }
  if (k == Kind::Constant) {
    auto n = small_int(*f.exp_q);
    if (n && const_foldable(f.atom.value(), *n)) {
      parts.coeff *= f.atom.value().pow(*n);
      return;
    }
  }
  parts.factors.insert(parts.factors.begin() + at, std::move(f));
}

// Reciprocal of a decomposed term. A denominator that folded to exactly zero
// keeps an explicit 0**-1 factor: light simplification reports no errors, the
// evaluator does.
Parts invert(Parts p) {
  Parts out;
  if (p.coeff.is_zero()) {
    out.factors.push_back(Factor{Expr::constant(0), Rational(-1), Expr()});
    return out;
  }
  out.coeff = Rational(1) / p.coeff;
  for (auto& f : p.factors) {
    if (f.exp_q) {
      f.exp_q = -*f.exp_q;
    } else {
      f.exp_e = normalize(Expr::neg(f.exp_e));
    }
    add_factor(out, std::move(f));
  }
  return out;
}

// A decomposed base used as a single atom. A plain wrapped atom (1 * u**1)
// unwraps so Pow(u, q) keeps u directly; anything else recomposes.
Expr base_atom(Parts pb) {
  if (pb.coeff == Rational(1) && pb.factors.size() == 1) {
    const Factor& f = pb.factors.front();
    if (f.exp_q && *f.exp_q == Rational(1)) return f.atom;
  }
  return recompose(std::move(pb), false);
}

// (base)**q with an exact rational exponent. Shared by Pow, Div and SQRT.
Parts decompose_pow_rational(const Expr& base_raw, const Rational& q) {
  Parts pb = decompose(base_raw);

  if (q == Rational(1)) return pb;  // u**1 == u for every u

  if (pb.factors.empty()) {  // constant base
    Parts out;
    auto n = small_int(q);
    if (n && const_foldable(pb.coeff, *n)) {
      out.coeff = pb.coeff.pow(*n);
      return out;
    }
    add_factor(out, Factor{Expr::constant(pb.coeff), q, Expr()});
    return out;
  }

  if (q.is_zero()) {
    // u**0 is kept: light simplification does not assume u != 0
    Parts out;
    out.factors.push_back(Factor{base_atom(std::move(pb)), Rational(0), Expr()});
    return out;
  }

  if (auto n = small_int(q)) {
    // (u*v)**n == u**n * v**n and (u**p)**n == u**(p*n) hold at every point
    // where the input is defined, for any integer n
    bool all_rational = true;
    for (const auto& f : pb.factors) all_rational = all_rational && f.exp_q.has_value();
    if (all_rational) {
      Parts out;
      if (pb.coeff.is_zero()) {
        if (*n < 0)
          out.factors.push_back(Factor{Expr::constant(0), q, Expr()});
        else
          out.coeff = 0;
        return out;
      }
      out.coeff = pb.coeff.pow(*n);
      for (auto& f : pb.factors)
        add_factor(out, Factor{std::move(f.atom), *f.exp_q * q, Expr()});
      return out;
    }
  }

  // Non-integer exponent over a structured base: rational-exponent merging is
  // not value-safe here ((X**2)**(1/2) is |X|, not X), so the whole base
  // becomes one atom.
  Parts out;
  out.factors.push_back(Factor{base_atom(std::move(pb)), q, Expr()});
  return out;
}

Parts decompose_pow(const Expr& base, const Expr& exponent) {
  Expr ne = normalize(exponent);
  if (ne.kind() == Kind::Constant)
    return decompose_pow_rational(base, ne.value());
  Parts out;
  out.factors.push_back(Factor{normalize(base), std::nullopt, ne});
  return out;
}

Parts decompose(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      return Parts{e.value(), {}};
    case Kind::Variable:
    case Kind::NumSlot:
      return Parts{1, {Factor{e, Rational(1), Expr()}}};
    case Kind::Add:
    case Kind::Sub: {
      Expr s = normalize(e);
      if (s.kind() == Kind::Add || s.kind() == Kind::Sub)
        return Parts{1, {Factor{s, Rational(1), Expr()}}};
      return decompose(s);  // the sum folded away
    }
    case Kind::Neg: {
      Parts p = decompose(e.child());
      p.coeff = -p.coeff;
      return p;
    }
    case Kind::Mul: {
      Parts p = decompose(e.left());
      append_parts(p, decompose(e.right()));
      return p;
    }
    case Kind::Div: {
      Parts p = decompose(e.left());
      append_parts(p, invert(decompose(e.right())));
      return p;
    }
    case Kind::Pow:
      return decompose_pow(e.left(), e.right());
    case Kind::Func:
      if (e.symbol() == FuncSymbol::Sqrt)
        return decompose_pow_rational(e.child(), Rational(BigInt(1), BigInt(2)));
      return Parts{
          1, {Factor{Expr::func(e.symbol(), normalize(e.child())), Rational(1), Expr()}}};
    case Kind::FuncSlot:
      return Parts{
          1, {Factor{Expr::func_slot(e.slot_id(), normalize(e.child())), Rational(1), Expr()}}};
  }
  throw std::logic_error("decompose: bad kind");
}

Expr factor_expr(const Factor& f) {
  if (f.exp_q) {
    Kind k = f.atom.kind();
    if (*f.exp_q == Rational(1) && (k == Kind::Func || k == Kind::FuncSlot))
      return f.atom;  // function atoms never carry a Pow wrapper at exponent 1
    return Expr::pow(f.atom, Expr::constant(*f.exp_q));
  }
  return Expr::pow(f.atom, f.exp_e);
}

Expr recompose(Parts parts, bool mat) {
  if (parts.factors.empty()) return Expr::constant(parts.coeff);
  if (parts.coeff.is_zero()) return Expr::constant(0);

  // exponent-0 factors multiply as 1 and drop, except as the whole chain
  if (parts.factors.size() > 1) {
    std::vector<Factor> kept;
    for (auto& f : parts.factors)
      if (!(f.exp_q && f.exp_q->is_zero())) kept.push_back(std::move(f));
    if (kept.empty()) kept.push_back(std::move(parts.factors.front()));
    parts.factors = std::move(kept);
  }

  if (!mat && parts.coeff == Rational(1) && parts.factors.size() == 1) {
    const Factor& f = parts.factors.front();
    if (f.exp_q && *f.exp_q == Rational(1)) {
      Kind k = f.atom.kind();
      // bare only for atoms whose wrapper adds nothing; sums keep Pow
      if (k == Kind::Variable || k == Kind::Func || k == Kind::FuncSlot ||
          k == Kind::NumSlot)
        return f.atom;
    }
  }

  Expr chain = factor_expr(parts.factors.front());
  for (size_t i = 1; i < parts.factors.size(); ++i)
    chain = Expr::mul(chain, factor_expr(parts.factors[i]));
  return Expr::mul(Expr::constant(parts.coeff), chain);
}

Expr normalize(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Variable:
    case Kind::NumSlot:
      return e;
    case Kind::FuncSlot:
      return Expr::func_slot(e.slot_id(), normalize(e.child()));
    case Kind::Add:
    case Kind::Sub: {
      bool add = e.kind() == Kind::Add;
      Expr l = normalize(e.left());
      Expr r = normalize(e.right());
      if (l.kind() == Kind::Constant && r.kind() == Kind::Constant)
        return Expr::constant(add ? l.value() + r.value() : l.value() - r.value());
      if (r.is_constant(0)) return l;
      if (l.is_constant(0)) return add ? r : normalize(Expr::neg(r));
      return add ? Expr::add(l, r) : Expr::sub(l, r);
    }
    default:
      return recompose(decompose(e), false);
  }
}

Expr mat_impl(const Expr& e);

Expr mat_atom(const Expr& a) {
  switch (a.kind()) {
    case Kind::Variable:
    case Kind::Constant:
    case Kind::NumSlot:
      return a;  // the factor wrapper already carries coefficient and power
    case Kind::Func:
      return Expr::func(a.symbol(), mat_impl(a.child()));
    case Kind::FuncSlot:
      return Expr::func_slot(a.slot_id(), mat_impl(a.child()));
    default:
      return mat_impl(a);  // sum atoms and nested opaque bases
  }
}

Expr mat_impl(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::NumSlot:
      return e;
    case Kind::Variable:
      return Expr::mul(Expr::constant(1), Expr::pow(e, Expr::constant(1)));
    case Kind::Add:
      return Expr::add(mat_impl(e.left()), mat_impl(e.right()));
    case Kind::Sub:
      return Expr::sub(mat_impl(e.left()), mat_impl(e.right()));
    case Kind::FuncSlot:
      return Expr::func_slot(e.slot_id(), mat_impl(e.child()));
    default: {
      Parts p = decompose(e);
      for (auto& f : p.factors) f.atom = mat_atom(f.atom);
      return recompose(std::move(p), true);
    }
  }
}

}  // namespace

Expr simplify_light(const Expr& e) { return normalize(e); }

Expr materialize(const Expr& e) { return mat_impl(normalize(e)); }

}  // namespace seqinfer
