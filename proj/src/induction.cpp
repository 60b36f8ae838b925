#include "seqinfer/induction.hpp"

#include "seqinfer/derivative.hpp"
#include "seqinfer/emit.hpp"
#include "seqinfer/eval.hpp"
#include "seqinfer/simplify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <utility>

namespace seqinfer {

using Kind = Expr::Kind;

ShapeMismatchError::ShapeMismatchError(int index, std::string path)
    : std::runtime_error("observation " + std::to_string(index) +
                         " does not match the shape of observation 0 at " +
                         (path.empty() ? std::string("the root") : "node " + path)),
      index(index),
      path(std::move(path)) {}

IndexOutOfRangeError::IndexOutOfRangeError(long long n, long long j0)
    : std::runtime_error("index " + std::to_string(n) + " precedes the first observation (" +
                         std::to_string(j0) + ")"),
      n(n),
      j0(j0) {}

namespace {

std::string child_path(const std::string& path, const char* seg) {
  return path.empty() ? std::string(seg) : path + "." + seg;
}

struct AlignWalker {
  std::vector<SlotKind> kinds;
  std::vector<std::vector<SlotValue>> sequences;

  int new_slot(SlotKind kind, std::vector<SlotValue> seq) {
    int id = static_cast<int>(kinds.size());
    kinds.push_back(kind);
    sequences.push_back(std::move(seq));
    return id;
  }

  Expr walk(const std::vector<Expr>& nodes, const std::string& path) {
    const Expr& first = nodes[0];
    for (size_t i = 1; i < nodes.size(); ++i)
      if (nodes[i].kind() != first.kind())
        throw ShapeMismatchError(static_cast<int>(i), path);
    switch (first.kind()) {
      case Kind::Constant: {
        std::vector<SlotValue> seq;
        seq.reserve(nodes.size());
        for (const Expr& n : nodes) seq.emplace_back(n.value());
        return Expr::num_slot(new_slot(SlotKind::Numeric, std::move(seq)));
      }
      case Kind::Func: {
        std::vector<SlotValue> seq;
        seq.reserve(nodes.size());
        for (const Expr& n : nodes) seq.emplace_back(SignedFunc{1, n.symbol()});
        int id = new_slot(SlotKind::Function, std::move(seq));
        return Expr::func_slot(id, walk_children(nodes, path, "arg"));
      }
      case Kind::Variable:
        return Expr::variable();
      // slot ids are assigned in pre-order, so the left walk must run first
      case Kind::Add: {
        Expr l = walk_side(nodes, path, true);
        return Expr::add(std::move(l), walk_side(nodes, path, false));
      }
      case Kind::Sub: {
        Expr l = walk_side(nodes, path, true);
        return Expr::sub(std::move(l), walk_side(nodes, path, false));
      }
      case Kind::Mul: {
        Expr l = walk_side(nodes, path, true);
        return Expr::mul(std::move(l), walk_side(nodes, path, false));
      }
      case Kind::Div: {
        Expr l = walk_side(nodes, path, true);
        return Expr::div(std::move(l), walk_side(nodes, path, false));
      }
      case Kind::Pow: {
        Expr l = walk_side(nodes, path, true);
        return Expr::pow(std::move(l), walk_side(nodes, path, false));
      }
      case Kind::Neg:
        return Expr::neg(walk_children(nodes, path, "arg"));
      case Kind::NumSlot:
      case Kind::FuncSlot:
        throw std::invalid_argument("observations may not contain slot placeholders");
    }
    throw std::logic_error("align: unhandled node kind");
  }

  Expr walk_side(const std::vector<Expr>& nodes, const std::string& path, bool left) {
    std::vector<Expr> sub;
    sub.reserve(nodes.size());
    for (const Expr& n : nodes) sub.push_back(left ? n.left() : n.right());
    return walk(sub, child_path(path, left ? "left" : "right"));
  }

  Expr walk_children(const std::vector<Expr>& nodes, const std::string& path, const char* seg) {
    std::vector<Expr> sub;
    sub.reserve(nodes.size());
    for (const Expr& n : nodes) sub.push_back(n.child());
    return walk(sub, child_path(path, seg));
  }
};

// Same-term slot neighbours of a coefficient slot, used by the rescue passes.
struct TermPairing {
  int exp_slot = -1;   // first factor exponent slot over a non-constant base
  int func_slot = -1;  // first bare function factor
};

void flatten_chain(const Expr& chain, std::vector<Expr>& factors) {
  Expr c = chain;
  while (c.kind() == Kind::Mul) {
    factors.push_back(c.right());
    c = c.left();
  }
  factors.push_back(c);
  std::reverse(factors.begin(), factors.end());
}

void scan_pairings(const Expr& e, std::vector<TermPairing>& pairings) {
  if (e.kind() == Kind::Mul && e.left().kind() == Kind::NumSlot) {
    TermPairing& p = pairings[static_cast<size_t>(e.left().slot_id())];
    std::vector<Expr> factors;
    flatten_chain(e.right(), factors);
    for (const Expr& f : factors) {
      if (f.kind() == Kind::Pow && f.right().kind() == Kind::NumSlot &&
          f.left().kind() != Kind::NumSlot && f.left().kind() != Kind::Constant) {
        if (p.exp_slot < 0) p.exp_slot = f.right().slot_id();
      }
      // Only a bare function factor can absorb a sign linearly; a powered
      // one would square it away and break reproduction.
      if (f.kind() == Kind::FuncSlot && p.func_slot < 0) p.func_slot = f.slot_id();
    }
  }
  switch (e.kind()) {
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div:
    case Kind::Pow:
      scan_pairings(e.left(), pairings);
      scan_pairings(e.right(), pairings);
      break;
    case Kind::Func:
    case Kind::Neg:
    case Kind::FuncSlot:
      scan_pairings(e.child(), pairings);
      break;
    default:
      break;
  }
}

std::vector<Rational> numeric_sequence(const std::vector<SlotValue>& seq) {
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (const SlotValue& v : seq) out.push_back(std::get<Rational>(v));
  return out;
}

std::vector<SignedFunc> func_sequence(const std::vector<SlotValue>& seq) {
  std::vector<SignedFunc> out;
  out.reserve(seq.size());
  for (const SlotValue& v : seq) out.push_back(std::get<SignedFunc>(v));
  return out;
}

Expr subst_slots(const Expr& e, const std::vector<SlotValue>& vals) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Variable:
      return e;
    case Kind::NumSlot: {
      const auto* r = std::get_if<Rational>(&vals[static_cast<size_t>(e.slot_id())]);
      if (!r) throw std::logic_error("numeric slot bound to a function value");
      return Expr::constant(*r);
    }
    case Kind::FuncSlot: {
      const auto* f = std::get_if<SignedFunc>(&vals[static_cast<size_t>(e.slot_id())]);
      if (!f) throw std::logic_error("function slot bound to a numeric value");
      Expr body = Expr::func(f->symbol, subst_slots(e.child(), vals));
      return f->sign < 0 ? Expr::neg(body) : body;
    }
    case Kind::Func:
      return Expr::func(e.symbol(), subst_slots(e.child(), vals));
    case Kind::Neg:
      return Expr::neg(subst_slots(e.child(), vals));
    case Kind::Add:
      return Expr::add(subst_slots(e.left(), vals), subst_slots(e.right(), vals));
    case Kind::Sub:
      return Expr::sub(subst_slots(e.left(), vals), subst_slots(e.right(), vals));
    case Kind::Mul:
      return Expr::mul(subst_slots(e.left(), vals), subst_slots(e.right(), vals));
    case Kind::Div:
      return Expr::div(subst_slots(e.left(), vals), subst_slots(e.right(), vals));
    case Kind::Pow:
      return Expr::pow(subst_slots(e.left(), vals), subst_slots(e.right(), vals));
  }
  throw std::logic_error("subst_slots: unhandled node kind");
}

// Template with constant-law slots replaced by their values; the remaining
// slots stay symbolic.
Expr fold_constant_slots(const Expr& e, const std::vector<SlotLaw>& laws) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Variable:
      return e;
    case Kind::NumSlot: {
      const auto* c = std::get_if<ConstantLaw>(&laws[static_cast<size_t>(e.slot_id())]);
      if (c)
        if (const auto* r = std::get_if<Rational>(&c->value)) return Expr::constant(*r);
      return e;
    }
    case Kind::FuncSlot: {
      Expr arg = fold_constant_slots(e.child(), laws);
      const auto* c = std::get_if<ConstantLaw>(&laws[static_cast<size_t>(e.slot_id())]);
      if (c)
        if (const auto* f = std::get_if<SignedFunc>(&c->value)) {
          Expr body = Expr::func(f->symbol, arg);
          return f->sign < 0 ? Expr::neg(body) : body;
        }
      return Expr::func_slot(e.slot_id(), arg);
    }
    case Kind::Func:
      return Expr::func(e.symbol(), fold_constant_slots(e.child(), laws));
    case Kind::Neg:
      return Expr::neg(fold_constant_slots(e.child(), laws));
    case Kind::Add:
      return Expr::add(fold_constant_slots(e.left(), laws), fold_constant_slots(e.right(), laws));
    case Kind::Sub:
      return Expr::sub(fold_constant_slots(e.left(), laws), fold_constant_slots(e.right(), laws));
    case Kind::Mul:
      return Expr::mul(fold_constant_slots(e.left(), laws), fold_constant_slots(e.right(), laws));
    case Kind::Div:
      return Expr::div(fold_constant_slots(e.left(), laws), fold_constant_slots(e.right(), laws));
    case Kind::Pow:
      return Expr::pow(fold_constant_slots(e.left(), laws), fold_constant_slots(e.right(), laws));
  }
  throw std::logic_error("fold_constant_slots: unhandled node kind");
}

struct AffText {
  std::string text;
  int prec;
};

// a + b * var printed canonically: "N", "8-N", "N-1", "3*N+7", "-1-i".
// A negative slope goes constant-first so the text never opens with a
// gratuitous minus.
AffText affine_text(const Rational& a, const Rational& b, const std::string& var) {
  if (b.is_zero()) return {a.str(), a.is_negative() || !a.is_integer() ? 2 : 4};
  std::string bt;
  int bprec;
  if (b == Rational(1)) {
    bt = var;
    bprec = 4;
  } else if (b == Rational(-1)) {
    bt = "-" + var;
    bprec = 1;
  } else {
    bt = b.str() + "*" + var;
    bprec = b.is_negative() ? 1 : 2;
  }
  if (a.is_zero()) return {bt, bprec};
  if (b.is_negative()) {
    std::string body = b == Rational(-1) ? var : (-b).str() + "*" + var;
    return {a.str() + "-" + body, 1};
  }
  if (a.is_negative()) return {bt + "-" + (-a).str(), 1};
  return {bt + "+" + a.str(), 1};
}

std::string pow_operand(const AffText& t, int min_prec) {
  return t.prec < min_prec ? "(" + t.text + ")" : t.text;
}

std::string const_base_text(const Rational& r) {
  std::string s = r.str();
  if (r.is_negative() || !r.is_integer()) return "(" + s + ")";
  return s;
}

// Offset index N - j0 (+shift) as text.
AffText index_text(long long j0, long long shift = 0) {
  return affine_text(Rational(-j0 + shift), Rational(1), "N");
}

SlotText geometric_text(const GeometricLaw& g, long long j0) {
  if (g.first == g.ratio) {
    AffText e = index_text(j0, 1);
    return {const_base_text(g.ratio) + "**" + pow_operand(e, 3), 3};
  }
  AffText e = index_text(j0);
  std::string power = const_base_text(g.ratio) + "**" + pow_operand(e, 3);
  if (g.first == Rational(1)) return {power, 3};
  if (g.first == Rational(-1)) return {"-" + power, 1};
  return {g.first.str() + "*" + power, g.first.is_negative() ? 1 : 2};
}

SlotText product_recurrence_text(const ProductRecurrenceLaw& pr, long long j0) {
  AffText up = index_text(j0, -1);
  AffText body = affine_text(pr.ratio_first, pr.ratio_difference, "i");
  std::string prod = "PROD(i=0.." + up.text + "; " + body.text + ")";
  if (pr.first == Rational(1)) return {prod, 4};
  if (pr.first == Rational(-1)) return {"-" + prod, 1};
  return {pr.first.str() + "*" + prod, pr.first.is_negative() ? 1 : 2};
}

SlotText cycle_text(const CycleLaw& cy, long long j0, const std::string& arg_text) {
  std::string s = "CYCLE(" + index_text(j0).text + "; ";
  for (size_t i = 0; i < cy.values.size(); ++i) {
    if (i) s += ", ";
    if (const auto* f = std::get_if<SignedFunc>(&cy.values[i]))
      s += (f->sign < 0 ? "-" : "") + std::string(func_name(f->symbol)) + "(" + arg_text + ")";
    else
      s += std::get<Rational>(cy.values[i]).str();
  }
  return {s + ")", 4};
}

SlotText polynomial_text(const PolynomialLaw& poly, long long j0) {
  std::string body;
  for (size_t i = 0; i < poly.coefficients.size(); ++i) {
    const Rational& c = poly.coefficients[i];
    std::string term = c.abs().str();
    if (i >= 1) term += "*i";
    if (i >= 2) term += "**" + std::to_string(i);
    body += c.is_negative() ? "-" : (i ? "+" : "");
    body += term;
  }
  return {"POLY(i=" + index_text(j0).text + "; " + body + ")", 4};
}

long long cycle_lcm(const std::vector<SlotLaw>& laws) {
  long long l = 1;
  for (const SlotLaw& law : laws)
    if (const auto* cy = std::get_if<CycleLaw>(&law))
      l = std::lcm(l, static_cast<long long>(cy->values.size()));
  return l;
}

}  // namespace

Alignment align(const std::vector<Expr>& observations) {
  if (observations.size() < 3)
    throw std::invalid_argument("alignment needs at least 3 observations");
  std::vector<Expr> mats;
  mats.reserve(observations.size());
  for (const Expr& o : observations) mats.push_back(materialize(o));
  AlignWalker w;
  Expr tmpl = w.walk(mats, "");
  return Alignment{Skeleton{tmpl, std::move(w.kinds)}, std::move(w.sequences)};
}

Hypothesis induce(const std::vector<Expr>& observations, long long j0) {
  Alignment a = align(observations);
  const size_t nslots = a.skeleton.kinds.size();
  const size_t k = observations.size();

  std::vector<TermPairing> pairings(nslots);
  scan_pairings(a.skeleton.tmpl, pairings);

  std::vector<std::optional<SlotLaw>> laws(nslots);
  for (size_t i = 0; i < nslots; ++i) {
    if (a.skeleton.kinds[i] == SlotKind::Numeric)
      laws[i] = try_detect(numeric_sequence(a.sequences[i]));
    else
      laws[i] = try_detect(func_sequence(a.sequences[i]));
  }

  for (size_t i = 0; i < nslots; ++i) {
    if (laws[i] || a.skeleton.kinds[i] != SlotKind::Numeric) continue;
    std::vector<Rational> c = numeric_sequence(a.sequences[i]);
    bool all_nonzero = std::none_of(c.begin(), c.end(),
                                    [](const Rational& x) { return x.is_zero(); });

    // power-rule coupling: successive coefficients multiply by the current
    // exponent, so an arithmetic exponent law seeds a product recurrence
    const TermPairing& p = pairings[i];
    if (p.exp_slot >= 0 && laws[static_cast<size_t>(p.exp_slot)] && all_nonzero) {
      if (const auto* arith =
              std::get_if<ArithmeticLaw>(&*laws[static_cast<size_t>(p.exp_slot)])) {
        std::vector<Rational> e = numeric_sequence(a.sequences[static_cast<size_t>(p.exp_slot)]);
        bool ok = true;
        for (size_t t = 0; t + 1 < k; ++t)
          if (c[t + 1] != c[t] * e[t]) {
            ok = false;
            break;
          }
        if (ok) laws[i] = SlotLaw(ProductRecurrenceLaw{c[0], e[0], arith->difference});
      }
    }

    // sign transfer: move the signs of the coefficient stream onto the
    // term's function values and re-detect both slots
    if (!laws[i] && p.func_slot >= 0 && all_nonzero) {
      std::vector<Rational> mags;
      mags.reserve(k);
      for (const Rational& x : c) mags.push_back(x.abs());
      std::vector<SignedFunc> funcs = func_sequence(a.sequences[static_cast<size_t>(p.func_slot)]);
      for (size_t t = 0; t < k; ++t)
        if (c[t].is_negative()) funcs[t].sign = -funcs[t].sign;
      auto mag_law = try_detect(mags);
      auto func_law = try_detect(funcs);
      if (mag_law && func_law) {
        laws[i] = mag_law;
        laws[static_cast<size_t>(p.func_slot)] = func_law;
      }
    }
  }

  for (size_t i = 0; i < nslots; ++i)
    if (!laws[i]) throw NoLawFoundError(static_cast<int>(i));

  Hypothesis h;
  h.skeleton = std::move(a.skeleton);
  h.laws.reserve(nslots);
  for (size_t i = 0; i < nslots; ++i) h.laws.push_back(std::move(*laws[i]));
  h.j0 = j0;
  h.k = static_cast<int>(k);

  // a returned hypothesis must reproduce what it was induced from
  for (size_t t = 0; t < k; ++t) {
    Expr inst = instantiate(h, j0 + static_cast<long long>(t));
    if (materialize(inst) != materialize(observations[t]))
      throw std::logic_error("induce: hypothesis fails to reproduce observation " +
                             std::to_string(t));
  }
  return h;
}

Expr instantiate(const Hypothesis& h, long long n) {
  if (n < h.j0) throw IndexOutOfRangeError(n, h.j0);
  const long long m = n - h.j0;
  std::vector<SlotValue> vals;
  vals.reserve(h.laws.size());
  for (const SlotLaw& law : h.laws) vals.push_back(law_value_at(law, m));
  return simplify_light(subst_slots(h.skeleton.tmpl, vals));
}

std::string skeleton_text(const Hypothesis& h) {
  return emit(fold_constant_slots(h.skeleton.tmpl, h.laws));
}

std::string render_symbolic(const Hypothesis& h) {
  bool all_constant = true;
  bool cycles_only = true;
  for (const SlotLaw& law : h.laws) {
    if (!std::holds_alternative<ConstantLaw>(law)) all_constant = false;
    if (!std::holds_alternative<ConstantLaw>(law) && !std::holds_alternative<CycleLaw>(law))
      cycles_only = false;
  }
  if (all_constant) return emit(instantiate(h, h.j0));
  if (cycles_only) {
    const long long L = cycle_lcm(h.laws);
    std::string s = "CYCLE(" + index_text(h.j0).text + "; ";
    for (long long t = 0; t < L; ++t) {
      if (t) s += ", ";
      s += emit(instantiate(h, h.j0 + t));
    }
    return s + ")";
  }

  Expr folded = fold_constant_slots(h.skeleton.tmpl, h.laws);
  auto lookup = [&](int id, const std::string& arg_text) -> std::optional<SlotText> {
    const SlotLaw& law = h.laws[static_cast<size_t>(id)];
    if (const auto* a = std::get_if<ArithmeticLaw>(&law)) {
      // value at N: first + difference * (N - j0)
      AffText t = affine_text(a->first - a->difference * Rational(h.j0), a->difference, "N");
      return SlotText{t.text, t.prec};
    }
    if (const auto* g = std::get_if<GeometricLaw>(&law)) return geometric_text(*g, h.j0);
    if (const auto* pr = std::get_if<ProductRecurrenceLaw>(&law))
      return product_recurrence_text(*pr, h.j0);
    if (const auto* cy = std::get_if<CycleLaw>(&law)) return cycle_text(*cy, h.j0, arg_text);
    if (const auto* poly = std::get_if<PolynomialLaw>(&law)) return polynomial_text(*poly, h.j0);
    return std::nullopt;  // constant laws were folded into the tree
  };
  return emit_with_slots(folded, lookup);
}

const char* verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Structural:
      return "structural-match";
    case Verdict::Numeric:
      return "numeric-match";
    case Verdict::Mismatch:
      return "mismatch";
  }
  return "mismatch";
}

InferenceReport validate(const Hypothesis& h, const std::optional<Expr>& generator,
                         const std::vector<Expr>& observations, int extra) {
  const auto t0 = std::chrono::steady_clock::now();
  InferenceReport rep;
  rep.hypothesis = h;

  auto judge = [](const Expr& inst, const Expr& target) -> Verdict {
    if (materialize(inst) == materialize(target)) return Verdict::Structural;
    try {
      if (equiv_numeric(inst, target, default_points(), default_rel_tol()))
        return Verdict::Numeric;
    } catch (const InsufficientPointsError&) {
      // nothing usable to compare on: that is a mismatch, not a pass
    }
    return Verdict::Mismatch;
  };

  for (size_t t = 0; t < observations.size(); ++t) {
    const long long n = h.j0 + static_cast<long long>(t);
    rep.checks.push_back({n, judge(instantiate(h, n), observations[t])});
  }

  if (generator && extra > 0) {
    if (h.j0 < 0)
      throw std::invalid_argument("generator-backed validation needs a first index >= 0");
    const long long first = h.j0 + static_cast<long long>(observations.size());
    const long long last = first + extra - 1;
    std::vector<Expr> dseq = derivative_sequence(*generator, static_cast<int>(last));
    for (long long n = first; n <= last; ++n) {
      Expr target = n == 0 ? simplify_light(*generator) : dseq[static_cast<size_t>(n - 1)];
      rep.checks.push_back({n, judge(instantiate(h, n), target)});
    }
  }

  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace seqinfer
