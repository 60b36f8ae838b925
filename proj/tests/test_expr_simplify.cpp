#include "seqinfer/simplify.hpp"

#include "seqinfer/eval.hpp"
#include "seqinfer/parse.hpp"

#include "doctest.h"

#include "corpus.hpp"

#include <random>

using namespace seqinfer;

namespace {

Expr c(long long v) { return Expr::constant(Rational(v)); }
Expr X() { return Expr::variable(); }

}  // namespace

TEST_CASE("terms normalize to coefficient-power form") {
  // nested constant product folds into one leading coefficient
  CHECK(simplify_light(Expr::mul(c(2), Expr::mul(c(3), X()))) ==
        Expr::mul(c(6), Expr::pow(X(), c(1))));

  // negation folds into the coefficient; a lone function factor stays bare
  CHECK(simplify_light(Expr::neg(Expr::mul(c(3), Expr::func(FuncSymbol::Sin, X())))) ==
        Expr::mul(c(-3), Expr::func(FuncSymbol::Sin, X())));

  CHECK(parse("3*(X-2)**2") ==
        Expr::mul(c(3), Expr::pow(Expr::sub(X(), c(2)), c(2))));

  // division is a negative exponent, equal atoms merge
  CHECK(parse("1/X") == Expr::mul(c(1), Expr::pow(X(), c(-1))));
  CHECK(parse("X/X") == Expr::mul(c(1), Expr::pow(X(), c(0))));
  CHECK(parse("X**2*X**(-2)") == Expr::mul(c(1), Expr::pow(X(), c(0))));

  // the sole exponent-0 factor is kept; with company it is dropped
  CHECK(parse("X**0") == Expr::mul(c(1), Expr::pow(X(), c(0))));
  CHECK(parse("X**0*SIN(X)") == Expr::func(FuncSymbol::Sin, X()));

  CHECK(simplify_light(Expr::neg(Expr::neg(X()))) == X());
}

TEST_CASE("rational constants fold exactly") {
  CHECK(parse("2**10") == c(1024));
  CHECK(parse("2**(-2)") == Expr::constant(Rational(BigInt(1), BigInt(4))));
  CHECK(parse("SQRT(2)*SQRT(2)") == c(2));
  // 0**0 is defined as 1 by eval but the power is not folded away
  CHECK(parse("0**0") == Expr::mul(c(1), Expr::pow(c(0), c(0))));
  CHECK(eval(parse("0**0"), 3.0) == 1.0);
}

TEST_CASE("powers of powers distribute only for integer exponents") {
  CHECK(parse("(X**2)**3") == Expr::mul(c(1), Expr::pow(X(), c(6))));

  // a fractional exponent must not collapse X**2 under it (sign would be lost)
  Expr half_pow = parse("(X**2)**(1/2)");
  CHECK(half_pow == Expr::mul(c(1), Expr::pow(Expr::mul(c(1), Expr::pow(X(), c(2))),
                                              Expr::constant(Rational(BigInt(1), BigInt(2))))));
  // ...but raising that back to an integer power dissolves the wrapper again
  CHECK(simplify_light(Expr::pow(half_pow, c(2))) == Expr::mul(c(1), Expr::pow(X(), c(2))));
}

TEST_CASE("sums keep their shape") {
  CHECK(parse("X+3*X") == Expr::add(X(), Expr::mul(c(3), Expr::pow(X(), c(1)))));
  CHECK(simplify_light(Expr::add(c(2), c(3))) == c(5));
  CHECK(simplify_light(Expr::sub(X(), c(0))) == X());
  CHECK(simplify_light(Expr::add(c(0), X())) == X());

  // a normal-form term over a sum base is already a fixed point, wrapper and all
  Expr w = Expr::mul(c(1), Expr::pow(Expr::sub(X(), c(2)), c(1)));
  CHECK(simplify_light(w) == w);
}

TEST_CASE("materialize puts every wrapper back") {
  CHECK(materialize(X()) == Expr::mul(c(1), Expr::pow(X(), c(1))));
  // constant sum members stay bare constants
  CHECK(materialize(Expr::sub(X(), c(2))) ==
        Expr::sub(Expr::mul(c(1), Expr::pow(X(), c(1))), c(2)));
  // function arguments are materialized recursively, the function atom stays bare
  CHECK(materialize(parse("-3*SIN(X)")) ==
        Expr::mul(c(-3), Expr::func(FuncSymbol::Sin,
                                    Expr::mul(c(1), Expr::pow(X(), c(1))))));
}

TEST_CASE("simplify_light and materialize properties hold on random trees") {
  std::mt19937 rng(12345);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    Expr e = corpus::gen_expr(rng, 4);
    Expr s = simplify_light(e);
    Expr m = materialize(e);

    CHECK(simplify_light(s) == s);        // idempotent
    CHECK(materialize(m) == m);           // idempotent
    CHECK(simplify_light(m) == s);        // same normal form either way
    CHECK(materialize(s) == m);

    // value preservation wherever both sides are defined
    try {
      bool same = equiv_numeric(e, s, default_points(), default_rel_tol());
      CHECK(same);
      ++checked;
    } catch (const InsufficientPointsError&) {
      // tree is singular almost everywhere; nothing to compare
    }
  }
  CHECK(checked > 300);  // the corpus must not be dominated by singular trees
}
