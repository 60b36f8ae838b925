#include "seqinfer/derivative.hpp"

#include "seqinfer/emit.hpp"
#include "seqinfer/eval.hpp"
#include "seqinfer/parse.hpp"

#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

using namespace seqinfer;

TEST_CASE("power rule keeps the base unexpanded") {
  Expr s = Expr::sub(Expr::variable(), Expr::constant(Rational(2)));
  auto seq = derivative_sequence(parse("(X-2)**3"), 3);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == Expr::mul(Expr::constant(Rational(3)), Expr::pow(s, Expr::constant(Rational(2)))));
  CHECK(seq[1] == Expr::mul(Expr::constant(Rational(6)), Expr::pow(s, Expr::constant(Rational(1)))));
  CHECK(seq[2] == Expr::mul(Expr::constant(Rational(6)), Expr::pow(s, Expr::constant(Rational(0)))));
  // one more step and the exponent-0 power annihilates
  CHECK(differentiate(seq[2]) == Expr::constant(Rational(0)));
}

TEST_CASE("derivative examples") {
  auto d = [](const std::string& s) { return emit(differentiate(parse(s))); };

  CHECK(d("X**8") == "8*X**7");
  CHECK(d("SIN(X)") == "COS(X)");
  CHECK(d("COS(X)") == "-SIN(X)");
  CHECK(d("TAN(X)") == "1*(1+TAN(X)**2)");
  CHECK(d("EXP(3*X)") == "3*EXP(3*X)");
  CHECK(d("LOG(X)") == "X**(-1)");
  CHECK(d("SQRT(X)") == "1/2*X**(-1/2)");
  CHECK(d("ATAN(X)") == "(1+X**2)**(-1)");
  CHECK(d("EXP(SIN(X))") == "EXP(SIN(X))*COS(X)");
  CHECK(d("X*SIN(X)") == "1*(SIN(X)+X*COS(X))");
  CHECK(d("7") == "0");

  auto seq = derivative_sequence(parse("LOG(X)"), 4);
  std::vector<std::string> texts;
  for (const auto& e : seq) texts.push_back(emit(e));
  CHECK(texts == std::vector<std::string>{"X**(-1)", "-X**(-2)", "2*X**(-3)", "-6*X**(-4)"});
}

TEST_CASE("derivative_sequence iterates differentiate") {
  Expr g = parse("X**2*EXP(X)");
  auto seq = derivative_sequence(g, 3);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == differentiate(g));
  CHECK(seq[1] == differentiate(seq[0]));
  CHECK(seq[2] == differentiate(seq[1]));
}

TEST_CASE("unsupported fragments are rejected") {
  CHECK_THROWS_AS(differentiate(parse("X**X")), UnsupportedExprError);
  CHECK_THROWS_AS(differentiate(Expr::num_slot(0)), UnsupportedExprError);
  CHECK_THROWS_AS(
      differentiate(Expr::pow(Expr::variable(), Expr::func(FuncSymbol::Sin, Expr::variable()))),
      UnsupportedExprError);
}

// Soundness against a central finite difference: the symbolic derivative must
// agree with (f(x+h) - f(x-h)) / 2h at every probe point where both sides
// evaluate, to a relative tolerance that dominates the O(h^2) truncation.
TEST_CASE("derivatives agree with finite differences") {
  const std::vector<std::string> exprs = {
      "X**8",        "5*X**6",     "(X-2)**3",     "EXP(3*X)",   "EXP(-X)",
      "EXP(X/2)",    "SIN(X)",     "COS(2*X)",     "TAN(X/4)",   "LOG(X)",
      "SQRT(X)",     "ATAN(X)",    "X**(-1)",      "(X+1)**(-2)", "1/(X+1)",
      "X*SIN(X)",    "X**2*EXP(X)", "SIN(X**2)",   "SQRT(X**2+1)", "ATAN(X/3)",
      "EXP(SIN(X))", "X/(X**2+1)", "SIN(COS(X))",  "X**(3/2)",   "X**2+1"};
  const double h = 1e-5;
  const double rel = 1e-5;

  for (const auto& text : exprs) {
    CAPTURE(text);
    Expr f = parse(text);
    Expr df = differentiate(f);
    int usable = 0;
    for (double x : default_points()) {
      double exact, lo, hi;
      try {
        exact = eval(df, x);
        lo = eval(f, x - h);
        hi = eval(f, x + h);
      } catch (const DomainError&) {
        continue;
      }
      if (!std::isfinite(exact) || !std::isfinite(lo) || !std::isfinite(hi)) continue;
      double approx = (hi - lo) / (2 * h);
      CHECK(std::abs(approx - exact) <= rel * std::max(1.0, std::abs(exact)));
      ++usable;
    }
    CHECK(usable >= 4);
  }
}

TEST_CASE("differentiation is linear") {
  Expr a = parse("X**3");
  Expr b = parse("SIN(2*X)");
  Expr combined = differentiate(parse("5*X**3-2*SIN(2*X)"));
  Expr separate = parse("5*(" + emit(differentiate(a)) + ")-2*(" + emit(differentiate(b)) + ")");
  CHECK(equiv_numeric(combined, separate, default_points(), default_rel_tol()));
}
