#include "seqinfer/induction.hpp"

#include "seqinfer/derivative.hpp"
#include "seqinfer/emit.hpp"
#include "seqinfer/parse.hpp"
#include "seqinfer/simplify.hpp"

#include "doctest.h"

#include "families.hpp"

#include <random>
#include <string>
#include <variant>
#include <vector>

using namespace seqinfer;

namespace {

std::vector<Expr> obs_of(const std::string& gen, int k) {
  return derivative_sequence(parse(gen), k);
}

std::vector<Rational> numeric_sequence(const Alignment& a, int slot) {
  std::vector<Rational> out;
  for (const auto& v : a.sequences[slot]) out.push_back(std::get<Rational>(v));
  return out;
}

}  // namespace

TEST_CASE("align superposes materialized observations") {
  // derivatives of (X-2)**3: 3*(X-2)**2, 6*(X-2)**1, 6*(X-2)**0. The
  // materialized term is C0*(C1*X**C2 - C3)**C4, slot ids in pre-order.
  Alignment a = align(obs_of("(X-2)**3", 3));
  REQUIRE(a.skeleton.kinds.size() == 5);
  for (SlotKind k : a.skeleton.kinds) CHECK(k == SlotKind::Numeric);
  CHECK(numeric_sequence(a, 0) == std::vector<Rational>{Rational(3), Rational(6), Rational(6)});
  CHECK(numeric_sequence(a, 1) == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  CHECK(numeric_sequence(a, 2) == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  CHECK(numeric_sequence(a, 3) == std::vector<Rational>{Rational(2), Rational(2), Rational(2)});
  CHECK(numeric_sequence(a, 4) == std::vector<Rational>{Rational(2), Rational(1), Rational(0)});
}

TEST_CASE("align slots function heads") {
  // derivatives of SIN(X) alternate between COS and SIN with a sign
  Alignment a = align(obs_of("SIN(X)", 5));
  REQUIRE(a.skeleton.kinds.size() == 4);
  CHECK(a.skeleton.kinds[0] == SlotKind::Numeric);   // leading coefficient
  CHECK(a.skeleton.kinds[1] == SlotKind::Function);  // the function head
  CHECK(numeric_sequence(a, 0) ==
        std::vector<Rational>{Rational(1), Rational(-1), Rational(-1), Rational(1), Rational(1)});
  auto heads = a.sequences[1];
  REQUIRE(heads.size() == 5);
  CHECK(std::get<SignedFunc>(heads[0]) == SignedFunc{1, FuncSymbol::Cos});
  CHECK(std::get<SignedFunc>(heads[1]) == SignedFunc{1, FuncSymbol::Sin});
}

TEST_CASE("align reports the first diverging observation and path") {
  try {
    align({parse("X**2"), parse("X+1"), parse("X**4")});
    FAIL("expected ShapeMismatchError");
  } catch (const ShapeMismatchError& e) {
    CHECK(e.index == 1);
    CHECK(e.path == "");
  }
  try {
    align({parse("X**2"), parse("X**3"), parse("SIN(X)")});
    FAIL("expected ShapeMismatchError");
  } catch (const ShapeMismatchError& e) {
    CHECK(e.index == 2);
    CHECK(e.path == "right");
  }
  CHECK_THROWS_AS(align({parse("X"), parse("X")}), std::invalid_argument);
}

TEST_CASE("induce detects slot laws directly when samples suffice") {
  Hypothesis h = induce(obs_of("X**8", 4), 1);
  CHECK(h.k == 4);
  CHECK(h.j0 == 1);
  REQUIRE(h.laws.size() == 2);
  REQUIRE(std::holds_alternative<ProductRecurrenceLaw>(h.laws[0]));
  auto pr = std::get<ProductRecurrenceLaw>(h.laws[0]);
  CHECK(pr.first == Rational(8));
  CHECK(pr.ratio_first == Rational(7));
  CHECK(pr.ratio_difference == Rational(-1));
  REQUIRE(std::holds_alternative<ArithmeticLaw>(h.laws[1]));
  CHECK(std::get<ArithmeticLaw>(h.laws[1]).difference == Rational(-1));
  CHECK(skeleton_text(h) == "C0*X**C1");

  Hypothesis g = induce(obs_of("EXP(3*X)", 4), 1);
  REQUIRE(std::holds_alternative<GeometricLaw>(g.laws[0]));
  CHECK(std::get<GeometricLaw>(g.laws[0]).first == Rational(3));
  CHECK(std::get<GeometricLaw>(g.laws[0]).ratio == Rational(3));
  CHECK(skeleton_text(g) == "C0*EXP(3*X)");

  Hypothesis l = induce(obs_of("LOG(X)", 4), 1);
  REQUIRE(std::holds_alternative<ProductRecurrenceLaw>(l.laws[0]));
  auto lpr = std::get<ProductRecurrenceLaw>(l.laws[0]);
  CHECK(lpr.first == Rational(1));
  CHECK(lpr.ratio_first == Rational(-1));
  CHECK(lpr.ratio_difference == Rational(-1));
}

TEST_CASE("power-rule coupling rescues short coefficient streams") {
  // with only 3 samples the stream 3, 6, 6 has no direct law; the exponents
  // 2, 1, 0 seed the product recurrence that also predicts the 0 to come
  Hypothesis h = induce(obs_of("(X-2)**3", 3), 1);
  CHECK(skeleton_text(h) == "C0*(X-2)**C4");
  REQUIRE(std::holds_alternative<ProductRecurrenceLaw>(h.laws[0]));
  auto pr = std::get<ProductRecurrenceLaw>(h.laws[0]);
  CHECK(pr.first == Rational(3));
  CHECK(pr.ratio_first == Rational(2));
  CHECK(pr.ratio_difference == Rational(-1));

  CHECK(instantiate(h, 4) == Expr::constant(Rational(0)));
  CHECK(instantiate(h, 5) == Expr::constant(Rational(0)));
}

TEST_CASE("sign transfer moves alternation onto the function slot") {
  Hypothesis h = induce(obs_of("COS(2*X)", 5), 1);
  REQUIRE(std::holds_alternative<GeometricLaw>(h.laws[0]));
  CHECK(std::get<GeometricLaw>(h.laws[0]).first == Rational(2));
  CHECK(std::get<GeometricLaw>(h.laws[0]).ratio == Rational(2));
  REQUIRE(std::holds_alternative<CycleLaw>(h.laws[1]));
  auto cyc = std::get<CycleLaw>(h.laws[1]);
  REQUIRE(cyc.values.size() == 4);
  CHECK(std::get<SignedFunc>(cyc.values[0]) == SignedFunc{-1, FuncSymbol::Sin});
  CHECK(std::get<SignedFunc>(cyc.values[1]) == SignedFunc{-1, FuncSymbol::Cos});
}

TEST_CASE("induce reports the lawless slot") {
  // prime coefficients: no law reaches them and no rescue applies
  std::vector<Expr> obs = {parse("2*X"), parse("3*X"), parse("5*X"), parse("7*X")};
  try {
    induce(obs, 1);
    FAIL("expected NoLawFoundError");
  } catch (const NoLawFoundError& e) {
    CHECK(e.slot == 0);
  }
}

TEST_CASE("instantiate reproduces and extends the sequence") {
  Hypothesis h = induce(obs_of("EXP(3*X)", 4), 1);
  CHECK(emit(instantiate(h, 1)) == "3*EXP(3*X)");
  CHECK(emit(instantiate(h, 7)) == "2187*EXP(3*X)");
  CHECK_THROWS_AS(instantiate(h, 0), IndexOutOfRangeError);

  Hypothesis l = induce(obs_of("LOG(X)", 4), 1);
  CHECK(emit(instantiate(l, 7)) == "720*X**(-7)");

  // exact reproduction of the observations it was induced from
  auto obs = obs_of("X**8", 4);
  Hypothesis x8 = induce(obs, 1);
  for (int t = 0; t < 4; ++t)
    CHECK(materialize(instantiate(x8, 1 + t)) == materialize(obs[t]));
}

TEST_CASE("render_symbolic closed forms") {
  auto sym = [](const std::string& gen, int k) {
    return render_symbolic(induce(obs_of(gen, k), 1));
  };
  CHECK(sym("X**8", 4) == "8*PROD(i=0..N-2; 7-i)*X**(8-N)");
  CHECK(sym("(X-2)**3", 3) == "3*PROD(i=0..N-2; 2-i)*(X-2)**(3-N)");
  CHECK(sym("EXP(3*X)", 4) == "3**N*EXP(3*X)");
  CHECK(sym("EXP(-X)", 4) == "(-1)**N*EXP(-X)");
  CHECK(sym("LOG(X)", 4) == "PROD(i=0..N-2; -1-i)*X**(-N)");
  CHECK(sym("SIN(X)", 5) == "CYCLE(N-1; COS(X), -SIN(X), -COS(X), SIN(X))");
  CHECK(sym("COS(2*X)", 5) ==
        "2**N*CYCLE(N-1; -SIN(2*X), -COS(2*X), SIN(2*X), COS(2*X))");

  // all slots constant collapses to the instantiated member itself
  std::vector<Expr> sevens = {parse("7"), parse("7"), parse("7")};
  CHECK(render_symbolic(induce(sevens, 1)) == "7");
}

TEST_CASE("validate checks interpolation then extrapolation") {
  auto obs = obs_of("X**8", 4);
  Hypothesis h = induce(obs, 1);
  InferenceReport rep = validate(h, parse("X**8"), obs, 3);
  REQUIRE(rep.checks.size() == 7);
  for (const auto& c : rep.checks) CHECK(c.verdict == Verdict::Structural);
  CHECK(rep.checks.front().n == 1);
  CHECK(rep.checks.back().n == 7);
  CHECK(rep.elapsed_seconds >= 0.0);

  // without a generator only the observed window is checked
  InferenceReport own = validate(h, std::nullopt, obs, 3);
  CHECK(own.checks.size() == 4);

  // the (X-2)**3 hypothesis extrapolates to the annihilation at n = 4
  auto cobs = obs_of("(X-2)**3", 3);
  InferenceReport crep = validate(induce(cobs, 1), parse("(X-2)**3"), cobs, 3);
  REQUIRE(crep.checks.size() == 6);
  for (const auto& c : crep.checks) CHECK(c.verdict == Verdict::Structural);
}

TEST_CASE("validate flags a corrupted law as a mismatch") {
  auto obs = obs_of("EXP(3*X)", 4);
  Hypothesis h = induce(obs, 1);
  std::get<GeometricLaw>(h.laws[0]).ratio = Rational(2);
  InferenceReport rep = validate(h, parse("EXP(3*X)"), obs, 2);
  REQUIRE(rep.checks.size() == 6);
  CHECK(rep.checks[0].verdict == Verdict::Structural);  // first member still agrees
  CHECK(rep.checks[1].verdict == Verdict::Mismatch);
}

TEST_CASE("j0 anchors the index of the first observation") {
  // at j0 = 0 the sequence starts with the generator itself
  std::vector<Expr> obs = {parse("X**8"), parse("8*X**7"), parse("56*X**6"), parse("336*X**5")};
  Hypothesis h = induce(obs, 0);
  CHECK(h.j0 == 0);
  CHECK(materialize(instantiate(h, 0)) == materialize(obs[0]));
  CHECK(emit(instantiate(h, 4)) == "1680*X**4");

  InferenceReport rep = validate(h, parse("X**8"), obs, 2);
  REQUIRE(rep.checks.size() == 6);
  for (const auto& c : rep.checks) CHECK(c.verdict == Verdict::Structural);

  CHECK_THROWS_AS(instantiate(h, -1), IndexOutOfRangeError);
}

TEST_CASE("verdict_text") {
  CHECK(std::string(verdict_text(Verdict::Structural)) == "structural-match");
  CHECK(std::string(verdict_text(Verdict::Numeric)) == "numeric-match");
  CHECK(std::string(verdict_text(Verdict::Mismatch)) == "mismatch");
}

TEST_CASE("random generator families induce and interpolate exactly") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 3 + trial % 3;  // 3, 4, 5
    families::Case fc = families::random_case(rng, k);
    std::string gen_text = emit(fc.generator);
    CAPTURE(gen_text);
    auto obs = derivative_sequence(fc.generator, fc.k);
    Hypothesis h = induce(obs, 1);
    InferenceReport rep = validate(h, fc.generator, obs, 2);
    REQUIRE(rep.checks.size() == static_cast<std::size_t>(fc.k) + 2);
    for (const auto& c : rep.checks) CHECK(c.verdict == Verdict::Structural);
    CHECK_FALSE(render_symbolic(h).empty());
    CHECK_FALSE(skeleton_text(h).empty());
  }
}
