#pragma once

#include "seqinfer/expr.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace seqinfer {

// A function symbol with an attached sign, the value domain of function
// slots. The sign carries alternation that the induction layer transfers
// off a coefficient sequence (e.g. the derivatives of COS(2*X)).
struct SignedFunc {
  int sign = 1;  // +1 or -1
  FuncSymbol symbol = FuncSymbol::Sin;
  friend bool operator==(const SignedFunc&, const SignedFunc&) = default;
};

using SlotValue = std::variant<Rational, SignedFunc>;

struct ConstantLaw {
  SlotValue value;
};

// first + difference * m
struct ArithmeticLaw {
  Rational first;
  Rational difference;
};

// first * ratio**m; only detected on all-nonzero sequences
struct GeometricLaw {
  Rational first;
  Rational ratio;
};

// values[m mod p] with p = values.size(), the minimal period (>= 2);
// detection requires at least p + 1 samples
struct CycleLaw {
  std::vector<SlotValue> values;
};

// v(0) = first, v(m+1) = v(m) * (ratio_first + ratio_difference * m);
// detected on all-nonzero sequences of length >= 4 whose successive ratios
// form an exact arithmetic progression. This is the law of falling-power
// coefficient streams like 8, 56, 336, 1680.
struct ProductRecurrenceLaw {
  Rational first;
  Rational ratio_first;
  Rational ratio_difference;
};

// sum coefficients[i] * m**i, degree 2 .. length-2, minimal degree; the fit
// uses the first degree+1 samples and must reproduce the rest exactly
struct PolynomialLaw {
  std::vector<Rational> coefficients;
};

using SlotLaw = std::variant<ConstantLaw, ArithmeticLaw, GeometricLaw, CycleLaw,
                             ProductRecurrenceLaw, PolynomialLaw>;

struct NoLawFoundError : std::runtime_error {
  explicit NoLawFoundError(int slot);
  int slot;  // -1 when detection ran outside a skeleton context
};

// Detection tries laws in a fixed priority order and returns the first
// exact match: constant, arithmetic, geometric, cycle, product recurrence,
// polynomial. Needs at least 3 values. All matching is exact; no tolerance.
std::optional<SlotLaw> try_detect(const std::vector<Rational>& values);

// Function slots admit only constant and cycle laws.
std::optional<SlotLaw> try_detect(const std::vector<SignedFunc>& values);

SlotLaw detect_law(const std::vector<Rational>& values);    // throws NoLawFoundError
SlotLaw detect_law(const std::vector<SignedFunc>& values);  // throws NoLawFoundError

// Exact value at offset m >= 0 from the first observation.
SlotValue law_value_at(const SlotLaw& law, long long m);

// Deterministic one-line description used in reports,
// e.g. "arithmetic(first=7, difference=-1)".
std::string law_text(const SlotLaw& law);

std::string slot_value_text(const SlotValue& v);  // "3", "-1/2", "SIN", "-COS"

}  // namespace seqinfer
