#pragma once

#include "seqinfer/expr.hpp"
#include "seqinfer/laws.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqinfer {

// Observation i does not share the shape of observation 0 after
// materialization. path names the offending node: segments "left", "right",
// "arg" joined with '.', empty for the root.
struct ShapeMismatchError : std::runtime_error {
  ShapeMismatchError(int index, std::string path);
  int index;
  std::string path;
};

struct IndexOutOfRangeError : std::runtime_error {
  IndexOutOfRangeError(long long n, long long j0);
  long long n;
  long long j0;
};

enum class SlotKind { Numeric, Function };

// Shared shape of the observation sequence: a materialized template where
// every constant is replaced by a NumSlot and every function head by a
// FuncSlot, slot ids assigned in pre-order.
struct Skeleton {
  Expr tmpl;
  std::vector<SlotKind> kinds;  // indexed by slot id
};

struct Alignment {
  Skeleton skeleton;
  std::vector<std::vector<SlotValue>> sequences;  // indexed by slot id
};

// A skeleton plus one law per slot; observation n (n >= j0) is claimed to be
// the template with slot i set to law_value_at(laws[i], n - j0).
struct Hypothesis {
  Skeleton skeleton;
  std::vector<SlotLaw> laws;
  long long j0 = 1;
  int k = 0;  // number of observations the hypothesis was induced from
};

// Materialize all observations and superpose them. Throws ShapeMismatchError
// when the shapes disagree. Requires at least 3 observations.
Alignment align(const std::vector<Expr>& observations);

// Full induction: align, detect a law per slot, then verify that the
// hypothesis reproduces every observation exactly before returning.
//
// Two rescue passes run for numeric slots that no law fits directly:
//   - power-rule coupling: when the same term carries an exponent slot with
//     an arithmetic law and c[t+1] == c[t] * e[t] holds throughout, the
//     coefficient follows the product recurrence seeded by the exponents
//     (this is what extends 3, 6, 6 along 2, 1, 0 and predicts 0 next);
//   - sign transfer: when the same term carries a function slot, the signs
//     of a nonzero coefficient sequence move onto the function values and
//     both slots are re-detected (derivatives of COS(2*X): magnitudes
//     geometric, signed functions a 4-cycle).
// Throws NoLawFoundError when a slot stays lawless.
Hypothesis induce(const std::vector<Expr>& observations, long long j0);

// Exact member n of the hypothesized sequence, normalized. n < j0 throws
// IndexOutOfRangeError.
Expr instantiate(const Hypothesis& h, long long n);

// Template text with constant-law slots folded to their values and the
// remaining slots shown as C<id>/F<id>, e.g. "C0*(X-C1)**C2" folding to
// "C0*(X-2)**C2".
std::string skeleton_text(const Hypothesis& h);

// Closed-form text for the nth member, deterministic:
//   - all slots constant: the instantiated expression itself;
//   - constants and cycles only: CYCLE(N-j0; e1, ..., eL) with L the lcm of
//     the cycle periods, entries instantiated from n = j0;
//   - otherwise the template with per-slot law texts substituted, using
//     FIRST*RATIO**(N-j0) for geometric laws (folded to RATIO**(N-j0+1)
//     when FIRST == RATIO), affine text for arithmetic laws, and
//     FIRST*PROD(i=0..N-j0-1; ...) for product recurrences.
std::string render_symbolic(const Hypothesis& h);

enum class Verdict { Structural, Numeric, Mismatch };

const char* verdict_text(Verdict v);  // "structural-match", ...

struct Check {
  long long n = 0;
  Verdict verdict = Verdict::Mismatch;
};

struct InferenceReport {
  Hypothesis hypothesis;
  std::vector<Check> checks;
  double elapsed_seconds = 0.0;
};

// Check the hypothesis against its own observations (n = j0 .. j0+k-1) and,
// when a generator is supplied, against the oracle's derivatives at the next
// `extra` indices. Structural comparison is on materialized trees; on
// structural failure the numeric fallback compares at the default points
// with the default tolerance, and only a failed (or impossible) numeric
// comparison yields a mismatch verdict.
InferenceReport validate(const Hypothesis& h, const std::optional<Expr>& generator,
                         const std::vector<Expr>& observations, int extra);

}  // namespace seqinfer
