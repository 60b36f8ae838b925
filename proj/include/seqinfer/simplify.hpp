#pragma once

#include "seqinfer/expr.hpp"

namespace seqinfer {

// Light normalization. Idempotent, value-preserving at every point where the
// input is defined, never expands products or powers over sums.
//
// Every multiplicative term (any subtree built from Mul/Div/Pow/Neg/Func) is
// rewritten to coefficient-power normal form: a single leading rational
// coefficient times a left-associated chain of factors atom**exponent, with
//   - structurally equal atoms merged by adding exponents,
//   - rational constant arithmetic folded exactly (including integer powers),
//   - exponent-0 factors dropped when at least two factors remain, kept when
//     the factor is the whole chain,
//   - the wrapper Mul(1, atom**1) collapsed to the bare atom only for
//     Variable and Func atoms; sums keep their Pow wrapper.
// Sums keep their shape and order; only +0/-0 and constant pairs fold.
Expr simplify_light(const Expr& e);

// Fully materialized form used by the alignment stage: like simplify_light
// but every term keeps the explicit Mul(Const, ...) wrapper and every
// non-Func atom its Pow(..., Const) wrapper, recursively including function
// arguments (X materializes to 1*X**1). Idempotent, and
// simplify_light(materialize(e)) == simplify_light(e).
Expr materialize(const Expr& e);

}  // namespace seqinfer
