#pragma once

#include "seqinfer/expr.hpp"

#include <stdexcept>
#include <vector>

namespace seqinfer {

// The expression falls outside the differentiable fragment: a power with a
// non-constant exponent, or a slot node.
struct UnsupportedExprError : std::runtime_error {
  explicit UnsupportedExprError(std::string msg);
};

// Exact symbolic derivative with respect to X, normalized with
// simplify_light. The power rule keeps the base unexpanded:
// d/dX u**c = c * u**(c-1) * u', with no special case for c == 1, so
// successive derivatives of (X-2)**3 stay in the (X-2)**k family all the
// way down to (X-2)**0.
Expr differentiate(const Expr& e);

// The first k derivatives, 1-based: result[j-1] is the jth derivative.
std::vector<Expr> derivative_sequence(const Expr& e, int k);

}  // namespace seqinfer
