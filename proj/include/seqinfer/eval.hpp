#pragma once

#include "seqinfer/expr.hpp"

#include <stdexcept>
#include <vector>

namespace seqinfer {

// Evaluation hit a singularity: division by zero, log of a non-positive
// number, a fractional power of a negative base, zero to a negative power.
// Carries the offending subtree and the evaluation point.
struct DomainError : std::runtime_error {
  DomainError(std::string msg, Expr subtree, double point);
  Expr subtree;
  double point;
};

// Fewer than four probe points were usable for a numeric comparison.
struct InsufficientPointsError : std::runtime_error {
  explicit InsufficientPointsError(int usable);
  int usable;
};

// Evaluate at X = x. 0**0 evaluates to 1. Slots cannot be evaluated.
double eval(const Expr& e, double x);

// Probe points chosen to avoid common singularities while straddling zero.
const std::vector<double>& default_points();

double default_rel_tol();  // 1e-9

// Numeric equivalence: at every point where both sides evaluate, require
// |v1 - v2| <= rel_tol * max(1, |v1|). Points where either side raises
// DomainError are skipped; fewer than 4 usable points is an error, not a
// verdict.
bool equiv_numeric(const Expr& e1, const Expr& e2,
                   const std::vector<double>& points, double rel_tol);

}  // namespace seqinfer
