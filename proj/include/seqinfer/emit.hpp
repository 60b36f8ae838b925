#pragma once

#include "seqinfer/expr.hpp"

#include <functional>
#include <optional>
#include <string>

namespace seqinfer {

// Single-line FORTRAN-style text, deterministic, minimal parentheses.
// Normalizes first, then prints the normal form canonically, so
// simplify_light(parse(emit(e))) == simplify_light(e) holds for every tree:
// coefficient 1 and exponent 1 are suppressed exactly where the reparse
// reconstructs the same normal form (a lone sum factor keeps its "1*" or
// "**1" marker). Pow(u, 1/2) prints as SQRT(u). Slots print as C<id> and
// F<id>(arg); slot-bearing text is display-only and not reparseable.
std::string emit(const Expr& e);

// Replacement text for a slot, with the precedence of its top-level
// operator (1 sum, 2 product, 3 power, 4 atom) so the printer can
// parenthesize minimally.
struct SlotText {
  std::string text;
  int prec = 4;
};

// emit with slot substitution: lookup(id, arg_text) supplies the printed
// form of a slot (arg_text is the rendered argument for function slots,
// empty for numeric ones); return nullopt for the default C<id>/F<id>(arg).
// Used by the symbolic nth-term renderer.
std::string emit_with_slots(
    const Expr& e,
    const std::function<std::optional<SlotText>(int, const std::string&)>& lookup);

}  // namespace seqinfer
