// arith.hpp — extension-principle arithmetic on fuzzy subsets of numeric grids.

#ifndef UKB_ARITH_HPP
#define UKB_ARITH_HPP

#include <cstddef>

#include "ukb/fuzzy.hpp"

namespace ukb {

enum class ArithOp { Add, Sub, Mul, Div, Pow };

const char* arith_op_name(ArithOp op);  // "+", "-", "*", "/", "^"

/// Result of lifting a binary arithmetic operation to fuzzy operands.
///
/// Pairs whose value lands outside the output grid are dropped but
/// accounted for: dropped_sup is the largest membership grade that was
/// lost, so a caller seeing dropped_sup > 0 knows the output grid is too
/// narrow and Pl/Bel bounds computed from the result may be off by up to
/// that amount.
struct ExtendResult {
  FuzzySet set;
  std::size_t dropped_pairs = 0;   // landed outside the output grid
  double dropped_sup = 0.0;        // max grade among dropped pairs
  std::size_t skipped_pairs = 0;   // domain errors: z = 0 divisor, bad pow
};

/// G(v) = max over pairs (y, z) with y op z snapping to v of min(E(y), F(z)).
///
/// Values snap to the nearest output grid point, ties to the lower point.
/// Division pairs with z = 0 are skipped, as are pow pairs with a negative
/// base and non-integer exponent or a non-finite result. When either
/// operand is the whole line (all-one on its grid) the result is the
/// all-one set on out, with no enumeration: R op B = R.
///
/// Throws Error for non-numeric universes, or when no pair contributes any
/// mass at all (e.g. dividing by a granule concentrated at zero).
ExtendResult extend_binop(const FuzzySet& e, const FuzzySet& f, ArithOp op,
                          const UniversePtr& out);

}  // namespace ukb

#endif
