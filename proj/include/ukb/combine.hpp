// combine.hpp — generalized combination of granules under logical and
// arithmetic operations, plus projection of joint granules.
//
// The rule is the same for every operation on sets: each pair of focals
// combines with the product of their weights, and equal results merge.
// Dempster's rule is the special case where the operation is same-variable
// meet; it is the only case that can produce null (conflict) focals.

#ifndef UKB_COMBINE_HPP
#define UKB_COMBINE_HPP

#include <optional>

#include "ukb/arith.hpp"
#include "ukb/granule.hpp"

namespace ukb {

/// What to do with mass that lands on a null focal under meet combination.
/// Keep reports it and keeps the flagged focal; Dempster renormalizes the
/// survivors; ToUniverse moves the mass to the whole-universe focal.
enum class ConflictPolicy { Keep, Dempster, ToUniverse };

/// Pointwise operations on focals over one shared universe.
enum class LatticeOp { Meet, Join };

/// Any operation the calculus can combine granules under.
enum class SetOpKind { And, Or, ImpLuka, ImpKd, Add, Sub, Mul, Div, Pow, Meet, Join };

bool is_relational(SetOpKind k);    // and/or/implications: distinct variables
bool is_arithmetic(SetOpKind k);    // add..pow: numeric grids + output grid
bool is_same_universe(SetOpKind k); // meet/join

/// Joint granule on X x Y with one focal build_relation(op, A_k, B_j) of
/// weight m1(A_k)*m2(B_j) per focal pair. Throws when both granules carry
/// the same variable (use combine_same_var).
Granule combine_joint(const Granule& g1, const Granule& g2, RelationKind op);

/// Same-variable combination: pointwise min/max of focal pairs with product
/// weights. Meet can produce null focals; the policy decides their fate.
Granule combine_same_var(const Granule& g1, const Granule& g2, LatticeOp op,
                         ConflictPolicy policy = ConflictPolicy::Keep);

/// Rolled-up extension warnings from an arithmetic combination.
struct ArithWarnings {
  double dropped_sup = 0.0;
  std::size_t dropped_pairs = 0;
  std::size_t skipped_pairs = 0;
};

/// Arithmetic combination: focal extend_binop(A_k, B_j, op, out) per pair
/// with product weight. The whole-line focal absorbs exactly: R op B = R.
/// The combined variable name is "v1 op v2".
Granule combine_arith(const Granule& g1, const Granule& g2, ArithOp op, const UniversePtr& out,
                      ArithWarnings* warnings = nullptr);

/// Project every focal of a joint granule onto one axis (max over the other
/// coordinate), carrying weights and merging equal projections.
Granule project_granule(const Granule& g, Axis axis);

/// Build a granule from raw focals, routing any null-focal mass through the
/// conflict policy.
Granule make_with_policy(const std::vector<std::string>& vars, const UniversePtr& universe,
                         std::vector<Focal> focals, ConflictPolicy policy);

/// Dispatcher over the unified operation kind. `out` is required for
/// arithmetic kinds and ignored otherwise.
Granule combine_granules(const Granule& g1, const Granule& g2, SetOpKind kind,
                         const UniversePtr& out = nullptr,
                         ConflictPolicy policy = ConflictPolicy::Keep,
                         ArithWarnings* warnings = nullptr);

}  // namespace ukb

#endif
