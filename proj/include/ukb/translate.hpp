// translate.hpp — translation of linguistic statements into granules.
//
// Each supported statement form has an explicit focal/weight table:
//
//   usually (V is A)                 -> {A @ a, X @ 1-a}
//   usually (if/and/or compound)     -> {H @ a, XxY @ 1-a}
//   if  [usually] V1 is A then [usually] V2 is B
//                                    -> {D @ a1*a2, B(y) @ (1-a1)*a2, XxY @ 1-a2}
//   and                              -> {min(A,B) @ a1*a2, A(x) @ a1*(1-a2),
//                                        B(y) @ (1-a1)*a2, XxY @ (1-a1)*(1-a2)}
//   or                               -> {max(A,B) @ a1*a2, XxY @ 1-a1*a2}
//
// with a = 1 for unqualified children and zero-weight rows dropped.  The
// same tables fall out of combine_joint applied to the child granules; the
// two routes are kept separate so they can check each other.

#ifndef UKB_TRANSLATE_HPP
#define UKB_TRANSLATE_HPP

#include "ukb/granule.hpp"
#include "ukb/statement.hpp"

namespace ukb {

/// Translate a statement into the granule its focal/weight table describes.
/// `imp` selects the conditional form (Lukasiewicz by default).
/// Throws SemanticError for unknown names, universe clashes, alpha outside
/// (0,1], or nesting the calculus does not define (e.g. usually(usually ...)).
Granule translate(const Statement& s, const SymbolTable& symbols,
                  RelationKind imp = RelationKind::ImpLuka);

}  // namespace ukb

#endif
