#include "ukb/combine.hpp"

#include <cmath>

#include "ukb/error.hpp"

namespace ukb {

bool is_relational(SetOpKind k) {
  return k == SetOpKind::And || k == SetOpKind::Or || k == SetOpKind::ImpLuka ||
         k == SetOpKind::ImpKd;
}

bool is_arithmetic(SetOpKind k) {
  return k == SetOpKind::Add || k == SetOpKind::Sub || k == SetOpKind::Mul ||
         k == SetOpKind::Div || k == SetOpKind::Pow;
}

bool is_same_universe(SetOpKind k) { return k == SetOpKind::Meet || k == SetOpKind::Join; }

Granule combine_joint(const Granule& g1, const Granule& g2, RelationKind op) {
  if (g1.is_joint() || g2.is_joint())
    throw Error("combine_joint: operands must be single-variable granules");
  if (g1.vars()[0] == g2.vars()[0])
    throw Error("combine_joint: same variable '" + g1.vars()[0] +
                "' on both sides (use combine_same_var)");
  auto prod = Universe::product(g1.universe(), g2.universe());
  std::vector<Focal> focals;
  focals.reserve(g1.focals().size() * g2.focals().size());
  for (const auto& fa : g1.focals())
    for (const auto& fb : g2.focals())
      focals.push_back({build_relation(op, fa.set, fb.set), fa.weight * fb.weight});
  return Granule::make_joint(g1.vars()[0], g2.vars()[0], prod, std::move(focals));
}

Granule make_with_policy(const std::vector<std::string>& vars, const UniversePtr& universe,
                         std::vector<Focal> focals, ConflictPolicy policy) {
  double conflict = 0.0;
  for (const auto& f : focals)
    if (f.set.is_null()) conflict += f.weight;

  if (conflict <= kWeightTol || policy == ConflictPolicy::Keep)
    return Granule::make(vars, universe, std::move(focals), /*allow_null=*/true);

  std::vector<Focal> kept;
  for (auto& f : focals)
    if (!f.set.is_null()) kept.push_back(std::move(f));

  if (policy == ConflictPolicy::Dempster) {
    if (kept.empty() || 1.0 - conflict <= kWeightTol)
      throw Error("combine_same_var: total conflict, nothing to renormalize");
    for (auto& f : kept) f.weight /= 1.0 - conflict;
    return Granule::make(vars, universe, std::move(kept));
  }

  // ToUniverse: conflict mass becomes ignorance.
  kept.push_back({FuzzySet::ones(universe), conflict});
  return Granule::make(vars, universe, std::move(kept));
}

Granule combine_same_var(const Granule& g1, const Granule& g2, LatticeOp op,
                         ConflictPolicy policy) {
  if (g1.vars() != g2.vars())
    throw Error("combine_same_var: variable mismatch ('" + g1.vars()[0] + "' vs '" +
                g2.vars()[0] + "')");
  require_same_universe(*g1.universe(), *g2.universe(), "combine_same_var");
  std::vector<Focal> focals;
  focals.reserve(g1.focals().size() * g2.focals().size());
  for (const auto& fa : g1.focals())
    for (const auto& fb : g2.focals()) {
      FuzzySet combined =
          op == LatticeOp::Meet ? meet(fa.set, fb.set) : join(fa.set, fb.set);
      focals.push_back({std::move(combined), fa.weight * fb.weight});
    }
  return make_with_policy(g1.vars(), g1.universe(), std::move(focals), policy);
}

Granule combine_arith(const Granule& g1, const Granule& g2, ArithOp op, const UniversePtr& out,
                      ArithWarnings* warnings) {
  if (!out) throw Error("combine_arith: output grid required");
  if (g1.is_joint() || g2.is_joint())
    throw Error("combine_arith: operands must be single-variable granules");
  std::vector<Focal> focals;
  focals.reserve(g1.focals().size() * g2.focals().size());
  for (const auto& fa : g1.focals())
    for (const auto& fb : g2.focals()) {
      ExtendResult r = extend_binop(fa.set, fb.set, op, out);
      if (warnings) {
        warnings->dropped_sup = std::max(warnings->dropped_sup, r.dropped_sup);
        warnings->dropped_pairs += r.dropped_pairs;
        warnings->skipped_pairs += r.skipped_pairs;
      }
      focals.push_back({std::move(r.set), fa.weight * fb.weight});
    }
  std::string name = g1.vars()[0] + arith_op_name(op) + g2.vars()[0];
  return Granule::make_single(std::move(name), out, std::move(focals));
}

Granule project_granule(const Granule& g, Axis axis) {
  if (!g.is_joint()) throw Error("project_granule: granule is not joint");
  std::vector<Focal> focals;
  focals.reserve(g.focals().size());
  for (const auto& f : g.focals()) focals.push_back({project(f.set, axis), f.weight});
  const std::string& var = axis == Axis::Left ? g.vars()[0] : g.vars()[1];
  const UniversePtr& u =
      axis == Axis::Left ? g.universe()->left() : g.universe()->right();
  return Granule::make_single(var, u, std::move(focals), /*allow_null=*/g.conflict() > 0.0);
}

Granule combine_granules(const Granule& g1, const Granule& g2, SetOpKind kind,
                         const UniversePtr& out, ConflictPolicy policy,
                         ArithWarnings* warnings) {
  switch (kind) {
    case SetOpKind::And: return combine_joint(g1, g2, RelationKind::And);
    case SetOpKind::Or: return combine_joint(g1, g2, RelationKind::Or);
    case SetOpKind::ImpLuka: return combine_joint(g1, g2, RelationKind::ImpLuka);
    case SetOpKind::ImpKd: return combine_joint(g1, g2, RelationKind::ImpKd);
    case SetOpKind::Meet: return combine_same_var(g1, g2, LatticeOp::Meet, policy);
    case SetOpKind::Join: return combine_same_var(g1, g2, LatticeOp::Join, policy);
    case SetOpKind::Add: return combine_arith(g1, g2, ArithOp::Add, out, warnings);
    case SetOpKind::Sub: return combine_arith(g1, g2, ArithOp::Sub, out, warnings);
    case SetOpKind::Mul: return combine_arith(g1, g2, ArithOp::Mul, out, warnings);
    case SetOpKind::Div: return combine_arith(g1, g2, ArithOp::Div, out, warnings);
    case SetOpKind::Pow: return combine_arith(g1, g2, ArithOp::Pow, out, warnings);
  }
  throw Error("combine_granules: unknown operation");
}

}  // namespace ukb
