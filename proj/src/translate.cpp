#include "ukb/translate.hpp"

#include "ukb/error.hpp"

namespace ukb {

namespace {

struct Leaf {
  std::string var;
  FuzzySet set;
  double alpha;  // 1 for an unqualified canonical statement
};

void check_alpha(double alpha, const Statement& s) {
  if (!(alpha > 0.0) || alpha > 1.0 + kWeightTol)
    throw SemanticError("usually: alpha " + std::to_string(alpha) + " outside (0,1]", s.line(),
                        s.column());
}

FuzzySet resolve_set(const CanonicalStmt& c, const SymbolTable& symbols, const Statement& s) {
  if (!symbols.has_var(c.var))
    throw SemanticError("unknown var '" + c.var + "'", s.line(), s.column());
  if (!symbols.has_set(c.set))
    throw SemanticError("unknown set '" + c.set + "'", s.line(), s.column());
  const FuzzySet& set = symbols.set(c.set);
  if (!set.universe()->same_points_as(*symbols.var_universe(c.var)))
    throw SemanticError("set '" + c.set + "' is not on the universe of var '" + c.var + "'",
                        s.line(), s.column());
  return set;
}

// A compound's child: a canonical statement, optionally usually-qualified.
Leaf leaf_of(const Statement& s, const SymbolTable& symbols) {
  if (const auto* c = s.as<CanonicalStmt>()) return {c->var, resolve_set(*c, symbols, s), 1.0};
  if (const auto* u = s.as<UsuallyStmt>()) {
    check_alpha(u->alpha, s);
    if (const auto* c = u->inner->as<CanonicalStmt>())
      return {c->var, resolve_set(*c, symbols, s), u->alpha};
    throw SemanticError("usually inside a compound may only qualify 'VAR is SET'", s.line(),
                        s.column());
  }
  throw SemanticError("compound statements may not nest further compounds", s.line(), s.column());
}

void require_distinct(const Leaf& a, const Leaf& b, const Statement& s) {
  if (a.var == b.var)
    throw SemanticError("compound over a single variable '" + a.var +
                            "' (combine the granules on one universe instead)",
                        s.line(), s.column());
}

void push_nonzero(std::vector<Focal>& focals, FuzzySet set, double w) {
  if (w > kWeightTol) focals.push_back({std::move(set), w});
}

// Conditional table: D @ a1*a2, B(y) @ (1-a1)*a2, XxY @ 1-a2.
Granule translate_if(const Leaf& a, const Leaf& b, RelationKind imp) {
  auto prod = Universe::product(a.set.universe(), b.set.universe());
  std::vector<Focal> focals;
  push_nonzero(focals, build_relation(imp, a.set, b.set), a.alpha * b.alpha);
  push_nonzero(focals, cyl_ext(b.set, prod, Axis::Right), (1.0 - a.alpha) * b.alpha);
  push_nonzero(focals, FuzzySet::ones(prod), 1.0 - b.alpha);
  return Granule::make_joint(a.var, b.var, prod, std::move(focals));
}

// Conjunction table: min(A,B) @ a1*a2, A(x) @ a1*(1-a2), B(y) @ (1-a1)*a2,
// XxY @ (1-a1)*(1-a2).
Granule translate_and(const Leaf& a, const Leaf& b) {
  auto prod = Universe::product(a.set.universe(), b.set.universe());
  std::vector<Focal> focals;
  push_nonzero(focals, build_relation(RelationKind::And, a.set, b.set), a.alpha * b.alpha);
  push_nonzero(focals, cyl_ext(a.set, prod, Axis::Left), a.alpha * (1.0 - b.alpha));
  push_nonzero(focals, cyl_ext(b.set, prod, Axis::Right), (1.0 - a.alpha) * b.alpha);
  push_nonzero(focals, FuzzySet::ones(prod), (1.0 - a.alpha) * (1.0 - b.alpha));
  return Granule::make_joint(a.var, b.var, prod, std::move(focals));
}

// Disjunction table: max(A,B) @ a1*a2, XxY @ 1-a1*a2.
Granule translate_or(const Leaf& a, const Leaf& b) {
  auto prod = Universe::product(a.set.universe(), b.set.universe());
  std::vector<Focal> focals;
  push_nonzero(focals, build_relation(RelationKind::Or, a.set, b.set), a.alpha * b.alpha);
  push_nonzero(focals, FuzzySet::ones(prod), 1.0 - a.alpha * b.alpha);
  return Granule::make_joint(a.var, b.var, prod, std::move(focals));
}

// usually(compound with canonical children): the compound translates to a
// single relation H first, then the qualification spreads 1-a onto XxY.
Granule translate_usual_compound(const UsuallyStmt& u, const Statement& s,
                                 const SymbolTable& symbols, RelationKind imp) {
  const Statement& inner = *u.inner;
  RelationKind kind;
  const Statement *lhs_stmt, *rhs_stmt;
  if (const auto* i = inner.as<IfStmt>()) {
    kind = imp;
    lhs_stmt = i->antecedent.get();
    rhs_stmt = i->consequent.get();
  } else if (const auto* c = inner.as<AndStmt>()) {
    kind = RelationKind::And;
    lhs_stmt = c->lhs.get();
    rhs_stmt = c->rhs.get();
  } else if (const auto* d = inner.as<OrStmt>()) {
    kind = RelationKind::Or;
    lhs_stmt = d->lhs.get();
    rhs_stmt = d->rhs.get();
  } else {
    throw SemanticError("usually may qualify 'VAR is SET' or a compound of canonical statements",
                        s.line(), s.column());
  }
  const auto* lc = lhs_stmt->as<CanonicalStmt>();
  const auto* rc = rhs_stmt->as<CanonicalStmt>();
  if (!lc || !rc)
    throw SemanticError(
        "usually over a compound requires canonical children (move the inner usually out)",
        s.line(), s.column());
  Leaf a{lc->var, resolve_set(*lc, symbols, *lhs_stmt), 1.0};
  Leaf b{rc->var, resolve_set(*rc, symbols, *rhs_stmt), 1.0};
  require_distinct(a, b, s);
  auto prod = Universe::product(a.set.universe(), b.set.universe());
  std::vector<Focal> focals;
  push_nonzero(focals, build_relation(kind, a.set, b.set), u.alpha);
  push_nonzero(focals, FuzzySet::ones(prod), 1.0 - u.alpha);
  return Granule::make_joint(a.var, b.var, prod, std::move(focals));
}

}  // namespace

Granule translate(const Statement& s, const SymbolTable& symbols, RelationKind imp) {
  if (const auto* c = s.as<CanonicalStmt>())
    return from_canonical(c->var, resolve_set(*c, symbols, s));

  if (const auto* u = s.as<UsuallyStmt>()) {
    check_alpha(u->alpha, s);
    if (const auto* c = u->inner->as<CanonicalStmt>())
      return usually(c->var, resolve_set(*c, symbols, *u->inner), u->alpha);
    return translate_usual_compound(*u, s, symbols, imp);
  }

  if (const auto* i = s.as<IfStmt>()) {
    Leaf a = leaf_of(*i->antecedent, symbols);
    Leaf b = leaf_of(*i->consequent, symbols);
    require_distinct(a, b, s);
    return translate_if(a, b, imp);
  }
  if (const auto* c = s.as<AndStmt>()) {
    Leaf a = leaf_of(*c->lhs, symbols);
    Leaf b = leaf_of(*c->rhs, symbols);
    require_distinct(a, b, s);
    return translate_and(a, b);
  }
  const auto* d = s.as<OrStmt>();
  Leaf a = leaf_of(*d->lhs, symbols);
  Leaf b = leaf_of(*d->rhs, symbols);
  require_distinct(a, b, s);
  return translate_or(a, b);
}

}  // namespace ukb
