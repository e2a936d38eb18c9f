#include "ukb/inference.hpp"

#include <algorithm>
#include <cmath>

#include "ukb/error.hpp"

namespace ukb {

Granule modus_ponens(const Granule& rule, const Granule& fact, ConflictPolicy policy) {
  if (!rule.is_joint()) throw Error("modus_ponens: rule must be a joint granule");
  if (fact.is_joint()) throw Error("modus_ponens: fact must be a single-variable granule");
  if (fact.vars()[0] != rule.vars()[0])
    throw Error("modus_ponens: fact variable '" + fact.vars()[0] +
                "' is not the rule antecedent '" + rule.vars()[0] + "'");
  const auto& prod = rule.universe();
  require_same_universe(*fact.universe(), *prod->left(), "modus_ponens");

  std::size_t nx = prod->left()->size();
  std::size_t ny = prod->right()->size();
  std::vector<Focal> focals;
  focals.reserve(rule.focals().size() * fact.focals().size());
  for (const auto& rf : rule.focals()) {
    for (const auto& cf : fact.focals()) {
      std::vector<double> f(ny, 0.0);
      for (std::size_t i = 0; i < nx; ++i) {
        double cx = cf.set.grade(i);
        if (cx <= kGradeTol) continue;
        for (std::size_t j = 0; j < ny; ++j)
          f[j] = std::max(f[j], std::min(rf.set.grade(i, j), cx));
      }
      focals.push_back({FuzzySet(prod->right(), std::move(f)), rf.weight * cf.weight});
    }
  }
  return make_with_policy({rule.vars()[1]}, prod->right(), std::move(focals), policy);
}

FuzzySet special_case_F(const FuzzySet& a, const FuzzySet& b) {
  // Self-overlap h = Max_x min(a(x), 1 - a(x)) floors every grade; the
  // second disjunct caps b by a's height.
  std::vector<double> f(b.size(), 0.0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      double ax = a.grade(i);
      double term = std::max(std::min(1.0 - ax, ax), std::min(b.grade(j), ax));
      m = std::max(m, term);
    }
    f[j] = m;
  }
  return FuzzySet(b.universe(), std::move(f));
}

namespace {

// Splits a {F @ w, X @ 1-w} granule into (F, w). A single-focal granule is
// the w = 1 limit.
std::pair<const FuzzySet*, double> usual_shape(const Granule& g, const char* which) {
  const auto& focals = g.focals();
  if (focals.size() == 1) return {&focals[0].set, 1.0};
  if (focals.size() == 2) {
    if (focals[0].set.is_whole()) return {&focals[1].set, focals[1].weight};
    if (focals[1].set.is_whole()) return {&focals[0].set, focals[0].weight};
  }
  throw Error(std::string("tightness_compare: ") + which +
              " granule does not have the {F, X} shape");
}

}  // namespace

TightnessReport tightness_compare(const Granule& g_single, const Granule& g_squared,
                                  const FuzzySet& b) {
  auto [f1, w1] = usual_shape(g_single, "first");
  auto [f2, w2] = usual_shape(g_squared, "second");
  if (!f1->same_grades_as(*f2))
    throw Error("tightness_compare: granules qualify different focal sets");
  if (w1 < w2 - kWeightTol)
    throw Error("tightness_compare: first granule must carry the larger focal weight");
  TightnessReport r;
  r.pl_single = g_single.plausibility(b);
  r.pl_squared = g_squared.plausibility(b);
  r.bel_single = g_single.belief(b);
  r.bel_squared = g_squared.belief(b);
  r.holds = r.pl_squared >= r.pl_single - kWeightTol && r.bel_single >= r.bel_squared - kWeightTol;
  return r;
}

void KnowledgeBase::assert_statement(const Statement& s, RelationKind imp) {
  assert_granule(translate(s, symbols_, imp), imp);
}

void KnowledgeBase::assert_granule(Granule g, RelationKind imp) {
  if (g.is_joint()) {
    // A joint granule fires toward its right variable through modus ponens.
    // Its left marginal is evidence about the left variable on its own; for
    // conditionals and disjunctions that marginal is vacuous, so only
    // conjunctions actually contribute one.
    Granule marginal = project_granule(g, Axis::Left);
    rules_.push_back({std::move(g), imp});
    if (!marginal.is_vacuous()) fold_fact(std::move(marginal));
    return;
  }
  fold_fact(std::move(g));
}

void KnowledgeBase::fold_fact(Granule g) {
  const std::string& var = g.vars()[0];
  auto it = facts_.find(var);
  if (it == facts_.end()) {
    facts_.emplace(var, std::move(g));
  } else {
    it->second = combine_same_var(it->second, g, LatticeOp::Meet, policy_);
  }
}

KnowledgeBase::InferResult KnowledgeBase::infer(const std::string& target, int max_depth) const {
  if (!symbols_.has_var(target)) throw Error("infer: unknown var '" + target + "'");

  std::vector<Granule> reached;
  auto fact_it = facts_.find(target);
  if (fact_it != facts_.end()) reached.push_back(fact_it->second);

  if (max_depth > 0) {
    for (const auto& rule : rules_) {
      if (rule.granule.vars()[1] != target) continue;  // forward chaining only
      const std::string& source = rule.granule.vars()[0];
      InferResult premise = infer(source, max_depth - 1);
      reached.push_back(modus_ponens(rule.granule, premise.granule, policy_));
    }
  }

  if (reached.empty())
    return {vacuous(target, symbols_.var_universe(target)), /*no_information=*/true};

  Granule result = std::move(reached.front());
  for (std::size_t i = 1; i < reached.size(); ++i)
    result = combine_same_var(result, reached[i], LatticeOp::Meet, policy_);
  return {std::move(result), false};
}

}  // namespace ukb
