// inference.hpp — entailment over a knowledge base of granules.
//
// A rule is a joint granule on (V1, V2); a fact is a granule on V1.
// Generalized modus ponens conjoins the rule with the cylindrically
// extended fact and projects onto V2.  Chaining is forward only, and
// multiple granules reaching the same variable combine by meet.

#ifndef UKB_INFERENCE_HPP
#define UKB_INFERENCE_HPP

#include <map>
#include <vector>

#include "ukb/combine.hpp"
#include "ukb/statement.hpp"
#include "ukb/translate.hpp"

namespace ukb {

/// Inferred granule for V2: each (rule focal R, fact focal C) pair yields
/// the focal F(y) = Max_x [R(x,y) ^ C(x)] with the product weight. A null
/// F (fact incompatible with the rule focal) is conflict mass handled per
/// the policy. Throws when fact's variable is not the rule's left variable.
Granule modus_ponens(const Granule& rule, const Granule& fact,
                     ConflictPolicy policy = ConflictPolicy::Keep);

/// Closed form of the inferred set when the fact equals the rule antecedent
/// (with the Kleene-Dienes conditional):
///   F(y) = Max_x [(A~(x) ^ A(x)) v (B(y) ^ A(x))]
/// For crisp a this reduces to b. Serves as an independent check on
/// modus_ponens.
FuzzySet special_case_F(const FuzzySet& a, const FuzzySet& b);

/// Measures of an event under a usually- vs a usually-squared-qualified
/// granule. The squared form is the weaker statement: its plausibility is
/// at least as large and its belief at most as large.
struct TightnessReport {
  double pl_single = 0.0;
  double pl_squared = 0.0;
  double bel_single = 0.0;
  double bel_squared = 0.0;
  bool holds = false;  // pl_squared >= pl_single and bel_single >= bel_squared
};

/// Both granules must have the {F @ w, X @ 1-w} shape with the same F and
/// w_single >= w_squared. Throws on shape mismatch.
TightnessReport tightness_compare(const Granule& g_single, const Granule& g_squared,
                                  const FuzzySet& b);

/// A knowledge base: declared names plus asserted facts and rules.
/// Facts on the same variable fold by meet as they arrive.
class KnowledgeBase {
 public:
  struct RuleEntry {
    Granule granule;
    RelationKind imp;  // conditional form the rule was translated with
  };

  struct InferResult {
    Granule granule;
    bool no_information = false;  // vacuous fallback: nothing reaches the target
  };

  SymbolTable& symbols() { return symbols_; }
  const SymbolTable& symbols() const { return symbols_; }

  void set_conflict_policy(ConflictPolicy policy) { policy_ = policy; }
  ConflictPolicy conflict_policy() const { return policy_; }

  /// Translate and record a statement: single-variable granules become
  /// facts, joint granules become rules.
  void assert_statement(const Statement& s, RelationKind imp = RelationKind::ImpLuka);

  /// Record an already-built granule.
  void assert_granule(Granule g, RelationKind imp = RelationKind::ImpLuka);

  const std::map<std::string, Granule>& facts() const { return facts_; }
  const std::vector<RuleEntry>& rules() const { return rules_; }

  /// Forward-chain every path reaching `target` and meet-combine the
  /// results. Rule antecedents are themselves inferred, up to max_depth.
  InferResult infer(const std::string& target, int max_depth = 8) const;

 private:
  void fold_fact(Granule g);

  SymbolTable symbols_;
  std::map<std::string, Granule> facts_;
  std::vector<RuleEntry> rules_;
  ConflictPolicy policy_ = ConflictPolicy::Keep;
};

}  // namespace ukb

#endif
