// granule.hpp — possibility-probability granules.
//
// A granule records a variable's state as a basic probability assignment
// whose focal elements are fuzzy sets: a probabilistic choice over
// possibilistic restrictions.  Weights are positive and sum to one;
// pointwise-equal focals are merged on construction and focals are kept in
// a canonical order (descending weight, then lexicographic grades) so that
// serialization is deterministic.

#ifndef UKB_GRANULE_HPP
#define UKB_GRANULE_HPP

#include <string>
#include <utility>
#include <vector>

#include "ukb/fuzzy.hpp"

namespace ukb {

/// Tolerance for weight bookkeeping (sums to one, merge equality).
inline constexpr double kWeightTol = 1e-9;

struct Focal {
  FuzzySet set;
  double weight;
};

class Granule {
 public:
  /// General constructor: merges pointwise-equal focals, sorts canonically,
  /// checks weights (> 0, sum to 1 within kWeightTol). Null focals are
  /// rejected unless allow_null is set (conflict-mass policy "keep"); their
  /// total mass is then reported by conflict().
  static Granule make(std::vector<std::string> vars, UniversePtr universe,
                      std::vector<Focal> focals, bool allow_null = false);

  /// Single-variable granule over a single-component universe.
  static Granule make_single(std::string var, UniversePtr universe, std::vector<Focal> focals,
                             bool allow_null = false);

  /// Joint granule over product(universe of var1, universe of var2).
  static Granule make_joint(std::string var1, std::string var2, UniversePtr product,
                            std::vector<Focal> focals, bool allow_null = false);

  const std::vector<std::string>& vars() const { return vars_; }
  const UniversePtr& universe() const { return universe_; }
  const std::vector<Focal>& focals() const { return focals_; }
  bool is_joint() const { return vars_.size() == 2; }

  /// Mass sitting on a null focal, nonzero only under conflict policy "keep".
  double conflict() const { return conflict_; }

  /// True when the single focal is the whole universe: total ignorance.
  bool is_vacuous() const;

  /// Pl(B) = sum_k Poss[B/A_k] * m(A_k).
  double plausibility(const FuzzySet& b) const;
  /// Bel(B) = sum_k Cert[B/A_k] * m(A_k), null focals excluded: mass kept on
  /// the empty set supports no event.
  double belief(const FuzzySet& b) const;
  /// (Bel, Pl): bounds on Prob(B).
  std::pair<double, double> prob_interval(const FuzzySet& b) const;

  bool same_as(const Granule& other, double tol = kWeightTol) const;

 private:
  Granule() = default;

  std::vector<std::string> vars_;
  UniversePtr universe_;
  std::vector<Focal> focals_;
  double conflict_ = 0.0;
};

/// "V is A": single focal a with weight 1.
Granule from_canonical(std::string var, FuzzySet a);

/// "usually V is A": m(A) = alpha, m(X) = 1 - alpha. For alpha = 1 the
/// whole-universe focal is omitted. Throws for alpha outside (0, 1].
Granule usually(std::string var, FuzzySet a, double alpha);

/// Total ignorance: single whole-universe focal with weight 1.
Granule vacuous(std::string var, UniversePtr universe);

}  // namespace ukb

#endif
