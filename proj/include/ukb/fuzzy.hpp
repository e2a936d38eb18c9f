// fuzzy.hpp — fuzzy subsets and fuzzy relations over finite universes.
//
// Connectives are fixed to min for "and" and max for "or".  A fuzzy relation
// is a fuzzy set whose universe is a product universe, with grades stored in
// row-major order (left index outer).

#ifndef UKB_FUZZY_HPP
#define UKB_FUZZY_HPP

#include <cstddef>
#include <vector>

#include "ukb/universe.hpp"

namespace ukb {

/// Tolerance for grade comparisons. Max/min arithmetic is exact; shape
/// sampling and weight products introduce rounding.
inline constexpr double kGradeTol = 1e-9;

class FuzzySet {
 public:
  /// Throws Error when grades.size() != |universe| or a grade is outside
  /// [0,1] (beyond kGradeTol; tiny excursions are clamped).
  FuzzySet(UniversePtr universe, std::vector<double> grades);

  static FuzzySet zeros(UniversePtr universe);
  static FuzzySet ones(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<double>& grades() const { return grades_; }
  std::size_t size() const { return grades_.size(); }
  double grade(std::size_t i) const { return grades_[i]; }
  /// Relation access: grade at (i, j) of a set on a product universe.
  double grade(std::size_t i, std::size_t j) const;

  /// Largest membership grade.
  double height() const;
  /// No point has positive membership.
  bool is_null() const { return height() <= kGradeTol; }
  /// Every point has membership 1 (the whole universe).
  bool is_whole() const;
  /// Every grade is 0 or 1.
  bool is_crisp() const;
  /// Some grade equals 1.
  bool is_normalized() const { return height() >= 1.0 - kGradeTol; }

  bool same_grades_as(const FuzzySet& other, double tol = kGradeTol) const;

 private:
  UniversePtr universe_;
  std::vector<double> grades_;
};

/// A fuzzy set over a product universe.
using FuzzyRelation = FuzzySet;

// ── Pointwise and measure operations ──────────────────────────────────

/// 1 - a(x) at each point.
FuzzySet complement(const FuzzySet& a);

/// Pointwise minimum; universes must share the same points.
FuzzySet meet(const FuzzySet& a, const FuzzySet& b);

/// Pointwise maximum; universes must share the same points.
FuzzySet join(const FuzzySet& a, const FuzzySet& b);

/// Poss[B/A] = Max_x min(B(x), A(x)).
double poss(const FuzzySet& b, const FuzzySet& a);

/// Cert[B/A] = 1 - Poss[complement(B)/A].
double cert(const FuzzySet& b, const FuzzySet& a);

// ── Relations ─────────────────────────────────────────────────────────

/// How a relation on X x Y is built from a set on X and a set on Y.
enum class RelationKind {
  And,      // min(A(x), B(y))
  Or,       // max(A(x), B(y))
  ImpLuka,  // min(1, 1 - A(x) + B(y))
  ImpKd,    // max(1 - A(x), B(y))
};

/// Relation on product(a.universe, b.universe) per the selected formula.
FuzzyRelation build_relation(RelationKind kind, const FuzzySet& a, const FuzzySet& b);

enum class Axis { Left, Right };

/// Lift a set on one component to the product with constant fibers:
/// grade(x,y) = a(x) for Axis::Left, a(y) for Axis::Right.
/// a's universe must match the named component of target.
FuzzyRelation cyl_ext(const FuzzySet& a, const UniversePtr& target, Axis axis);

/// Collapse a relation by max over the other coordinate.
FuzzySet project(const FuzzyRelation& r, Axis axis);

// ── Shapes on numeric grids ───────────────────────────────────────────

/// Piecewise-linear membership rising on [a,b] and falling on [b,c],
/// sampled at the grid points. Requires a <= b <= c.
FuzzySet triangular(const UniversePtr& u, double a, double b, double c);

/// Flat top on [b,c], linear shoulders on [a,b] and [c,d]. Requires
/// a <= b <= c <= d.
FuzzySet trapezoid(const UniversePtr& u, double a, double b, double c, double d);

/// Membership 1 on [lo, hi] (inclusive within kPointTol), 0 elsewhere.
FuzzySet crisp_interval(const UniversePtr& u, double lo, double hi);

/// Membership 1 at the grid point nearest v (ties to the lower point).
/// Throws Error when v lies outside the grid range.
FuzzySet singleton(const UniversePtr& u, double v);

}  // namespace ukb

#endif
