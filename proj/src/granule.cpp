#include "ukb/granule.hpp"

#include <algorithm>
#include <cmath>

#include "ukb/error.hpp"

namespace ukb {

namespace {

bool grades_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Granule Granule::make(std::vector<std::string> vars, UniversePtr universe,
                      std::vector<Focal> focals, bool allow_null) {
  if (vars.empty() || vars.size() > 2) throw Error("granule: expected one or two variables");
  if (vars.size() == 2) {
    if (!universe->is_product()) throw Error("granule: joint granule needs a product universe");
    if (vars[0] == vars[1]) throw Error("granule: joint variables must be distinct");
  }
  if (focals.empty()) throw Error("granule: no focal elements");

  Granule g;
  g.vars_ = std::move(vars);
  g.universe_ = std::move(universe);

  double total = 0.0;
  for (auto& f : focals) {
    require_same_universe(*f.set.universe(), *g.universe_, "granule focal");
    if (f.weight <= 0.0)
      throw Error("granule: focal weight " + std::to_string(f.weight) + " must be > 0");
    total += f.weight;
    bool merged = false;
    for (auto& existing : g.focals_) {
      if (existing.set.same_grades_as(f.set)) {
        existing.weight += f.weight;
        merged = true;
        break;
      }
    }
    if (!merged) g.focals_.push_back(std::move(f));
  }
  if (std::fabs(total - 1.0) > kWeightTol)
    throw Error("granule: focal weights sum to " + std::to_string(total) + ", expected 1");

  for (const auto& f : g.focals_) {
    if (f.set.is_null()) {
      if (!allow_null) throw Error("granule: null focal element");
      g.conflict_ += f.weight;
    }
  }

  std::sort(g.focals_.begin(), g.focals_.end(), [](const Focal& a, const Focal& b) {
    if (std::fabs(a.weight - b.weight) > kWeightTol) return a.weight > b.weight;
    return grades_less(a.set.grades(), b.set.grades());
  });
  return g;
}

Granule Granule::make_single(std::string var, UniversePtr universe, std::vector<Focal> focals,
                             bool allow_null) {
  return make({std::move(var)}, std::move(universe), std::move(focals), allow_null);
}

Granule Granule::make_joint(std::string var1, std::string var2, UniversePtr product,
                            std::vector<Focal> focals, bool allow_null) {
  return make({std::move(var1), std::move(var2)}, std::move(product), std::move(focals),
              allow_null);
}

bool Granule::is_vacuous() const { return focals_.size() == 1 && focals_[0].set.is_whole(); }

double Granule::plausibility(const FuzzySet& b) const {
  require_same_universe(*b.universe(), *universe_, "plausibility");
  double sum = 0.0;
  for (const auto& f : focals_) sum += poss(b, f.set) * f.weight;
  return sum;
}

double Granule::belief(const FuzzySet& b) const {
  require_same_universe(*b.universe(), *universe_, "belief");
  double sum = 0.0;
  for (const auto& f : focals_) {
    // A kept null focal has Poss[B/A] = 0 and so Cert[B/A] = 1 for every B,
    // but mass committed to nothing supports nothing: skip it, otherwise
    // belief can exceed plausibility.
    if (f.set.is_null()) continue;
    sum += cert(b, f.set) * f.weight;
  }
  return sum;
}

std::pair<double, double> Granule::prob_interval(const FuzzySet& b) const {
  return {belief(b), plausibility(b)};
}

bool Granule::same_as(const Granule& other, double tol) const {
  if (vars_ != other.vars_) return false;
  if (!universe_->same_points_as(*other.universe_)) return false;
  if (focals_.size() != other.focals_.size()) return false;
  // Canonical order makes positional comparison sufficient, except that
  // near-equal weights may swap; match each focal instead.
  std::vector<bool> used(focals_.size(), false);
  for (const auto& f : focals_) {
    bool found = false;
    for (std::size_t j = 0; j < other.focals_.size(); ++j) {
      if (used[j]) continue;
      if (std::fabs(f.weight - other.focals_[j].weight) <= tol &&
          f.set.same_grades_as(other.focals_[j].set, tol)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Granule from_canonical(std::string var, FuzzySet a) {
  if (a.is_null()) throw Error("from_canonical: null focal element");
  auto u = a.universe();
  return Granule::make_single(std::move(var), u, {{std::move(a), 1.0}});
}

Granule usually(std::string var, FuzzySet a, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0 + kWeightTol)
    throw Error("usually: alpha " + std::to_string(alpha) + " outside (0,1]");
  if (a.is_null()) throw Error("usually: null focal element");
  auto u = a.universe();
  if (alpha >= 1.0 - kWeightTol) return from_canonical(std::move(var), std::move(a));
  std::vector<Focal> focals;
  focals.push_back({std::move(a), alpha});
  focals.push_back({FuzzySet::ones(u), 1.0 - alpha});
  return Granule::make_single(std::move(var), u, std::move(focals));
}

Granule vacuous(std::string var, UniversePtr universe) {
  auto whole = FuzzySet::ones(universe);
  return Granule::make_single(std::move(var), std::move(universe), {{std::move(whole), 1.0}});
}

}  // namespace ukb
