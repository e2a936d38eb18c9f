#include "ukb/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "ukb/error.hpp"

namespace ukb {

FuzzySet::FuzzySet(UniversePtr universe, std::vector<double> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (!universe_) throw Error("fuzzy set: null universe");
  if (grades_.size() != universe_->size())
    throw Error("fuzzy set on '" + universe_->id() + "': expected " +
                std::to_string(universe_->size()) + " grades, got " +
                std::to_string(grades_.size()));
  for (double& g : grades_) {
    if (g < -kGradeTol || g > 1.0 + kGradeTol)
      throw Error("fuzzy set on '" + universe_->id() + "': grade " + std::to_string(g) +
                  " outside [0,1]");
    g = std::clamp(g, 0.0, 1.0);
  }
}

FuzzySet FuzzySet::zeros(UniversePtr universe) {
  std::size_t n = universe->size();
  return FuzzySet(std::move(universe), std::vector<double>(n, 0.0));
}

FuzzySet FuzzySet::ones(UniversePtr universe) {
  std::size_t n = universe->size();
  return FuzzySet(std::move(universe), std::vector<double>(n, 1.0));
}

double FuzzySet::grade(std::size_t i, std::size_t j) const {
  return grades_[universe_->flatten(i, j)];
}

double FuzzySet::height() const {
  double h = 0.0;
  for (double g : grades_) h = std::max(h, g);
  return h;
}

bool FuzzySet::is_whole() const {
  for (double g : grades_)
    if (g < 1.0 - kGradeTol) return false;
  return true;
}

bool FuzzySet::is_crisp() const {
  for (double g : grades_)
    if (g > kGradeTol && g < 1.0 - kGradeTol) return false;
  return true;
}

bool FuzzySet::same_grades_as(const FuzzySet& other, double tol) const {
  if (grades_.size() != other.grades_.size()) return false;
  for (std::size_t i = 0; i < grades_.size(); ++i)
    if (std::fabs(grades_[i] - other.grades_[i]) > tol) return false;
  return true;
}

FuzzySet complement(const FuzzySet& a) {
  std::vector<double> g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g[i] = 1.0 - a.grade(i);
  return FuzzySet(a.universe(), std::move(g));
}

FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(*a.universe(), *b.universe(), "meet");
  std::vector<double> g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g[i] = std::min(a.grade(i), b.grade(i));
  return FuzzySet(a.universe(), std::move(g));
}

FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(*a.universe(), *b.universe(), "join");
  std::vector<double> g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g[i] = std::max(a.grade(i), b.grade(i));
  return FuzzySet(a.universe(), std::move(g));
}

double poss(const FuzzySet& b, const FuzzySet& a) {
  require_same_universe(*b.universe(), *a.universe(), "poss");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::min(b.grade(i), a.grade(i)));
  return m;
}

double cert(const FuzzySet& b, const FuzzySet& a) { return 1.0 - poss(complement(b), a); }

FuzzyRelation build_relation(RelationKind kind, const FuzzySet& a, const FuzzySet& b) {
  auto prod = Universe::product(a.universe(), b.universe());
  std::vector<double> g;
  g.reserve(prod->size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double ax = a.grade(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      double by = b.grade(j);
      double v = 0.0;
      switch (kind) {
        case RelationKind::And:
          v = std::min(ax, by);
          break;
        case RelationKind::Or:
          v = std::max(ax, by);
          break;
        case RelationKind::ImpLuka:
          v = std::min(1.0, 1.0 - ax + by);
          break;
        case RelationKind::ImpKd:
          v = std::max(1.0 - ax, by);
          break;
      }
      g.push_back(v);
    }
  }
  return FuzzyRelation(std::move(prod), std::move(g));
}

FuzzyRelation cyl_ext(const FuzzySet& a, const UniversePtr& target, Axis axis) {
  if (!target->is_product()) throw Error("cyl_ext: target is not a product universe");
  const Universe& comp = axis == Axis::Left ? *target->left() : *target->right();
  require_same_universe(*a.universe(), comp, "cyl_ext");
  std::size_t nx = target->left()->size();
  std::size_t ny = target->right()->size();
  std::vector<double> g(target->size());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      g[target->flatten(i, j)] = axis == Axis::Left ? a.grade(i) : a.grade(j);
  return FuzzyRelation(target, std::move(g));
}

FuzzySet project(const FuzzyRelation& r, Axis axis) {
  const auto& u = r.universe();
  if (!u->is_product()) throw Error("project: set is not on a product universe");
  std::size_t nx = u->left()->size();
  std::size_t ny = u->right()->size();
  if (axis == Axis::Left) {
    std::vector<double> g(nx, 0.0);
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j) g[i] = std::max(g[i], r.grade(i, j));
    return FuzzySet(u->left(), std::move(g));
  }
  std::vector<double> g(ny, 0.0);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) g[j] = std::max(g[j], r.grade(i, j));
  return FuzzySet(u->right(), std::move(g));
}

namespace {

void require_shape_args(const UniversePtr& u, std::initializer_list<double> params,
                        const char* shape) {
  if (!u->is_numeric())
    throw Error(std::string(shape) + ": universe '" + u->id() + "' is not a numeric grid");
  double prev = -std::numeric_limits<double>::infinity();
  for (double p : params) {
    if (p < prev - kPointTol)
      throw Error(std::string(shape) + ": parameters must be non-decreasing");
    prev = p;
  }
}

}  // namespace

FuzzySet triangular(const UniversePtr& u, double a, double b, double c) {
  require_shape_args(u, {a, b, c}, "triangular");
  std::vector<double> g(u->size(), 0.0);
  for (std::size_t i = 0; i < u->size(); ++i) {
    double x = u->value(i);
    double v = 0.0;
    if (std::fabs(x - b) <= kPointTol)
      v = 1.0;
    else if (x > a && x < b)
      v = (x - a) / (b - a);
    else if (x > b && x < c)
      v = (c - x) / (c - b);
    g[i] = std::clamp(v, 0.0, 1.0);
  }
  return FuzzySet(u, std::move(g));
}

FuzzySet trapezoid(const UniversePtr& u, double a, double b, double c, double d) {
  require_shape_args(u, {a, b, c, d}, "trapezoid");
  std::vector<double> g(u->size(), 0.0);
  for (std::size_t i = 0; i < u->size(); ++i) {
    double x = u->value(i);
    double v = 0.0;
    if (x >= b - kPointTol && x <= c + kPointTol)
      v = 1.0;
    else if (x > a && x < b)
      v = (x - a) / (b - a);
    else if (x > c && x < d)
      v = (d - x) / (d - c);
    g[i] = std::clamp(v, 0.0, 1.0);
  }
  return FuzzySet(u, std::move(g));
}

FuzzySet crisp_interval(const UniversePtr& u, double lo, double hi) {
  require_shape_args(u, {lo, hi}, "interval");
  std::vector<double> g(u->size(), 0.0);
  for (std::size_t i = 0; i < u->size(); ++i) {
    double x = u->value(i);
    if (x >= lo - kPointTol && x <= hi + kPointTol) g[i] = 1.0;
  }
  return FuzzySet(u, std::move(g));
}

FuzzySet singleton(const UniversePtr& u, double v) {
  require_shape_args(u, {v}, "singleton");
  std::size_t i = u->snap(v);
  if (i >= u->size())
    throw Error("singleton: value " + std::to_string(v) + " outside universe '" + u->id() + "'");
  std::vector<double> g(u->size(), 0.0);
  g[i] = 1.0;
  return FuzzySet(u, std::move(g));
}

}  // namespace ukb
