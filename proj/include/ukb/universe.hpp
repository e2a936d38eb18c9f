// universe.hpp — finite discrete domains for fuzzy sets and granules.
//
// Every domain is a finite ordered point set: a labeled universe (symbolic
// points), a numeric grid (lo, lo+step, ..., hi), or a product of two
// universes flattened in row-major order.  The real line is always modeled
// by a user-declared grid; all max/min formulas are exact on finite sets.

#ifndef UKB_UNIVERSE_HPP
#define UKB_UNIVERSE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace ukb {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Absolute tolerance for numeric point equality. Grids are generated from
/// (lo, step) pairs, so comparisons must absorb representation error.
inline constexpr double kPointTol = 1e-9;

enum class UniverseKind { Labeled, Grid, Product };

class Universe {
 public:
  /// Numeric grid {lo, lo+step, ...}. The last point is the largest
  /// lo + i*step that does not exceed hi (within kPointTol).
  /// Throws Error for step <= 0 or lo > hi.
  static UniversePtr grid(std::string id, double lo, double hi, double step);

  /// Labeled universe with the given ordering.
  /// Throws Error for an empty sequence or duplicate labels.
  static UniversePtr labels(std::string id, std::vector<std::string> labels);

  /// Product universe X x Y; point (i, j) sits at flattened index i*|Y|+j.
  static UniversePtr product(UniversePtr left, UniversePtr right);

  UniverseKind kind() const { return kind_; }
  const std::string& id() const { return id_; }
  std::size_t size() const { return size_; }

  bool is_numeric() const { return kind_ == UniverseKind::Grid; }
  bool is_product() const { return kind_ == UniverseKind::Product; }

  // Grid accessors.
  const std::vector<double>& values() const;
  double value(std::size_t i) const;
  double grid_min() const;
  double grid_max() const;
  double grid_step() const;
  /// Index of the grid point nearest to v, ties resolved to the lower point.
  /// Returns size() when v lies outside [min, max] by more than kPointTol.
  std::size_t snap(double v) const;

  // Labeled accessors.
  const std::vector<std::string>& label_list() const;
  const std::string& label(std::size_t i) const;
  /// Index of a label, or size() if absent.
  std::size_t find_label(const std::string& label) const;

  // Product accessors.
  const UniversePtr& left() const;
  const UniversePtr& right() const;
  std::size_t flatten(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> unflatten(std::size_t k) const;

  /// Human-readable name of point i ("fast", "2.5", "(x, y)").
  std::string point_name(std::size_t i) const;

  /// Structural compatibility: same kind and same points (ids ignored,
  /// numeric points compared within kPointTol). Two independently built
  /// products of the same components compare equal.
  bool same_points_as(const Universe& other) const;

 private:
  Universe() = default;

  UniverseKind kind_ = UniverseKind::Labeled;
  std::string id_;
  std::size_t size_ = 0;

  std::vector<double> values_;  // Grid
  double step_ = 0.0;

  std::vector<std::string> labels_;  // Labeled

  UniversePtr left_, right_;  // Product
};

/// Throws UniverseMismatch unless a and b have the same points.
void require_same_universe(const Universe& a, const Universe& b, const char* op);

}  // namespace ukb

#endif
