#include "ukb/universe.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ukb/error.hpp"

namespace ukb {

namespace {

std::string format_number(double v) {
  // Trim trailing zeros so grid points read naturally ("2" not "2.000000").
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

UniversePtr Universe::grid(std::string id, double lo, double hi, double step) {
  if (!(step > 0.0)) throw Error("grid universe '" + id + "': step must be > 0");
  if (lo > hi + kPointTol) throw Error("grid universe '" + id + "': min > max");
  auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + kPointTol));
  auto u = std::shared_ptr<Universe>(new Universe());
  u->kind_ = UniverseKind::Grid;
  u->id_ = std::move(id);
  u->step_ = step;
  u->values_.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) u->values_.push_back(lo + static_cast<double>(i) * step);
  u->size_ = u->values_.size();
  return u;
}

UniversePtr Universe::labels(std::string id, std::vector<std::string> labels) {
  if (labels.empty()) throw Error("labeled universe '" + id + "': no points");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw Error("labeled universe '" + id + "': duplicate label '" + l + "'");
  auto u = std::shared_ptr<Universe>(new Universe());
  u->kind_ = UniverseKind::Labeled;
  u->id_ = std::move(id);
  u->labels_ = std::move(labels);
  u->size_ = u->labels_.size();
  return u;
}

UniversePtr Universe::product(UniversePtr left, UniversePtr right) {
  if (!left || !right) throw Error("product universe: null component");
  auto u = std::shared_ptr<Universe>(new Universe());
  u->kind_ = UniverseKind::Product;
  u->id_ = left->id() + "*" + right->id();
  u->size_ = left->size() * right->size();
  u->left_ = std::move(left);
  u->right_ = std::move(right);
  return u;
}

const std::vector<double>& Universe::values() const {
  if (kind_ != UniverseKind::Grid) throw Error("universe '" + id_ + "' is not a numeric grid");
  return values_;
}

double Universe::value(std::size_t i) const { return values().at(i); }

double Universe::grid_min() const { return values().front(); }
double Universe::grid_max() const { return values().back(); }

double Universe::grid_step() const {
  if (kind_ != UniverseKind::Grid) throw Error("universe '" + id_ + "' is not a numeric grid");
  return step_;
}

std::size_t Universe::snap(double v) const {
  const auto& pts = values();
  if (v < pts.front() - kPointTol || v > pts.back() + kPointTol) return size_;
  auto it = std::lower_bound(pts.begin(), pts.end(), v);
  if (it == pts.end()) return size_ - 1;
  auto hi = static_cast<std::size_t>(it - pts.begin());
  if (hi == 0) return 0;
  // Ties go to the lower point.
  double d_lo = v - pts[hi - 1];
  double d_hi = pts[hi] - v;
  return d_lo <= d_hi + kPointTol ? hi - 1 : hi;
}

const std::vector<std::string>& Universe::label_list() const {
  if (kind_ != UniverseKind::Labeled) throw Error("universe '" + id_ + "' is not labeled");
  return labels_;
}

const std::string& Universe::label(std::size_t i) const { return label_list().at(i); }

std::size_t Universe::find_label(const std::string& label) const {
  const auto& ls = label_list();
  auto it = std::find(ls.begin(), ls.end(), label);
  return it == ls.end() ? size_ : static_cast<std::size_t>(it - ls.begin());
}

const UniversePtr& Universe::left() const {
  if (kind_ != UniverseKind::Product) throw Error("universe '" + id_ + "' is not a product");
  return left_;
}

const UniversePtr& Universe::right() const {
  if (kind_ != UniverseKind::Product) throw Error("universe '" + id_ + "' is not a product");
  return right_;
}

std::size_t Universe::flatten(std::size_t i, std::size_t j) const { return i * right()->size() + j; }

std::pair<std::size_t, std::size_t> Universe::unflatten(std::size_t k) const {
  std::size_t ny = right()->size();
  return {k / ny, k % ny};
}

std::string Universe::point_name(std::size_t i) const {
  switch (kind_) {
    case UniverseKind::Labeled:
      return labels_.at(i);
    case UniverseKind::Grid:
      return format_number(values_.at(i));
    case UniverseKind::Product: {
      auto [a, b] = unflatten(i);
      return "(" + left_->point_name(a) + ", " + right_->point_name(b) + ")";
    }
  }
  return {};
}

bool Universe::same_points_as(const Universe& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || size_ != other.size_) return false;
  switch (kind_) {
    case UniverseKind::Labeled:
      return labels_ == other.labels_;
    case UniverseKind::Grid:
      for (std::size_t i = 0; i < size_; ++i)
        if (std::fabs(values_[i] - other.values_[i]) > kPointTol) return false;
      return true;
    case UniverseKind::Product:
      return left_->same_points_as(*other.left_) && right_->same_points_as(*other.right_);
  }
  return false;
}

void require_same_universe(const Universe& a, const Universe& b, const char* op) {
  if (!a.same_points_as(b))
    throw UniverseMismatch(std::string(op) + ": universes '" + a.id() + "' and '" + b.id() +
                           "' do not share the same points");
}

}  // namespace ukb
