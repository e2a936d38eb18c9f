#include "ukb/arith.hpp"

#include <cmath>

#include "ukb/error.hpp"

namespace ukb {

const char* arith_op_name(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
    case ArithOp::Pow: return "^";
  }
  return "?";
}

namespace {

bool is_integer(double v) { return std::fabs(v - std::round(v)) <= kPointTol; }

// Returns false when the pair must be skipped (domain error).
bool apply_op(ArithOp op, double y, double z, double& out) {
  switch (op) {
    case ArithOp::Add: out = y + z; break;
    case ArithOp::Sub: out = y - z; break;
    case ArithOp::Mul: out = y * z; break;
    case ArithOp::Div:
      if (std::fabs(z) <= kPointTol) return false;
      out = y / z;
      break;
    case ArithOp::Pow:
      if (y < 0.0 && !is_integer(z)) return false;
      out = y < 0.0 ? std::pow(y, std::round(z)) : std::pow(y, z);
      break;
  }
  return std::isfinite(out);
}

}  // namespace

ExtendResult extend_binop(const FuzzySet& e, const FuzzySet& f, ArithOp op,
                          const UniversePtr& out) {
  if (!e.universe()->is_numeric() || !f.universe()->is_numeric())
    throw Error("extend_binop: operands must live on numeric grids");
  if (!out->is_numeric()) throw Error("extend_binop: output universe must be a numeric grid");

  // R op B = R: the whole line absorbs any operand exactly.
  if (e.is_whole() || f.is_whole()) return ExtendResult{FuzzySet::ones(out)};

  ExtendResult res{FuzzySet::zeros(out)};
  std::vector<double> g(out->size(), 0.0);
  bool any_contribution = false;
  const auto& ys = e.universe()->values();
  const auto& zs = f.universe()->values();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    double ge = e.grade(i);
    if (ge <= kGradeTol) continue;
    for (std::size_t j = 0; j < zs.size(); ++j) {
      double w = std::min(ge, f.grade(j));
      if (w <= kGradeTol) continue;
      double v = 0.0;
      if (!apply_op(op, ys[i], zs[j], v)) {
        ++res.skipped_pairs;
        continue;
      }
      std::size_t k = out->snap(v);
      if (k >= out->size()) {
        ++res.dropped_pairs;
        res.dropped_sup = std::max(res.dropped_sup, w);
        continue;
      }
      g[k] = std::max(g[k], w);
      any_contribution = true;
    }
  }
  if (!any_contribution)
    throw Error(std::string("extend_binop: no pair contributed to '") + arith_op_name(op) +
                "' (empty result)");
  res.set = FuzzySet(out, std::move(g));
  return res;
}

}  // namespace ukb
