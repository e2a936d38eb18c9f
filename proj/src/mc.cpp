#include "ukb/mc.hpp"

#include <cmath>
#include <random>

#include "ukb/error.hpp"

namespace ukb {

namespace {

// Canonical double in [0, 1) from the top 53 bits; keeps the sequence
// identical across standard library implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick_cumulative(const std::vector<double>& cumulative, double u) {
  // cumulative is nonempty and ends at ~1.
  for (std::size_t i = 0; i + 1 < cumulative.size(); ++i)
    if (u < cumulative[i]) return i;
  return cumulative.size() - 1;
}

}  // namespace

std::vector<std::size_t> sample_granule(const Granule& g, const SimConfig& cfg) {
  if (cfg.samples == 0) throw Error("sample_granule: need at least one sample");

  const auto& focals = g.focals();
  std::vector<double> focal_cum;
  focal_cum.reserve(focals.size());
  double acc = 0.0;
  for (const auto& f : focals) {
    acc += f.weight;
    focal_cum.push_back(acc);
  }

  // Per-focal point distribution, as cumulative sums over point indices.
  std::vector<std::vector<double>> point_cum(focals.size());
  for (std::size_t k = 0; k < focals.size(); ++k) {
    const FuzzySet& a = focals[k].set;
    if (cfg.selection == Selection::Uniform && !a.is_crisp())
      throw Error("sample_granule: uniform selection requires crisp focals");
    double total = 0.0;
    std::vector<double> cum(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      double w = a.grade(i);
      if (cfg.selection == Selection::Uniform) w = w > kGradeTol ? 1.0 : 0.0;
      total += w;
      cum[i] = total;
    }
    if (total <= kGradeTol) throw Error("sample_granule: focal with zero total grade");
    for (double& c : cum) c /= total;
    point_cum[k] = std::move(cum);
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> out;
  out.reserve(cfg.samples);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    std::size_t k = pick_cumulative(focal_cum, next_unit(rng));
    std::size_t i = pick_cumulative(point_cum[k], next_unit(rng));
    out.push_back(i);
  }
  return out;
}

double estimate_prob(const std::vector<std::size_t>& samples, const FuzzySet& b) {
  if (samples.empty()) throw Error("estimate_prob: no samples");
  double sum = 0.0;
  for (std::size_t i : samples) sum += b.grade(i);
  return sum / static_cast<double>(samples.size());
}

BoundsReport check_bounds(const Granule& g, const FuzzySet& b, const SimConfig& cfg) {
  BoundsReport r;
  r.bel = g.belief(b);
  r.pl = g.plausibility(b);
  r.estimate = estimate_prob(sample_granule(g, cfg), b);
  r.epsilon = 4.0 * std::sqrt(0.25 / static_cast<double>(cfg.samples));
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.pass = r.estimate >= r.bel - r.epsilon && r.estimate <= r.pl + r.epsilon;
  return r;
}

}  // namespace ukb
