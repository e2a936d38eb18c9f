// mc.hpp — Monte-Carlo check that [Bel, Pl] really bounds event probability.
//
// Simulates the two-stage experiment behind a granule: draw a focal by its
// weight, then draw a point inside the focal.  Whatever the within-focal
// selection rule, the empirical frequency of an event must land between
// belief and plausibility (up to sampling error).

#ifndef UKB_MC_HPP
#define UKB_MC_HPP

#include <cstdint>
#include <vector>

#include "ukb/granule.hpp"

namespace ukb {

enum class Selection {
  Uniform,             // uniform over a crisp focal's support
  MembershipWeighted,  // probability proportional to membership grades
};

struct SimConfig {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  Selection selection = Selection::Uniform;
};

/// Point indices drawn from the granule's two-stage experiment. Identical
/// config gives an identical sequence. Uniform selection requires crisp
/// focals; throws on a focal with zero total grade.
std::vector<std::size_t> sample_granule(const Granule& g, const SimConfig& cfg);

/// Mean membership of the samples in b (relative frequency for crisp b).
double estimate_prob(const std::vector<std::size_t>& samples, const FuzzySet& b);

struct BoundsReport {
  double bel = 0.0;
  double pl = 0.0;
  double estimate = 0.0;
  double epsilon = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool pass = false;
};

/// Asserts Bel(b) - eps <= estimate <= Pl(b) + eps with
/// eps = 4*sqrt(0.25/samples). A false `pass` is the violation signal.
BoundsReport check_bounds(const Granule& g, const FuzzySet& b, const SimConfig& cfg);

}  // namespace ukb

#endif
