#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "changcheck/distribution.hpp"

namespace changcheck {

// Raised when a divergence is requested for p, q with p(x) > 0 but q(x) = 0.
class AbsoluteContinuityError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// How kl_divergence treats an absolute-continuity violation. The default is
// an error; the infinity policy restores the D = +inf convention.
enum class KlZeroPolicy { error, infinity };

// Shannon entropy -sum p(x) ln p(x) in nats, with 0 ln 0 = 0.
double entropy(const DiscreteDistribution& p);

// Kullback-Leibler divergence sum_{p(x)>0} p(x) ln(p(x)/q(x)) in nats.
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q,
                     KlZeroPolicy policy = KlZeroPolicy::error);

// L1 distance sum_x |p(x) - q(x)|, in [0, 2].
double l1_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);

// D(p||q) - (1/2) ||p - q||_1^2; Pinsker's inequality makes this >= 0 up to
// rounding (>= -1e-12 for all valid inputs).
double pinsker_slack(const DiscreteDistribution& p, const DiscreteDistribution& q);

// D(p(Y|X) || q(Y|X)) = sum_x p(x) sum_y p(y|x) ln(p(y|x)/q(y|x)) on a
// 2-factor space; rows with p(x) = 0 contribute 0.
double conditional_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

// sum_{x,y} p(x,y) ln( p(x,y) / (p(x)p(y)) ) on a 2-factor space.
double mutual_information(const DiscreteDistribution& p);

// The two sides of divergence superadditivity, D(p||q) vs sum_i D(p_i||q_i),
// and their gap.
struct DivergenceBreakdown {
  double joint;
  double marginal_sum;
  double gap;  // joint - marginal_sum
  std::vector<double> per_coordinate;
};

// Breakdown for a product q: the gap is guaranteed >= -1e-9, and for two
// factors it equals the mutual information of p. Refuses non-product q
// (max-norm test at 1e-9) rather than returning a possibly negative gap.
DivergenceBreakdown superadditivity_breakdown(const DiscreteDistribution& p,
                                              const DiscreteDistribution& q);

// Same fields with no product requirement and no sign guarantee on the gap.
DivergenceBreakdown raw_breakdown(const DiscreteDistribution& p,
                                  const DiscreteDistribution& q);

// The 2x2 pair with p uniform and q = [[1/4-3e, 1/4+e], [1/4+e, 1/4+e]],
// valid for -1/4 < e < 1/12; q is a product distribution iff e = 0.
std::pair<DiscreteDistribution, DiscreteDistribution> counterexample_pair(double epsilon);

}  // namespace changcheck
