#include "changcheck/info.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "accumulate.hpp"

namespace changcheck {

namespace {

void check_same_space(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.shape() != q.shape()) {
    throw std::invalid_argument("distributions must share the same shape");
  }
}

void check_two_factors(const DiscreteDistribution& p, const char* what) {
  if (p.factor_count() != 2) {
    throw std::invalid_argument(std::string(what) + " requires a 2-factor space");
  }
}

}  // namespace

double entropy(const DiscreteDistribution& p) {
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = p.prob(i);
    if (v > 0.0) acc.add(-v * std::log(v));
  }
  return acc.value();
}

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q,
                     KlZeroPolicy policy) {
  check_same_space(p, q);
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pv = p.prob(i);
    if (pv == 0.0) continue;
    const double qv = q.prob(i);
    if (qv == 0.0) {
      if (policy == KlZeroPolicy::infinity) {
        return std::numeric_limits<double>::infinity();
      }
      throw AbsoluteContinuityError(
          "kl_divergence: p(x) > 0 where q(x) = 0 (index " + std::to_string(i) + ")");
    }
    acc.add(pv * std::log(pv / qv));
  }
  return acc.value();
}

double l1_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  check_same_space(p, q);
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc.add(std::fabs(p.prob(i) - q.prob(i)));
  }
  return acc.value();
}

double pinsker_slack(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  const double d = kl_divergence(p, q);
  const double l1 = l1_distance(p, q);
  return d - 0.5 * l1 * l1;
}

double conditional_divergence(const DiscreteDistribution& p,
                              const DiscreteDistribution& q) {
  check_same_space(p, q);
  check_two_factors(p, "conditional_divergence");
  const std::size_t rows = p.shape()[0];
  const std::size_t cols = p.shape()[1];
  detail::CompensatedSum acc;
  for (std::size_t x = 0; x < rows; ++x) {
    double px = 0.0;
    double qx = 0.0;
    for (std::size_t y = 0; y < cols; ++y) {
      px += p.prob(x * cols + y);
      qx += q.prob(x * cols + y);
    }
    if (px == 0.0) continue;
    for (std::size_t y = 0; y < cols; ++y) {
      const double pxy = p.prob(x * cols + y);
      if (pxy == 0.0) continue;
      const double qxy = q.prob(x * cols + y);
      if (qx == 0.0 || qxy == 0.0) {
        throw AbsoluteContinuityError(
            "conditional_divergence: p(y|x) > 0 where q(y|x) = 0");
      }
      // p(y|x) ln( p(y|x) / q(y|x) ) weighted by p(x).
      acc.add(pxy * std::log((pxy / px) / (qxy / qx)));
    }
  }
  return acc.value();
}

double mutual_information(const DiscreteDistribution& p) {
  check_two_factors(p, "mutual_information");
  const DiscreteDistribution product =
      product_of({marginal(p, 0), marginal(p, 1)});
  return kl_divergence(p, product);
}

DivergenceBreakdown raw_breakdown(const DiscreteDistribution& p,
                                  const DiscreteDistribution& q) {
  check_same_space(p, q);
  if (p.is_flat()) {
    throw std::invalid_argument("breakdown requires a product shape");
  }
  DivergenceBreakdown out;
  out.joint = kl_divergence(p, q);
  out.per_coordinate.reserve(p.factor_count());
  double sum = 0.0;
  for (std::size_t i = 0; i < p.factor_count(); ++i) {
    const double d = kl_divergence(marginal(p, i), marginal(q, i));
    out.per_coordinate.push_back(d);
    sum += d;
  }
  out.marginal_sum = sum;
  out.gap = out.joint - out.marginal_sum;
  return out;
}

DivergenceBreakdown superadditivity_breakdown(const DiscreteDistribution& p,
                                              const DiscreteDistribution& q) {
  check_same_space(p, q);
  if (p.is_flat()) {
    throw std::invalid_argument("breakdown requires a product shape");
  }
  if (!is_product_distribution(q)) {
    throw std::invalid_argument(
        "superadditivity_breakdown requires a product reference distribution q; "
        "use raw_breakdown for arbitrary q");
  }
  return raw_breakdown(p, q);
}

std::pair<DiscreteDistribution, DiscreteDistribution> counterexample_pair(double epsilon) {
  if (!(epsilon > -0.25 && epsilon < 1.0 / 12.0)) {
    throw std::invalid_argument(
        "epsilon must lie in (-1/4, 1/12) for a valid counterexample pair");
  }
  DiscreteDistribution p = DiscreteDistribution::uniform({2, 2});
  DiscreteDistribution q({2, 2}, {0.25 - 3.0 * epsilon, 0.25 + epsilon,
                                  0.25 + epsilon, 0.25 + epsilon});
  return {std::move(p), std::move(q)};
}

}  // namespace changcheck
