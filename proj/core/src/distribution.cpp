#include "changcheck/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "accumulate.hpp"

namespace changcheck {

namespace {

constexpr double kMassTolerance = 1e-9;
constexpr double kNegativeFloor = -1e-15;

std::size_t checked_cell_count(const std::vector<std::size_t>& shape) {
  if (shape.empty()) {
    throw std::invalid_argument("shape must have at least one factor");
  }
  std::size_t cells = 1;
  for (std::size_t m : shape) {
    if (m < 1) {
      throw std::invalid_argument("every factor size must be at least 1");
    }
    if (cells > std::numeric_limits<std::size_t>::max() / m) {
      throw std::invalid_argument("shape is too large");
    }
    cells *= m;
  }
  return cells;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<std::size_t> shape,
                                           std::vector<double> probs)
    : shape_(std::move(shape)), probs_(std::move(probs)) {
  const std::size_t cells = checked_cell_count(shape_);
  if (probs_.size() != cells) {
    throw std::invalid_argument("probability table holds " +
                                std::to_string(probs_.size()) +
                                " entries but the shape has " +
                                std::to_string(cells) + " cells");
  }
  detail::CompensatedSum total;
  for (double& v : probs_) {
    if (!(v >= kNegativeFloor)) {
      throw std::invalid_argument("probabilities must be non-negative");
    }
    if (v < 0.0) v = 0.0;
    total.add(v);
  }
  if (std::fabs(total.value() - 1.0) > kMassTolerance) {
    throw std::invalid_argument("probabilities must sum to 1 (got " +
                                std::to_string(total.value()) + ")");
  }
}

DiscreteDistribution DiscreteDistribution::flat(std::vector<double> probs) {
  const std::size_t states = probs.size();
  return DiscreteDistribution({states}, std::move(probs));
}

DiscreteDistribution DiscreteDistribution::uniform(std::vector<std::size_t> shape) {
  const std::size_t cells = checked_cell_count(shape);
  std::vector<double> probs(cells, 1.0 / static_cast<double>(cells));
  return DiscreteDistribution(std::move(shape), std::move(probs));
}

DiscreteDistribution marginal(const DiscreteDistribution& p, std::size_t coordinate) {
  if (p.is_flat()) {
    throw std::invalid_argument("marginal requires a product shape");
  }
  if (coordinate >= p.factor_count()) {
    throw std::invalid_argument("coordinate out of range");
  }
  const auto& shape = p.shape();
  std::size_t stride = 1;
  for (std::size_t j = coordinate + 1; j < shape.size(); ++j) stride *= shape[j];
  const std::size_t m = shape[coordinate];
  std::vector<detail::CompensatedSum> buckets(m);
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    buckets[(idx / stride) % m].add(p.prob(idx));
  }
  std::vector<double> sums(m);
  double total = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    sums[s] = buckets[s].value();
    total += sums[s];
  }
  // Renormalize away accumulated round-off so downstream validation holds.
  if (total > 0.0) {
    for (double& v : sums) v /= total;
  }
  return DiscreteDistribution::flat(std::move(sums));
}

DiscreteDistribution product_of(const std::vector<DiscreteDistribution>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("product requires at least one factor");
  }
  std::vector<std::size_t> shape;
  shape.reserve(factors.size());
  std::vector<double> probs{1.0};
  for (const auto& factor : factors) {
    if (!factor.is_flat()) {
      throw std::invalid_argument("product factors must be flat distributions");
    }
    shape.push_back(factor.size());
    std::vector<double> next;
    next.reserve(probs.size() * factor.size());
    for (double base : probs) {
      for (std::size_t s = 0; s < factor.size(); ++s) {
        next.push_back(base * factor.prob(s));
      }
    }
    probs = std::move(next);
  }
  return DiscreteDistribution(std::move(shape), std::move(probs));
}

bool is_product_distribution(const DiscreteDistribution& q, double tolerance) {
  if (q.is_flat()) return true;
  std::vector<DiscreteDistribution> marginals;
  marginals.reserve(q.factor_count());
  for (std::size_t i = 0; i < q.factor_count(); ++i) {
    marginals.push_back(marginal(q, i));
  }
  const DiscreteDistribution product = product_of(marginals);
  for (std::size_t idx = 0; idx < q.size(); ++idx) {
    if (std::fabs(q.prob(idx) - product.prob(idx)) > tolerance) return false;
  }
  return true;
}

}  // namespace changcheck
