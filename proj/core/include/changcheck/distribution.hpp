#pragma once

#include <cstddef>
#include <vector>

namespace changcheck {

// Probability distribution over a finite product space, stored row-major:
// shape [m_1, ..., m_n] with the last factor varying fastest. A flat space
// is shape [m]. Entries are validated on construction: negatives below
// -1e-15 are rejected, tiny negative round-off is clamped to zero, and the
// total mass must be 1 within 1e-9.
class DiscreteDistribution {
 public:
  DiscreteDistribution(std::vector<std::size_t> shape, std::vector<double> probs);

  static DiscreteDistribution flat(std::vector<double> probs);
  static DiscreteDistribution uniform(std::vector<std::size_t> shape);

  const std::vector<std::size_t>& shape() const { return shape_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  std::size_t factor_count() const { return shape_.size(); }
  bool is_flat() const { return shape_.size() == 1; }
  double prob(std::size_t index) const { return probs_[index]; }

 private:
  DiscreteDistribution() = default;

  std::vector<std::size_t> shape_;
  std::vector<double> probs_;
};

// Marginal on one coordinate of a product shape; the result is flat with
// shape [m_i]. Flat inputs are rejected.
DiscreteDistribution marginal(const DiscreteDistribution& p, std::size_t coordinate);

// Product distribution from flat factors, row-major.
DiscreteDistribution product_of(const std::vector<DiscreteDistribution>& factors);

// True when q is within `tolerance` (max norm) of the product of its own
// marginals. Flat distributions are trivially products.
bool is_product_distribution(const DiscreteDistribution& q, double tolerance = 1e-9);

}  // namespace changcheck
