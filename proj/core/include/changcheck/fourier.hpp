#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "changcheck/cube.hpp"

namespace changcheck {

// The 2^n Fourier coefficients of a function on {-1,1}^n, indexed by subset
// bitmask: bit i of the index means coordinate i+1 belongs to S.
class FourierSpectrum {
 public:
  FourierSpectrum(int n, std::vector<double> coeffs);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  double coeff(std::uint32_t subset_mask) const { return coeffs_[subset_mask]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

// In-place unnormalized Hadamard butterfly. Applying it twice multiplies the
// input by its length. The length must be a power of two.
void hadamard_butterfly(std::span<double> data);

// Definitional coefficient E[f(x) chi_S(x)] with the character
// chi_S(x) = (-1)^popcount(S & x) under the mask encoding. O(2^n) per call;
// this is the oracle the fast transform is checked against.
double naive_fourier_coefficient(const CubeFunction& f, std::uint32_t subset_mask);

// All 2^n coefficients in O(n 2^n): butterfly followed by division by 2^n.
FourierSpectrum walsh_hadamard_transform(const CubeFunction& f);

// Level weight W^k: sum of squared coefficients over subsets of size exactly k.
double level_weight(const FourierSpectrum& spectrum, int k);

// Sum of squared coefficients over nonempty subsets of size at most k.
// S = {} is excluded; the k = 1 case is the left side of Chang's lemma.
double cumulative_level_weight(const FourierSpectrum& spectrum, int k);

}  // namespace changcheck
