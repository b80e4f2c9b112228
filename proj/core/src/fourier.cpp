#include "changcheck/fourier.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "accumulate.hpp"

namespace changcheck {

FourierSpectrum::FourierSpectrum(int n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ < 1 || n_ > kMaxDimension) {
    throw std::invalid_argument("dimension n must be in [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
  if (coeffs_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("coefficient table must hold exactly 2^n entries");
  }
}

void hadamard_butterfly(std::span<double> data) {
  const std::size_t size = data.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("butterfly length must be a power of two");
  }
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += half << 1) {
      for (std::size_t j = block; j < block + half; ++j) {
        const double a = data[j];
        const double b = data[j + half];
        data[j] = a + b;
        data[j + half] = a - b;
      }
    }
  }
}

double naive_fourier_coefficient(const CubeFunction& f, std::uint32_t subset_mask) {
  if (subset_mask >= f.size()) {
    throw std::invalid_argument("subset mask out of range");
  }
  double acc = 0.0;
  for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
    const double sign = (std::popcount(subset_mask & mask) & 1) ? -1.0 : 1.0;
    acc += f.value(mask) * sign;
  }
  return acc / static_cast<double>(f.size());
}

FourierSpectrum walsh_hadamard_transform(const CubeFunction& f) {
  std::vector<double> coeffs = f.values();
  hadamard_butterfly(coeffs);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (double& c : coeffs) c *= scale;
  return FourierSpectrum(f.n(), std::move(coeffs));
}

namespace {

void check_level(const FourierSpectrum& spectrum, int k) {
  if (k < 0 || k > spectrum.n()) {
    throw std::invalid_argument("level k must be in [0, n]");
  }
}

}  // namespace

double level_weight(const FourierSpectrum& spectrum, int k) {
  check_level(spectrum, k);
  detail::CompensatedSum acc;
  for (std::uint32_t s = 0; s < spectrum.size(); ++s) {
    if (std::popcount(s) == k) {
      const double c = spectrum.coeff(s);
      acc.add(c * c);
    }
  }
  return acc.value();
}

double cumulative_level_weight(const FourierSpectrum& spectrum, int k) {
  check_level(spectrum, k);
  detail::CompensatedSum acc;
  for (std::uint32_t s = 1; s < spectrum.size(); ++s) {
    const int level = std::popcount(s);
    if (level <= k) {
      const double c = spectrum.coeff(s);
      acc.add(c * c);
    }
  }
  return acc.value();
}

}  // namespace changcheck
