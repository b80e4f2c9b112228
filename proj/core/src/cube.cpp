#include "changcheck/cube.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace changcheck {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("dimension n must be in [1, " +
                                std::to_string(kMaxDimension) + "], got " +
                                std::to_string(n));
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint64_t indicator_count(const CubeFunction& f) {
  std::uint64_t count = 0;
  for (double v : f.values()) {
    if (v == 1.0) {
      ++count;
    } else if (v != 0.0) {
      throw std::invalid_argument("function is not an indicator: values must be exactly 0 or 1");
    }
  }
  return count;
}

}  // namespace

CubePoint::CubePoint(std::uint32_t mask, int n) : mask(mask), n(n) {
  check_dimension(n);
  if (mask >= (std::uint32_t{1} << n)) {
    throw std::invalid_argument("point mask " + std::to_string(mask) +
                                " out of range for n=" + std::to_string(n));
  }
}

CubeFunction::CubeFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  check_dimension(n_);
  if (values_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("value table must hold exactly 2^n entries");
  }
}

bool CubeFunction::is_indicator() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

CubeSet::CubeSet(int n) : n_(n) {
  check_dimension(n);
  words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

CubeSet CubeSet::from_points(int n, const std::vector<CubePoint>& points) {
  CubeSet set(n);
  for (const CubePoint& p : points) {
    if (p.n != n) {
      throw std::invalid_argument("point dimension " + std::to_string(p.n) +
                                  " does not match set dimension " + std::to_string(n));
    }
    set.add(p.mask);
  }
  return set;
}

CubeSet CubeSet::from_indicator(const CubeFunction& f) {
  CubeSet set(f.n());
  for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
    const double v = f.value(mask);
    if (v == 1.0) {
      set.words_[mask >> 6] |= std::uint64_t{1} << (mask & 63);
    } else if (v != 0.0) {
      throw std::invalid_argument("function is not an indicator: values must be exactly 0 or 1");
    }
  }
  return set;
}

CubeSet CubeSet::from_hex(int n, std::string_view hex) {
  CubeSet set(n);
  if (hex.empty()) {
    throw std::invalid_argument("empty hexbitset string");
  }
  const std::size_t bits = std::size_t{1} << n;
  const std::size_t width = (bits + 3) / 4;
  if (hex.size() > width) {
    throw std::invalid_argument("hexbitset longer than 2^n bits");
  }
  // Lowest-order hex digit is at the end of the string.
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int digit = hex_digit(hex[hex.size() - 1 - i]);
    if (digit < 0) {
      throw std::invalid_argument(std::string("invalid hex character '") + hex[hex.size() - 1 - i] + "'");
    }
    for (int b = 0; b < 4; ++b) {
      if ((digit >> b) & 1) {
        const std::size_t bit = 4 * i + b;
        if (bit >= bits) {
          throw std::invalid_argument("hexbitset has bits set beyond 2^n points");
        }
        set.words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
      }
    }
  }
  return set;
}

bool CubeSet::contains(std::uint32_t mask) const {
  return (words_[mask >> 6] >> (mask & 63)) & 1;
}

void CubeSet::add(std::uint32_t mask) {
  if (n_ == 0) {
    throw std::logic_error("cannot add to a default-constructed CubeSet");
  }
  if (mask >= (std::uint32_t{1} << n_)) {
    throw std::invalid_argument("point mask " + std::to_string(mask) +
                                " out of range for n=" + std::to_string(n_));
  }
  std::uint64_t& word = words_[mask >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (mask & 63);
  if (word & bit) {
    throw std::invalid_argument("duplicate point mask " + std::to_string(mask));
  }
  word |= bit;
}

std::uint64_t CubeSet::count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::vector<std::uint32_t> CubeSet::points() const {
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = std::uint32_t{1} << n_;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (contains(mask)) out.push_back(mask);
  }
  return out;
}

CubeFunction CubeSet::to_indicator() const {
  if (n_ == 0) {
    throw std::logic_error("cannot expand a default-constructed CubeSet");
  }
  std::vector<double> values(std::size_t{1} << n_, 0.0);
  const std::uint32_t limit = std::uint32_t{1} << n_;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (contains(mask)) values[mask] = 1.0;
  }
  return CubeFunction(n_, std::move(values));
}

std::string CubeSet::to_hex() const {
  const std::size_t bits = std::size_t{1} << n_;
  const std::size_t width = (bits + 3) / 4;
  std::string out(width, '0');
  static const char* digits = "0123456789abcdef";
  for (std::size_t i = 0; i < width; ++i) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t bit = 4 * i + b;
      if (bit < bits && ((words_[bit >> 6] >> (bit & 63)) & 1)) nibble |= 1 << b;
    }
    out[width - 1 - i] = digits[nibble];
  }
  return out;
}

bool set_value_less(const CubeSet& a, const CubeSet& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("cannot order sets over different cubes");
  }
  const std::vector<std::uint64_t>& wa = a.words();
  const std::vector<std::uint64_t>& wb = b.words();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

CubeFunction indicator_from_points(int n, const std::vector<CubePoint>& points) {
  return CubeSet::from_points(n, points).to_indicator();
}

double density(const CubeFunction& f) {
  const std::uint64_t count = indicator_count(f);
  return static_cast<double>(count) / static_cast<double>(f.size());
}

std::vector<BinaryMarginal> conditional_marginals(const CubeFunction& f) {
  const std::uint64_t total = indicator_count(f);
  if (total == 0) {
    throw std::invalid_argument("conditional marginals of an empty set are undefined");
  }
  const int n = f.n();
  std::vector<std::uint64_t> plus(n, 0);  // points of A with x_{i+1} = +1 (bit clear)
  for (std::uint32_t mask = 0; mask < f.size(); ++mask) {
    if (f.value(mask) != 1.0) continue;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) ++plus[i];
    }
  }
  std::vector<BinaryMarginal> out(n);
  for (int i = 0; i < n; ++i) {
    const double alpha_i = static_cast<double>(plus[i]) / static_cast<double>(total);
    const double rest = static_cast<double>(total - plus[i]) / static_cast<double>(total);
    out[i] = BinaryMarginal{alpha_i, rest};
  }
  return out;
}

}  // namespace changcheck
