#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace changcheck {

// Dimensions above 24 would need more than 2^24 table entries (~1 GiB of
// doubles); everything here is sized for desk-scale exhaustive work.
inline constexpr int kMaxDimension = 24;

// A point of {-1,1}^n packed into a bitmask. Bit i set (0-indexed) encodes
// x_{i+1} = -1, so mask 0 is the all-(+1) point.
struct CubePoint {
  CubePoint(std::uint32_t mask, int n);

  std::uint32_t mask;
  int n;
};

// Real-valued function on {-1,1}^n stored as a dense table of 2^n values
// indexed by point mask.
class CubeFunction {
 public:
  CubeFunction(int n, std::vector<double> values);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double value(std::uint32_t mask) const { return values_[mask]; }
  const std::vector<double>& values() const { return values_; }

  // True when every value is exactly 0.0 or 1.0. No tolerance: indicator
  // tables are constructed, not measured.
  bool is_indicator() const;

 private:
  int n_;
  std::vector<double> values_;
};

// Marginal of a probability distribution on one +/-1 coordinate.
struct BinaryMarginal {
  double p_plus;   // mass on +1
  double p_minus;  // mass on -1
};

// A subset of {-1,1}^n held as a 2^n-bit set over point masks. The hex
// encoding writes those bits as a fixed-width lowercase string with the
// lowest-order bit corresponding to mask 0.
class CubeSet {
 public:
  CubeSet() = default;
  explicit CubeSet(int n);

  static CubeSet from_points(int n, const std::vector<CubePoint>& points);
  static CubeSet from_indicator(const CubeFunction& f);
  static CubeSet from_hex(int n, std::string_view hex);

  int n() const { return n_; }
  bool contains(std::uint32_t mask) const;
  void add(std::uint32_t mask);  // rejects duplicates and out-of-range masks
  std::uint64_t count() const;
  std::vector<std::uint32_t> points() const;
  CubeFunction to_indicator() const;
  std::string to_hex() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const CubeSet& a, const CubeSet& b) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Numeric order on the set encoding (the sweep tie-break). Both sets must
// live on the same cube.
bool set_value_less(const CubeSet& a, const CubeSet& b);

// Indicator function 1_A from an explicit point list. Duplicate points and
// dimension mismatches are rejected.
CubeFunction indicator_from_points(int n, const std::vector<CubePoint>& points);

// Density |A| / 2^n of an indicator function; exact for n <= 24.
double density(const CubeFunction& f);

// Element i is (alpha_i, 1-alpha_i) with alpha_i = Pr[x_{i+1} = +1 | x in A].
std::vector<BinaryMarginal> conditional_marginals(const CubeFunction& f);

}  // namespace changcheck
