#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "changcheck/cube.hpp"
#include "changcheck/fourier.hpp"

namespace changcheck {

// Raised when a quantity that is guaranteed by a theorem fails its numeric
// check; it signals an implementation bug, not bad input.
class InvariantViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Both sides of the level-1 bound W^1 <= 2 alpha^2 ln(1/alpha) for one set.
struct ChangReport {
  int n;
  std::uint64_t set_size;
  double alpha;
  double w1;
  double bound;
  double slack;  // bound - w1
  bool holds;    // slack >= -1e-12
};

// The information-theoretic chain behind the bound, evaluated on p = uniform
// on A and q = uniform on the cube:
//   ln(1/alpha) = D(p||q) >= sum_i D(p_i||q_i) >= (1/2) sum_i ||p_i - q_i||_1^2
// together with the coefficient identity W^1 / alpha^2 = sum_i ||p_i - q_i||_1^2.
struct ProofTrace {
  double ln_inv_alpha;
  double divergence;
  double marginal_divergence_sum;
  double half_l1_sum;
  double w1_over_alpha_sq;
};

// 2 alpha^2 ln(1/alpha) for 0 < alpha <= 1; exactly 0 at alpha = 1.
double chang_bound(double alpha);

// Level-1 weight from the spectrum against the density bound. `holds` is true
// for every valid input; a false report signals an implementation bug.
ChangReport verify_chang(const CubeFunction& set_indicator);

// Replays the divergence chain for one set and checks every step (throwing
// InvariantViolation on failure). Steps that accumulate 2^n-term sums are
// checked at 1e-12 for n <= 10 and 1e-9 above.
ProofTrace proof_trace(const CubeFunction& set_indicator);

struct ChangRow {
  CubeSet set;
  ChangReport report;
};

struct SweepSummary {
  int n = 0;
  std::uint64_t sets_checked = 0;
  std::uint64_t violations = 0;
  double min_slack = 0.0;
  CubeSet argmin_set;
};

// Sharding is optional; results are deterministic and independent of the
// thread count (min/argmin merged with the lowest-set-encoding tie-break).
struct SweepOptions {
  int threads = 1;
  bool collect_rows = false;
};

struct SweepResult {
  SweepSummary summary;
  std::vector<ChangRow> rows;  // set-code order (exhaustive) / trial order (sampled)
};

// Runs verify_chang on every nonempty subset of {-1,1}^n; n <= 4 only.
SweepResult exhaustive_verify(int n, const SweepOptions& options = {});

// Random nonempty subsets: per trial an inclusion probability is drawn from
// uniform(0,1), each point is kept independently with that probability, and
// empty draws are resampled. Deterministic given the seed.
SweepResult sampled_verify(int n, std::uint64_t trials, std::uint64_t seed,
                           const SweepOptions& options = {});

struct ExtremalResult {
  double max_ratio;
  CubeSet argmax_set;
  std::vector<ChangRow> reports;
};

// Exhaustively maximizes w1 / bound over nonempty subsets with alpha < 1
// (the ratio is 0/0 at the full cube); n <= 4.
ExtremalResult extremal_search(int n);

struct LevelKReport {
  int k;
  double lhs;        // cumulative level weight, nonempty S with |S| <= k
  double rhs;        // ((2e/k) ln(1/alpha))^k alpha^2
  bool applicable;   // k <= 2 ln(1/alpha)
  bool holds;        // rhs - lhs >= -1e-12; asserted only when applicable
};

// The level-k inequality as a checkable predicate. It is checked, never
// proved: non-applicable cases are reported descriptively.
LevelKReport level_k_report(const CubeFunction& set_indicator, int k);

}  // namespace changcheck
