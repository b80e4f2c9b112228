#include "changcheck/chang.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "accumulate.hpp"
#include "changcheck/distribution.hpp"
#include "changcheck/info.hpp"

namespace changcheck {

namespace {

constexpr double kSlackTolerance = 1e-12;

// Equality and chain checks accumulate 2^n-term sums; past n = 10 the pinned
// tolerance widens to 1e-9.
double trace_tolerance(int n) { return n <= 10 ? 1e-12 : 1e-9; }

std::uint32_t bit_reverse(std::uint32_t mask, int n) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) out |= 1u << (n - 1 - i);
  }
  return out;
}

std::uint64_t nonempty_count(const CubeFunction& f, const char* what) {
  const double alpha = density(f);
  if (alpha == 0.0) {
    throw std::invalid_argument(std::string(what) +
                                " is undefined for the empty set; density must be positive");
  }
  return static_cast<std::uint64_t>(
      std::llround(alpha * static_cast<double>(f.size())));
}

std::uint64_t split_mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double canonical_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

CubeFunction function_from_code(int n, std::uint64_t code) {
  const std::uint32_t size = 1u << n;
  std::vector<double> values(size);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    values[mask] = ((code >> mask) & 1ull) ? 1.0 : 0.0;
  }
  return CubeFunction(n, std::move(values));
}

struct ShardAccum {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  bool has_min = false;
  double min_slack = std::numeric_limits<double>::infinity();
  CubeSet argmin;
  std::vector<ChangRow> rows;
};

// Tie-break on equal slack: the lowest set encoding wins, which keeps the
// merged result independent of the shard count.
void fold_candidate(ShardAccum& acc, const CubeSet& set, double slack) {
  if (!acc.has_min || slack < acc.min_slack ||
      (slack == acc.min_slack && set_value_less(set, acc.argmin))) {
    acc.has_min = true;
    acc.min_slack = slack;
    acc.argmin = set;
  }
}

template <typename Worker>
SweepResult run_sharded(int n, std::uint64_t begin, std::uint64_t end,
                        const SweepOptions& options, Worker worker) {
  const std::uint64_t span = end - begin;
  std::uint64_t shard_count =
      static_cast<std::uint64_t>(std::max(options.threads, 1));
  shard_count = std::min(shard_count, span);

  std::vector<ShardAccum> accs(shard_count);
  std::vector<std::thread> pool;
  pool.reserve(shard_count);
  const std::uint64_t chunk = span / shard_count;
  const std::uint64_t rem = span % shard_count;
  std::uint64_t cursor = begin;
  for (std::uint64_t s = 0; s < shard_count; ++s) {
    const std::uint64_t hi = cursor + chunk + (s < rem ? 1 : 0);
    pool.emplace_back(worker, std::ref(accs[s]), cursor, hi);
    cursor = hi;
  }
  for (auto& t : pool) t.join();

  SweepResult result;
  result.summary.n = n;
  ShardAccum merged;
  for (auto& acc : accs) {
    merged.checked += acc.checked;
    merged.violations += acc.violations;
    if (acc.has_min) fold_candidate(merged, acc.argmin, acc.min_slack);
    if (options.collect_rows) {
      result.rows.insert(result.rows.end(),
                         std::make_move_iterator(acc.rows.begin()),
                         std::make_move_iterator(acc.rows.end()));
    }
  }
  result.summary.sets_checked = merged.checked;
  result.summary.violations = merged.violations;
  result.summary.min_slack = merged.min_slack;
  result.summary.argmin_set = merged.argmin;
  return result;
}

}  // namespace

double chang_bound(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  return 2.0 * alpha * alpha * std::log(1.0 / alpha);
}

ChangReport verify_chang(const CubeFunction& set_indicator) {
  ChangReport report;
  report.set_size = nonempty_count(set_indicator, "verify_chang");
  report.n = set_indicator.n();
  report.alpha = density(set_indicator);
  const FourierSpectrum spectrum = walsh_hadamard_transform(set_indicator);
  report.w1 = level_weight(spectrum, 1);
  report.bound = chang_bound(report.alpha);
  report.slack = report.bound - report.w1;
  report.holds = report.slack >= -kSlackTolerance;
  return report;
}

ProofTrace proof_trace(const CubeFunction& set_indicator) {
  const std::uint64_t count = nonempty_count(set_indicator, "proof_trace");
  const int n = set_indicator.n();
  const std::uint32_t size = set_indicator.size();
  const double alpha = density(set_indicator);
  const double tol = trace_tolerance(n);

  ProofTrace trace;
  trace.ln_inv_alpha = std::log(1.0 / alpha);

  // p = uniform on the set, q = uniform on the cube, over the product space
  // with coordinate i at stride 2^(n-1-i); state 1 of a factor means -1.
  const double mass = 1.0 / static_cast<double>(count);
  std::vector<double> probs(size, 0.0);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    if (set_indicator.value(mask) == 1.0) {
      probs[bit_reverse(mask, n)] = mass;
    }
  }
  const std::vector<std::size_t> shape(static_cast<std::size_t>(n), 2);
  const DiscreteDistribution p(shape, std::move(probs));
  const DiscreteDistribution q = DiscreteDistribution::uniform(shape);

  trace.divergence = kl_divergence(p, q);
  if (std::fabs(trace.divergence - trace.ln_inv_alpha) > tol) {
    throw InvariantViolation("proof trace: D(p||q) = " +
                             std::to_string(trace.divergence) +
                             " disagrees with ln(1/alpha) = " +
                             std::to_string(trace.ln_inv_alpha));
  }

  detail::CompensatedSum divergence_sum;
  detail::CompensatedSum l1_sq_sum;
  for (int i = 0; i < n; ++i) {
    const DiscreteDistribution pi = marginal(p, i);
    const DiscreteDistribution qi = marginal(q, i);
    divergence_sum.add(kl_divergence(pi, qi));
    const double l1 = l1_distance(pi, qi);
    l1_sq_sum.add(l1 * l1);
  }
  trace.marginal_divergence_sum = divergence_sum.value();
  trace.half_l1_sum = 0.5 * l1_sq_sum.value();

  if (trace.divergence - trace.marginal_divergence_sum < -tol) {
    throw InvariantViolation(
        "proof trace: joint divergence fell below the marginal sum");
  }
  if (trace.marginal_divergence_sum - trace.half_l1_sum < -tol) {
    throw InvariantViolation(
        "proof trace: marginal divergence sum fell below the half L1 sum");
  }
  if (trace.half_l1_sum < -kSlackTolerance) {
    throw InvariantViolation("proof trace: negative L1 sum");
  }

  // Independent route for W^1: definitional singleton coefficients, not the
  // fast transform.
  detail::CompensatedSum w1_naive;
  for (int i = 0; i < n; ++i) {
    const double c = naive_fourier_coefficient(set_indicator, 1u << i);
    w1_naive.add(c * c);
  }
  trace.w1_over_alpha_sq = w1_naive.value() / (alpha * alpha);
  if (std::fabs(trace.w1_over_alpha_sq - 2.0 * trace.half_l1_sum) > tol) {
    throw InvariantViolation(
        "proof trace: W1 / alpha^2 disagrees with the marginal L1 identity");
  }
  return trace;
}

SweepResult exhaustive_verify(int n, const SweepOptions& options) {
  if (n < 1) {
    throw std::invalid_argument("dimension n must be at least 1");
  }
  if (n > 4) {
    throw std::invalid_argument(
        "exhaustive_verify supports n <= 4; use sampled_verify for larger n");
  }
  const std::uint32_t size = 1u << n;
  const std::uint64_t codes = 1ull << size;

  auto worker = [n, &options](ShardAccum& acc, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t code = lo; code < hi; ++code) {
      const CubeFunction f = function_from_code(n, code);
      const ChangReport report = verify_chang(f);
      const CubeSet set = CubeSet::from_indicator(f);
      ++acc.checked;
      if (!report.holds) ++acc.violations;
      fold_candidate(acc, set, report.slack);
      if (options.collect_rows) acc.rows.push_back({set, report});
    }
  };
  return run_sharded(n, 1, codes, options, worker);
}

SweepResult sampled_verify(int n, std::uint64_t trials, std::uint64_t seed,
                           const SweepOptions& options) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("dimension n must be in [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
  if (trials == 0) {
    throw std::invalid_argument("trials must be positive");
  }
  const std::uint32_t size = 1u << n;

  auto worker = [n, size, seed, &options](ShardAccum& acc, std::uint64_t lo,
                                          std::uint64_t hi) {
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      std::mt19937_64 engine(
          split_mix64(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1))));
      std::vector<double> values(size);
      std::uint64_t count = 0;
      // Empty draws are rejected and the whole trial redrawn with the same
      // engine, so the outcome depends only on (seed, trial).
      do {
        const double inclusion = canonical_uniform(engine);
        count = 0;
        for (std::uint32_t mask = 0; mask < size; ++mask) {
          const bool in = canonical_uniform(engine) < inclusion;
          values[mask] = in ? 1.0 : 0.0;
          count += in ? 1 : 0;
        }
      } while (count == 0);

      const CubeFunction f(n, std::move(values));
      const ChangReport report = verify_chang(f);
      ++acc.checked;
      if (!report.holds) ++acc.violations;
      if (options.collect_rows || !acc.has_min || report.slack <= acc.min_slack) {
        const CubeSet set = CubeSet::from_indicator(f);
        fold_candidate(acc, set, report.slack);
        if (options.collect_rows) acc.rows.push_back({set, report});
      }
    }
  };
  return run_sharded(n, 0, trials, options, worker);
}

ExtremalResult extremal_search(int n) {
  if (n < 1) {
    throw std::invalid_argument("dimension n must be at least 1");
  }
  if (n > 4) {
    throw std::invalid_argument("extremal_search supports n <= 4");
  }
  const std::uint32_t size = 1u << n;
  const std::uint64_t codes = 1ull << size;
  const std::uint64_t full = codes - 1;

  ExtremalResult result;
  result.max_ratio = -std::numeric_limits<double>::infinity();
  for (std::uint64_t code = 1; code < codes; ++code) {
    if (code == full) continue;  // alpha = 1 makes the ratio 0/0
    const CubeFunction f = function_from_code(n, code);
    const ChangReport report = verify_chang(f);
    const double ratio = report.w1 / report.bound;
    if (ratio > result.max_ratio) {
      result.max_ratio = ratio;
      result.argmax_set = CubeSet::from_indicator(f);
      result.reports.clear();
      result.reports.push_back({result.argmax_set, report});
    } else if (ratio == result.max_ratio) {
      result.reports.push_back({CubeSet::from_indicator(f), report});
    }
  }
  if (result.max_ratio > 1.0 + kSlackTolerance) {
    throw InvariantViolation("extremal search: ratio exceeded 1");
  }
  return result;
}

LevelKReport level_k_report(const CubeFunction& set_indicator, int k) {
  if (k < 1 || k > set_indicator.n()) {
    throw std::invalid_argument("level k must be in [1, n]");
  }
  nonempty_count(set_indicator, "level_k_report");
  const double alpha = density(set_indicator);
  const FourierSpectrum spectrum = walsh_hadamard_transform(set_indicator);

  LevelKReport report;
  report.k = k;
  report.lhs = cumulative_level_weight(spectrum, k);
  const double ln_inv_alpha = std::log(1.0 / alpha);
  report.rhs =
      std::pow((2.0 * std::numbers::e / k) * ln_inv_alpha, k) * alpha * alpha;
  report.applicable = static_cast<double>(k) <= 2.0 * ln_inv_alpha;
  report.holds = (report.rhs - report.lhs) >= -kSlackTolerance;
  return report;
}

}  // namespace changcheck
