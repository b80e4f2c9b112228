#include <cmath>
#include <stdexcept>
#include <vector>

#include "changcheck/chang.hpp"
#include "changcheck/cube.hpp"
#include "changcheck/fourier.hpp"
#include "doctest.h"

using namespace changcheck;

namespace {

CubeFunction singleton(int n, std::uint32_t mask) {
  std::vector<double> values(std::size_t{1} << n, 0.0);
  values[mask] = 1.0;
  return CubeFunction(n, std::move(values));
}

CubeFunction full_cube(int n) {
  return CubeFunction(n, std::vector<double>(std::size_t{1} << n, 1.0));
}

}  // namespace

TEST_CASE("chang_bound on hand values") {
  CHECK(chang_bound(0.5) == doctest::Approx(0.34657359027997264).epsilon(1e-15));
  CHECK(chang_bound(0.125) == doctest::Approx(0.06498254817749487).epsilon(1e-15));
  CHECK(chang_bound(1.0) == 0.0);
  CHECK_THROWS_AS(chang_bound(0.0), std::invalid_argument);
  CHECK_THROWS_AS(chang_bound(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(chang_bound(1.0 + 1e-9), std::invalid_argument);
}

TEST_CASE("verify_chang on the halfcube") {
  const ChangReport r = verify_chang(CubeFunction(2, {1, 0, 1, 0}));
  CHECK(r.n == 2);
  CHECK(r.set_size == 2);
  CHECK(r.alpha == 0.5);
  CHECK(r.w1 == 0.25);
  CHECK(r.bound == doctest::Approx(0.34657359027997264).epsilon(1e-15));
  CHECK(r.slack == doctest::Approx(0.09657359027997264).epsilon(1e-12));
  CHECK(r.holds);
}

TEST_CASE("verify_chang on the full cube is the equality case") {
  const ChangReport r = verify_chang(full_cube(3));
  CHECK(r.alpha == 1.0);
  CHECK(r.set_size == 8);
  CHECK(r.w1 == 0.0);
  CHECK(r.bound == 0.0);
  CHECK(r.slack == 0.0);
  CHECK(r.holds);
}

TEST_CASE("verify_chang on a singleton") {
  const ChangReport r = verify_chang(singleton(3, 0));
  CHECK(r.alpha == 0.125);
  CHECK(r.set_size == 1);
  CHECK(r.w1 == doctest::Approx(3.0 / 64.0).epsilon(1e-15));
  CHECK(r.bound == doctest::Approx(0.06498254817749487).epsilon(1e-15));
  CHECK(r.holds);
}

TEST_CASE("verify_chang rejects bad input") {
  CHECK_THROWS_WITH_AS(verify_chang(CubeFunction(2, {0, 0, 0, 0})),
                       doctest::Contains("empty set"), std::invalid_argument);
  CHECK_THROWS_AS(verify_chang(CubeFunction(1, {0.5, 1.0})),
                  std::invalid_argument);
}

TEST_CASE("proof_trace of the halfcube") {
  const ProofTrace t = proof_trace(CubeFunction(2, {1, 0, 1, 0}));
  const double ln2 = std::log(2.0);
  CHECK(t.ln_inv_alpha == doctest::Approx(ln2).epsilon(1e-15));
  CHECK(t.divergence == doctest::Approx(ln2).epsilon(1e-12));
  CHECK(t.marginal_divergence_sum == doctest::Approx(ln2).epsilon(1e-12));
  CHECK(t.half_l1_sum == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t.w1_over_alpha_sq == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("proof_trace of a singleton hits equality in subadditivity") {
  const ProofTrace t = proof_trace(singleton(3, 0));
  CHECK(t.ln_inv_alpha == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  CHECK(t.divergence == doctest::Approx(std::log(8.0)).epsilon(1e-12));
  CHECK(t.marginal_divergence_sum == doctest::Approx(std::log(8.0)).epsilon(1e-12));
  CHECK(t.half_l1_sum == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(t.w1_over_alpha_sq == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("proof_trace of the full cube is all zeros") {
  const ProofTrace t = proof_trace(full_cube(2));
  CHECK(t.ln_inv_alpha == 0.0);
  CHECK(t.divergence == 0.0);
  CHECK(t.marginal_divergence_sum == 0.0);
  CHECK(t.half_l1_sum == 0.0);
  CHECK(t.w1_over_alpha_sq == 0.0);
}

TEST_CASE("proof_trace rejects the empty set") {
  CHECK_THROWS_WITH_AS(proof_trace(CubeFunction(1, {0, 0})),
                       doctest::Contains("empty set"), std::invalid_argument);
}

TEST_CASE("proof_trace agrees with verify_chang across routes") {
  // The trace takes W^1 from definitional coefficients and the marginal L1
  // identity; the report takes it from the fast transform.
  for (std::uint64_t code = 1; code < 256; ++code) {
    std::vector<double> values(8);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      values[mask] = ((code >> mask) & 1ull) ? 1.0 : 0.0;
    }
    const CubeFunction f(3, values);
    const ChangReport r = verify_chang(f);
    const ProofTrace t = proof_trace(f);
    CHECK(r.w1 == doctest::Approx(r.alpha * r.alpha * t.w1_over_alpha_sq)
                      .epsilon(1e-12));
  }
}

TEST_CASE("exhaustive_verify counts and certifies") {
  const SweepResult r1 = exhaustive_verify(1);
  CHECK(r1.summary.n == 1);
  CHECK(r1.summary.sets_checked == 3);
  CHECK(r1.summary.violations == 0);

  const SweepResult r2 = exhaustive_verify(2);
  CHECK(r2.summary.sets_checked == 15);
  CHECK(r2.summary.violations == 0);
  CHECK(r2.summary.min_slack == 0.0);
  // The unique equality case is the full cube.
  CHECK(r2.summary.argmin_set.count() == 4);

  const SweepResult r3 = exhaustive_verify(3);
  CHECK(r3.summary.sets_checked == 255);
  CHECK(r3.summary.violations == 0);

  CHECK_THROWS_AS(exhaustive_verify(0), std::invalid_argument);
  CHECK_THROWS_WITH_AS(exhaustive_verify(5), doctest::Contains("use sample"),
                       std::invalid_argument);
}

TEST_CASE("exhaustive_verify rows come back in set-code order") {
  SweepOptions options;
  options.collect_rows = true;
  const SweepResult r = exhaustive_verify(2, options);
  REQUIRE(r.rows.size() == 15);
  CHECK(r.rows.front().set.points() == std::vector<std::uint32_t>{0});
  CHECK(r.rows.back().set.count() == 4);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(set_value_less(r.rows[i - 1].set, r.rows[i].set));
  }
}

TEST_CASE("exhaustive_verify is independent of the shard count") {
  SweepOptions serial;
  serial.collect_rows = true;
  SweepOptions parallel;
  parallel.collect_rows = true;
  parallel.threads = 3;
  const SweepResult a = exhaustive_verify(3, serial);
  const SweepResult b = exhaustive_verify(3, parallel);
  CHECK(a.summary.sets_checked == b.summary.sets_checked);
  CHECK(a.summary.violations == b.summary.violations);
  CHECK(a.summary.min_slack == b.summary.min_slack);
  CHECK(a.summary.argmin_set == b.summary.argmin_set);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].set == b.rows[i].set);
    CHECK(a.rows[i].report.slack == b.rows[i].report.slack);
  }
}

TEST_CASE("sampled_verify is deterministic in the seed") {
  SweepOptions options;
  options.collect_rows = true;
  const SweepResult a = sampled_verify(6, 300, 12345, options);
  const SweepResult b = sampled_verify(6, 300, 12345, options);
  CHECK(a.summary.violations == 0);
  CHECK(a.summary.sets_checked == 300);
  CHECK(a.summary.min_slack == b.summary.min_slack);
  CHECK(a.summary.argmin_set == b.summary.argmin_set);
  REQUIRE(a.rows.size() == 300);
  REQUIRE(b.rows.size() == 300);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].set == b.rows[i].set);
  }

  // A different seed draws a different first set. (The minima can agree:
  // the inclusion probability is itself uniform, so a 300-trial run at n=6
  // usually draws the full cube and its exact-zero slack at least once.)
  const SweepResult c = sampled_verify(6, 300, 54321, options);
  CHECK(a.rows.front().set != c.rows.front().set);
}

TEST_CASE("sampled_verify is independent of the shard count") {
  SweepOptions serial;
  serial.collect_rows = true;
  SweepOptions parallel;
  parallel.collect_rows = true;
  parallel.threads = 4;
  const SweepResult a = sampled_verify(5, 250, 99, serial);
  const SweepResult b = sampled_verify(5, 250, 99, parallel);
  CHECK(a.summary.min_slack == b.summary.min_slack);
  CHECK(a.summary.argmin_set == b.summary.argmin_set);
  REQUIRE(a.rows.size() == 250);
  REQUIRE(b.rows.size() == 250);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].set == b.rows[i].set);
  }
}

TEST_CASE("sampled_verify validates input") {
  CHECK_THROWS_AS(sampled_verify(0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(sampled_verify(25, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(sampled_verify(6, 0, 1), std::invalid_argument);
}

TEST_CASE("sampled_verify covers larger cubes") {
  const SweepResult r = sampled_verify(12, 40, 7);
  CHECK(r.summary.violations == 0);
  CHECK(r.summary.sets_checked == 40);
}

TEST_CASE("extremal_search at n=1 finds the singleton ratio") {
  const ExtremalResult r = extremal_search(1);
  CHECK(r.max_ratio ==
        doctest::Approx(1.0 / (2.0 * std::log(2.0))).epsilon(1e-12));
  CHECK(r.argmax_set.count() == 1);
  // Both singletons achieve the same ratio.
  CHECK(r.reports.size() == 2);
}

TEST_CASE("extremal_search regression values") {
  // Frozen by brute force; every dimension's maximum sits in the subcube
  // ratio class 1/(2 ln 2).
  for (int n = 2; n <= 4; ++n) {
    const ExtremalResult r = extremal_search(n);
    CHECK(r.max_ratio == doctest::Approx(0.7213475204444817).epsilon(1e-9));
    CHECK(r.max_ratio <= 1.0 + 1e-12);
    REQUIRE(!r.reports.empty());
    const ChangReport& top = r.reports.front().report;
    CHECK(top.w1 / top.bound == doctest::Approx(r.max_ratio).epsilon(1e-15));
    CHECK(r.reports.front().set == r.argmax_set);
  }
  CHECK_THROWS_AS(extremal_search(0), std::invalid_argument);
  CHECK_THROWS_AS(extremal_search(5), std::invalid_argument);
}

TEST_CASE("level_k_report on singletons") {
  {
    const LevelKReport r = level_k_report(singleton(3, 0), 1);
    CHECK(r.k == 1);
    CHECK(r.lhs == doctest::Approx(3.0 / 64.0).epsilon(1e-15));
    CHECK(r.rhs == doctest::Approx(0.17664087987784877).epsilon(1e-12));
    CHECK(r.applicable);
    CHECK(r.holds);
  }
  {
    const LevelKReport r = level_k_report(singleton(4, 0), 2);
    CHECK(r.lhs == doctest::Approx(10.0 / 256.0).epsilon(1e-15));
    CHECK(r.rhs == doctest::Approx(0.22188089204636868).epsilon(1e-12));
    CHECK(r.applicable);
    CHECK(r.holds);
  }
}

TEST_CASE("level_k applicability follows the density") {
  // alpha = 1: ln(1/alpha) = 0, so no k >= 1 is applicable.
  const LevelKReport full = level_k_report(full_cube(2), 1);
  CHECK_FALSE(full.applicable);
  CHECK(full.lhs == 0.0);
  CHECK(full.rhs == 0.0);
  CHECK(full.holds);

  // alpha = 1/2: 2 ln 2 = 1.386..., so k=1 is applicable but k=2 is not.
  const CubeFunction halfcube(2, {1, 0, 1, 0});
  CHECK(level_k_report(halfcube, 1).applicable);
  CHECK_FALSE(level_k_report(halfcube, 2).applicable);
}

TEST_CASE("level_k at k=1 matches the level-1 weight") {
  for (std::uint64_t code = 1; code < 256; ++code) {
    std::vector<double> values(8);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      values[mask] = ((code >> mask) & 1ull) ? 1.0 : 0.0;
    }
    const CubeFunction f(3, values);
    const ChangReport r = verify_chang(f);
    const LevelKReport k1 = level_k_report(f, 1);
    CHECK(k1.lhs == doctest::Approx(r.w1).epsilon(1e-15));
    if (k1.applicable) {
      // The k=1 bound is a factor e looser than the density bound.
      CHECK(r.bound <= k1.rhs + 1e-12);
      CHECK(k1.holds);
    }
  }
}

TEST_CASE("level_k_report validates input") {
  CHECK_THROWS_AS(level_k_report(singleton(3, 0), 0), std::invalid_argument);
  CHECK_THROWS_AS(level_k_report(singleton(3, 0), 4), std::invalid_argument);
  CHECK_THROWS_WITH_AS(level_k_report(CubeFunction(2, {0, 0, 0, 0}), 1),
                       doctest::Contains("empty set"), std::invalid_argument);
}

TEST_CASE("every nonempty subset at n=3 passes the full trace") {
  for (std::uint64_t code = 1; code < 256; ++code) {
    std::vector<double> values(8);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      values[mask] = ((code >> mask) & 1ull) ? 1.0 : 0.0;
    }
    CHECK_NOTHROW(proof_trace(CubeFunction(3, values)));
  }
}
