// Copyright 2026 The largesieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "largesieve/bounds.hpp"
#include "largesieve/error.hpp"
#include "oracles.hpp"

namespace largesieve {
namespace {

constexpr double kPi = std::numbers::pi;

CoefficientVector ones(std::size_t n) { return CoefficientVector(std::vector<Complex>(n, 1.0)); }

CoefficientVector rademacher(std::size_t n, std::uint64_t seed) {
  return make_ensemble({EnsembleKind::kRademacher, n, seed, {}});
}

// Top-x share of |S|^2 on a very fine grid: an approximation of M(x) that
// does not use the cell bounds.
double fine_grid_m(const CoefficientVector& v, double x, std::size_t fine) {
  std::vector<double> f(fine);
  for (std::size_t j = 0; j < fine; ++j) f[j] = std::norm(eval_direct(v, double(j) / double(fine)));
  std::sort(f.begin(), f.end(), std::greater<>());
  const auto k = static_cast<std::size_t>(std::llround(x * double(fine)));
  double top = 0.0, all = 0.0;
  for (std::size_t j = 0; j < fine; ++j) (j < k ? top : all) += f[j];
  return top / (top + all);
}

TEST(MFunctional, RejectsOutOfRangeX) {
  const auto sg = spectrum(ones(3), 64);
  EXPECT_THROW(m_functional_bounds(sg, 0.0), InvalidParameter);
  EXPECT_THROW(m_functional_bounds(sg, -0.1), InvalidParameter);
  EXPECT_THROW(m_functional_bounds(sg, 1.01), InvalidParameter);
}

TEST(MFunctional, RejectsZeroEnergy) {
  const CoefficientVector zero({0.0, 0.0});
  EXPECT_THROW(m_functional_bounds(spectrum(zero, 16), 0.5), InvalidParameter);
}

TEST(MFunctional, ConstantIntegrandGivesX) {
  for (const std::size_t grid : {16u, 256u}) {
    const auto sg = spectrum(ones(1), grid);
    for (const double x : {0.01, 0.1, 0.25, 0.5, 0.77, 1.0}) {
      const auto m = m_functional_bounds(sg, x);
      EXPECT_NEAR(m.lower, x, 1.0 / double(grid));
      EXPECT_NEAR(m.upper, x, 1.0 / double(grid));
    }
  }
}

TEST(MFunctional, FullMeasureClampsToOne) {
  const auto sg = spectrum(rademacher(50, 3), 4096);
  const auto m = m_functional_bounds(sg, 1.0);
  EXPECT_EQ(m.lower, 1.0);
  EXPECT_EQ(m.upper, 1.0);
}

// f = 2 + 2 cos(2 pi u): the best half-measure set is |u| <= 1/4, giving
// 1/2 + 1/pi. Checked both in closed form and by Simpson quadrature.
TEST(MFunctional, PairHalfMeasure) {
  const double closed = 0.5 + 1.0 / kPi;
  const double simpson =
      oracle::simpson([](double u) { return 2.0 + 2.0 * std::cos(2.0 * kPi * u); }, -0.25, 0.25, 2000) / 2.0;
  EXPECT_NEAR(simpson, closed, 1e-12);
  for (const std::size_t grid : {1024u, 4096u}) {
    const auto m = m_functional_bounds(spectrum(ones(2), grid), 0.5);
    EXPECT_LE(m.lower, closed);
    EXPECT_GE(m.upper, closed);
    EXPECT_LT(m.upper - m.lower, 0.01);
  }
}

TEST(MFunctional, BracketsFineGridEstimate) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto v = rademacher(24, seed);
    for (const double x : {1.0 / 64, 1.0 / 16, 1.0 / 4}) {
      const auto m = m_functional_bounds(spectrum(v, 128), x);
      const double fine = fine_grid_m(v, x, 1 << 15);
      EXPECT_LE(m.lower, fine + 1e-4) << "seed " << seed << " x " << x;
      EXPECT_GE(m.upper, fine - 1e-4) << "seed " << seed << " x " << x;
    }
  }
}

TEST(MFunctional, WidthShrinksWithGrid) {
  const auto v = rademacher(32, 17);
  double previous = 0.0;
  for (std::size_t grid = 256; grid <= 8192; grid *= 2) {
    const auto m = m_functional_bounds(spectrum(v, grid), 0.1);
    const double width = m.upper - m.lower;
    ASSERT_LE(m.lower, m.upper);
    if (previous > 0.0) {
      const double ratio = previous / width;
      EXPECT_GE(ratio, 0.5) << "grid " << grid;
      EXPECT_LE(ratio, 8.0) << "grid " << grid;
    }
    previous = width;
  }
  EXPECT_LT(previous, 1e-2);
}

TEST(MFunctional, MonotoneAndAboveAverage) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const CoefficientVector v(trial % 2 ? oracle::random_signs(rng, n) : oracle::random_complex(rng, n));
    const std::size_t grid = 1024;
    const auto sg = spectrum(v, grid);
    std::vector<double> xs = {0.01, 0.05, 0.1, 0.2, 0.3, 0.5, 0.8, 1.0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto mi = m_functional_bounds(sg, xs[i]);
      EXPECT_GE(mi.lower, xs[i] - 1.0 / double(grid));
      EXPECT_LE(mi.lower, mi.upper);
      for (std::size_t j = i; j < xs.size(); ++j) {
        EXPECT_LE(mi.lower, m_functional_bounds(sg, xs[j]).upper);
      }
    }
  }
}

TEST(LemmaCheck, Preconditions) {
  EXPECT_THROW(lemma_check(ones(2), {2, 2, 1.0, 0}), InvalidParameter);
  EXPECT_THROW(lemma_check(ones(2), {2, 2, 0.5, 0}), InvalidParameter);
  EXPECT_THROW(lemma_check(ones(2), {3, 2, 2.0, 0}), InvalidDimension);
  EXPECT_THROW(lemma_check(ones(2), {2, 0, 2.0, 0}), InvalidParameter);
}

TEST(LemmaCheck, TrivialWhenRightSideNegative) {
  // Q^2/A = 100/2 < 6 pi N A = 6 pi 10 2
  const auto r = lemma_check(rademacher(10, 1), {10, 10, 2.0, 0});
  EXPECT_LE(r.rhs_conservative, 0.0);
  EXPECT_TRUE(r.holds);
}

TEST(LemmaCheck, PairOrderTwo) {
  const auto r = lemma_check(ones(2), {2, 2, 1.5, 0});
  EXPECT_NEAR(r.lhs, 4.0, 1e-12);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.slack, r.lhs - r.rhs_conservative, 1e-12);
  EXPECT_DOUBLE_EQ(r.delta, 1.5 / 4.0);
  EXPECT_TRUE(r.delta_below_half);
  EXPECT_EQ(r.grid_size, 4096u);
}

TEST(LemmaCheck, DeltaFlag) {
  const auto r = lemma_check(ones(4), {4, 2, 3.0, 0});
  EXPECT_FALSE(r.delta_below_half);
  EXPECT_TRUE(r.holds);
}

TEST(LemmaCheck, RademacherN64Q256) {
  const auto r = lemma_check(rademacher(64, 1), {64, 256, 4.0, 0});
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.rhs_conservative, 0.0);  // nontrivial instance
  EXPECT_LE(r.m_lower, r.m_upper);
}

TEST(LemmaCheck, SoundOnRandomConfigurations) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> a_dist(1.0, 16.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 256;
    const auto q_max = static_cast<std::int64_t>(1 + rng() % 512);
    double a_param = a_dist(rng);
    if (a_param <= 1.0) a_param = 1.5;
    const auto kind = trial % 2 ? EnsembleKind::kRademacher : EnsembleKind::kSteinhaus;
    const auto v = make_ensemble({kind, n, rng(), {}});
    const auto r = lemma_check(v, {n, q_max, a_param, 0});
    ASSERT_TRUE(r.holds) << "N=" << n << " Q=" << q_max << " A=" << a_param << " slack=" << r.slack;
  }
}

TEST(UpperSieve, SmallCases) {
  EXPECT_TRUE(upper_sieve_check(ones(2), 2));
  EXPECT_DOUBLE_EQ(upper_sieve_bound(ones(2), 2), 12.0);
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_TRUE(upper_sieve_check(ones(n), 1));
}

TEST(UpperSieve, RademacherSamples) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(upper_sieve_check(rademacher(128, seed), 32)) << "seed " << seed;
  }
}

TEST(CauchySchwarz, SmallCases) {
  EXPECT_TRUE(cauchy_schwarz_check(ones(1), 8));
  EXPECT_TRUE(cauchy_schwarz_check(ones(2), 4096));
  EXPECT_LT(integral_SSprime(ones(2), 4096), 0.9 * cauchy_schwarz_bound(ones(2)));
}

TEST(CauchySchwarz, RademacherSamples) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 128;
    EXPECT_TRUE(cauchy_schwarz_check(rademacher(n, seed), default_grid_size(n)));
  }
}

TEST(TheoremMonteCarlo, HugeEpsilonNeverSucceeds) {
  // threshold eps Q^2 N > (N + Q^2) N whenever eps > 1 + N/Q^2.
  TrialConfig cfg{16, 1, 100.0, 20, 3, EnsembleKind::kRademacher, 1};
  EXPECT_EQ(theorem_monte_carlo(cfg).success_fraction, 0.0);
}

TEST(TheoremMonteCarlo, Preconditions) {
  EXPECT_THROW(theorem_monte_carlo({16, 4, 0.0, 10, 1, EnsembleKind::kRademacher, 1}), InvalidParameter);
  EXPECT_THROW(theorem_monte_carlo({16, 4, 0.1, 0, 1, EnsembleKind::kRademacher, 1}), InvalidParameter);
  EXPECT_THROW(theorem_monte_carlo({16, 4, 0.1, 10, 1, EnsembleKind::kFixed, 1}), InvalidParameter);
}

TEST(TheoremMonteCarlo, DeterministicAndThreadIndependent) {
  TrialConfig cfg{64, 24, 0.05, 40, 7, EnsembleKind::kRademacher, 1};
  const auto a = theorem_monte_carlo(cfg);
  const auto b = theorem_monte_carlo(cfg);
  cfg.threads = 4;
  const auto c = theorem_monte_carlo(cfg);
  ASSERT_EQ(a.trials.size(), 40u);
  for (std::size_t t = 0; t < a.trials.size(); ++t) {
    EXPECT_EQ(a.trials[t].lhs, b.trials[t].lhs);
    EXPECT_EQ(a.trials[t].lhs, c.trials[t].lhs);
  }
  EXPECT_EQ(a.success_fraction, c.success_fraction);
  EXPECT_DOUBLE_EQ(a.trials[0].threshold, 0.05 * 24 * 24 * 64);
}

TEST(ErSweep, OrderOneRatioAtMostOne) {
  SweepConfig cfg;
  cfg.n_list = {8, 32, 128};
  cfg.rule.kind = QRule::Kind::kFixed;
  cfg.rule.fixed_q = 1;
  cfg.trials = 20;
  for (const auto& row : er_sweep(cfg).rows) {
    EXPECT_EQ(row.q_max, 1);
    EXPECT_LE(row.max_ratio, 1.0 + 1e-12);
  }
}

TEST(ErSweep, QRules) {
  QRule rule;
  rule.kind = QRule::Kind::kSqrtLog;
  EXPECT_EQ(rule.q_for(64), 34);   // 8 ln 64 = 33.27
  EXPECT_EQ(rule.q_for(256), 89);  // 16 ln 256 = 88.72
  rule.kind = QRule::Kind::kSqrt;
  EXPECT_EQ(rule.q_for(64), 8);
  EXPECT_EQ(rule.q_for(65), 9);
  EXPECT_EQ(parse_q_rule(to_string(QRule::Kind::kSqrtLog)), QRule::Kind::kSqrtLog);
  EXPECT_THROW(parse_q_rule("cube"), InvalidParameter);
}

TEST(ErSweep, Deterministic) {
  SweepConfig cfg;
  cfg.n_list = {16, 64};
  cfg.trials = 10;
  const auto a = er_sweep(cfg);
  cfg.threads = 3;
  const auto b = er_sweep(cfg);
  ASSERT_EQ(a.rows.size(), 2u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].mean_ratio, b.rows[i].mean_ratio);
    EXPECT_EQ(a.rows[i].stderr_ratio, b.rows[i].stderr_ratio);
  }
}

TEST(ExpectedM, FullMeasureIsVacuous) {
  ExpectationConfig cfg;
  cfg.n = 32;
  cfg.x = 1.0;
  cfg.trials = 10;
  const auto r = expected_M_check(cfg);
  for (const auto& m : r.trials) EXPECT_EQ(m.lower, 1.0);
  EXPECT_GT(r.expectation_bound, 1.0);
  EXPECT_EQ(r.tail_fraction, 1.0);
}

TEST(ExpectedM, Preconditions) {
  ExpectationConfig cfg;
  cfg.x = 0.0;
  EXPECT_THROW(expected_M_check(cfg), InvalidParameter);
  cfg.x = 1.5;
  EXPECT_THROW(expected_M_check(cfg), InvalidParameter);
}

TEST(FourthMomentEnsemble, SmallScaleLaw) {
  FourthMomentConfig cfg{16, 4000, 5, EnsembleKind::kRademacher, 1};
  const auto r = fourth_moment_ensemble(cfg);
  EXPECT_EQ(r.expected, 496.0);
  EXPECT_LE(std::abs(r.mean - r.expected), 5.0 * r.stderr_mean);
  cfg.kind = EnsembleKind::kSteinhaus;
  const auto s = fourth_moment_ensemble(cfg);
  EXPECT_LE(std::abs(s.mean - s.expected), 5.0 * s.stderr_mean);
  cfg.kind = EnsembleKind::kFixed;
  EXPECT_THROW(fourth_moment_ensemble(cfg), InvalidParameter);
}

}  // namespace
}  // namespace largesieve
