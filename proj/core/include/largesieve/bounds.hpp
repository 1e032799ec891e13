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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "largesieve/coeffs.hpp"
#include "largesieve/expsum.hpp"

namespace largesieve {

// max(4096, smallest power of two >= 8N). Large enough for both the spectrum
// and the |S S'| quadrature floors.
std::size_t default_grid_size(std::size_t n);

// ---------------------------------------------------------------------------
// M(x) = sup over measurable m with |m| = x of int_m |S|^2 / int_0^1 |S|^2.
// ---------------------------------------------------------------------------

struct MBounds {
  double lower = 0.0;
  double upper = 1.0;
};

// Rigorous bracket lower <= M(x) <= upper from grid samples f_j = |S(j/L)|^2.
//
// f = |S|^2 is a real trigonometric polynomial of degree d = N - 1, so
// Bernstein's inequality applied twice gives sup|f''| <= (2 pi d)^2 sup f.
// With c = (pi d / L)^2 / 2:
//   * on a cell [j/L, (j+1)/L], f differs from the chord through its
//     endpoint samples by at most (h^2 / 8) sup|f''| = c sup f;
//   * at a maximiser f' = 0 and some sample lies within h/2, hence
//     max_j f_j >= (1 - c) sup f.
// Every cell therefore carries a proven interval [l_j, u_j] with
// slack = c * max_j f_j / (1 - c) around its endpoint samples. The best set of
// measure x fills floor(xL) whole cells and a fraction of one more, so the
// sum of the largest u_j over that many cells bounds M(x) from above and the
// same sum of the largest l_j is attained by an actual set. The lower bound is
// further raised to x, since rotating any set of measure x averages to x.
// Both values are clamped to [0, 1].
//
// Throws InvalidParameter unless 0 < x <= 1 or when the spectrum has zero
// energy, and InvalidResolution when L is too coarse for c < 1.
MBounds m_functional_bounds(const SpectrumGrid& sg, double x);

// ---------------------------------------------------------------------------
// The lower-bound lemma
//   sum_{q<=Q} sum_{(a,q)=1} |S(a/q)|^2
//     >= (Q^2/A (1 - M(1/A)) - 6 pi N A) sum |a_n|^2,   A > 1.
// ---------------------------------------------------------------------------

struct LemmaParams {
  std::size_t n = 0;
  std::int64_t q_max = 1;
  double a_param = 4.0;
  std::size_t grid_size = 0;  // 0 selects default_grid_size(n)

  // delta = A / Q^2; the argument assumes delta < 1/2, and outside that range
  // the right side is negative.
  double delta() const;
};

struct LemmaReport {
  double lhs = 0.0;
  double m_lower = 0.0;
  double m_upper = 1.0;
  double rhs_conservative = 0.0;
  double slack = 0.0;  // lhs - rhs_conservative
  bool holds = false;
  double delta = 0.0;
  bool delta_below_half = false;
  std::size_t grid_size = 0;
};

// rhs_conservative uses the upper estimate of M(1/A), so a true lemma can
// only ever report holds = true. Throws InvalidParameter when A <= 1 or
// Q < 1, and InvalidDimension when p.n does not match v.
LemmaReport lemma_check(const CoefficientVector& v, const LemmaParams& p);

// (N + Q^2) sum |a_n|^2.
double upper_sieve_bound(const CoefficientVector& v, std::int64_t q_max);
// sieve_lhs <= (N + Q^2) sum |a_n|^2 (1 + 1e-9).
bool upper_sieve_check(const CoefficientVector& v, std::int64_t q_max);

// 2 pi N sum |a_n|^2, the bound on int |S S'| the Cauchy-Schwarz step yields.
double cauchy_schwarz_bound(const CoefficientVector& v);
// integral_SSprime(v, L) <= 2 pi N sum |a_n|^2 (1 + 1e-6).
bool cauchy_schwarz_check(const CoefficientVector& v, std::size_t grid_size);

// ---------------------------------------------------------------------------
// Monte Carlo experiments. Trial t draws its vector from
// trial_seed(seed, t); results do not depend on the thread count.
// ---------------------------------------------------------------------------

struct TrialConfig {
  std::size_t n = 256;
  std::int64_t q_max = 128;
  double epsilon = 0.01;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  EnsembleKind kind = EnsembleKind::kRademacher;
  std::size_t threads = 1;
};

struct TheoremTrial {
  double lhs = 0.0;
  double norm_sq = 0.0;
  double threshold = 0.0;  // epsilon Q^2 sum |a_n|^2
  bool success = false;    // lhs >= threshold
};

struct TheoremReport {
  std::vector<TheoremTrial> trials;
  std::size_t successes = 0;
  double success_fraction = 0.0;
};

// Throws InvalidParameter unless epsilon > 0, trials >= 1, Q >= 1, n >= 1.
TheoremReport theorem_monte_carlo(const TrialConfig& cfg);

// How Q is derived from N in a sweep.
struct QRule {
  enum class Kind { kFixed, kSqrt, kSqrtLog };
  Kind kind = Kind::kSqrtLog;
  double scale = 1.0;       // c in ceil(c sqrt N) or ceil(c sqrt N log N)
  std::int64_t fixed_q = 1;  // for kFixed

  std::int64_t q_for(std::size_t n) const;
};

std::string_view to_string(QRule::Kind kind);
QRule::Kind parse_q_rule(std::string_view name);  // "fixed", "sqrt", "sqrtlog"

struct SweepConfig {
  std::vector<std::size_t> n_list = {64, 256, 1024};
  QRule rule;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  EnsembleKind kind = EnsembleKind::kRademacher;
  std::size_t threads = 1;
};

// ratio = sieve_lhs / (N sum |a_n|^2), the quantity a bound of the form
// "sieve sum << N sum |a_n|^2" would keep bounded.
struct SweepRow {
  std::size_t n = 0;
  std::int64_t q_max = 0;
  std::size_t trials = 0;
  double mean_ratio = 0.0;
  double stderr_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
};

SweepReport er_sweep(const SweepConfig& cfg);

struct ExpectationConfig {
  std::size_t n = 128;
  double x = 1.0 / 16.0;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  std::size_t grid_size = 0;  // 0 selects default_grid_size(n)
  EnsembleKind kind = EnsembleKind::kRademacher;
  std::size_t threads = 1;
};

struct ExpectationReport {
  std::vector<MBounds> trials;
  std::size_t grid_size = 0;
  double mean_lower = 0.0;
  double stderr_lower = 0.0;
  double expectation_bound = 0.0;  // sqrt(2x)
  double tail_fraction = 0.0;      // fraction of trials with lower > 1/2
  double tail_bound = 0.0;         // sqrt(8x)
};

// Monte Carlo of the lower M estimate against E M(x) <= sqrt(2x) and
// P(M(x) > 1/2) <= sqrt(8x). Throws InvalidParameter unless 0 < x <= 1.
ExpectationReport expected_M_check(const ExpectationConfig& cfg);

struct FourthMomentConfig {
  std::size_t n = 64;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  EnsembleKind kind = EnsembleKind::kRademacher;
  std::size_t threads = 1;
};

struct FourthMomentReport {
  std::vector<double> values;  // int |S|^4 per trial
  double mean = 0.0;
  double stderr_mean = 0.0;
  double expected = 0.0;  // 2N^2 - N
};

// Throws InvalidParameter for the fixed ensemble, which has no law.
FourthMomentReport fourth_moment_ensemble(const FourthMomentConfig& cfg);

}  // namespace largesieve
