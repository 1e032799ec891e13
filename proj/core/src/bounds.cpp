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

#include "largesieve/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "largesieve/error.hpp"
#include "largesieve/parallel.hpp"

namespace largesieve {
namespace {

constexpr double kPi = std::numbers::pi;

struct MeanStderr {
  double mean = 0.0;
  double stderr_mean = 0.0;
};

MeanStderr mean_and_stderr(const std::vector<double>& xs) {
  MeanStderr out;
  if (xs.empty()) return out;
  double sum = 0.0;
  for (const double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (const double x : xs) ss += (x - out.mean) * (x - out.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    out.stderr_mean = std::sqrt(var / static_cast<double>(xs.size()));
  }
  return out;
}

// Fill floor(xL) whole cells and the fraction xL - floor(xL) of the next one,
// taking cells in decreasing order of weight. Sorts `cells` in place.
double best_fill(std::vector<double>& cells, double x) {
  const auto grid = static_cast<double>(cells.size());
  const double target = x * grid;
  auto whole = static_cast<std::size_t>(std::floor(target));
  whole = std::min(whole, cells.size());
  const double part = whole < cells.size() ? target - static_cast<double>(whole) : 0.0;
  const std::size_t needed = std::min(cells.size(), whole + 1);
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(needed),
                    cells.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < whole; ++i) sum += cells[i];
  if (part > 0.0) sum += part * cells[whole];
  return sum / grid;
}

void require_trials(std::size_t trials) {
  if (trials < 1) throw InvalidParameter("trial count must be >= 1");
}

CoefficientVector draw(EnsembleKind kind, std::size_t n, std::uint64_t seed,
                       std::size_t index) {
  if (kind == EnsembleKind::kFixed) {
    throw InvalidParameter("Monte Carlo experiments need a random ensemble");
  }
  return make_ensemble({kind, n, trial_seed(seed, index), {}});
}

}  // namespace

std::size_t default_grid_size(std::size_t n) {
  return std::max<std::size_t>(4096, Dft::next_power_of_two(kSSprimeOversampling * n));
}

MBounds m_functional_bounds(const SpectrumGrid& sg, double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw InvalidParameter("M(x) needs 0 < x <= 1, got x = " + std::to_string(x));
  }
  const auto f = sg.values();
  const std::size_t grid = f.size();
  const double total = sg.mean();
  if (!(total > 0.0)) throw InvalidParameter("M(x) is undefined for S identically 0");

  const double degree = static_cast<double>(sg.n() - 1);
  const double ratio = kPi * degree / static_cast<double>(grid);
  const double c = 0.5 * ratio * ratio;
  if (!(c < 1.0)) {
    throw InvalidResolution("grid of size " + std::to_string(grid) +
                            " is too coarse for degree " + std::to_string(sg.n() - 1));
  }
  const double sample_max = *std::max_element(f.begin(), f.end());
  const double slack = c * sample_max / (1.0 - c);

  std::vector<double> upper_cells(grid);
  std::vector<double> lower_cells(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const double left = f[j];
    const double right = f[(j + 1) % grid];
    upper_cells[j] = std::max(left, right) + slack;
    lower_cells[j] = std::max(0.0, std::min(left, right) - slack);
  }

  MBounds out;
  out.upper = best_fill(upper_cells, x) / total;
  out.lower = best_fill(lower_cells, x) / total;
  out.lower = std::clamp(std::max(out.lower, x), 0.0, 1.0);
  out.upper = std::clamp(std::max(out.upper, out.lower), 0.0, 1.0);
  return out;
}

double LemmaParams::delta() const {
  return a_param / (static_cast<double>(q_max) * static_cast<double>(q_max));
}

LemmaReport lemma_check(const CoefficientVector& v, const LemmaParams& p) {
  if (!(p.a_param > 1.0)) {
    throw InvalidParameter("lemma needs A > 1, got A = " + std::to_string(p.a_param));
  }
  if (p.q_max < 1) throw InvalidParameter("Farey order Q must be >= 1");
  if (p.n != v.size()) {
    throw InvalidDimension("LemmaParams.n = " + std::to_string(p.n) +
                           " but the vector has N = " + std::to_string(v.size()));
  }

  LemmaReport r;
  r.grid_size = p.grid_size == 0 ? default_grid_size(v.size()) : p.grid_size;
  r.delta = p.delta();
  r.delta_below_half = r.delta < 0.5;
  r.lhs = FareyEvaluator(p.q_max).sieve_sum(v);

  const double energy = v.norm_sq();
  if (energy > 0.0) {
    const MBounds m = m_functional_bounds(spectrum(v, r.grid_size), 1.0 / p.a_param);
    r.m_lower = m.lower;
    r.m_upper = m.upper;
  } else {
    r.m_lower = 0.0;
    r.m_upper = 1.0;
  }

  const double q_sq = static_cast<double>(p.q_max) * static_cast<double>(p.q_max);
  const double n = static_cast<double>(v.size());
  r.rhs_conservative =
      (q_sq / p.a_param * (1.0 - r.m_upper) - 6.0 * kPi * n * p.a_param) * energy;
  r.slack = r.lhs - r.rhs_conservative;
  r.holds = r.lhs >= r.rhs_conservative;
  return r;
}

double upper_sieve_bound(const CoefficientVector& v, std::int64_t q_max) {
  const double q = static_cast<double>(q_max);
  return (static_cast<double>(v.size()) + q * q) * v.norm_sq();
}

bool upper_sieve_check(const CoefficientVector& v, std::int64_t q_max) {
  const double lhs = FareyEvaluator(q_max).sieve_sum(v);
  return lhs <= upper_sieve_bound(v, q_max) * (1.0 + 1e-9);
}

double cauchy_schwarz_bound(const CoefficientVector& v) {
  return 2.0 * kPi * static_cast<double>(v.size()) * v.norm_sq();
}

bool cauchy_schwarz_check(const CoefficientVector& v, std::size_t grid_size) {
  return integral_SSprime(v, grid_size) <= cauchy_schwarz_bound(v) * (1.0 + 1e-6);
}

TheoremReport theorem_monte_carlo(const TrialConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw InvalidParameter("epsilon must be > 0");
  require_trials(cfg.trials);
  if (cfg.n < 1) throw InvalidDimension("n must be >= 1");

  const FareyEvaluator evaluator(cfg.q_max);
  // Q^2 is formed in integers before the single conversion.
  const auto q_sq = static_cast<double>(cfg.q_max * cfg.q_max);

  TheoremReport report;
  report.trials.resize(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
    const CoefficientVector v = draw(cfg.kind, cfg.n, cfg.seed, t);
    TheoremTrial& trial = report.trials[t];
    trial.lhs = evaluator.sieve_sum(v);
    trial.norm_sq = v.norm_sq();
    trial.threshold = cfg.epsilon * q_sq * trial.norm_sq;
    trial.success = trial.lhs >= trial.threshold;
  });
  for (const TheoremTrial& t : report.trials) report.successes += t.success ? 1 : 0;
  report.success_fraction =
      static_cast<double>(report.successes) / static_cast<double>(cfg.trials);
  return report;
}

std::int64_t QRule::q_for(std::size_t n) const {
  const double root = std::sqrt(static_cast<double>(n));
  double q = 0.0;
  switch (kind) {
    case Kind::kFixed:
      q = static_cast<double>(fixed_q);
      break;
    case Kind::kSqrt:
      q = std::ceil(scale * root);
      break;
    case Kind::kSqrtLog:
      q = std::ceil(scale * root * std::log(static_cast<double>(n)));
      break;
  }
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(q));
}

std::string_view to_string(QRule::Kind kind) {
  switch (kind) {
    case QRule::Kind::kFixed:
      return "fixed";
    case QRule::Kind::kSqrt:
      return "sqrt";
    case QRule::Kind::kSqrtLog:
      return "sqrtlog";
  }
  return "unknown";
}

QRule::Kind parse_q_rule(std::string_view name) {
  if (name == "fixed") return QRule::Kind::kFixed;
  if (name == "sqrt") return QRule::Kind::kSqrt;
  if (name == "sqrtlog") return QRule::Kind::kSqrtLog;
  throw InvalidParameter("unknown Q rule '" + std::string(name) + "'");
}

SweepReport er_sweep(const SweepConfig& cfg) {
  require_trials(cfg.trials);
  if (cfg.rule.kind == QRule::Kind::kFixed && cfg.rule.fixed_q < 1) {
    throw InvalidParameter("fixed Q must be >= 1");
  }
  if (!(cfg.rule.scale > 0.0)) throw InvalidParameter("Q rule scale must be > 0");

  SweepReport report;
  for (const std::size_t n : cfg.n_list) {
    if (n < 1) throw InvalidDimension("sweep sizes must be >= 1");
    SweepRow row;
    row.n = n;
    row.q_max = cfg.rule.q_for(n);
    row.trials = cfg.trials;

    const FareyEvaluator evaluator(row.q_max);
    const std::uint64_t row_seed = trial_seed(cfg.seed, n);
    std::vector<double> ratios(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
      const CoefficientVector v = draw(cfg.kind, n, row_seed, t);
      ratios[t] = evaluator.sieve_sum(v) / (static_cast<double>(n) * v.norm_sq());
    });
    const MeanStderr stats = mean_and_stderr(ratios);
    row.mean_ratio = stats.mean;
    row.stderr_ratio = stats.stderr_mean;
    row.min_ratio = *std::min_element(ratios.begin(), ratios.end());
    row.max_ratio = *std::max_element(ratios.begin(), ratios.end());
    report.rows.push_back(row);
  }
  return report;
}

ExpectationReport expected_M_check(const ExpectationConfig& cfg) {
  if (!(cfg.x > 0.0 && cfg.x <= 1.0)) {
    throw InvalidParameter("M(x) needs 0 < x <= 1, got x = " + std::to_string(cfg.x));
  }
  require_trials(cfg.trials);
  if (cfg.n < 1) throw InvalidDimension("n must be >= 1");

  ExpectationReport report;
  report.grid_size = cfg.grid_size == 0 ? default_grid_size(cfg.n) : cfg.grid_size;
  report.trials.resize(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
    const CoefficientVector v = draw(cfg.kind, cfg.n, cfg.seed, t);
    report.trials[t] = m_functional_bounds(spectrum(v, report.grid_size), cfg.x);
  });

  std::vector<double> lowers;
  lowers.reserve(cfg.trials);
  std::size_t above_half = 0;
  for (const MBounds& m : report.trials) {
    lowers.push_back(m.lower);
    if (m.lower > 0.5) ++above_half;
  }
  const MeanStderr stats = mean_and_stderr(lowers);
  report.mean_lower = stats.mean;
  report.stderr_lower = stats.stderr_mean;
  report.expectation_bound = std::sqrt(2.0 * cfg.x);
  report.tail_fraction = static_cast<double>(above_half) / static_cast<double>(cfg.trials);
  report.tail_bound = std::sqrt(8.0 * cfg.x);
  return report;
}

FourthMomentReport fourth_moment_ensemble(const FourthMomentConfig& cfg) {
  require_trials(cfg.trials);
  if (cfg.n < 1) throw InvalidDimension("n must be >= 1");

  FourthMomentReport report;
  report.values.resize(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
    report.values[t] = fourth_moment_exact(draw(cfg.kind, cfg.n, cfg.seed, t));
  });
  const MeanStderr stats = mean_and_stderr(report.values);
  report.mean = stats.mean;
  report.stderr_mean = stats.stderr_mean;
  const double n = static_cast<double>(cfg.n);
  report.expected = 2.0 * n * n - n;
  return report;
}

}  // namespace largesieve
