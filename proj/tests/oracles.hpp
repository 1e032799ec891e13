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

// Brute-force references for the unit and acceptance suites. Nothing here
// calls into the transform or sieve code paths under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "largesieve/coeffs.hpp"
#include "largesieve/farey.hpp"

namespace largesieve::oracle {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// O(n^2) DFT straight from the definition, exponent sign `sign`.
inline std::vector<Complex> naive_dft(const std::vector<Complex>& in, int sign) {
  const std::size_t n = in.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = sign * kTwoPi * static_cast<double>((j * k) % n) /
                           static_cast<double>(n);
      acc += in[j] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return out;
}

// S(a/q) with exact residue reduction of n a mod q.
inline Complex sum_at_fraction(const std::vector<Complex>& a, std::int64_t num,
                               std::int64_t den) {
  Complex acc(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto n = static_cast<std::int64_t>(i + 1);
    const double phase = static_cast<double>((n * num) % den) / static_cast<double>(den);
    acc += a[i] * std::polar(1.0, kTwoPi * phase);
  }
  return acc;
}

// sum over mu1 + mu2 = nu1 + nu2 of a_{nu1} a_{nu2} conj(a_{mu1} a_{mu2}).
inline double fourth_moment_quadruple_sum(const std::vector<Complex>& a) {
  const std::size_t n = a.size();
  Complex acc(0.0);
  for (std::size_t m1 = 0; m1 < n; ++m1)
    for (std::size_t m2 = 0; m2 < n; ++m2)
      for (std::size_t v1 = 0; v1 < n; ++v1)
        for (std::size_t v2 = 0; v2 < n; ++v2)
          if (m1 + m2 == v1 + v2) acc += a[v1] * a[v2] * std::conj(a[m1] * a[m2]);
  return acc.real();
}

// All reduced a/q with q <= Q, 1 <= a <= q, by gcd filtering (unsorted).
inline std::vector<FareyFraction> farey_by_gcd(std::int64_t q_max) {
  std::vector<FareyFraction> out;
  for (std::int64_t q = 1; q <= q_max; ++q)
    for (std::int64_t a = 1; a <= q; ++a)
      if (std::gcd(a, q) == 1) out.push_back({a, q});
  return out;
}

inline std::int64_t totient_sum_by_gcd(std::int64_t q_max) {
  return static_cast<std::int64_t>(farey_by_gcd(q_max).size());
}

// R(u) by testing every Farey fraction with exact circle distance.
inline std::int64_t count_R_exhaustive(const Rational& u, std::int64_t q_max,
                                       const Rational& a_param) {
  const Rational radius = a_param / Rational(q_max * q_max);
  std::int64_t count = 0;
  for (const auto& f : farey_by_gcd(q_max)) {
    if (circle_distance(u, f.to_rational()) <= radius) ++count;
  }
  return count;
}

// Composite Simpson rule on [lo, hi] with `panels` (even) panels.
template <typename F>
double simpson(F f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + i * h);
  return acc * h / 3.0;
}

inline std::vector<Complex> random_signs(std::mt19937_64& rng, std::size_t n) {
  std::vector<Complex> a(n);
  for (auto& c : a) c = (rng() & 1) ? 1.0 : -1.0;
  return a;
}

inline std::vector<Complex> random_complex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> a(n);
  for (auto& c : a) c = Complex(dist(rng), dist(rng));
  return a;
}

// |got - want| relative to max(|want|, ||a||_2). ||a||_2 is the mean-square
// size of S, so exact zeros of S (common for +-1 coefficients) do not turn
// rounding noise into an unbounded ratio.
inline double relative_error(Complex got, Complex want, double norm_sq) {
  const double scale = std::max({std::abs(want), std::sqrt(norm_sq),
                                 std::numeric_limits<double>::min()});
  return std::abs(got - want) / scale;
}

}  // namespace largesieve::oracle
