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
#include <span>
#include <vector>

#include "largesieve/coeffs.hpp"
#include "largesieve/dft.hpp"
#include "largesieve/farey.hpp"

namespace largesieve {

// S(alpha) = sum_{n <= N} a_n e(n alpha) by direct summation; alpha is
// taken mod 1.
Complex eval_direct(const CoefficientVector& v, double alpha);

// S'(alpha) = sum_{n <= N} 2 pi i n a_n e(n alpha).
Complex eval_derivative(const CoefficientVector& v, double alpha);

struct FareyValue {
  FareyFraction fraction;
  Complex value;
};

// S(a/q) at every Farey fraction of order Q, stored by denominator and then
// numerator: 1/1, 1/2, 1/3, 2/3, 1/4, 3/4, ...
class FareyEvaluation {
 public:
  FareyEvaluation(std::int64_t q_max, std::vector<FareyValue> values);

  std::int64_t q_max() const { return q_max_; }
  std::size_t size() const { return values_.size(); }
  std::span<const FareyValue> values() const { return values_; }
  // Throws InvalidParameter if f is not a fraction of this order.
  Complex at(const FareyFraction& f) const;

 private:
  std::int64_t q_max_;
  std::vector<FareyValue> values_;
  std::vector<std::size_t> offset_;  // first index of denominator q
};

// Reusable evaluator for one order Q. For each q <= Q the coefficients are
// folded into residue classes b_r = sum_{n = r mod q} a_n and one length-q
// transform B_k = sum_r b_r e(rk/q) yields S(a/q) = B_{a mod q} for every a.
// Cost O(NQ + Q^2 log Q) against O(NQ^2) for direct evaluation.
class FareyEvaluator {
 public:
  explicit FareyEvaluator(std::int64_t q_max);

  std::int64_t q_max() const { return q_max_; }
  FareyEvaluation evaluate(const CoefficientVector& v) const;
  // sum_{q <= Q} sum_{(a,q)=1} |S(a/q)|^2 without materialising the values.
  double sieve_sum(const CoefficientVector& v) const;

 private:
  template <typename Visitor>
  void visit(const CoefficientVector& v, Visitor&& visitor) const;

  std::int64_t q_max_;
  std::vector<Dft> plans_;                          // plans_[q - 1]
  std::vector<std::vector<std::int64_t>> reduced_;  // reduced_[q - 1]
};

FareyEvaluation eval_farey_all(const CoefficientVector& v, std::int64_t q_max);

// Left side of the large sieve: sum of |S(a/q)|^2 over the evaluation.
double sieve_lhs(const FareyEvaluation& fe);

// |S(j/L)|^2 for j = 0..L-1.
class SpectrumGrid {
 public:
  SpectrumGrid(std::size_t n, std::vector<double> values);

  std::size_t n() const { return n_; }
  std::size_t grid_size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  // Equals sum |a_n|^2 (discrete Parseval) whenever L > N.
  double mean() const;

 private:
  std::size_t n_;
  std::vector<double> values_;
};

// Grid size floors. |S|^2 has degree N - 1, so L >= 4N leaves a wide
// margin for the cell bounds in m_functional_bounds; |S S'| is not a
// trigonometric polynomial and gets the larger floor.
inline constexpr std::size_t kSpectrumOversampling = 4;
inline constexpr std::size_t kSSprimeOversampling = 8;

// One zero-padded length-L transform. Throws InvalidResolution unless L is
// a power of two with L >= 4N.
SpectrumGrid spectrum(const CoefficientVector& v, std::size_t grid_size);

// rho(k) = sum_n a_{n+k} conj(a_n) for k = 0..N-1; rho(-k) = conj(rho(k)).
std::vector<Complex> autocorrelation(const CoefficientVector& v);

// int_0^1 |S(u)|^4 du = sum_{|k| < N} |rho(k)|^2, exact up to rounding.
double fourth_moment_exact(const CoefficientVector& v);

// Rectangle-rule estimate (1/L) sum_j |S(j/L) S'(j/L)| of int_0^1 |S S'| du.
// Throws InvalidResolution unless L is a power of two with L >= 8N.
double integral_SSprime(const CoefficientVector& v, std::size_t grid_size);

}  // namespace largesieve
