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

#include "largesieve/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "largesieve/error.hpp"

namespace largesieve {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e(n t) with the product reduced mod 1 before scaling by 2 pi.
Complex unit_phase(std::size_t n, double t) {
  double phase = static_cast<double>(n) * t;
  phase -= std::floor(phase);
  return std::polar(1.0, kTwoPi * phase);
}

void require_grid(std::size_t grid_size, std::size_t n, std::size_t oversampling,
                  const char* what) {
  if (!Dft::is_power_of_two(grid_size) || grid_size < oversampling * n) {
    throw InvalidResolution(std::string(what) + " grid size " + std::to_string(grid_size) +
                            " must be a power of two >= " + std::to_string(oversampling) +
                            "N = " + std::to_string(oversampling * n));
  }
}

// S(j/L) for j < L, with a_n optionally weighted by w(n).
template <typename Weight>
std::vector<Complex> grid_samples(const CoefficientVector& v, std::size_t grid_size,
                                  Weight weight) {
  std::vector<Complex> buf(grid_size, Complex(0.0));
  const auto entries = v.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::size_t n = i + 1;
    buf[n % grid_size] += weight(n) * entries[i];
  }
  Dft(grid_size).backward(buf, buf);
  return buf;
}

}  // namespace

Complex eval_direct(const CoefficientVector& v, double alpha) {
  const double t = alpha - std::floor(alpha);
  const auto entries = v.entries();
  Complex sum(0.0);
  for (std::size_t i = 0; i < entries.size(); ++i) sum += entries[i] * unit_phase(i + 1, t);
  return sum;
}

Complex eval_derivative(const CoefficientVector& v, double alpha) {
  const double t = alpha - std::floor(alpha);
  const auto entries = v.entries();
  Complex sum(0.0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    sum += n * entries[i] * unit_phase(i + 1, t);
  }
  return Complex(0.0, kTwoPi) * sum;
}

FareyEvaluation::FareyEvaluation(std::int64_t q_max, std::vector<FareyValue> values)
    : q_max_(q_max), values_(std::move(values)) {
  if (q_max_ < 1) throw InvalidParameter("Farey order Q must be >= 1");
  offset_.assign(static_cast<std::size_t>(q_max_) + 2, values_.size());
  for (std::size_t i = values_.size(); i-- > 0;) {
    offset_[static_cast<std::size_t>(values_[i].fraction.q)] = i;
  }
  for (std::size_t q = offset_.size() - 1; q-- > 1;) {
    offset_[q] = std::min(offset_[q], offset_[q + 1]);
  }
}

Complex FareyEvaluation::at(const FareyFraction& f) const {
  if (f.q < 1 || f.q > q_max_) {
    throw InvalidParameter("fraction " + std::to_string(f.a) + "/" + std::to_string(f.q) +
                           " is outside order " + std::to_string(q_max_));
  }
  const auto q = static_cast<std::size_t>(f.q);
  const auto first = values_.begin() + static_cast<std::ptrdiff_t>(offset_[q]);
  const auto last = values_.begin() + static_cast<std::ptrdiff_t>(offset_[q + 1]);
  const auto it = std::lower_bound(first, last, f.a, [](const FareyValue& fv, std::int64_t a) {
    return fv.fraction.a < a;
  });
  if (it == last || it->fraction.a != f.a) {
    throw InvalidParameter("fraction " + std::to_string(f.a) + "/" + std::to_string(f.q) +
                           " is not reduced");
  }
  return it->value;
}

FareyEvaluator::FareyEvaluator(std::int64_t q_max) : q_max_(q_max) {
  if (q_max_ < 1) throw InvalidParameter("Farey order Q must be >= 1");
  plans_.reserve(static_cast<std::size_t>(q_max_));
  reduced_.resize(static_cast<std::size_t>(q_max_));
  for (std::int64_t q = 1; q <= q_max_; ++q) {
    plans_.emplace_back(static_cast<std::size_t>(q));
    auto& list = reduced_[static_cast<std::size_t>(q - 1)];
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) == 1) list.push_back(a);
    }
  }
}

template <typename Visitor>
void FareyEvaluator::visit(const CoefficientVector& v, Visitor&& visitor) const {
  const auto entries = v.entries();
  std::vector<Complex> folded;
  for (std::int64_t q = 1; q <= q_max_; ++q) {
    const auto len = static_cast<std::size_t>(q);
    folded.assign(len, Complex(0.0));
    std::size_t r = 1 % len;
    for (const Complex& c : entries) {
      folded[r] += c;
      if (++r == len) r = 0;
    }
    plans_[len - 1].backward(folded, folded);
    for (const std::int64_t a : reduced_[len - 1]) {
      visitor(FareyFraction{a, q}, folded[static_cast<std::size_t>(a % q)]);
    }
  }
}

FareyEvaluation FareyEvaluator::evaluate(const CoefficientVector& v) const {
  std::vector<FareyValue> values;
  values.reserve(static_cast<std::size_t>(farey_count(q_max_)));
  visit(v, [&](const FareyFraction& f, const Complex& s) { values.push_back({f, s}); });
  return FareyEvaluation(q_max_, std::move(values));
}

double FareyEvaluator::sieve_sum(const CoefficientVector& v) const {
  double total = 0.0;
  visit(v, [&](const FareyFraction&, const Complex& s) { total += std::norm(s); });
  return total;
}

FareyEvaluation eval_farey_all(const CoefficientVector& v, std::int64_t q_max) {
  return FareyEvaluator(q_max).evaluate(v);
}

double sieve_lhs(const FareyEvaluation& fe) {
  double total = 0.0;
  for (const FareyValue& fv : fe.values()) total += std::norm(fv.value);
  return total;
}

SpectrumGrid::SpectrumGrid(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n_ == 0) throw InvalidDimension("spectrum of an empty coefficient vector");
  if (values_.empty()) throw InvalidResolution("spectrum grid must be nonempty");
  for (const double x : values_) {
    if (!(x >= 0.0)) throw InvalidParameter("spectrum values must be nonnegative");
  }
}

double SpectrumGrid::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

SpectrumGrid spectrum(const CoefficientVector& v, std::size_t grid_size) {
  require_grid(grid_size, v.size(), kSpectrumOversampling, "spectrum");
  const auto samples = grid_samples(v, grid_size, [](std::size_t) { return 1.0; });
  std::vector<double> values(grid_size);
  std::transform(samples.begin(), samples.end(), values.begin(),
                 [](const Complex& s) { return std::norm(s); });
  return SpectrumGrid(v.size(), std::move(values));
}

std::vector<Complex> autocorrelation(const CoefficientVector& v) {
  const auto a = v.entries();
  const std::size_t n = a.size();
  std::vector<Complex> rho(n, Complex(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc(0.0);
    for (std::size_t i = 0; i + k < n; ++i) acc += a[i + k] * std::conj(a[i]);
    rho[k] = acc;
  }
  return rho;
}

double fourth_moment_exact(const CoefficientVector& v) {
  const auto rho = autocorrelation(v);
  double tail = 0.0;
  for (std::size_t k = 1; k < rho.size(); ++k) tail += std::norm(rho[k]);
  return std::norm(rho[0]) + 2.0 * tail;
}

double integral_SSprime(const CoefficientVector& v, std::size_t grid_size) {
  require_grid(grid_size, v.size(), kSSprimeOversampling, "|S S'| quadrature");
  const auto s = grid_samples(v, grid_size, [](std::size_t) { return 1.0; });
  // The 2 pi i factor of S' is applied to the modulus afterwards.
  const auto ds = grid_samples(v, grid_size,
                               [](std::size_t n) { return static_cast<double>(n); });
  double total = 0.0;
  for (std::size_t j = 0; j < grid_size; ++j) total += std::abs(s[j]) * std::abs(ds[j]);
  return kTwoPi * total / static_cast<double>(grid_size);
}

}  // namespace largesieve
