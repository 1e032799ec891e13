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

#include "largesieve/dft.hpp"

#include <algorithm>
#include <numbers>
#include <utility>

#include "largesieve/error.hpp"

namespace largesieve {
namespace {

constexpr std::size_t kDirectMaxLength = 32;

// exp(-2 pi i num / den), with num reduced first so the angle stays small.
Complex unit_root(std::size_t num, std::size_t den) {
  const double angle = -2.0 * std::numbers::pi *
                       static_cast<double>(num % den) / static_cast<double>(den);
  return std::polar(1.0, angle);
}

}  // namespace

std::size_t Dft::next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Dft::Dft(std::size_t length) : n_(length) {
  if (n_ == 0) throw InvalidDimension("DFT length must be >= 1");

  if (n_ <= kDirectMaxLength) {
    method_ = Method::kDirect;
  } else if (is_power_of_two(n_)) {
    method_ = Method::kRadix2;
  } else {
    method_ = Method::kBluestein;
  }

  if (method_ != Method::kBluestein) {
    twiddle_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) twiddle_[k] = unit_root(k, n_);
    return;
  }

  // j^2 is reduced modulo 2n before scaling: exp(-pi i j^2/n) has period 2n
  // in j^2, and the reduction keeps the argument below 2 pi.
  const std::size_t two_n = 2 * n_;
  chirp_.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const std::size_t sq = (j * j) % two_n;
    chirp_[j] = unit_root(sq, two_n);
  }

  const std::size_t m = next_power_of_two(2 * n_ - 1);
  inner_ = std::make_unique<Dft>(m);
  kernel_hat_.assign(m, Complex(0.0));
  kernel_hat_[0] = std::conj(chirp_[0]);
  for (std::size_t j = 1; j < n_; ++j) {
    kernel_hat_[j] = std::conj(chirp_[j]);
    kernel_hat_[m - j] = std::conj(chirp_[j]);
  }
  inner_->forward_in_place(kernel_hat_);
}

Dft::~Dft() = default;
Dft::Dft(Dft&&) noexcept = default;
Dft& Dft::operator=(Dft&&) noexcept = default;

void Dft::forward(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != n_ || out.size() != n_) {
    throw InvalidDimension("DFT buffer size does not match plan length");
  }
  if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
  forward_in_place(out);
}

void Dft::backward(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != n_ || out.size() != n_) {
    throw InvalidDimension("DFT buffer size does not match plan length");
  }
  // conj(F(conj(x))) flips the exponent sign.
  for (std::size_t j = 0; j < n_; ++j) out[j] = std::conj(in[j]);
  forward_in_place(out);
  for (Complex& c : out) c = std::conj(c);
}

void Dft::forward_in_place(std::span<Complex> data) const {
  switch (method_) {
    case Method::kDirect: {
      std::vector<Complex> result(n_);
      for (std::size_t k = 0; k < n_; ++k) {
        Complex acc(0.0);
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n_; ++j) {
          acc += data[j] * twiddle_[idx];
          idx += k;
          if (idx >= n_) idx -= n_;
        }
        result[k] = acc;
      }
      std::copy(result.begin(), result.end(), data.begin());
      return;
    }
    case Method::kRadix2:
      radix2_in_place(data);
      return;
    case Method::kBluestein:
      bluestein_in_place(data);
      return;
  }
}

void Dft::radix2_in_place(std::span<Complex> data) const {
  const std::size_t n = n_;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex u = data[start + j];
        const Complex t = data[start + j + half] * twiddle_[j * stride];
        data[start + j] = u + t;
        data[start + j + half] = u - t;
      }
    }
  }
}

void Dft::bluestein_in_place(std::span<Complex> data) const {
  const std::size_t m = inner_->size();
  std::vector<Complex> work(m, Complex(0.0));
  for (std::size_t j = 0; j < n_; ++j) work[j] = data[j] * chirp_[j];
  inner_->forward_in_place(work);
  for (std::size_t k = 0; k < m; ++k) work[k] = std::conj(work[k] * kernel_hat_[k]);
  // Inverse length-m transform as conj(F(conj(.))) / m.
  inner_->forward_in_place(work);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n_; ++k) {
    data[k] = chirp_[k] * std::conj(work[k]) * scale;
  }
}

}  // namespace largesieve
