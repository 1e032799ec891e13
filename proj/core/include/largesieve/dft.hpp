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
#include <memory>
#include <span>
#include <vector>

#include "largesieve/coeffs.hpp"

namespace largesieve {

// Discrete Fourier transform of arbitrary length n >= 1.
//
//   forward:  out[k] = sum_j in[j] exp(-2 pi i j k / n)
//   backward: out[k] = sum_j in[j] exp(+2 pi i j k / n)   (no 1/n factor)
//
// Short lengths use the O(n^2) definition, powers of two an iterative
// radix-2 Cooley-Tukey pass, and every other length Bluestein's chirp-z
// reduction to a power-of-two circular convolution. A plan owns its twiddle
// tables and is safe to share between threads; transforms allocate their own
// scratch.
class Dft {
 public:
  explicit Dft(std::size_t length);
  ~Dft();
  Dft(Dft&&) noexcept;
  Dft& operator=(Dft&&) noexcept;

  std::size_t size() const { return n_; }

  // `in` and `out` must both have size() elements and may alias.
  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void backward(std::span<const Complex> in, std::span<Complex> out) const;

  static bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
  static std::size_t next_power_of_two(std::size_t n);

 private:
  enum class Method { kDirect, kRadix2, kBluestein };

  void forward_in_place(std::span<Complex> data) const;
  void radix2_in_place(std::span<Complex> data) const;
  void bluestein_in_place(std::span<Complex> data) const;

  std::size_t n_;
  Method method_;
  std::vector<Complex> twiddle_;    // exp(-2 pi i k / n), direct and radix-2
  std::vector<Complex> chirp_;      // exp(-pi i k^2 / n), Bluestein
  std::vector<Complex> kernel_hat_; // transformed conj(chirp), Bluestein
  std::unique_ptr<Dft> inner_;      // power-of-two plan, Bluestein
};

}  // namespace largesieve
