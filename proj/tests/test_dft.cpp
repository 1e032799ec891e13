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

#include <random>

#include <gtest/gtest.h>

#include "largesieve/dft.hpp"
#include "largesieve/error.hpp"
#include "oracles.hpp"

namespace largesieve {
namespace {

double max_abs_diff(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

TEST(Dft, ZeroLengthRejected) { EXPECT_THROW(Dft(0), InvalidDimension); }

TEST(Dft, BufferSizeChecked) {
  const Dft plan(8);
  std::vector<Complex> in(7), out(8);
  EXPECT_THROW(plan.forward(in, out), InvalidDimension);
}

TEST(Dft, LengthOneIsIdentity) {
  const Dft plan(1);
  std::vector<Complex> x = {Complex(2.0, -3.0)};
  plan.forward(x, x);
  EXPECT_EQ(x[0], Complex(2.0, -3.0));
}

TEST(Dft, ImpulseGivesConstant) {
  for (const std::size_t n : {5u, 64u, 97u}) {
    std::vector<Complex> x(n, Complex(0.0));
    x[0] = 1.0;
    Dft(n).forward(x, x);
    for (const Complex& c : x) EXPECT_NEAR(std::abs(c - Complex(1.0)), 0.0, 1e-13);
  }
}

// Covers the direct (<= 32), radix-2 and Bluestein code paths in both
// directions against the O(n^2) definition.
TEST(Dft, MatchesDefinitionAcrossLengths) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 300; n += (n < 40 ? 1 : 13)) {
    const auto x = oracle::random_complex(rng, n);
    const Dft plan(n);
    std::vector<Complex> fwd(n), bwd(n);
    plan.forward(x, fwd);
    plan.backward(x, bwd);
    const double tol = 1e-12 * static_cast<double>(n);
    EXPECT_LE(max_abs_diff(fwd, oracle::naive_dft(x, -1)), tol) << "n = " << n;
    EXPECT_LE(max_abs_diff(bwd, oracle::naive_dft(x, +1)), tol) << "n = " << n;
  }
  for (const std::size_t n : {64u, 256u, 1024u, 509u, 1000u}) {
    const auto x = oracle::random_complex(rng, n);
    std::vector<Complex> fwd(n);
    Dft(n).forward(x, fwd);
    EXPECT_LE(max_abs_diff(fwd, oracle::naive_dft(x, -1)), 1e-11 * n) << "n = " << n;
  }
}

TEST(Dft, RoundTripRecoversInput) {
  std::mt19937_64 rng(11);
  for (const std::size_t n : {7u, 128u, 333u}) {
    const auto x = oracle::random_complex(rng, n);
    const Dft plan(n);
    std::vector<Complex> y(n);
    plan.forward(x, y);
    plan.backward(y, y);
    for (auto& c : y) c /= static_cast<double>(n);
    EXPECT_LE(max_abs_diff(x, y), 1e-12) << "n = " << n;
  }
}

TEST(Dft, NextPowerOfTwo) {
  EXPECT_EQ(Dft::next_power_of_two(1), 1u);
  EXPECT_EQ(Dft::next_power_of_two(5), 8u);
  EXPECT_EQ(Dft::next_power_of_two(1024), 1024u);
  EXPECT_TRUE(Dft::is_power_of_two(4096));
  EXPECT_FALSE(Dft::is_power_of_two(96));
}

}  // namespace
}  // namespace largesieve
