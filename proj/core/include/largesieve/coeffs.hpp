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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace largesieve {

using Complex = std::complex<double>;

enum class EnsembleKind {
  kRademacher,  // independent uniform +1 / -1
  kSteinhaus,   // independent uniform points on the unit circle
  kFixed,       // caller-supplied entries
};

std::string_view to_string(EnsembleKind kind);
// Accepts "rademacher", "steinhaus", "fixed"; throws InvalidParameter.
EnsembleKind parse_ensemble_kind(std::string_view name);

// The coefficients a_1..a_N of S(alpha) = sum_n a_n e(n alpha).
// entries()[i] holds a_{i+1}. Immutable after construction.
class CoefficientVector {
 public:
  // Throws InvalidDimension on an empty vector and InvalidParameter when a
  // Rademacher-tagged vector holds an entry other than +1 or -1.
  explicit CoefficientVector(std::vector<Complex> entries,
                             EnsembleKind kind = EnsembleKind::kFixed);

  std::size_t size() const { return entries_.size(); }
  std::span<const Complex> entries() const { return entries_; }
  // 1-based access, a(n) = a_n.
  Complex a(std::size_t n) const { return entries_.at(n - 1); }
  EnsembleKind kind() const { return kind_; }
  // sum_n |a_n|^2, computed once at construction.
  double norm_sq() const { return norm_sq_; }

 private:
  std::vector<Complex> entries_;
  EnsembleKind kind_;
  double norm_sq_;
};

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::kRademacher;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  // Only read for kFixed; its length must equal n.
  std::vector<Complex> fixed_entries;
};

// Draws a vector by the law named in `spec`. Deterministic in
// (kind, n, seed) on every platform: the bit stream is std::mt19937_64 (whose
// output sequence the standard fixes) seeded with splitmix64(seed), and the
// bits are mapped to coefficients without any implementation-defined
// distribution:
//   rademacher: top bit of each 64-bit draw, 1 -> -1, 0 -> +1
//   steinhaus:  e(t) with t = (draw >> 11) * 2^-53 in [0, 1)
CoefficientVector make_ensemble(const EnsembleSpec& spec);

double norm_sq(const CoefficientVector& v);

// One step of the splitmix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for trial `index` of an experiment seeded with `seed`. Trials derive
// their generators from this alone, so parallel schedules cannot change
// results.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace largesieve
