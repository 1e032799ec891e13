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

#include "largesieve/coeffs.hpp"

#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "largesieve/error.hpp"

namespace largesieve {

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::kRademacher:
      return "rademacher";
    case EnsembleKind::kSteinhaus:
      return "steinhaus";
    case EnsembleKind::kFixed:
      return "fixed";
  }
  return "unknown";
}

EnsembleKind parse_ensemble_kind(std::string_view name) {
  if (name == "rademacher") return EnsembleKind::kRademacher;
  if (name == "steinhaus") return EnsembleKind::kSteinhaus;
  if (name == "fixed") return EnsembleKind::kFixed;
  throw InvalidParameter("unknown ensemble kind '" + std::string(name) + "'");
}

CoefficientVector::CoefficientVector(std::vector<Complex> entries,
                                     EnsembleKind kind)
    : entries_(std::move(entries)), kind_(kind), norm_sq_(0.0) {
  if (entries_.empty()) {
    throw InvalidDimension("coefficient vector must have N >= 1");
  }
  for (const Complex& c : entries_) {
    if (kind_ == EnsembleKind::kRademacher && c != Complex(1.0) &&
        c != Complex(-1.0)) {
      throw InvalidParameter("rademacher entries must be exactly +1 or -1");
    }
    norm_sq_ += std::norm(c);
  }
}

double norm_sq(const CoefficientVector& v) { return v.norm_sq(); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(~index));
}

CoefficientVector make_ensemble(const EnsembleSpec& spec) {
  if (spec.n == 0) {
    throw InvalidDimension("ensemble dimension n must be >= 1");
  }
  if (spec.kind == EnsembleKind::kFixed) {
    if (spec.fixed_entries.size() != spec.n) {
      throw InvalidDimension("fixed ensemble has " +
                             std::to_string(spec.fixed_entries.size()) +
                             " entries, expected n = " + std::to_string(spec.n));
    }
    return CoefficientVector(spec.fixed_entries, EnsembleKind::kFixed);
  }

  std::mt19937_64 engine(splitmix64(spec.seed));
  std::vector<Complex> entries(spec.n);
  if (spec.kind == EnsembleKind::kRademacher) {
    for (Complex& c : entries) c = (engine() >> 63) != 0 ? -1.0 : 1.0;
  } else {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    for (Complex& c : entries) {
      const double t = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      c = std::polar(1.0, kTwoPi * t);
    }
  }
  return CoefficientVector(std::move(entries), spec.kind);
}

}  // namespace largesieve
