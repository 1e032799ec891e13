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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace largesieve {

using BigInt = boost::multiprecision::cpp_int;
// Canonical reduced big-integer fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Exact value of a finite double. Throws InvalidParameter on NaN or inf.
Rational to_rational(double x);
// Parses "p", "p/q", or a plain decimal such as "0.25" or "-1.5e-3" exactly.
// Throws InvalidParameter on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
// r - floor(r), in [0, 1).
Rational fractional_part(const Rational& r);

// Distance on R/Z.
Rational circle_distance(const Rational& u, const Rational& v);
double circle_distance(double u, double v);

// A reduced fraction a/q with 1 <= a <= q. The point 0 of the circle is
// represented by 1/1.
struct FareyFraction {
  std::int64_t a = 1;
  std::int64_t q = 1;

  double value() const { return static_cast<double>(a) / static_cast<double>(q); }
  Rational to_rational() const { return Rational(a, q); }

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
  // Orders by value (cross multiplication, exact for q <= 2^31).
  friend std::strong_ordering operator<=>(const FareyFraction& x,
                                          const FareyFraction& y) {
    return x.a * y.q <=> y.a * x.q;
  }
};

// Validating constructor: throws InvalidParameter unless 1 <= a <= q and
// gcd(a, q) = 1.
FareyFraction make_farey_fraction(std::int64_t a, std::int64_t q);

// phi(0..q_max) by a linear sieve; phi(0) is stored as 0.
std::vector<std::int64_t> totients(std::int64_t q_max);
// Number of Farey fractions of order q_max: sum_{q <= q_max} phi(q).
std::int64_t farey_count(std::int64_t q_max);

// All reduced a/q with q <= q_max and 1 <= a <= q, strictly increasing,
// generated by the next-neighbour recurrence of the Farey sequence.
// Throws InvalidParameter when q_max < 1.
std::vector<FareyFraction> farey_fractions(std::int64_t q_max);

// R(u) = #{ a/q : q <= q_max, (a, q) = 1, circle distance(u, a/q) <= A/q_max^2 }.
// The Rational overload is exact. The double overload treats u and A as the
// exact values of the given doubles; it runs in floating point and drops to
// exact arithmetic only where a rounding could move an endpoint.
// Throws InvalidParameter when q_max < 1 or A <= 0.
std::int64_t count_R(const Rational& u, std::int64_t q_max, const Rational& a_param);
std::int64_t count_R(double u, std::int64_t q_max, double a_param);

// Sorted, pairwise disjoint, nonempty rational intervals inside [0, 1].
// All intervals of one union share the same boundary convention.
class IntervalUnion {
 public:
  enum class Boundary { kHalfOpen, kOpen };  // [lo, hi) or (lo, hi)
  struct Interval {
    Rational lo;
    Rational hi;
  };

  IntervalUnion() = default;
  // Throws InvalidParameter when the invariants above are violated.
  explicit IntervalUnion(std::vector<Interval> intervals,
                         Boundary boundary = Boundary::kHalfOpen);

  const std::vector<Interval>& intervals() const { return intervals_; }
  Boundary boundary() const { return boundary_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  // Membership of the circle point u (reduced mod 1 first).
  bool contains(const Rational& u) const;

 private:
  std::vector<Interval> intervals_;
  Boundary boundary_ = Boundary::kHalfOpen;
};

// Exact sum of interval lengths.
Rational measure(const IntervalUnion& s);

// m(Q, A): the circle points at distance > A/Q^2 from every Farey fraction of
// order Q, i.e. { u : count_R(u, Q, A) = 0 }. Returned as open intervals.
// Consecutive Farey fractions a/b < c/d satisfy c/d - a/b = 1/(bd), so the
// gap between their neighbourhoods is nonempty iff Q^2 > 2 A b d; the test is
// done in integers and rationals are built only for surviving gaps.
// Throws InvalidParameter when q_max < 1 or A <= 0.
IntervalUnion uncovered_set(std::int64_t q_max, const Rational& a_param);

// The last continued-fraction convergent of u (mod 1) with denominator <=
// q_max. It satisfies Dirichlet's bound: circle distance <= 1/(q * q_max).
// Throws InvalidParameter when q_max < 1.
FareyFraction best_approximation(const Rational& u, std::int64_t q_max);
FareyFraction best_approximation(double u, std::int64_t q_max);

}  // namespace largesieve
