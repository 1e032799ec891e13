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

#include "largesieve/farey.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <utility>

#include "largesieve/error.hpp"

namespace largesieve {
namespace {

void require_order(std::int64_t q_max) {
  if (q_max < 1) {
    throw InvalidParameter("Farey order Q must be >= 1, got " + std::to_string(q_max));
  }
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw InvalidParameter("malformed rational '" + std::string(whole) + "'");
  }
  std::size_t start = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    start = 1;
  }
  if (start == text.size()) {
    throw InvalidParameter("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw InvalidParameter("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt pow10(unsigned k) {
  BigInt p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 10;
  return p;
}

// Decimal literal: [sign] digits [. digits] [(e|E) [sign] digits].
Rational parse_decimal(std::string_view text) {
  const std::string whole(text);
  std::string_view exp_part;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exp_part = text.substr(e + 1);
    text = text.substr(0, e);
  }
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (i == 0 && (c == '+' || c == '-')) {
      digits.push_back(c);
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw InvalidParameter("malformed rational '" + whole + "'");
    }
  }
  Rational value(parse_integer(digits, whole), pow10(static_cast<unsigned>(frac_digits)));
  if (!exp_part.empty() || text.size() != whole.size()) {
    int exponent = 0;
    const auto* first = exp_part.data();
    const auto* last = exp_part.data() + exp_part.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || std::abs(exponent) > 4000) {
      throw InvalidParameter("malformed rational '" + whole + "'");
    }
    const BigInt scale = pow10(static_cast<unsigned>(std::abs(exponent)));
    value = exponent >= 0 ? value * Rational(scale) : value / Rational(scale);
  }
  return value;
}

std::int64_t to_int64(const BigInt& x) { return x.convert_to<std::int64_t>(); }

}  // namespace

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw InvalidParameter("cannot rationalize a non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num = scaled;
  BigInt den = 1;
  if (exponent >= 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt floor(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt f = floor(r);
  if (Rational(f) != r) ++f;
  return f;
}

Rational fractional_part(const Rational& r) { return r - Rational(floor(r)); }

Rational circle_distance(const Rational& u, const Rational& v) {
  const Rational d = fractional_part(u - v);
  const Rational other = 1 - d;
  return d < other ? d : other;
}

double circle_distance(double u, double v) {
  double d = std::fmod(u - v, 1.0);
  if (d < 0.0) d += 1.0;
  return std::min(d, 1.0 - d);
}

FareyFraction make_farey_fraction(std::int64_t a, std::int64_t q) {
  if (q < 1 || a < 1 || a > q || std::gcd(a, q) != 1) {
    throw InvalidParameter("not a reduced fraction in (0, 1]: " + std::to_string(a) +
                           "/" + std::to_string(q));
  }
  return FareyFraction{a, q};
}

std::vector<std::int64_t> totients(std::int64_t q_max) {
  if (q_max < 0) throw InvalidParameter("totient table bound must be >= 0");
  const auto size = static_cast<std::size_t>(q_max) + 1;
  std::vector<std::int64_t> phi(size);
  std::iota(phi.begin(), phi.end(), std::int64_t{0});
  for (std::size_t p = 2; p < size; ++p) {
    if (phi[p] != static_cast<std::int64_t>(p)) continue;  // composite
    for (std::size_t k = p; k < size; k += p) phi[k] -= phi[k] / static_cast<std::int64_t>(p);
  }
  return phi;
}

std::int64_t farey_count(std::int64_t q_max) {
  require_order(q_max);
  const auto phi = totients(q_max);
  return std::accumulate(phi.begin(), phi.end(), std::int64_t{0});
}

std::vector<FareyFraction> farey_fractions(std::int64_t q_max) {
  require_order(q_max);
  std::vector<FareyFraction> out;
  out.reserve(static_cast<std::size_t>(farey_count(q_max)));
  // (a/b, c/d) walks consecutive terms starting at 0/1, 1/Q.
  std::int64_t a = 0, b = 1, c = 1, d = q_max;
  while (true) {
    out.push_back(FareyFraction{c, d});
    if (c == d) break;
    const std::int64_t k = (q_max + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return out;
}

namespace {

// Shared by both count_R overloads. `u` lies in [0, 1); `ud` and `rd`
// approximate u and the radius to within a few ulps.
std::int64_t count_covering(const Rational& u, double ud, std::int64_t q_max,
                            const Rational& radius, double rd) {
  if (radius * 2 >= 1) return farey_count(q_max);  // every circle point is within 1/2

  // Integer bounds of { a : |u - a/q| <= r } for the real line. The double
  // estimate is trusted unless it lies near an integer.
  auto bound = [&](std::int64_t q, bool upper) -> std::int64_t {
    const double qd = static_cast<double>(q);
    const double approx = upper ? qd * (ud + rd) : qd * (ud - rd);
    const double nearest = std::nearbyint(approx);
    if (std::abs(approx - nearest) > 1e-7 * std::max(1.0, std::abs(approx))) {
      return static_cast<std::int64_t>(upper ? std::floor(approx) : std::ceil(approx));
    }
    const Rational exact = upper ? Rational(q) * (u + radius) : Rational(q) * (u - radius);
    return to_int64(upper ? floor(exact) : ceil(exact));
  };

  std::int64_t count = 0;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const std::int64_t lo = bound(q, false);
    const std::int64_t hi = bound(q, true);
    // 2r < 1 keeps hi - lo < q, so the a's are distinct circle points.
    for (std::int64_t a = lo; a <= hi; ++a) {
      std::int64_t residue = a % q;
      if (residue <= 0) residue += q;
      if (std::gcd(residue, q) == 1) ++count;
    }
  }
  return count;
}

}  // namespace

std::int64_t count_R(const Rational& u, std::int64_t q_max, const Rational& a_param) {
  require_order(q_max);
  if (a_param <= 0) throw InvalidParameter("covering parameter A must be > 0");
  const Rational u0 = fractional_part(u);
  const Rational radius = a_param / Rational(q_max * q_max);
  return count_covering(u0, to_double(u0), q_max, radius, to_double(radius));
}

std::int64_t count_R(double u, std::int64_t q_max, double a_param) {
  require_order(q_max);
  if (!(a_param > 0.0)) throw InvalidParameter("covering parameter A must be > 0");
  const Rational u0 = fractional_part(to_rational(u));
  const Rational radius = to_rational(a_param) / Rational(q_max * q_max);
  return count_covering(u0, to_double(u0), q_max, radius, to_double(radius));
}

IntervalUnion::IntervalUnion(std::vector<Interval> intervals, Boundary boundary)
    : intervals_(std::move(intervals)), boundary_(boundary) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const Interval& iv = intervals_[i];
    if (iv.lo < 0 || iv.hi > 1 || !(iv.lo < iv.hi)) {
      throw InvalidParameter("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) +
                             ") is empty or leaves [0, 1]");
    }
    if (i > 0 && intervals_[i - 1].hi > iv.lo) {
      throw InvalidParameter("intervals must be sorted and pairwise disjoint");
    }
  }
}

bool IntervalUnion::contains(const Rational& u) const {
  const Rational x = fractional_part(u);
  for (const Interval& iv : intervals_) {
    if (iv.lo > x) break;
    const bool left_ok = boundary_ == Boundary::kHalfOpen ? iv.lo <= x : iv.lo < x;
    if (left_ok && x < iv.hi) return true;
  }
  return false;
}

Rational measure(const IntervalUnion& s) {
  Rational total = 0;
  for (const auto& iv : s.intervals()) total += iv.hi - iv.lo;
  return total;
}

IntervalUnion uncovered_set(std::int64_t q_max, const Rational& a_param) {
  require_order(q_max);
  if (a_param <= 0) throw InvalidParameter("covering parameter A must be > 0");
  const Rational radius = a_param / Rational(q_max * q_max);
  const BigInt lhs_scale = BigInt(q_max) * q_max * boost::multiprecision::denominator(a_param);
  const BigInt rhs_scale = 2 * boost::multiprecision::numerator(a_param);

  std::vector<IntervalUnion::Interval> gaps;
  // The walk starts at 0/1 and ends at 1/1, the same circle point, so the
  // wrap-around gap is the one ending at 1 - r.
  std::int64_t a = 0, b = 1, c = 1, d = q_max;
  while (true) {
    if (lhs_scale > rhs_scale * BigInt(b) * d) {
      gaps.push_back({Rational(a, b) + radius, Rational(c, d) - radius});
    }
    if (c == d) break;
    const std::int64_t k = (q_max + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return IntervalUnion(std::move(gaps), IntervalUnion::Boundary::kOpen);
}

FareyFraction best_approximation(const Rational& u, std::int64_t q_max) {
  require_order(q_max);
  const Rational x = fractional_part(u);
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);

  // Convergents h/k of the continued fraction of num/den, seeded with
  // h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0.
  BigInt h_prev = 0, h = 1;
  BigInt k_prev = 1, k = 0;
  BigInt best_h = 0, best_k = 1;
  while (den != 0) {
    const BigInt term = num / den;
    const BigInt next_h = term * h + h_prev;
    const BigInt next_k = term * k + k_prev;
    if (next_k > q_max) break;
    h_prev = h;
    h = next_h;
    k_prev = k;
    k = next_k;
    best_h = h;
    best_k = k;
    const BigInt rem = num - term * den;
    num = den;
    den = rem;
  }
  if (best_h == 0) return FareyFraction{1, 1};  // 0/1 is the circle point 1/1
  return FareyFraction{to_int64(best_h), to_int64(best_k)};
}

FareyFraction best_approximation(double u, std::int64_t q_max) {
  return best_approximation(to_rational(u), q_max);
}

}  // namespace largesieve
