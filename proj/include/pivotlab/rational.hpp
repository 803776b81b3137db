// Copyright 2026 The pivotlab Authors
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

#ifndef PIVOTLAB_RATIONAL_HPP
#define PIVOTLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pivotlab {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational scalar, the sole number type of every computation.
 *
 * Invariants (canonical form), maintained after every operation:
 *   - denominator > 0,
 *   - gcd(|numerator|, denominator) == 1,
 *   - zero is 0/1.
 *
 * Components are arbitrary-precision integers; nothing here can overflow
 * and nothing is ever rounded.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}               // NOLINT(runtime/explicit)
  Rational(long long v) : num_(v), den_(1) {}         // NOLINT(runtime/explicit)
  Rational(BigInt v) : num_(std::move(v)), den_(1) {} // NOLINT(runtime/explicit)

  /// num/den, canonicalized. Throws std::domain_error on a zero denominator.
  Rational(BigInt num, BigInt den);

  /**
   * Parses the literal grammar `[-]digits[/digits]` (ASCII, no whitespace,
   * no '+' sign). Throws std::invalid_argument on malformed text and
   * std::domain_error on a zero denominator.
   */
  static Rational fromString(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool isZero() const { return num_.is_zero(); }
  bool isOne() const { return den_ == 1 && num_ == 1; }
  bool isInteger() const { return den_ == 1; }

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  /// Multiplicative inverse. Throws std::domain_error on zero.
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Exact total order via cross-multiplication; no floating point anywhere.
  std::strong_ordering operator<=>(const Rational& o) const;

  /// Canonical literal: "num/den" with "/den" omitted when den == 1.
  std::string str() const;

  /// Lossy decimal approximation, display-only; never used in computation.
  double approx() const;

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;  // > 0 always
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pivotlab

#endif  // PIVOTLAB_RATIONAL_HPP
