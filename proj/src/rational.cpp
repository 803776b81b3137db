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

#include "pivotlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pivotlab {

using boost::multiprecision::gcd;

void Rational::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(boost::multiprecision::abs(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::reciprocal() const {
  if (isZero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  if (sign() > 0) {
    r.num_ = den_;
    r.den_ = num_;
  } else {
    r.num_ = -den_;
    r.den_ = -num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  // Knuth-style addition: only gcd(den, o.den) can survive into the result's
  // denominator, so one small gcd pass keeps intermediates reduced.
  BigInt g = gcd(den_, o.den_);
  if (g == 1) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  } else {
    BigInt t = num_ * (o.den_ / g) + o.num_ * (den_ / g);
    BigInt d = (den_ / g) * o.den_;
    BigInt g2 = gcd(boost::multiprecision::abs(t), g);
    if (g2 == 1) {
      num_ = std::move(t);
      den_ = std::move(d);
    } else {
      num_ = t / g2;
      den_ = d / g2;
    }
  }
  if (num_.is_zero()) den_ = 1;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (isZero() || o.isZero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  // Cross-reduce before multiplying; the result is then already canonical.
  BigInt g1 = gcd(boost::multiprecision::abs(num_), o.den_);
  BigInt g2 = gcd(boost::multiprecision::abs(o.num_), den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  return *this *= o.reciprocal();
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  int ls = sign(), rs = o.sign();
  if (ls != rs) return ls < rs ? std::strong_ordering::less : std::strong_ordering::greater;
  if (den_ == o.den_) {
    if (num_ < o.num_) return std::strong_ordering::less;
    if (num_ == o.num_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs == rhs) return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

Rational Rational::fromString(std::string_view text) {
  size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  size_t numStart = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == numStart) throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
  size_t numEnd = i;
  BigInt den = 1;
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    ++i;
    size_t denStart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == denStart || i != text.size())
      throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    den = BigInt(std::string(text.substr(denStart, i - denStart)));
  }
  BigInt num(std::string(text.substr(numStart, numEnd - numStart)));
  if (text[0] == '-') num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

double Rational::approx() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pivotlab
