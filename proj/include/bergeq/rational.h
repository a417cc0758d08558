// Copyright 2026 The bergeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BERGEQ_RATIONAL_H_
#define BERGEQ_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bergeq {

// Exact rational number in canonical form (reduced, positive denominator).
// Every payoff, probability and deficiency in the library is a Rational;
// there is no floating point anywhere on the computation path.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t integer);  // NOLINT: implicit by design of literals.
  // Throws InvalidArgument when denominator is zero.
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "n", "-n", "+n" and "n/d" with decimal digits. Throws ParseError.
  static Rational Parse(std::string_view text);

  // "n" for integers, "n/d" otherwise. Inverse of Parse.
  std::string ToString() const;
  // Always "n/d", including "0/1" and "3/1".
  std::string ToFractionString() const;

  std::string numerator() const;
  std::string denominator() const;
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws InvalidArgument on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

}  // namespace bergeq

#endif  // BERGEQ_RATIONAL_H_
