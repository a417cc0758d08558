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

#include "bergeq/rational.h"

#include <cctype>
#include <utility>

#include "bergeq/errors.h"

namespace bergeq {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class IntegerFrom(std::int64_t v) {
  // mpz_class has no portable int64_t constructor.
  return mpz_class(std::to_string(v), 10);
}

}  // namespace

Rational::Rational(std::int64_t integer) : value_(IntegerFrom(integer)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw InvalidArgument("rational with zero denominator");
  }
  value_ = mpq_class(IntegerFrom(numerator), IntegerFrom(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!AllDigits(num) || !AllDigits(den)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in rational \"" + std::string(text) +
                     "\"");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::ToString() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::ToFractionString() const {
  return numerator() + "/" + denominator();
}

std::string Rational::numerator() const {
  return value_.get_num().get_str(10);
}

std::string Rational::denominator() const {
  return value_.get_den().get_str(10);
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw InvalidArgument("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

}  // namespace bergeq
