// Copyright 2026 The wignerlab Authors
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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wignerlab {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;

/// Dense vector of rationals; also used for points in ambient coordinates.
using Vector = std::vector<Rational>;

/// num/den in canonical form. Prefer this to the two-argument mpq_class
/// constructor, which does not reduce.
Rational frac(long num, long den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p/q", an integer, or a finite decimal such as "-0.25" exactly.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Nearest double, for rendering only.
double to_double(const Rational& value);

/// Exact conversion of a finite double.
Rational from_double(double value);

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(const Vector& v);
Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace wignerlab
