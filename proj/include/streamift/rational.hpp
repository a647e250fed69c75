// Copyright 2026 The streamift Authors
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

#ifndef STREAMIFT_RATIONAL_HPP
#define STREAMIFT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace streamift
{

// Exact coefficient field. mpq_class keeps the denominator positive and the
// fraction reduced after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Truncated stream: coefficients 0..size()-1.
using Coeffs = std::vector<Rational>;

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational &q);

// Accepts -?digits(/digits)?; throws std::invalid_argument otherwise
// (including a zero denominator).
Rational parse_rational(std::string_view text);

// Space-separated exact rendering of a coefficient vector.
std::string format_coeffs(const Coeffs &c);

} // namespace streamift

#endif
