// Copyright 2026 The Ranktest Authors
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

#ifndef RANKTEST_NUMERIC_HPP_
#define RANKTEST_NUMERIC_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace ranktest {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// (sum parts)! / prod(parts!). Empty input gives 1.
BigInt multinomial(std::span<const int> parts);

// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

}  // namespace ranktest

#endif  // RANKTEST_NUMERIC_HPP_
