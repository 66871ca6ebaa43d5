// Copyright 2026 The asg Authors
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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace asg {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "n", "-n", "n/d" and finite decimals such as "0.25" (converted exactly).
Rational parse_rational(std::string_view text);

Rational power(const Rational& base, std::int64_t exponent);
BigInt power(const BigInt& base, std::uint64_t exponent);

/// Truncating conversion; deterministic across runs.
double to_double(const Rational& r);

Rational abs(const Rational& r);

}  // namespace asg
