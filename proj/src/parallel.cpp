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

#include "asg/parallel.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace asg {

namespace {
constexpr int kUnitExponent = 1074;
}

void ExactFloatSum::add(double x) {
    if (!std::isfinite(x)) throw std::domain_error("ExactFloatSum: non-finite term");
    if (x == 0.0) return;
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent, 0.5 <= |m| < 1
    auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    int shift = exponent - 53 + kUnitExponent;
    mpz_class term(static_cast<long>(scaled));
    if (shift >= 0) {
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        // Only subnormals land here and the dropped bits are zero.
        mpz_tdiv_q_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    units_ += term;
}

mpq_class ExactFloatSum::exact() const {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), kUnitExponent);
    mpq_class r(units_, den);
    r.canonicalize();
    return r;
}

double ExactFloatSum::value() const { return exact().get_d(); }

}  // namespace asg
