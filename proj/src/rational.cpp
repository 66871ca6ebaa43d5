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

#include "asg/rational.hpp"

#include <stdexcept>

namespace asg {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("malformed integer literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative || (!whole.empty() && whole[0] == '+')) whole.remove_prefix(1);
        BigInt w = whole.empty() ? BigInt(0) : parse_integer(whole);
        BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac);
        if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) {
            throw std::invalid_argument("malformed decimal literal: " + std::string(text));
        }
        BigInt scale = power(BigInt(10), frac.size());
        Rational r(w * scale + f, scale);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_integer(text));
}

Rational power(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        Rational inv = 1 / base;
        return power(inv, -exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace asg
