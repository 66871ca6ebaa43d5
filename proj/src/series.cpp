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

#include "asg/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace asg {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::from_integers(std::span<const BigInt> values, std::size_t order) {
    PowerSeries s(order);
    for (std::size_t n = 0; n <= order && n < values.size(); ++n) s.coeffs_[n] = Rational(values[n]);
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    const std::size_t n_max = out.order();
    for (std::size_t i = 0; i <= n_max; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n_max; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeffs_[0] == 0) throw std::domain_error("PowerSeries::reciprocal: zero constant term");
    PowerSeries out(order());
    Rational inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = -acc * inv0;
    }
    return out;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries out(order() - 1);
    for (std::size_t n = 1; n <= order(); ++n) out.coeffs_[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
    return out;
}

PowerSeries PowerSeries::log_derivative() const {
    PowerSeries d = derivative();
    PowerSeries inv = reciprocal();
    return d * inv;
}

Rational PowerSeries::evaluate(const Rational& z) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

void PowerSeries::write_csv(std::ostream& os) const {
    os << "index,numerator,denominator\n";
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        os << n << ',' << coeffs_[n].get_num().get_str() << ',' << coeffs_[n].get_den().get_str() << '\n';
    }
}

namespace {

// c(k) = sum over d | k of d * pi#(d)
std::vector<BigInt> divisor_weighted(std::span<const BigInt> prime_counts, std::size_t order) {
    std::vector<BigInt> c(order + 1, 0);
    for (std::size_t d = 1; d <= order && d < prime_counts.size(); ++d) {
        if (prime_counts[d] == 0) continue;
        BigInt term = prime_counts[d] * static_cast<unsigned long>(d);
        for (std::size_t k = d; k <= order; k += d) c[k] += term;
    }
    return c;
}

}  // namespace

std::vector<BigInt> euler_transform(std::span<const BigInt> prime_counts) {
    if (prime_counts.empty()) return {BigInt(1)};
    if (prime_counts[0] != 0) throw std::invalid_argument("euler_transform: no primes of degree 0");
    for (const BigInt& p : prime_counts) {
        if (p < 0) throw std::invalid_argument("euler_transform: negative prime count");
    }
    const std::size_t order = prime_counts.size() - 1;
    std::vector<BigInt> c = divisor_weighted(prime_counts, order);
    std::vector<BigInt> g(order + 1, 0);
    g[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += c[k] * g[n - k];
        g[n] = acc / static_cast<unsigned long>(n);
    }
    return g;
}

std::vector<BigInt> inverse_euler_transform(std::span<const BigInt> element_counts) {
    if (element_counts.empty() || element_counts[0] != 1) {
        throw std::invalid_argument("inverse_euler_transform: G#(0) must be 1");
    }
    const std::size_t order = element_counts.size() - 1;
    std::vector<BigInt> pi(order + 1, 0);
    std::vector<BigInt> c(order + 1, 0);
    for (std::size_t n = 1; n <= order; ++n) {
        BigInt cn = element_counts[n] * static_cast<unsigned long>(n);
        for (std::size_t k = 1; k < n; ++k) cn -= c[k] * element_counts[n - k];
        c[n] = cn;
        BigInt rest = cn;
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d == 0) rest -= pi[d] * static_cast<unsigned long>(d);
        }
        if (rest % static_cast<unsigned long>(n) != 0) {
            throw std::domain_error("inverse_euler_transform: non-integral prime count at n=" + std::to_string(n));
        }
        pi[n] = rest / static_cast<unsigned long>(n);
        if (pi[n] < 0) {
            throw std::domain_error("inverse_euler_transform: negative prime count at n=" + std::to_string(n));
        }
    }
    return pi;
}

PowerSeries reciprocal_coefficients(const PowerSeries& zeta) { return zeta.reciprocal(); }

AssumptionCheck assumption_check_minus_q_inverse(const PowerSeries& zeta, std::uint64_t q, std::size_t window,
                                                 const Rational& tolerance) {
    if (q < 2) throw std::invalid_argument("assumption_check_minus_q_inverse: q must be at least 2");
    PowerSeries inv = zeta.reciprocal();
    const Rational z(-1, static_cast<long>(q));
    const std::size_t n_max = inv.order();
    const std::size_t first = n_max > window ? n_max - window : 0;

    std::vector<Rational> partial;
    Rational acc = 0;
    Rational zn = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        acc += inv[n] * zn;
        zn *= z;
        if (n >= first) partial.push_back(acc);
    }
    AssumptionCheck out;
    out.reciprocal_value = partial.back();
    out.spread = 0;
    for (const Rational& s : partial) out.spread = std::max(out.spread, asg::abs(s - out.reciprocal_value));

    if (out.spread > tolerance) {
        out.verdict = AssumptionVerdict::Inconclusive;
    } else if (asg::abs(out.reciprocal_value) <= tolerance) {
        out.verdict = AssumptionVerdict::Fails;
    } else {
        out.verdict = AssumptionVerdict::Holds;
        out.zeta_value = Rational(1 / out.reciprocal_value);
    }
    return out;
}

}  // namespace asg
