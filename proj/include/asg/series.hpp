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

#include "asg/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace asg {

inline constexpr std::size_t kDefaultTruncation = 24;

/// Formal power series truncated after z^order, exact rational coefficients.
class PowerSeries {
   public:
    explicit PowerSeries(std::size_t order = kDefaultTruncation) : coeffs_(order + 1) {}
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries one(std::size_t order);
    /// Coefficients taken from an integer sequence (missing tail = 0).
    static PowerSeries from_integers(std::span<const BigInt> values, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    /// Throws std::domain_error when the constant term is zero.
    PowerSeries reciprocal() const;
    PowerSeries derivative() const;
    /// Z'/Z, truncated one order lower.
    PowerSeries log_derivative() const;
    /// Value of the truncated polynomial at z.
    Rational evaluate(const Rational& z) const;

    /// One "index,numerator,denominator" row per coefficient, with header.
    void write_csv(std::ostream& os) const;

   private:
    std::vector<Rational> coeffs_;
};

/// pi#(n) for n = 0..N (entry 0 is always 0) and G#(n) for n = 0..N.
struct CountVectors {
    std::vector<BigInt> prime_counts;
    std::vector<BigInt> element_counts;
};

/// G#(n) = [z^n] prod_m (1 - z^m)^(-pi#(m)), via the logarithmic-derivative recurrence.
std::vector<BigInt> euler_transform(std::span<const BigInt> prime_counts);
/// Inverse of euler_transform. Throws std::domain_error on inconsistent input.
std::vector<BigInt> inverse_euler_transform(std::span<const BigInt> element_counts);

/// Coefficients of 1/Z; coefficient n is the sum of mu(g) over elements of degree n.
PowerSeries reciprocal_coefficients(const PowerSeries& zeta);

enum class AssumptionVerdict { Holds, Fails, Inconclusive };

struct AssumptionCheck {
    AssumptionVerdict verdict = AssumptionVerdict::Inconclusive;
    Rational reciprocal_value;          ///< partial sum of 1/Z at -1/q
    Rational spread;                    ///< max deviation across the window
    std::optional<Rational> zeta_value; ///< 1 / reciprocal_value when nonzero
};

/// Heuristic check that Z(-1/q) is finite and nonzero. 1/Z converges on
/// |z| = 1/q for Axiom A# semigroups, so its partial sums are evaluated there
/// and must stabilise over the last `window` orders away from 0.
AssumptionCheck assumption_check_minus_q_inverse(const PowerSeries& zeta, std::uint64_t q, std::size_t window = 8,
                                                 const Rational& tolerance = Rational(1, 1000));

}  // namespace asg
