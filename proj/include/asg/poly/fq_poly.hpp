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

#include "asg/poly/field.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asg::poly {

/// Polynomial over F_q with coefficients c0, c1, ... (trailing zeros trimmed).
class FqPoly {
   public:
    using Elem = FiniteField::Elem;

    FqPoly(unsigned q, std::vector<Elem> coeffs);

    static FqPoly zero(unsigned q) { return FqPoly(q, {}); }
    static FqPoly one(unsigned q) { return FqPoly(q, {1}); }
    static FqPoly x(unsigned q) { return FqPoly(q, {0, 1}); }
    /// The monic polynomial of the given degree whose lower coefficients are
    /// the base-q digits of `index` (c0 least significant).
    static FqPoly monic_from_index(unsigned q, unsigned degree, std::uint64_t index);
    /// Accepts coefficient strings "c0,c1,...,cn" and text such as "x^2+x+1" or "2x^3+x+2".
    static FqPoly parse(unsigned q, std::string_view text);

    unsigned q() const { return field_->order(); }
    const FiniteField& field() const { return *field_; }
    const std::vector<Elem>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    /// Inverse of monic_from_index.
    std::uint64_t index() const;

    std::string to_string() const;
    std::string to_coefficient_string() const;

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    /// Quotient and remainder; throws std::domain_error on division by zero.
    friend std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }
    /// Monic gcd (zero if both are zero).
    friend FqPoly gcd(FqPoly a, FqPoly b);
    FqPoly make_monic() const;

    friend bool operator==(const FqPoly& a, const FqPoly& b) {
        return a.q() == b.q() && a.coeffs_ == b.coeffs_;
    }
    /// Canonical order: degree first, then lexicographic on c0, c1, ...
    friend bool operator<(const FqPoly& a, const FqPoly& b);

   private:
    void trim();

    const FiniteField* field_;
    std::vector<Elem> coeffs_;
};

}  // namespace asg::poly
