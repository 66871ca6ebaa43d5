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

// Monic polynomials over F_q as an additive arithmetical semigroup.

#include "asg/poly/fq_poly.hpp"
#include "asg/semigroup.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace asg::poly {

inline constexpr unsigned kMaxIrreducibleDegree = 20;

/// Monic irreducibles of degree 1..max_degree ordered by (degree, c0, c1, ...).
/// Throws std::invalid_argument for unsupported q and std::out_of_range when
/// max_degree exceeds kMaxIrreducibleDegree or q^max_degree exceeds 2^21.
std::vector<FqPoly> enumerate_irreducibles(unsigned q, unsigned max_degree);

class PolyBackend {
   public:
    /// Degree ordering keys primes by degree; Norm ordering keys them by q^degree.
    PolyBackend(unsigned q, unsigned max_degree, Ordering ordering = Ordering::Degree);

    unsigned q() const { return q_; }
    unsigned max_degree() const { return max_degree_; }
    const Semigroup& semigroup() const { return *semigroup_; }
    std::shared_ptr<const Semigroup> shared_semigroup() const { return semigroup_; }
    const FqPoly& prime_poly(PrimeId id) const { return (*irreducibles_).at(id); }

    /// Factorisation of a monic polynomial into table primes. Throws
    /// std::invalid_argument for non-monic input and std::out_of_range when a
    /// factor lies beyond the table.
    Element factor(const FqPoly& f) const;
    /// Product of the factors of g.
    FqPoly expand(const Element& g) const;

    /// Irreducibles congruent to f modulo g, density 1/phi(g). Requires
    /// monic g of degree >= 1, deg f < deg g and gcd(f, g) = 1.
    PrimeSet residue_class_prime_set(const FqPoly& g, const FqPoly& f) const;
    /// Number of units of F_q[x]/(g).
    BigInt unit_count(const FqPoly& g) const;

   private:
    unsigned q_;
    unsigned max_degree_;
    std::shared_ptr<const std::vector<FqPoly>> irreducibles_;
    std::map<std::pair<unsigned, std::uint64_t>, PrimeId> by_index_;  // (degree, index) -> id
    std::shared_ptr<const Semigroup> semigroup_;
};

}  // namespace asg::poly
