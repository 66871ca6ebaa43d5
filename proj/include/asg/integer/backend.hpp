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

// Multiplicative semigroups: positive integers and nonzero ideals of Z[i].

#include "asg/semigroup.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace asg::integer {

inline constexpr std::uint64_t kMaxSieveLimit = 20'000'000;

/// Linear sieve with smallest prime factor, Möbius and Euler totient tables.
class IntegerSieve {
   public:
    /// Throws std::out_of_range when limit exceeds kMaxSieveLimit or is below 2.
    explicit IntegerSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    /// Smallest prime factor; 0 for n = 1.
    std::uint32_t spf(std::uint64_t n) const { return spf_.at(n); }
    int mu(std::uint64_t n) const { return mu_.at(n); }
    std::uint32_t phi(std::uint64_t n) const { return phi_.at(n); }
    bool is_prime(std::uint64_t n) const { return n >= 2 && spf_.at(n) == n; }
    /// Index of prime p in primes(); throws std::invalid_argument if p is not prime.
    std::uint32_t prime_index(std::uint64_t p) const;

   private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint32_t> phi_;
};

/// Rational integers ordered by absolute norm.
class IntegerBackend {
   public:
    explicit IntegerBackend(std::uint64_t limit);

    std::uint64_t limit() const { return sieve_->limit(); }
    const IntegerSieve& sieve() const { return *sieve_; }
    const Semigroup& semigroup() const { return *semigroup_; }
    std::shared_ptr<const Semigroup> shared_semigroup() const { return semigroup_; }

    /// Canonical factorisation for 1 <= n <= limit^2. Throws std::out_of_range
    /// outside that range or when a prime factor exceeds the prime table.
    Element factor_integer(std::uint64_t n) const;
    std::uint64_t value(const Element& g) const;

    /// Primes p = l (mod k), density 1/phi(k). Requires k >= 1 and gcd(k, l) = 1.
    PrimeSet residue_prime_set(std::uint64_t k, std::uint64_t l) const;

   private:
    std::shared_ptr<const IntegerSieve> sieve_;
    std::shared_ptr<const Semigroup> semigroup_;
};

enum class SplitType { Split, Inert, Ramified };

std::string to_string(SplitType t);

struct GaussianPrime {
    std::uint64_t rational_prime = 0;  ///< p below this ideal
    SplitType type = SplitType::Split;
    std::int64_t re = 0;  ///< generator re + im*i
    std::int64_t im = 0;
};

/// Nonzero ideals of Z[i] ordered by norm.
///
/// Ideals of equal norm (the two primes above a split p) are ordered by the
/// generator (re, im) with re, im > 0, so the prime (1+2i) precedes (2+i).
class GaussianBackend {
   public:
    explicit GaussianBackend(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const Semigroup& semigroup() const { return *semigroup_; }
    std::shared_ptr<const Semigroup> shared_semigroup() const { return semigroup_; }
    const GaussianPrime& prime_info(PrimeId id) const { return info_->at(id); }

    /// Factorisation of the principal ideal (re + im*i). Throws
    /// std::invalid_argument for 0 and std::out_of_range when the norm exceeds the limit.
    Element factor_gaussian_integer(std::int64_t re, std::int64_t im) const;
    /// All ideals of norm <= x, sorted by norm.
    std::vector<Element> ideals_up_to(std::uint64_t x) const { return semigroup_->enumerate(x); }

    /// "split", "inert", "ramified" or "split1mod8" (split primes above p = 1 mod 8).
    PrimeSet split_type_prime_set(const std::string& type) const;

   private:
    std::uint64_t limit_;
    std::shared_ptr<const IntegerSieve> sieve_;
    std::shared_ptr<const std::vector<GaussianPrime>> info_;
    std::shared_ptr<const Semigroup> semigroup_;
};

}  // namespace asg::integer
