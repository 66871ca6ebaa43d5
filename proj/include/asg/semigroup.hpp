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

// Free commutative monoids on a prime table, ordered by degree (additive
// semigroups) or by integer norm (multiplicative semigroups).

#include "asg/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asg {

using PrimeId = std::uint32_t;

/// Which size function orders primes and cuts sums.
enum class Ordering {
    Degree,  ///< Axiom A#: additive degree, norm q^degree.
    Norm,    ///< Axiom A: integer norm, multiplicative.
};

enum class NormKind {
    Rational,  ///< every norm is an exact rational
    Symbolic,  ///< norm = u^-degree for an irrational base u (graph backend)
};

struct Prime {
    PrimeId id = 0;
    std::uint64_t degree = 0;
    Rational norm;  ///< 0 when the semigroup norm is symbolic
    std::string label;
};

struct Factor {
    PrimeId prime = 0;
    std::uint32_t mult = 0;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Canonical factorisation: prime ids strictly increasing, multiplicities >= 1.
class Element {
   public:
    Element() = default;
    explicit Element(std::vector<Factor> factors);

    static Element identity() { return {}; }
    static Element prime(PrimeId id) { return Element(std::vector<Factor>{{id, 1}}); }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }
    bool is_squarefree() const;
    /// Number of distinct prime factors.
    std::size_t distinct() const { return factors_.size(); }
    std::uint32_t multiplicity(PrimeId id) const;

    bool divides(const Element& g) const;
    /// g / *this; throws std::invalid_argument when *this does not divide g.
    Element cofactor_in(const Element& g) const;

    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element& a, const Element& b) { return a.factors_ <=> b.factors_; }

   private:
    std::vector<Factor> factors_;
};

class Semigroup {
   public:
    /// `horizon` is the largest key for which the prime table is complete.
    Semigroup(std::string name, Ordering ordering, NormKind norm_kind, std::vector<Prime> primes,
              std::uint64_t horizon);

    const std::string& name() const { return name_; }
    Ordering ordering() const { return ordering_; }
    NormKind norm_kind() const { return norm_kind_; }
    std::span<const Prime> primes() const { return primes_; }
    const Prime& prime(PrimeId id) const { return primes_.at(id); }
    std::size_t prime_count() const { return primes_.size(); }
    std::uint64_t horizon() const { return horizon_; }

    /// Degree (Degree ordering) or integer norm (Norm ordering) of a prime.
    std::uint64_t key(PrimeId id) const { return keys_[id]; }
    /// Additive or multiplicative combination of prime keys; saturates at UINT64_MAX.
    std::uint64_t key(const Element& g) const;
    /// Key of the identity: 0 for degrees, 1 for norms.
    std::uint64_t identity_key() const { return ordering_ == Ordering::Degree ? 0 : 1; }

    std::uint64_t degree(const Element& g) const;
    /// Exact norm; throws std::logic_error when norms are symbolic.
    Rational norm(const Element& g) const;
    std::string label(const Element& g) const;

    /// All elements with key <= max_key, sorted by (key, factors).
    std::vector<Element> enumerate(std::uint64_t max_key) const;
    /// Unsorted depth-first visit of the same set.
    void for_each_element(std::uint64_t max_key,
                          const std::function<void(const Element&, std::uint64_t key)>& visit) const;
    /// Primes with key exactly `k`, as a contiguous id range [first, last).
    std::pair<PrimeId, PrimeId> primes_with_key(std::uint64_t k) const;

   private:
    std::string name_;
    Ordering ordering_;
    NormKind norm_kind_;
    std::vector<Prime> primes_;
    std::vector<std::uint64_t> keys_;
    std::uint64_t horizon_;
};

/// A deterministic predicate on primes, optionally with a known natural density.
class PrimeSet {
   public:
    PrimeSet(std::function<bool(const Prime&)> membership, std::optional<Rational> known_density,
             std::string description);

    static PrimeSet all();
    static PrimeSet none();
    /// Membership by id, for property tests and random sets.
    static PrimeSet of_ids(std::vector<bool> member, std::string description);

    bool contains(const Prime& p) const { return membership_(p); }
    const std::optional<Rational>& known_density() const { return known_density_; }
    const std::string& description() const { return description_; }
    /// Membership table over a semigroup's prime ids.
    std::vector<bool> mask(const Semigroup& sg) const;

   private:
    std::function<bool(const Prime&)> membership_;
    std::optional<Rational> known_density_;
    std::string description_;
};

enum class Support { All, DistinguishedOnly, IdentityOnly };

struct ArithFn {
    std::function<Rational(const Element&)> evaluate;
    Support support = Support::All;
    bool normalized_at_identity = false;

    Rational operator()(const Element& g) const { return evaluate(g); }

    /// Identity of the convolution ring: 1 at e_G, 0 elsewhere.
    static ArithFn convolution_identity();
    static ArithFn constant_one();
};

}  // namespace asg
