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

// Möbius function, divisor walks, Dirichlet convolution and the
// minimal/maximal prime factor data behind distinguished elements.

#include "asg/semigroup.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asg {

int mobius(const Element& g);

/// Pairs (h, g/h) for every divisor h of g, ordered lexicographically by the
/// multiplicity vector of h.
std::vector<std::pair<Element, Element>> divisors(const Element& g);
void for_each_divisor(const Element& g, const std::function<void(const Element& h, const Element& rest)>& visit);
/// Only divisors h for which g/h is squarefree, i.e. the terms where mu(g/h) != 0.
void for_each_squarefree_cofactor(const Element& g,
                                  const std::function<void(const Element& h, int mu_of_rest)>& visit);

Rational dirichlet_convolve(const ArithFn& f1, const ArithFn& f2, const Element& g);
/// (mu * a)(g), skipping divisors where mu vanishes.
Rational mobius_convolve(const ArithFn& a, const Element& g);

/// Möbius as an arithmetic function.
ArithFn mobius_fn();

struct MinPrimeData {
    std::uint64_t key = 0;
    std::vector<PrimeId> attaining;
};

/// Smallest prime size of g and the primes attaining it. Throws std::domain_error for e_G.
MinPrimeData min_prime_data(const Semigroup& sg, const Element& g);

struct Distinguished {
    bool member = false;             ///< g in D(G, S)
    std::optional<PrimeId> p_min;    ///< set whenever g has a unique minimal prime
};

Distinguished is_distinguished(const Semigroup& sg, const Element& g, const PrimeSet& S);
Distinguished is_distinguished(const Semigroup& sg, const Element& g, const std::vector<bool>& in_s);

struct MaxPrimeData {
    std::uint64_t key = 0;  ///< largest prime size, identity_key() for e_G
    std::uint32_t q_s = 0;  ///< S-primes dividing g at that size
};

MaxPrimeData max_prime_data(const Semigroup& sg, const Element& g, const PrimeSet& S);
MaxPrimeData max_prime_data(const Semigroup& sg, const Element& g, const std::vector<bool>& in_s);

/// Size argument of a duality test function; nullopt stands for infinity.
using Size = std::optional<std::uint64_t>;

/// Test function on sizes. Infinity always maps to 0.
class SizeFn {
   public:
    SizeFn(std::function<Rational(std::uint64_t)> finite, std::string name);
    Rational operator()(Size s) const { return s ? finite_(*s) : Rational(0); }
    const std::string& name() const { return name_; }

   private:
    std::function<Rational(std::uint64_t)> finite_;
    std::string name_;
};

/// LHS + Q_S(g) f(d^+(g)) of the duality identity; exactly zero for every
/// admissible input. Rejects f that does not vanish at identity_key().
Rational duality_residual(const Semigroup& sg, const Element& g, const PrimeSet& S, const SizeFn& f);
Rational duality_residual(const Semigroup& sg, const Element& g, const std::vector<bool>& in_s, const SizeFn& f);

/// ||g|| * prod over distinct P | g of (1 - 1/||P||). Needs rational norms.
Rational euler_phi(const Semigroup& sg, const Element& g);

}  // namespace asg
