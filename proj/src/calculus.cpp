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

#include "asg/calculus.hpp"

#include <stdexcept>

namespace asg {

int mobius(const Element& g) {
    if (!g.is_squarefree()) return 0;
    return (g.distinct() % 2 == 0) ? 1 : -1;
}

void for_each_divisor(const Element& g, const std::function<void(const Element&, const Element&)>& visit) {
    const auto& fs = g.factors();
    std::vector<std::uint32_t> counter(fs.size(), 0);
    for (;;) {
        std::vector<Factor> h, rest;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (counter[i] > 0) h.push_back({fs[i].prime, counter[i]});
            if (counter[i] < fs[i].mult) rest.push_back({fs[i].prime, fs[i].mult - counter[i]});
        }
        visit(Element(std::move(h)), Element(std::move(rest)));
        // odometer, last position fastest: lexicographic in the multiplicity vector
        std::size_t i = fs.size();
        while (i > 0) {
            --i;
            if (counter[i] < fs[i].mult) {
                ++counter[i];
                break;
            }
            counter[i] = 0;
            if (i == 0) return;
        }
        if (fs.empty()) return;
    }
}

std::vector<std::pair<Element, Element>> divisors(const Element& g) {
    std::vector<std::pair<Element, Element>> out;
    for_each_divisor(g, [&](const Element& h, const Element& rest) { out.emplace_back(h, rest); });
    return out;
}

void for_each_squarefree_cofactor(const Element& g, const std::function<void(const Element&, int)>& visit) {
    const auto& fs = g.factors();
    const std::size_t n = fs.size();
    if (n >= 63) throw std::length_error("for_each_squarefree_cofactor: too many distinct primes");
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        std::vector<Factor> h;
        h.reserve(n);
        int mu = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (subset >> i & 1) {
                mu = -mu;
                if (fs[i].mult > 1) h.push_back({fs[i].prime, fs[i].mult - 1});
            } else {
                h.push_back(fs[i]);
            }
        }
        visit(Element(std::move(h)), mu);
    }
}

Rational dirichlet_convolve(const ArithFn& f1, const ArithFn& f2, const Element& g) {
    Rational sum = 0;
    for_each_divisor(g, [&](const Element& h, const Element& rest) {
        Rational left = f1(h);
        if (left != 0) sum += left * f2(rest);
    });
    return sum;
}

Rational mobius_convolve(const ArithFn& a, const Element& g) {
    Rational sum = 0;
    for_each_squarefree_cofactor(g, [&](const Element& h, int mu) {
        Rational v = a(h);
        if (mu > 0) {
            sum += v;
        } else {
            sum -= v;
        }
    });
    return sum;
}

ArithFn mobius_fn() {
    return {[](const Element& g) { return Rational(mobius(g)); }, Support::All, true};
}

MinPrimeData min_prime_data(const Semigroup& sg, const Element& g) {
    if (g.is_identity()) throw std::domain_error("min_prime_data: the identity has no prime factor");
    MinPrimeData out;
    // factors are sorted by id and ids are sorted by size
    out.key = sg.key(g.factors().front().prime);
    for (const Factor& f : g.factors()) {
        if (sg.key(f.prime) != out.key) break;
        out.attaining.push_back(f.prime);
    }
    return out;
}

Distinguished is_distinguished(const Semigroup& sg, const Element& g, const std::vector<bool>& in_s) {
    if (g.is_identity()) return {true, std::nullopt};
    const auto& fs = g.factors();
    PrimeId first = fs.front().prime;
    bool unique = fs.size() == 1 || sg.key(fs[1].prime) != sg.key(first);
    if (!unique) return {false, std::nullopt};
    return {static_cast<bool>(in_s.at(first)), first};
}

Distinguished is_distinguished(const Semigroup& sg, const Element& g, const PrimeSet& S) {
    if (g.is_identity()) return {true, std::nullopt};
    const auto& fs = g.factors();
    PrimeId first = fs.front().prime;
    bool unique = fs.size() == 1 || sg.key(fs[1].prime) != sg.key(first);
    if (!unique) return {false, std::nullopt};
    return {S.contains(sg.prime(first)), first};
}

MaxPrimeData max_prime_data(const Semigroup& sg, const Element& g, const std::vector<bool>& in_s) {
    MaxPrimeData out{sg.identity_key(), 0};
    if (g.is_identity()) return out;
    const auto& fs = g.factors();
    out.key = sg.key(fs.back().prime);
    for (auto it = fs.rbegin(); it != fs.rend() && sg.key(it->prime) == out.key; ++it) {
        if (in_s.at(it->prime)) ++out.q_s;
    }
    return out;
}

MaxPrimeData max_prime_data(const Semigroup& sg, const Element& g, const PrimeSet& S) {
    return max_prime_data(sg, g, S.mask(sg));
}

SizeFn::SizeFn(std::function<Rational(std::uint64_t)> finite, std::string name)
    : finite_(std::move(finite)), name_(std::move(name)) {}

Rational duality_residual(const Semigroup& sg, const Element& g, const std::vector<bool>& in_s, const SizeFn& f) {
    if (f(sg.identity_key()) != 0) {
        throw std::invalid_argument("duality_residual: f must vanish at " + std::to_string(sg.identity_key()));
    }
    Rational lhs = 0;
    // Only squarefree divisors h contribute, since mu(h) = 0 otherwise.
    const auto& fs = g.factors();
    const std::size_t n = fs.size();
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
        std::vector<Factor> h;
        for (std::size_t i = 0; i < n; ++i) {
            if (subset >> i & 1) h.push_back({fs[i].prime, 1});
        }
        Element he(std::move(h));
        Distinguished d = is_distinguished(sg, he, in_s);
        if (!d.member) continue;
        Rational term = f(Size{sg.key(*d.p_min)});
        if (he.distinct() % 2 == 1) {
            lhs -= term;
        } else {
            lhs += term;
        }
    }
    // h = e_G contributes mu(e) f(infinity) = 0.
    MaxPrimeData top = max_prime_data(sg, g, in_s);
    return lhs + Rational(top.q_s) * f(Size{top.key});
}

Rational duality_residual(const Semigroup& sg, const Element& g, const PrimeSet& S, const SizeFn& f) {
    return duality_residual(sg, g, S.mask(sg), f);
}

Rational euler_phi(const Semigroup& sg, const Element& g) {
    Rational out = sg.norm(g);
    for (const Factor& f : g.factors()) {
        const Rational& np = sg.prime(f.prime).norm;
        out *= Rational(1) - Rational(1) / np;
    }
    return out;
}

}  // namespace asg
