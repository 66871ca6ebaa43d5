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

#include "asg/poly/backend.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace asg::poly {

namespace {

constexpr std::uint64_t kMaxMonicCount = std::uint64_t{1} << 21;

std::uint64_t checked_power(unsigned q, unsigned d) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < d; ++i) {
        out *= q;
        if (out > kMaxMonicCount) {
            throw std::out_of_range("enumerate_irreducibles: q^" + std::to_string(d) + " exceeds the table limit");
        }
    }
    return out;
}

}  // namespace

std::vector<FqPoly> enumerate_irreducibles(unsigned q, unsigned max_degree) {
    const FiniteField& field = FiniteField::get(q);
    if (max_degree > kMaxIrreducibleDegree) {
        throw std::out_of_range("enumerate_irreducibles: max_degree " + std::to_string(max_degree) + " exceeds " +
                                std::to_string(kMaxIrreducibleDegree));
    }
    checked_power(q, max_degree);

    // by_degree[k] holds the irreducibles of degree k as coefficient arrays
    std::vector<std::vector<std::vector<FqPoly::Elem>>> by_degree(max_degree + 1);
    std::vector<FqPoly> out;
    std::vector<FqPoly::Elem> g(max_degree + 1);
    std::vector<FqPoly::Elem> prod(max_degree + 1);

    for (unsigned d = 1; d <= max_degree; ++d) {
        const std::uint64_t count = checked_power(q, d);
        std::vector<bool> composite(count, false);
        for (unsigned k = 1; 2 * k <= d; ++k) {
            const unsigned m = d - k;
            const std::uint64_t cofactors = checked_power(q, m);
            for (const auto& p : by_degree[k]) {
                for (std::uint64_t gi = 0; gi < cofactors; ++gi) {
                    std::uint64_t t = gi;
                    for (unsigned i = 0; i < m; ++i) {
                        g[i] = static_cast<FqPoly::Elem>(t % q);
                        t /= q;
                    }
                    g[m] = 1;
                    std::fill(prod.begin(), prod.begin() + d + 1, 0);
                    for (unsigned i = 0; i <= k; ++i) {
                        if (p[i] == 0) continue;
                        for (unsigned j = 0; j <= m; ++j) {
                            prod[i + j] = field.add(prod[i + j], field.mul(p[i], g[j]));
                        }
                    }
                    std::uint64_t index = 0;
                    for (int i = static_cast<int>(d) - 1; i >= 0; --i) index = index * q + prod[static_cast<unsigned>(i)];
                    composite[index] = true;
                }
            }
        }
        std::vector<FqPoly> found;
        for (std::uint64_t i = 0; i < count; ++i) {
            if (!composite[i]) found.push_back(FqPoly::monic_from_index(q, d, i));
        }
        std::sort(found.begin(), found.end());
        for (auto& f : found) {
            by_degree[d].push_back(f.coefficients());
            out.push_back(std::move(f));
        }
    }
    return out;
}

PolyBackend::PolyBackend(unsigned q, unsigned max_degree, Ordering ordering) : q_(q), max_degree_(max_degree) {
    auto table = enumerate_irreducibles(q, max_degree);
    std::vector<Prime> primes;
    primes.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        const FqPoly& f = table[i];
        const auto deg = static_cast<unsigned>(f.degree());
        by_index_.emplace(std::make_pair(deg, f.index()), static_cast<PrimeId>(i));
        primes.push_back({static_cast<PrimeId>(i), deg, Rational(power(BigInt(q), deg)), f.to_string()});
    }
    irreducibles_ = std::make_shared<const std::vector<FqPoly>>(std::move(table));
    std::uint64_t horizon = max_degree;
    if (ordering == Ordering::Norm) horizon = power(BigInt(q), max_degree).get_ui();
    semigroup_ = std::make_shared<const Semigroup>("F" + std::to_string(q) + "[x]", ordering, NormKind::Rational,
                                                   std::move(primes), horizon);
}

Element PolyBackend::factor(const FqPoly& f) const {
    if (f.q() != q_) throw std::invalid_argument("PolyBackend::factor: polynomial over the wrong field");
    if (!f.is_monic()) throw std::invalid_argument("PolyBackend::factor: polynomial must be monic");
    std::vector<Factor> factors;
    FqPoly rest = f;
    const auto& table = *irreducibles_;
    std::size_t i = 0;
    while (rest.degree() > 0) {
        if (i == table.size() || 2 * table[i].degree() > rest.degree()) break;
        std::uint32_t mult = 0;
        for (;;) {
            auto [quo, rem] = divmod(rest, table[i]);
            if (!rem.is_zero()) break;
            rest = std::move(quo);
            ++mult;
        }
        if (mult > 0) factors.push_back({static_cast<PrimeId>(i), mult});
        ++i;
    }
    if (rest.degree() > 0) {
        // no factor of degree <= deg(rest)/2 remains, so rest is irreducible
        auto it = by_index_.find({static_cast<unsigned>(rest.degree()), rest.index()});
        if (it == by_index_.end()) {
            throw std::out_of_range("PolyBackend::factor: factor " + rest.to_string() + " beyond the irreducible table");
        }
        factors.push_back({it->second, 1});
        std::sort(factors.begin(), factors.end());
    }
    return Element(std::move(factors));
}

FqPoly PolyBackend::expand(const Element& g) const {
    FqPoly out = FqPoly::one(q_);
    for (const Factor& f : g.factors()) {
        for (std::uint32_t i = 0; i < f.mult; ++i) out = out * prime_poly(f.prime);
    }
    return out;
}

BigInt PolyBackend::unit_count(const FqPoly& g) const {
    if (g.degree() < 1) throw std::invalid_argument("PolyBackend::unit_count: modulus must have degree >= 1");
    Element e = factor(g.make_monic());
    BigInt out = 1;
    for (const Factor& f : e.factors()) {
        const auto d = static_cast<std::uint64_t>(prime_poly(f.prime).degree());
        BigInt qd = power(BigInt(q_), d);
        out *= power(qd, f.mult - 1) * (qd - 1);
    }
    return out;
}

PrimeSet PolyBackend::residue_class_prime_set(const FqPoly& g, const FqPoly& f) const {
    if (g.q() != q_ || f.q() != q_) throw std::invalid_argument("residue_class_prime_set: wrong field");
    if (!g.is_monic() || g.degree() < 1) throw std::invalid_argument("residue_class_prime_set: modulus must be monic");
    if (f.degree() >= g.degree()) throw std::invalid_argument("residue_class_prime_set: need deg f < deg g");
    if (gcd(f, g).degree() != 0) {
        throw std::invalid_argument("residue_class_prime_set: " + f.to_string() + " and " + g.to_string() +
                                    " are not coprime");
    }
    Rational density(BigInt(1), unit_count(g));
    auto table = irreducibles_;
    std::string desc = "P = " + f.to_string() + " mod " + g.to_string();
    return PrimeSet([table, g, f](const Prime& p) { return p.id < table->size() && (*table)[p.id] % g == f; },
                    density, desc);
}

}  // namespace asg::poly
