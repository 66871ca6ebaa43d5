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

#include "asg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace asg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp && out != kSaturated; ++i) out = saturating_mul(out, base);
    return out;
}

}  // namespace

// --- Element -------------------------------------------------------------

Element::Element(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].mult == 0) throw std::invalid_argument("Element: zero multiplicity");
        if (i > 0 && factors_[i - 1].prime >= factors_[i].prime) {
            throw std::invalid_argument("Element: prime ids must be strictly increasing");
        }
    }
}

bool Element::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.mult == 1; });
}

std::uint32_t Element::multiplicity(PrimeId id) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), id,
                               [](const Factor& f, PrimeId p) { return f.prime < p; });
    return (it != factors_.end() && it->prime == id) ? it->mult : 0;
}

bool Element::divides(const Element& g) const {
    auto it = g.factors_.begin();
    for (const Factor& f : factors_) {
        while (it != g.factors_.end() && it->prime < f.prime) ++it;
        if (it == g.factors_.end() || it->prime != f.prime || it->mult < f.mult) return false;
    }
    return true;
}

Element Element::cofactor_in(const Element& g) const {
    if (!divides(g)) throw std::invalid_argument("Element::cofactor_in: not a divisor");
    std::vector<Factor> out;
    out.reserve(g.factors_.size());
    auto it = factors_.begin();
    for (const Factor& f : g.factors_) {
        std::uint32_t sub = 0;
        if (it != factors_.end() && it->prime == f.prime) sub = (it++)->mult;
        if (f.mult > sub) out.push_back({f.prime, f.mult - sub});
    }
    Element e;
    e.factors_ = std::move(out);
    return e;
}

Element operator*(const Element& a, const Element& b) {
    std::vector<Factor> out;
    out.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->prime < j->prime)) {
            out.push_back(*i++);
        } else if (i == a.factors_.end() || j->prime < i->prime) {
            out.push_back(*j++);
        } else {
            out.push_back({i->prime, i->mult + j->mult});
            ++i;
            ++j;
        }
    }
    Element e;
    e.factors_ = std::move(out);
    return e;
}

// --- Semigroup -------------------------------------------------------------

Semigroup::Semigroup(std::string name, Ordering ordering, NormKind norm_kind, std::vector<Prime> primes,
                     std::uint64_t horizon)
    : name_(std::move(name)),
      ordering_(ordering),
      norm_kind_(norm_kind),
      primes_(std::move(primes)),
      horizon_(horizon) {
    if (ordering_ == Ordering::Norm && norm_kind_ == NormKind::Symbolic) {
        throw std::invalid_argument("Semigroup: norm ordering needs rational norms");
    }
    keys_.reserve(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const Prime& p = primes_[i];
        if (p.id != i) throw std::invalid_argument("Semigroup: prime ids must be dense ordinals");
        if (ordering_ == Ordering::Degree) {
            if (p.degree < 1) throw std::invalid_argument("Semigroup: prime of degree 0");
            keys_.push_back(p.degree);
        } else {
            if (p.norm <= 1 || p.norm.get_den() != 1 || !p.norm.get_num().fits_ulong_p()) {
                throw std::invalid_argument("Semigroup: norms must be integers > 1 in norm ordering");
            }
            keys_.push_back(p.norm.get_num().get_ui());
        }
        if (norm_kind_ == NormKind::Rational && p.norm <= 1) {
            throw std::invalid_argument("Semigroup: prime norm must exceed 1");
        }
        if (i > 0 && keys_[i - 1] > keys_[i]) {
            throw std::invalid_argument("Semigroup: primes must be sorted by size");
        }
    }
}

std::uint64_t Semigroup::key(const Element& g) const {
    std::uint64_t out = identity_key();
    for (const Factor& f : g.factors()) {
        if (ordering_ == Ordering::Degree) {
            out += keys_.at(f.prime) * f.mult;
        } else {
            out = saturating_mul(out, saturating_pow(keys_.at(f.prime), f.mult));
        }
    }
    return out;
}

std::uint64_t Semigroup::degree(const Element& g) const {
    std::uint64_t out = 0;
    for (const Factor& f : g.factors()) out += primes_.at(f.prime).degree * f.mult;
    return out;
}

Rational Semigroup::norm(const Element& g) const {
    if (norm_kind_ == NormKind::Symbolic) {
        throw std::logic_error("Semigroup::norm: norms of " + name_ + " are symbolic");
    }
    Rational out = 1;
    for (const Factor& f : g.factors()) out *= power(primes_.at(f.prime).norm, f.mult);
    return out;
}

std::string Semigroup::label(const Element& g) const {
    if (g.is_identity()) return "e";
    std::string out;
    for (const Factor& f : g.factors()) {
        if (!out.empty()) out += "*";
        out += "(" + primes_.at(f.prime).label + ")";
        if (f.mult > 1) out += "^" + std::to_string(f.mult);
    }
    return out;
}

void Semigroup::for_each_element(std::uint64_t max_key,
                                 const std::function<void(const Element&, std::uint64_t)>& visit) const {
    if (max_key > horizon_) {
        throw std::out_of_range("Semigroup::enumerate: " + std::to_string(max_key) + " exceeds the prime table horizon " +
                                std::to_string(horizon_));
    }
    if (max_key < identity_key()) return;
    std::vector<Factor> stack;
    const bool additive = ordering_ == Ordering::Degree;

    auto recurse = [&](auto&& self, std::size_t start, std::uint64_t current) -> void {
        visit(Element(stack), current);
        for (std::size_t i = start; i < primes_.size(); ++i) {
            std::uint64_t k = keys_[i];
            std::uint64_t next = additive ? current + k : saturating_mul(current, k);
            if (next > max_key) break;
            std::uint32_t mult = 1;
            while (next <= max_key) {
                stack.push_back({static_cast<PrimeId>(i), mult});
                self(self, i + 1, next);
                stack.pop_back();
                ++mult;
                next = additive ? next + k : saturating_mul(next, k);
            }
        }
    };
    recurse(recurse, 0, identity_key());
}

std::vector<Element> Semigroup::enumerate(std::uint64_t max_key) const {
    std::vector<std::pair<std::uint64_t, Element>> keyed;
    for_each_element(max_key, [&](const Element& g, std::uint64_t k) { keyed.emplace_back(k, g); });
    std::sort(keyed.begin(), keyed.end());
    std::vector<Element> out;
    out.reserve(keyed.size());
    for (auto& [k, g] : keyed) out.push_back(std::move(g));
    return out;
}

std::pair<PrimeId, PrimeId> Semigroup::primes_with_key(std::uint64_t k) const {
    auto lo = std::lower_bound(keys_.begin(), keys_.end(), k);
    auto hi = std::upper_bound(keys_.begin(), keys_.end(), k);
    return {static_cast<PrimeId>(lo - keys_.begin()), static_cast<PrimeId>(hi - keys_.begin())};
}

// --- PrimeSet --------------------------------------------------------------

PrimeSet::PrimeSet(std::function<bool(const Prime&)> membership, std::optional<Rational> known_density,
                   std::string description)
    : membership_(std::move(membership)), known_density_(std::move(known_density)), description_(std::move(description)) {
    if (known_density_ && (*known_density_ < 0 || *known_density_ > 1)) {
        throw std::invalid_argument("PrimeSet: density must lie in [0, 1]");
    }
}

PrimeSet PrimeSet::all() {
    return PrimeSet([](const Prime&) { return true; }, Rational(1), "all");
}

PrimeSet PrimeSet::none() {
    return PrimeSet([](const Prime&) { return false; }, Rational(0), "none");
}

PrimeSet PrimeSet::of_ids(std::vector<bool> member, std::string description) {
    return PrimeSet([member = std::move(member)](const Prime& p) { return p.id < member.size() && member[p.id]; },
                    std::nullopt, std::move(description));
}

std::vector<bool> PrimeSet::mask(const Semigroup& sg) const {
    std::vector<bool> out(sg.prime_count());
    for (const Prime& p : sg.primes()) out[p.id] = contains(p);
    return out;
}

// --- ArithFn ---------------------------------------------------------------

ArithFn ArithFn::convolution_identity() {
    return {[](const Element& g) { return Rational(g.is_identity() ? 1 : 0); }, Support::IdentityOnly, true};
}

ArithFn ArithFn::constant_one() {
    return {[](const Element&) { return Rational(1); }, Support::All, true};
}

}  // namespace asg
