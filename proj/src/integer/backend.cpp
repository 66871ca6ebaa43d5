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

#include "asg/integer/backend.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace asg::integer {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t out = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) out = mul_mod(out, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// p = a^2 + b^2 with a > b > 0, for a prime p = 1 (mod 4)
std::pair<std::uint64_t, std::uint64_t> two_squares(std::uint64_t p) {
    std::uint64_t x = 0;
    for (std::uint64_t c = 2; c < p; ++c) {
        if (pow_mod(c, (p - 1) / 2, p) == p - 1) {
            x = pow_mod(c, (p - 1) / 4, p);
            break;
        }
    }
    // Cornacchia: Euclid on (p, x) until the remainder drops below sqrt(p)
    std::uint64_t a = p;
    std::uint64_t b = x;
    const std::uint64_t root = isqrt(p);
    while (b > root) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    std::uint64_t other = isqrt(p - b * b);
    if (other * other + b * b != p) throw std::logic_error("two_squares: decomposition failed");
    return {std::max(b, other), std::min(b, other)};
}

std::string gaussian_label(std::int64_t re, std::int64_t im) {
    std::string out = std::to_string(re);
    if (im == 0) return out;
    out += im > 0 ? "+" : "-";
    std::int64_t mag = im > 0 ? im : -im;
    if (mag != 1) out += std::to_string(mag);
    return out + "i";
}

}  // namespace

// --- IntegerSieve ------------------------------------------------------------

IntegerSieve::IntegerSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2 || limit > kMaxSieveLimit) {
        throw std::out_of_range("IntegerSieve: limit must lie in [2, " + std::to_string(kMaxSieveLimit) + "]");
    }
    spf_.assign(limit + 1, 0);
    mu_.assign(limit + 1, 0);
    phi_.assign(limit + 1, 0);
    mu_[1] = 1;
    phi_[1] = 1;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (spf_[n] == 0) {
            spf_[n] = static_cast<std::uint32_t>(n);
            mu_[n] = -1;
            phi_[n] = static_cast<std::uint32_t>(n - 1);
            primes_.push_back(static_cast<std::uint32_t>(n));
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[n] || n * p > limit) break;
            const std::uint64_t m = n * p;
            spf_[m] = p;
            if (p == spf_[n]) {
                mu_[m] = 0;
                phi_[m] = phi_[n] * p;
            } else {
                mu_[m] = static_cast<std::int8_t>(-mu_[n]);
                phi_[m] = phi_[n] * (p - 1);
            }
        }
    }
}

std::uint32_t IntegerSieve::prime_index(std::uint64_t p) const {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime in the sieve");
    auto it = std::lower_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(p));
    return static_cast<std::uint32_t>(it - primes_.begin());
}

// --- IntegerBackend -----------------------------------------------------------

IntegerBackend::IntegerBackend(std::uint64_t limit) : sieve_(std::make_shared<const IntegerSieve>(limit)) {
    std::vector<Prime> primes;
    primes.reserve(sieve_->primes().size());
    for (std::size_t i = 0; i < sieve_->primes().size(); ++i) {
        std::uint32_t p = sieve_->primes()[i];
        primes.push_back({static_cast<PrimeId>(i), 0, Rational(p), std::to_string(p)});
    }
    semigroup_ =
        std::make_shared<const Semigroup>("Z", Ordering::Norm, NormKind::Rational, std::move(primes), limit);
}

Element IntegerBackend::factor_integer(std::uint64_t n) const {
    const std::uint64_t lim = limit();
    if (n < 1 || n / lim > lim) {
        throw std::out_of_range("factor_integer: " + std::to_string(n) + " outside [1, limit^2]");
    }
    std::vector<Factor> factors;
    auto push = [&](std::uint64_t p) {
        auto id = sieve_->prime_index(p);
        if (!factors.empty() && factors.back().prime == id) {
            ++factors.back().mult;
        } else {
            factors.push_back({id, 1});
        }
    };
    if (n > lim) {
        for (std::uint32_t p : sieve_->primes()) {
            if (static_cast<std::uint64_t>(p) * p > n || n <= lim) break;
            while (n % p == 0) {
                push(p);
                n /= p;
            }
        }
        if (n > lim) {
            throw std::out_of_range("factor_integer: prime factor " + std::to_string(n) + " beyond the prime table");
        }
    }
    while (n > 1) {
        std::uint32_t p = sieve_->spf(n);
        push(p);
        n /= p;
    }
    return Element(std::move(factors));
}

std::uint64_t IntegerBackend::value(const Element& g) const { return semigroup_->key(g); }

PrimeSet IntegerBackend::residue_prime_set(std::uint64_t k, std::uint64_t l) const {
    if (k == 0) throw std::invalid_argument("residue_prime_set: modulus must be positive");
    if (std::gcd(k, l) != 1) {
        throw std::invalid_argument("residue_prime_set: gcd(" + std::to_string(k) + ", " + std::to_string(l) +
                                    ") != 1");
    }
    std::uint64_t phi = k;
    for (std::uint64_t m = k, p = 2; m > 1; ++p) {
        if (p * p > m) p = m;
        if (m % p == 0) {
            phi = phi / p * (p - 1);
            while (m % p == 0) m /= p;
        }
    }
    const std::uint64_t residue = l % k;
    return PrimeSet([k, residue](const Prime& p) { return p.norm.get_num().get_ui() % k == residue; },
                    Rational(1, phi), "p = " + std::to_string(residue) + " mod " + std::to_string(k));
}

// --- GaussianBackend ----------------------------------------------------------

std::string to_string(SplitType t) {
    switch (t) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ramified";
    }
    return "?";
}

GaussianBackend::GaussianBackend(std::uint64_t limit)
    : limit_(limit), sieve_(std::make_shared<const IntegerSieve>(limit)) {
    struct Entry {
        std::uint64_t norm;
        GaussianPrime info;
    };
    std::vector<Entry> entries;
    for (std::uint32_t p : sieve_->primes()) {
        if (p == 2) {
            entries.push_back({2, {2, SplitType::Ramified, 1, 1}});
        } else if (p % 4 == 1) {
            auto [a, b] = two_squares(p);
            auto sa = static_cast<std::int64_t>(a);
            auto sb = static_cast<std::int64_t>(b);
            entries.push_back({p, {p, SplitType::Split, sb, sa}});
            entries.push_back({p, {p, SplitType::Split, sa, sb}});
        } else if (static_cast<std::uint64_t>(p) * p <= limit) {
            entries.push_back({static_cast<std::uint64_t>(p) * p, {p, SplitType::Inert, p, 0}});
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.norm < y.norm; });

    std::vector<Prime> primes;
    std::vector<GaussianPrime> info;
    primes.reserve(entries.size());
    info.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        primes.push_back({static_cast<PrimeId>(i), 0, Rational(e.norm), gaussian_label(e.info.re, e.info.im)});
        info.push_back(e.info);
    }
    info_ = std::make_shared<const std::vector<GaussianPrime>>(std::move(info));
    semigroup_ =
        std::make_shared<const Semigroup>("Z[i]", Ordering::Norm, NormKind::Rational, std::move(primes), limit);
}

Element GaussianBackend::factor_gaussian_integer(std::int64_t re, std::int64_t im) const {
    if (re == 0 && im == 0) throw std::invalid_argument("factor_gaussian_integer: zero has no ideal factorisation");
    const auto are = static_cast<unsigned __int128>(re < 0 ? -re : re);
    const auto aim = static_cast<unsigned __int128>(im < 0 ? -im : im);
    const unsigned __int128 wide = are * are + aim * aim;
    if (wide > limit_) throw std::out_of_range("factor_gaussian_integer: norm beyond the limit");
    std::uint64_t n = static_cast<std::uint64_t>(wide);

    // prime ids for each rational prime, found by norm lookup
    auto ids_with_norm = [&](std::uint64_t norm) { return semigroup_->primes_with_key(norm); };

    std::vector<Factor> factors;
    __int128 zr = re;
    __int128 zi = im;
    while (n > 1) {
        const std::uint64_t p = sieve_->spf(n);
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p == 2) {
            factors.push_back({ids_with_norm(2).first, e});
        } else if (p % 4 == 3) {
            factors.push_back({ids_with_norm(p * p).first, e / 2});
        } else {
            auto [first, last] = ids_with_norm(p);
            const GaussianPrime& pi = info_->at(first);
            // (zr + zi i)(re - im i) / p must be integral for each power of pi
            std::uint32_t k = 0;
            for (; k < e; ++k) {
                __int128 nr = zr * pi.re + zi * pi.im;
                __int128 ni = zi * pi.re - zr * pi.im;
                if (nr % static_cast<__int128>(p) != 0 || ni % static_cast<__int128>(p) != 0) break;
                zr = nr / static_cast<__int128>(p);
                zi = ni / static_cast<__int128>(p);
            }
            if (k > 0) factors.push_back({first, k});
            if (e > k) factors.push_back({static_cast<PrimeId>(last - 1), e - k});
        }
    }
    std::sort(factors.begin(), factors.end());
    return Element(std::move(factors));
}

PrimeSet GaussianBackend::split_type_prime_set(const std::string& type) const {
    auto info = info_;
    if (type == "split" || type == "inert" || type == "ramified") {
        SplitType want = type == "split" ? SplitType::Split : type == "inert" ? SplitType::Inert : SplitType::Ramified;
        return PrimeSet([info, want](const Prime& p) { return p.id < info->size() && (*info)[p.id].type == want; },
                        std::nullopt, type);
    }
    if (type == "split1mod8") {
        return PrimeSet(
            [info](const Prime& p) {
                return p.id < info->size() && (*info)[p.id].type == SplitType::Split &&
                       (*info)[p.id].rational_prime % 8 == 1;
            },
            std::nullopt, type);
    }
    throw std::invalid_argument("split_type_prime_set: unknown type '" + type + "'");
}

}  // namespace asg::integer
