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

#include "asg/poly/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace asg::poly {

namespace {

constexpr std::array<unsigned, 7> kSupported = {2, 3, 4, 5, 7, 8, 9};

struct Extension {
    unsigned p;
    unsigned k;
    std::vector<unsigned> modulus;  // monic, low to high, length k+1
};

Extension extension_for(unsigned q) {
    switch (q) {
        case 2: case 3: case 5: case 7: return {q, 1, {0, 1}};
        case 4: return {2, 2, {1, 1, 1}};      // t^2 + t + 1
        case 8: return {2, 3, {1, 1, 0, 1}};   // t^3 + t + 1
        case 9: return {3, 2, {1, 0, 1}};      // t^2 + 1
        default: throw std::invalid_argument("unsupported field order q=" + std::to_string(q));
    }
}

std::vector<unsigned> digits(unsigned value, unsigned p, unsigned k) {
    std::vector<unsigned> out(k);
    for (unsigned i = 0; i < k; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
    unsigned out = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) out = out * p + *it;
    return out;
}

}  // namespace

std::span<const unsigned> FiniteField::supported_orders() { return kSupported; }

const FiniteField& FiniteField::get(unsigned q) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<FiniteField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot) {
        try {
            slot.reset(new FiniteField(q));
        } catch (...) {
            cache.erase(q);
            throw;
        }
    }
    return *slot;
}

FiniteField::FiniteField(unsigned q) : q_(q) {
    Extension ext = extension_for(q);
    p_ = ext.p;
    const unsigned k = ext.k;
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    for (unsigned a = 0; a < q; ++a) {
        auto da = digits(a, p_, k);
        std::vector<unsigned> dn(k);
        for (unsigned i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elem>(undigits(dn, p_));
        for (unsigned b = 0; b < q; ++b) {
            auto db = digits(b, p_, k);
            std::vector<unsigned> ds(k);
            for (unsigned i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = static_cast<Elem>(undigits(ds, p_));

            // schoolbook product then reduction by the monic modulus
            std::vector<unsigned> prod(2 * k - 1, 0);
            for (unsigned i = 0; i < k; ++i) {
                for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            }
            for (unsigned top = 2 * k - 2; top >= k; --top) {
                unsigned c = prod[top];
                if (c == 0) continue;
                for (unsigned i = 0; i <= k; ++i) {
                    unsigned idx = top - k + i;
                    prod[idx] = (prod[idx] + (p_ - c) * ext.modulus[i]) % p_;
                }
            }
            prod.resize(k);
            mul_[a * q + b] = static_cast<Elem>(undigits(prod, p_));
        }
    }
    for (unsigned a = 1; a < q; ++a) {
        for (unsigned b = 1; b < q; ++b) {
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
        }
        if (inv_[a] == 0) throw std::logic_error("FiniteField: modulus is not irreducible");
    }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
    return inv_[a];
}

}  // namespace asg::poly
