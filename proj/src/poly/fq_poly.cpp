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

#include "asg/poly/fq_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace asg::poly {

FqPoly::FqPoly(unsigned q, std::vector<Elem> coeffs) : field_(&FiniteField::get(q)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_) {
        if (c >= q) throw std::invalid_argument("FqPoly: coefficient out of range for q=" + std::to_string(q));
    }
    trim();
}

void FqPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FqPoly FqPoly::monic_from_index(unsigned q, unsigned degree, std::uint64_t index) {
    std::vector<Elem> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) {
        c[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    if (index != 0) throw std::out_of_range("FqPoly::monic_from_index: index too large");
    c[degree] = 1;
    return FqPoly(q, std::move(c));
}

std::uint64_t FqPoly::index() const {
    if (!is_monic()) throw std::invalid_argument("FqPoly::index: polynomial is not monic");
    std::uint64_t out = 0;
    for (int i = degree() - 1; i >= 0; --i) out = out * q() + coeffs_[static_cast<std::size_t>(i)];
    return out;
}

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("FqPoly::parse: malformed term in '" + std::string(whole) + "'");
    unsigned v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("FqPoly::parse: malformed term in '" + std::string(whole) + "'");
        }
        v = v * 10 + static_cast<unsigned>(ch - '0');
        if (v > 1000000) throw std::invalid_argument("FqPoly::parse: number too large");
    }
    return v;
}

}  // namespace

FqPoly FqPoly::parse(unsigned q, std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw std::invalid_argument("FqPoly::parse: empty text");

    const auto& field = FiniteField::get(q);
    if (s.find('x') == std::string::npos && s.find(',') != std::string::npos) {
        std::vector<Elem> c;
        std::size_t start = 0;
        while (start <= s.size()) {
            std::size_t comma = s.find(',', start);
            if (comma == std::string::npos) comma = s.size();
            unsigned v = parse_unsigned(std::string_view(s).substr(start, comma - start), text);
            if (v >= q) throw std::invalid_argument("FqPoly::parse: coefficient out of range");
            c.push_back(static_cast<Elem>(v));
            start = comma + 1;
        }
        return FqPoly(q, std::move(c));
    }

    // sum of terms  [c]x^e | [c]x | c
    std::vector<Elem> c;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == '+') {
            if (pos == 0) throw std::invalid_argument("FqPoly::parse: leading '+'");
            ++pos;
        }
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string_view term = std::string_view(s).substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("FqPoly::parse: empty term in '" + std::string(text) + "'");
        unsigned coeff = 1;
        unsigned exp = 0;
        std::size_t xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            coeff = parse_unsigned(term, text);
        } else {
            if (xpos > 0) coeff = parse_unsigned(term.substr(0, xpos), text);
            std::string_view rest = term.substr(xpos + 1);
            if (rest.empty()) {
                exp = 1;
            } else if (rest[0] == '^') {
                exp = parse_unsigned(rest.substr(1), text);
            } else {
                throw std::invalid_argument("FqPoly::parse: malformed term in '" + std::string(text) + "'");
            }
        }
        if (coeff >= q) throw std::invalid_argument("FqPoly::parse: coefficient out of range");
        if (exp > 4096) throw std::invalid_argument("FqPoly::parse: exponent too large");
        if (c.size() <= exp) c.resize(exp + 1, 0);
        c[exp] = field.add(c[exp], static_cast<Elem>(coeff));
        pos = end;
    }
    return FqPoly(q, std::move(c));
}

std::string FqPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Elem c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string FqPoly::to_coefficient_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    if (a.q() != b.q()) throw std::invalid_argument("FqPoly: mixed fields");
    std::vector<FqPoly::Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        FqPoly::Elem x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
        FqPoly::Elem y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
        c[i] = a.field_->add(x, y);
    }
    return FqPoly(a.q(), std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    if (a.q() != b.q()) throw std::invalid_argument("FqPoly: mixed fields");
    std::vector<FqPoly::Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        FqPoly::Elem x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
        FqPoly::Elem y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
        c[i] = a.field_->sub(x, y);
    }
    return FqPoly(a.q(), std::move(c));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    if (a.q() != b.q()) throw std::invalid_argument("FqPoly: mixed fields");
    if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.q());
    const auto& f = *a.field_;
    std::vector<FqPoly::Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return FqPoly(a.q(), std::move(c));
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    if (a.q() != b.q()) throw std::invalid_argument("FqPoly: mixed fields");
    if (b.is_zero()) throw std::domain_error("FqPoly: division by zero");
    const auto& f = *a.field_;
    std::vector<FqPoly::Elem> rem = a.coeffs_;
    const int db = b.degree();
    const int da = a.degree();
    std::vector<FqPoly::Elem> quo(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, 0);
    const FqPoly::Elem lead_inv = f.inv(b.leading());
    for (int top = da; top >= db; --top) {
        FqPoly::Elem c = rem[static_cast<std::size_t>(top)];
        if (c == 0) continue;
        FqPoly::Elem factor = f.mul(c, lead_inv);
        std::size_t shift = static_cast<std::size_t>(top - db);
        quo[shift] = factor;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, b.coeffs_[i]));
        }
    }
    return {FqPoly(a.q(), std::move(quo)), FqPoly(a.q(), std::move(rem))};
}

FqPoly FqPoly::make_monic() const {
    if (is_zero()) return *this;
    FiniteField::Elem inv = field_->inv(leading());
    std::vector<Elem> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(coeffs_[i], inv);
    return FqPoly(q(), std::move(c));
}

FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

bool operator<(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

}  // namespace asg::poly
