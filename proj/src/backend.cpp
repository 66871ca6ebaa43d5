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

#include "asg/backend.hpp"

#include <charconv>
#include <stdexcept>

namespace asg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t parse_u64(std::string_view s, const std::string& what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("bad " + what + ": '" + std::string(s) + "'");
    }
    return v;
}

std::int64_t parse_i64(std::string_view s, const std::string& what) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("bad " + what + ": '" + std::string(s) + "'");
    }
    return v;
}

// "k,r" -> (k, r)
std::pair<std::string, std::string> split_pair(std::string_view body, const std::string& spec) {
    auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
        throw std::invalid_argument("prime set '" + spec + "' needs exactly two comma-separated parts");
    }
    return {std::string(body.substr(0, comma)), std::string(body.substr(comma + 1))};
}

// a, bi, a+bi, a-bi, with "i" meaning 1i
std::pair<std::int64_t, std::int64_t> parse_gaussian(std::string text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty Gaussian integer");
    if (s.back() != 'i') return {parse_i64(s, "Gaussian integer"), 0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "0" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return {parse_i64(re_part, "Gaussian integer"), parse_i64(im_part, "Gaussian integer")};
}

}  // namespace

Backend Backend::poly(unsigned q, unsigned max_degree, Ordering ordering) {
    return Backend(std::make_shared<const poly::PolyBackend>(q, max_degree, ordering));
}

Backend Backend::integers(std::uint64_t limit) {
    return Backend(std::make_shared<const integer::IntegerBackend>(limit));
}

Backend Backend::gaussian(std::uint64_t limit) {
    return Backend(std::make_shared<const integer::GaussianBackend>(limit));
}

Backend Backend::graph(graph::Graph g, std::size_t max_len, unsigned workers) {
    return Backend(std::make_shared<const graph::GraphBackend>(std::move(g), max_len, workers));
}

std::string Backend::id() const {
    return std::visit(Overloaded{
                          [](const std::shared_ptr<const poly::PolyBackend>& b) {
                              return "poly:q=" + std::to_string(b->q());
                          },
                          [](const std::shared_ptr<const integer::IntegerBackend>&) { return std::string("int:Q"); },
                          [](const std::shared_ptr<const integer::GaussianBackend>&) { return std::string("int:Qi"); },
                          [](const std::shared_ptr<const graph::GraphBackend>& b) {
                              return "graph:" + (b->graph().name().empty() ? std::string("custom") : b->graph().name());
                          },
                      },
                      impl_);
}

const Semigroup& Backend::semigroup() const { return *shared_semigroup(); }

std::shared_ptr<const Semigroup> Backend::shared_semigroup() const {
    return std::visit([](const auto& b) { return b->shared_semigroup(); }, impl_);
}

const poly::PolyBackend& Backend::as_poly() const {
    if (kind() != BackendKind::Poly) throw std::logic_error("backend is not polynomial");
    return *std::get<0>(impl_);
}

const integer::IntegerBackend& Backend::as_integer() const {
    if (kind() != BackendKind::Integer) throw std::logic_error("backend is not the rational integers");
    return *std::get<1>(impl_);
}

const integer::GaussianBackend& Backend::as_gaussian() const {
    if (kind() != BackendKind::Gaussian) throw std::logic_error("backend is not the Gaussian integers");
    return *std::get<2>(impl_);
}

const graph::GraphBackend& Backend::as_graph() const {
    if (kind() != BackendKind::Graph) throw std::logic_error("backend is not a graph");
    return *std::get<3>(impl_);
}

PrimeSet Backend::prime_set(const std::string& spec) const {
    if (spec == "all") return PrimeSet::all();
    if (spec == "none") return PrimeSet::none();

    const std::string_view view(spec);
    if (view.starts_with("mod:")) {
        auto [left, right] = split_pair(view.substr(4), spec);
        switch (kind()) {
            case BackendKind::Integer:
                return as_integer().residue_prime_set(parse_u64(left, "modulus"), parse_u64(right, "residue"));
            case BackendKind::Poly: {
                unsigned q = as_poly().q();
                return as_poly().residue_class_prime_set(poly::FqPoly::parse(q, left), poly::FqPoly::parse(q, right));
            }
            default: throw std::invalid_argument("prime set '" + spec + "' needs the int or poly backend");
        }
    }
    if (view.starts_with("len:")) {
        if (kind() != BackendKind::Graph) {
            throw std::invalid_argument("prime set '" + spec + "' needs the graph backend");
        }
        auto [left, right] = split_pair(view.substr(4), spec);
        std::uint64_t k = parse_u64(left, "modulus");
        if (k == 0) throw std::invalid_argument("prime set '" + spec + "': modulus must be positive");
        return as_graph().length_class_prime_set(k, parse_u64(right, "residue"));
    }
    if (spec == "split" || spec == "inert" || spec == "ramified" || spec == "split1mod8") {
        if (kind() != BackendKind::Gaussian) {
            throw std::invalid_argument("prime set '" + spec + "' needs the Gaussian backend");
        }
        return as_gaussian().split_type_prime_set(spec);
    }
    throw std::invalid_argument("unknown prime set '" + spec + "'");
}

Element Backend::parse_element(const std::string& text) const {
    if (text == "e" || text == "1") return Element::identity();
    switch (kind()) {
        case BackendKind::Integer: return as_integer().factor_integer(parse_u64(text, "integer"));
        case BackendKind::Poly: return as_poly().factor(poly::FqPoly::parse(as_poly().q(), text));
        case BackendKind::Gaussian: {
            auto [re, im] = parse_gaussian(text);
            return as_gaussian().factor_gaussian_integer(re, im);
        }
        case BackendKind::Graph: break;
    }
    throw std::invalid_argument("graph elements have no text form");
}

}  // namespace asg
