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
#include "asg/poly/backend.hpp"
#include "asg/semigroup.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <random>

using namespace asg;
using asg::poly::FqPoly;
using asg::poly::PolyBackend;

namespace {

const PolyBackend& f2() {
    static const PolyBackend backend(2, 10);
    return backend;
}

Element f2_elem(const char* text) { return f2().factor(FqPoly::parse(2, text)); }

std::vector<bool> s_of(std::initializer_list<const char*> polys) {
    std::vector<bool> mask(f2().semigroup().prime_count(), false);
    for (const char* t : polys) {
        Element e = f2_elem(t);
        REQUIRE(e.distinct() == 1);
        mask[e.factors()[0].prime] = true;
    }
    return mask;
}

}  // namespace

TEST_CASE("element invariants") {
    CHECK_THROWS_AS(Element({{2, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Element({{1, 0}}), std::invalid_argument);
    CHECK(Element::identity().is_identity());
    Element a({{0, 2}, {3, 1}});
    Element b({{1, 1}, {3, 2}});
    Element ab = a * b;
    CHECK(ab == Element({{0, 2}, {1, 1}, {3, 3}}));
    CHECK(a.divides(ab));
    CHECK(a.cofactor_in(ab) == b);
    CHECK_THROWS_AS(ab.cofactor_in(a), std::invalid_argument);
    CHECK(f2().semigroup().degree(Element::identity()) == 0);
    CHECK(f2().semigroup().norm(Element::identity()) == 1);
}

TEST_CASE("mobius") {
    CHECK(mobius(Element::identity()) == 1);
    CHECK(mobius(Element::prime(4)) == -1);
    CHECK(mobius(Element({{4, 2}})) == 0);
    CHECK(mobius(f2_elem("x^2+x")) == 1);
}

TEST_CASE("divisors") {
    auto d0 = divisors(Element::identity());
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].first.is_identity());
    CHECK(d0[0].second.is_identity());

    auto d1 = divisors(Element::prime(3));
    REQUIRE(d1.size() == 2);
    CHECK(d1[0].first.is_identity());
    CHECK(d1[1].first == Element::prime(3));

    Element g({{1, 1}, {2, 2}});
    auto d = divisors(g);
    CHECK(d.size() == 6);
    for (const auto& [h, rest] : d) CHECK(h * rest == g);
    for (std::size_t i = 1; i < d.size(); ++i) {
        std::vector<std::uint32_t> prev, cur;
        for (PrimeId p : {1u, 2u}) {
            prev.push_back(d[i - 1].first.multiplicity(p));
            cur.push_back(d[i].first.multiplicity(p));
        }
        CHECK(prev < cur);
    }
}

TEST_CASE("convolution") {
    const ArithFn mu = mobius_fn();
    const ArithFn id = ArithFn::convolution_identity();
    const ArithFn one = ArithFn::constant_one();
    for (const Element& g : f2().semigroup().enumerate(6)) {
        CHECK(dirichlet_convolve(mu, id, g) == mobius(g));
        CHECK(dirichlet_convolve(mu, one, g) == (g.is_identity() ? 1 : 0));
        CHECK(mobius_convolve(one, g) == dirichlet_convolve(mu, one, g));
    }
    CHECK(dirichlet_convolve(mu, one, Element::prime(0)) == 0);
    CHECK(dirichlet_convolve(mu, one, Element::identity()) == 1);
}

TEST_CASE("min and max prime data") {
    const Semigroup& sg = f2().semigroup();
    CHECK_THROWS_AS(min_prime_data(sg, Element::identity()), std::domain_error);

    Element x = f2_elem("x");
    auto m1 = min_prime_data(sg, x);
    CHECK(m1.key == 1);
    CHECK(m1.attaining == std::vector<PrimeId>{x.factors()[0].prime});

    auto m2 = min_prime_data(sg, f2_elem("x^2+x"));
    CHECK(m2.key == 1);
    CHECK(m2.attaining.size() == 2);

    auto m3 = min_prime_data(sg, f2_elem("x^4+x^3+x^2"));  // x^2 (x^2+x+1)
    CHECK(m3.key == 1);
    CHECK(m3.attaining == std::vector<PrimeId>{x.factors()[0].prime});

    auto all = std::vector<bool>(sg.prime_count(), true);
    auto mx = max_prime_data(sg, x, all);
    CHECK(mx.key == 1);
    CHECK(mx.q_s == 1);
    CHECK(max_prime_data(sg, f2_elem("x^2+x"), all).q_s == 2);
    auto only_x = s_of({"x"});
    auto mp = max_prime_data(sg, f2_elem("x^3+1"), only_x);  // (x+1)(x^2+x+1)
    CHECK(mp.key == 2);
    CHECK(mp.q_s == 0);
    auto me = max_prime_data(sg, Element::identity(), all);
    CHECK(me.key == 0);
    CHECK(me.q_s == 0);
}

TEST_CASE("distinguished elements") {
    const Semigroup& sg = f2().semigroup();
    auto only_x = s_of({"x"});
    CHECK(is_distinguished(sg, Element::identity(), only_x).member);
    CHECK_FALSE(is_distinguished(sg, f2_elem("x^2+x"), only_x).member);
    auto d = is_distinguished(sg, f2_elem("x^4+x^3+x^2"), only_x);
    CHECK(d.member);
    REQUIRE(d.p_min.has_value());
    CHECK(*d.p_min == f2_elem("x").factors()[0].prime);

    // brute force over every F2 polynomial of degree <= 10
    std::mt19937_64 rng(7);
    std::vector<std::vector<bool>> masks = {std::vector<bool>(sg.prime_count(), true),
                                            std::vector<bool>(sg.prime_count(), false), only_x};
    std::vector<bool> random(sg.prime_count());
    for (std::size_t i = 0; i < random.size(); ++i) random[i] = rng() & 1;
    masks.push_back(random);
    for (const auto& mask : masks) {
        sg.for_each_element(10, [&](const Element& g, std::uint64_t) {
            CHECK(is_distinguished(sg, g, mask).member == testing::brute_distinguished(sg, g, mask));
        });
    }
}

TEST_CASE("duality residual") {
    const Semigroup& sg = f2().semigroup();
    auto all = std::vector<bool>(sg.prime_count(), true);
    SizeFn positive([](std::uint64_t n) { return Rational(n > 0 ? 1 : 0); }, "positive");
    SizeFn ident([](std::uint64_t n) { return Rational(n); }, "n");
    SizeFn bad([](std::uint64_t) { return Rational(1); }, "one");

    Element x = f2_elem("x");
    CHECK(duality_residual(sg, x, all, positive) == 0);
    CHECK(duality_residual(sg, f2_elem("x^4+x^3+x^2"), all, ident) == 0);
    CHECK(duality_residual(sg, f2_elem("x^4+x^3+x^2"), PrimeSet::none(), ident) == 0);
    CHECK_THROWS_AS(duality_residual(sg, x, all, bad), std::invalid_argument);

    std::vector<std::function<Rational(std::uint64_t)>> fs = {
        [](std::uint64_t n) { return Rational(n); },
        [](std::uint64_t n) -> Rational { return Rational(n * n) - Rational(3 * n); },
        [](std::uint64_t n) { return n == 0 ? Rational(0) : Rational(1, n + 1); },
    };
    std::mt19937_64 rng(11);
    std::vector<bool> random(sg.prime_count());
    for (std::size_t i = 0; i < random.size(); ++i) random[i] = rng() % 3 == 0;
    std::vector<std::vector<bool>> masks = {all, std::vector<bool>(sg.prime_count(), false), random};
    for (const auto& mask : masks) {
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            SizeFn f(fs[fi], "f");
            sg.for_each_element(8, [&](const Element& g, std::uint64_t) {
                CHECK(duality_residual(sg, g, mask, f) == 0);
                CHECK(testing::brute_duality_gap(sg, g, mask, fs[fi]) == 0);
            });
        }
    }
}

TEST_CASE("euler phi") {
    const Semigroup& sg = f2().semigroup();
    CHECK(euler_phi(sg, Element::identity()) == 1);
    CHECK(euler_phi(sg, f2_elem("x^2")) == 2);
    CHECK(euler_phi(sg, f2_elem("x^2+x")) == 1);
    auto elems = sg.enumerate(4);
    for (const Element& g : elems) {
        for (const Element& h : elems) {
            bool coprime = true;
            for (const Factor& f : g.factors()) coprime = coprime && h.multiplicity(f.prime) == 0;
            if (coprime) CHECK(euler_phi(sg, g * h) == euler_phi(sg, g) * euler_phi(sg, h));
        }
    }
}

TEST_CASE("mobius sums vanish off the identity") {
    const Semigroup& sg = f2().semigroup();
    sg.for_each_element(9, [&](const Element& g, std::uint64_t) {
        int total = 0;
        for (const Element& h : testing::all_divisors(g)) total += mobius(h);
        CHECK(total == (g.is_identity() ? 1 : 0));
    });
}

TEST_CASE("prime sets") {
    CHECK(PrimeSet::all().known_density() == Rational(1));
    CHECK(PrimeSet::none().known_density() == Rational(0));
    CHECK_THROWS_AS(PrimeSet([](const Prime&) { return true; }, Rational(3, 2), "bad"), std::invalid_argument);
    auto s = PrimeSet::of_ids({false, true}, "second");
    CHECK(s.mask(f2().semigroup())[1]);
    CHECK_FALSE(s.mask(f2().semigroup())[0]);
    CHECK_FALSE(s.mask(f2().semigroup())[2]);
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_AS(f2().semigroup().enumerate(11), std::out_of_range);
    auto elems = f2().semigroup().enumerate(3);
    CHECK(elems.size() == 1 + 2 + 4 + 8);
    CHECK(elems.front().is_identity());
}
