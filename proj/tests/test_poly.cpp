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
#include "asg/series.hpp"

#include "doctest.h"

#include <set>

using namespace asg;
using namespace asg::poly;

namespace {

// Irreducibility by checking every monic divisor of degree <= d/2.
bool brute_irreducible(const FqPoly& f) {
    const unsigned q = f.q();
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= q;
        for (std::uint64_t i = 0; i < count; ++i) {
            if ((f % FqPoly::monic_from_index(q, static_cast<unsigned>(k), i)).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("field axioms") {
    for (unsigned q : FiniteField::supported_orders()) {
        const FiniteField& f = FiniteField::get(q);
        CAPTURE(q);
        for (unsigned a = 0; a < q; ++a) {
            auto ea = static_cast<FiniteField::Elem>(a);
            CHECK(f.add(ea, 0) == ea);
            CHECK(f.mul(ea, 1) == ea);
            CHECK(f.add(ea, f.neg(ea)) == 0);
            if (a) CHECK(f.mul(ea, f.inv(ea)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                auto eb = static_cast<FiniteField::Elem>(b);
                CHECK(f.add(ea, eb) == f.add(eb, ea));
                CHECK(f.mul(ea, eb) == f.mul(eb, ea));
                if (a && b) CHECK(f.mul(ea, eb) != 0);
                for (unsigned c = 0; c < q; ++c) {
                    auto ec = static_cast<FiniteField::Elem>(c);
                    CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
                    CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
                    CHECK(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)));
                }
            }
        }
        CHECK(f.characteristic() > 1);
    }
    CHECK_THROWS_AS(FiniteField::get(6), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::get(2).inv(0), std::domain_error);
}

TEST_CASE("polynomial text") {
    FqPoly a = FqPoly::parse(2, "x^2+x+1");
    CHECK(a.coefficients() == std::vector<FqPoly::Elem>{1, 1, 1});
    CHECK(a.to_string() == "x^2+x+1");
    CHECK(a.to_coefficient_string() == "1,1,1");
    CHECK(FqPoly::parse(2, "1,1,1") == a);
    CHECK(FqPoly::parse(3, "2x^3 + x + 2").to_coefficient_string() == "2,1,0,2");
    CHECK(FqPoly::parse(3, "2x^3+x+2").to_string() == "2x^3+x+2");
    CHECK(FqPoly::parse(2, "x+x") == FqPoly::zero(2));
    CHECK_THROWS_AS(FqPoly::parse(2, "2x"), std::invalid_argument);
    CHECK_THROWS_AS(FqPoly::parse(2, "x^"), std::invalid_argument);
    CHECK_THROWS_AS(FqPoly::parse(2, "+x"), std::invalid_argument);
    CHECK_THROWS_AS(FqPoly::parse(2, ""), std::invalid_argument);
    CHECK_THROWS_AS(FqPoly::parse(3, "1,,2"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    for (unsigned q : {2u, 3u, 4u, 9u}) {
        CAPTURE(q);
        for (std::uint64_t i = 0; i < q * q; ++i) {
            FqPoly a = FqPoly::monic_from_index(q, 2, i);
            CHECK(a.index() == i);
            for (std::uint64_t j = 0; j < q; ++j) {
                FqPoly b = FqPoly::monic_from_index(q, 1, j);
                auto [quo, rem] = divmod(a * b + FqPoly(q, {1}), b);
                CHECK(quo == a);
                CHECK(rem == FqPoly::one(q));
                CHECK((a * b) - a * b == FqPoly::zero(q));
                CHECK(gcd(a * b, b) == b);
            }
        }
    }
    CHECK_THROWS_AS(divmod(FqPoly::one(2), FqPoly::zero(2)), std::domain_error);
    CHECK(FqPoly::parse(2, "x+1") < FqPoly::parse(2, "x^2"));
    CHECK(FqPoly::parse(2, "x") < FqPoly::parse(2, "x+1"));
}

TEST_CASE("irreducible enumeration") {
    auto q2 = enumerate_irreducibles(2, 2);
    REQUIRE(q2.size() == 3);
    CHECK(q2[0].to_string() == "x");
    CHECK(q2[1].to_string() == "x+1");
    CHECK(q2[2].to_string() == "x^2+x+1");

    auto q3 = enumerate_irreducibles(3, 1);
    REQUIRE(q3.size() == 3);
    CHECK(q3[0].to_string() == "x");
    CHECK(q3[1].to_string() == "x+1");
    CHECK(q3[2].to_string() == "x+2");

    auto deg4 = enumerate_irreducibles(2, 4);
    CHECK(std::count_if(deg4.begin(), deg4.end(), [](const FqPoly& f) { return f.degree() == 4; }) == 3);

    CHECK_THROWS_AS(enumerate_irreducibles(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_irreducibles(2, 21), std::out_of_range);
    CHECK_THROWS_AS(enumerate_irreducibles(9, 8), std::out_of_range);

    for (unsigned q : FiniteField::supported_orders()) {
        CAPTURE(q);
        unsigned max_degree = q == 2 ? 12 : (q <= 4 ? 6 : 4);
        auto table = enumerate_irreducibles(q, max_degree);
        CHECK(std::is_sorted(table.begin(), table.end()));
        std::vector<BigInt> g;
        for (unsigned n = 0; n <= max_degree; ++n) g.push_back(power(BigInt(q), n));
        auto expected = inverse_euler_transform(g);
        std::vector<BigInt> found(max_degree + 1, 0);
        for (const auto& f : table) found[static_cast<std::size_t>(f.degree())] += 1;
        CHECK(found == expected);
        if (max_degree <= 6) {
            for (const auto& f : table) CHECK(brute_irreducible(f));
        }
    }
}

TEST_CASE("factorisation") {
    PolyBackend f2(2, 8);
    const Semigroup& sg = f2.semigroup();
    CHECK(f2.factor(FqPoly::one(2)).is_identity());
    CHECK(sg.label(f2.factor(FqPoly::parse(2, "x^2+x"))) == "(x)*(x+1)");
    CHECK(sg.label(f2.factor(FqPoly::parse(2, "x^2+1"))) == "(x+1)^2");
    CHECK_THROWS_AS(f2.factor(FqPoly::zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(f2.factor(FqPoly::parse(3, "x")), std::invalid_argument);

    // unique factorisation up to degree 6, both directions
    std::vector<FqPoly> polys;
    for (unsigned d = 0; d <= 6; ++d) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << d); ++i) polys.push_back(FqPoly::monic_from_index(2, d, i));
    }
    for (const auto& f : polys) {
        Element e = f2.factor(f);
        CHECK(f2.expand(e) == f);
        CHECK(sg.degree(e) == static_cast<std::uint64_t>(f.degree()));
    }
    for (std::size_t i = 0; i < polys.size(); i += 7) {
        for (std::size_t j = 0; j < polys.size(); j += 5) {
            if (polys[i].degree() + polys[j].degree() > 8) continue;
            CHECK(f2.factor(polys[i] * polys[j]) == f2.factor(polys[i]) * f2.factor(polys[j]));
        }
    }
    // enumeration of the semigroup matches the monic polynomials of each degree
    std::set<std::uint64_t> seen;
    sg.for_each_element(6, [&](const Element& g, std::uint64_t k) {
        FqPoly f = f2.expand(g);
        CHECK(static_cast<std::uint64_t>(f.degree()) == k);
        seen.insert((std::uint64_t{1} << 20) * k + f.index());
    });
    CHECK(seen.size() == polys.size());
}

TEST_CASE("norm ordering") {
    PolyBackend f3(3, 4, Ordering::Norm);
    const Semigroup& sg = f3.semigroup();
    CHECK(sg.horizon() == 81);
    CHECK(sg.key(0) == 3);
    Element g = f3.factor(FqPoly::parse(3, "x^3+x"));
    CHECK(sg.key(g) == 27);
    CHECK(sg.norm(g) == 27);
}

TEST_CASE("residue class prime sets") {
    PolyBackend f3(3, 4);
    auto s = f3.residue_class_prime_set(FqPoly::parse(3, "x"), FqPoly::one(3));
    CHECK(s.known_density() == Rational(1, 2));

    PolyBackend f2(2, 10);
    FqPoly g = FqPoly::parse(2, "x^2+x+1");
    CHECK(f2.residue_class_prime_set(g, FqPoly::one(2)).known_density() == Rational(1, 3));
    auto mod_x = f2.residue_class_prime_set(FqPoly::x(2), FqPoly::one(2));
    CHECK(mod_x.contains(f2.semigroup().prime(1)));   // x+1
    CHECK_FALSE(mod_x.contains(f2.semigroup().prime(0)));  // x

    CHECK_THROWS_AS(f2.residue_class_prime_set(g, FqPoly::x(2) * FqPoly::x(2)), std::invalid_argument);
    CHECK_THROWS_AS(f2.residue_class_prime_set(FqPoly::parse(2, "x^2+x"), FqPoly::x(2)), std::invalid_argument);
    CHECK(f2.unit_count(FqPoly::parse(2, "x^3+x^2")) == 2);  // x^2 (x+1)

    // classes partition the coprime irreducibles at every degree
    std::vector<FqPoly> residues;
    for (std::uint64_t i = 0; i < 4; ++i) {
        FqPoly f(2, {static_cast<FqPoly::Elem>(i & 1), static_cast<FqPoly::Elem>(i >> 1)});
        if (!f.is_zero() && gcd(f, g).degree() == 0) residues.push_back(f);
    }
    CHECK(residues.size() == 3);
    std::vector<PrimeSet> sets;
    for (const auto& f : residues) sets.push_back(f2.residue_class_prime_set(g, f));
    for (const Prime& p : f2.semigroup().primes()) {
        int hits = 0;
        for (const auto& set : sets) hits += set.contains(p) ? 1 : 0;
        CHECK(hits == (f2.prime_poly(p.id) == g ? 0 : 1));
    }
}
