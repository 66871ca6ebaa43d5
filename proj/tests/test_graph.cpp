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

#include "asg/graph/graph.hpp"
#include "asg/series.hpp"

#include "doctest.h"

#include <chrono>
#include <numeric>

using namespace asg;
using namespace asg::graph;

namespace {

Graph multigraph() { return Graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 2}}, "multi"); }

std::vector<Graph> corpus() {
    std::vector<Graph> out;
    for (const auto& name : Graph::named_graphs()) out.push_back(Graph::named(name));
    out.push_back(multigraph());
    return out;
}

// trace(W^m) with plain int64 dense products
std::vector<std::int64_t> dense_traces(const Graph& g, std::size_t n) {
    auto w = non_backtracking_matrix(g);
    const std::size_t k = w.size();
    std::vector<std::vector<std::int64_t>> p(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) p[i][i] = 1;
    std::vector<std::int64_t> out{static_cast<std::int64_t>(k)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::vector<std::int64_t>> q(k, std::vector<std::int64_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t l = 0; l < k; ++l) {
                if (!p[i][l]) continue;
                for (std::size_t j = 0; j < k; ++j) q[i][j] += p[i][l] * w[l][j];
            }
        }
        p = std::move(q);
        std::int64_t t = 0;
        for (std::size_t i = 0; i < k; ++i) t += p[i][i];
        out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 2}}), std::invalid_argument);               // degree 1
    CHECK_THROWS_AS(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::named("k7"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::parse_edge_list("0 1\n1 x\n"), std::invalid_argument);

    Graph m = Graph::parse_edge_list("# multigraph\n0 1\n0 1\n\n1 2\n2 0\n2 2\n");
    CHECK(m.vertex_count() == 3);
    CHECK(m.edge_count() == 5);
    CHECK(m.adjacency()[2][2] == 2);
    CHECK(m.adjacency()[0][1] == 2);
    CHECK(m.degree(2) == 4);
    CHECK(m.cycle_rank() == 3);

    for (const Graph& g : corpus()) {
        auto w = non_backtracking_matrix(g);
        for (std::size_t e = 0; e < g.oriented_count(); ++e) {
            CHECK(g.inverse(g.inverse(e)) == e);
            CHECK(std::accumulate(w[e].begin(), w[e].end(), 0) == g.degree(g.head(e)) - 1);
        }
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            for (std::size_t j = 0; j < g.vertex_count(); ++j) CHECK(g.adjacency()[i][j] == g.adjacency()[j][i]);
        }
    }
}

TEST_CASE("walk and prime counts") {
    Graph c5 = Graph::named("c5");
    auto n5 = closed_walk_counts(c5, 10);
    for (std::size_t m = 1; m < 5; ++m) CHECK(n5[m] == 0);
    CHECK(n5[5] == 10);
    auto p5 = prime_class_counts(c5, 12);
    for (std::size_t nu = 1; nu <= 12; ++nu) CHECK(p5[nu] == (nu == 5 ? 2 : 0));

    Graph k4 = Graph::named("k4");
    CHECK(closed_walk_counts(k4, 3)[3] == 24);
    CHECK(prime_class_counts(k4, 3)[3] == 8);
    CHECK(closed_walk_counts(Graph::named("k33"), 1)[1] == 0);
    CHECK(prime_class_counts(multigraph(), 1)[1] == 2);  // the loop, both ways

    for (const Graph& g : corpus()) {
        CAPTURE(g.name());
        auto walks = closed_walk_counts(g, 12);
        auto dense = dense_traces(g, 12);
        auto primes = prime_class_counts(g, 12);
        for (std::size_t m = 1; m <= 12; ++m) {
            CHECK(walks[m] == dense[m]);
            BigInt back = 0;
            for (std::size_t d = 1; d <= m; ++d) {
                if (m % d == 0) back += primes[d] * static_cast<unsigned long>(d);
            }
            CHECK(back == walks[m]);
        }
    }
}

TEST_CASE("primitive class enumeration") {
    Graph c5 = Graph::named("c5");
    auto classes = enumerate_primitive_classes(c5, 5);
    CHECK(classes.size() == 2);
    CHECK(enumerate_primitive_classes(Graph::named("k4"), 3).size() == 8);
    CHECK_THROWS_AS(enumerate_primitive_classes(c5, 15), std::out_of_range);

    for (const Graph& g : corpus()) {
        CAPTURE(g.name());
        auto enumerated = enumerate_primitive_classes(g, 10);
        auto counts = prime_class_counts(g, 10);
        std::vector<BigInt> found(11, 0);
        for (const auto& c : enumerated) {
            found[c.length()] += 1;
            // closed, reduced, tailless
            for (std::size_t i = 0; i < c.length(); ++i) {
                std::uint32_t a = c.edges[i];
                std::uint32_t b = c.edges[(i + 1) % c.length()];
                CHECK(g.head(a) == g.tail(b));
                CHECK(b != g.inverse(a));
            }
            CHECK(*std::min_element(c.edges.begin(), c.edges.end()) == c.edges.front());
        }
        CHECK(found == counts);
        CHECK(std::is_sorted(enumerated.begin(), enumerated.end()));
        CHECK(enumerate_primitive_classes(g, 10, 4) == enumerated);
    }
}

TEST_CASE("ihara zeta") {
    Graph c5 = Graph::named("c5");
    PowerSeries z = ihara_zeta_series(c5, 15);
    // 1/(1 - z^5)^2
    for (std::size_t n = 0; n <= 15; ++n) CHECK(z[n] == (n % 5 == 0 ? Rational(static_cast<long>(n / 5 + 1)) : 0));

    for (const Graph& g : corpus()) {
        CAPTURE(g.name());
        PowerSeries zeta = ihara_zeta_series(g, 12);
        CHECK(zeta[0] == 1);
        auto classes = enumerate_primitive_classes(g, 12);
        std::vector<BigInt> counts(13, 0);
        for (const auto& c : classes) counts[c.length()] += 1;
        auto product = euler_transform(counts);
        for (std::size_t n = 0; n <= 12; ++n) CHECK(zeta[n] == Rational(product[n]));
    }
}

TEST_CASE("radius and delta") {
    auto start = std::chrono::steady_clock::now();
    RadiusInfo k4 = radius_and_delta(Graph::named("k4"));
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
    CHECK(k4.exact);
    CHECK(k4.radius == Rational(1, 2));
    CHECK(k4.delta == 1);

    RadiusInfo c5 = radius_and_delta(Graph::named("c5"));
    CHECK(c5.radius == 1);
    CHECK(c5.delta == 5);

    CHECK(radius_and_delta(Graph::named("k33")).delta == 2);

    const Rational eps(BigInt(1), power(BigInt(2), 60));
    for (const Graph& g : corpus()) {
        CAPTURE(g.name());
        RadiusInfo r = radius_and_delta(g);
        CHECK(r.kotani_lower - eps <= r.radius);
        CHECK(r.radius <= r.kotani_upper + eps);
        CHECK(r.upper - r.lower <= eps);
        // the reciprocal zeta changes sign or vanishes inside the final bracket
        auto poly = reciprocal_zeta_polynomial(g);
        auto at = [&](const Rational& x) {
            Rational acc = 0;
            for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rational(*it);
            return acc;
        };
        if (!r.exact) CHECK(sgn(at(r.lower)) * sgn(at(r.upper)) <= 0);
        // no positive root below the bracket: the series coefficients grow like R^-n
        auto classes = enumerate_primitive_classes(g, 10);
        std::uint64_t gcd = 0;
        for (const auto& c : classes) gcd = std::gcd(gcd, static_cast<std::uint64_t>(c.length()));
        CHECK(gcd == r.delta);
        auto counts = prime_class_counts(g, 12);
        for (std::size_t nu = 1; nu <= 12; ++nu) {
            if (nu % r.delta) CHECK(counts[nu] == 0);
        }
    }
}

TEST_CASE("graph semigroup") {
    GraphBackend k4(Graph::named("k4"), 8);
    const Semigroup& sg = k4.semigroup();
    CHECK(sg.norm_kind() == NormKind::Symbolic);
    CHECK(sg.horizon() == 8);
    CHECK(sg.prime(0).degree == 3);
    auto n = norm_of_class(k4.path_class(0), k4.radius().value());
    CHECK(n.exponent == 3);
    CHECK(n.value == doctest::Approx(8.0));
    CHECK(norm_of_class(PathClass{}, 0.5).value == 1.0);
    CHECK_THROWS_AS(sg.norm(Element::prime(0)), std::logic_error);

    GraphBackend c5(Graph::named("c5"), 10);
    CHECK(c5.semigroup().prime_count() == 2);
    CHECK(norm_of_class(c5.path_class(0), c5.radius().value()).value == 1.0);

    auto len3 = k4.length_class_prime_set(3, 0);
    for (const Prime& p : sg.primes()) CHECK(len3.contains(p) == (p.degree % 3 == 0));
    CHECK_THROWS_AS(k4.length_class_prime_set(0, 0), std::invalid_argument);
    CHECK(k4.euler_phi_numeric(Element::identity()) == 1.0);
    CHECK(k4.euler_phi_numeric(Element::prime(0)) == doctest::Approx(7.0));  // 8 (1 - 1/8)
}
