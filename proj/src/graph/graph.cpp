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

#include "asg/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asg::graph {

namespace {

using Poly = std::vector<Rational>;  // low to high

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
    trim(out);
    return out;
}

// quotient and remainder of a / b, b nonzero
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly quo(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t top = a.size(); top-- > b.size() - 1;) {
        Rational c = a[top] / lead;
        std::size_t shift = top + 1 - b.size();
        quo[shift] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(quo);
    return {quo, a};
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Rational evaluate(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign(const Rational& r) { return sgn(r); }

class SturmChain {
   public:
    explicit SturmChain(const Poly& p) {
        chain_.push_back(p);
        chain_.push_back(derivative(p));
        while (!chain_.back().empty()) {
            Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            chain_.push_back(std::move(r));
        }
    }

    int variations(const Rational& x) const {
        int count = 0;
        int last = 0;
        for (const Poly& p : chain_) {
            if (p.empty()) continue;
            int s = sign(evaluate(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Distinct roots in (a, b].
    int roots_in(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

   private:
    std::vector<Poly> chain_;
};

int integer_mobius(std::size_t n) {
    int out = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        out = -out;
    }
    if (n > 1) out = -out;
    return out;
}

// Fraction-free Gaussian elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sign_flip > 0 ? det : BigInt(-det);
}

std::vector<std::pair<std::size_t, std::size_t>> complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace

// --- Graph -------------------------------------------------------------------

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges, std::string name)
    : name_(std::move(name)), vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ == 0 || edges_.empty()) throw std::invalid_argument("Graph: needs at least one vertex and edge");
    adjacency_.assign(vertex_count_, std::vector<std::int64_t>(vertex_count_, 0));
    degree_.assign(vertex_count_, 0);
    for (const auto& [u, v] : edges_) {
        if (u >= vertex_count_ || v >= vertex_count_) {
            throw std::invalid_argument("Graph: vertex id out of range in edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        }
        if (u == v) {
            adjacency_[u][u] += 2;
        } else {
            adjacency_[u][v] += 1;
            adjacency_[v][u] += 1;
        }
        degree_[u] += 1;
        degree_[v] += 1;
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (degree_[v] < 2) {
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(degree_[v]) + " < 2");
        }
    }
    std::vector<std::size_t> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertex_count_;
    for (const auto& [u, v] : edges_) {
        std::size_t a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    if (components != 1) throw std::invalid_argument("Graph: not connected");

    successors_.resize(oriented_count());
    for (std::size_t e = 0; e < oriented_count(); ++e) {
        for (std::size_t f = 0; f < oriented_count(); ++f) {
            if (tail(f) == head(e) && f != inverse(e)) successors_[e].push_back(f);
        }
    }
}

std::size_t Graph::tail(std::size_t e) const {
    return e < edges_.size() ? edges_[e].first : edges_.at(e - edges_.size()).second;
}

std::size_t Graph::head(std::size_t e) const {
    return e < edges_.size() ? edges_[e].second : edges_.at(e - edges_.size()).first;
}

std::int64_t Graph::max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }
std::int64_t Graph::min_degree() const { return *std::min_element(degree_.begin(), degree_.end()); }

Graph Graph::parse_edge_list(std::string_view text, std::string name) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t vertices = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(fields >> u) || !(fields >> v) || (fields >> extra) || u < 0 || v < 0) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        vertices = std::max({vertices, static_cast<std::size_t>(u) + 1, static_cast<std::size_t>(v) + 1});
    }
    return Graph(vertices, std::move(edges), std::move(name));
}

std::vector<std::string> Graph::named_graphs() { return {"k4", "k5", "c5", "k33", "petersen"}; }

Graph Graph::named(const std::string& name) {
    if (name == "k4") return Graph(4, complete(4), name);
    if (name == "k5") return Graph(5, complete(5), name);
    if (name == "c5") return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, name);
    if (name == "k33") {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 3; j < 6; ++j) e.emplace_back(i, j);
        }
        return Graph(6, std::move(e), name);
    }
    if (name == "petersen") {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
        for (std::size_t i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
        for (std::size_t i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
        return Graph(10, std::move(e), name);
    }
    throw std::invalid_argument("unknown graph '" + name + "'");
}

// --- walk and prime counts -------------------------------------------------------

std::vector<std::vector<int>> non_backtracking_matrix(const Graph& g) {
    std::vector<std::vector<int>> w(g.oriented_count(), std::vector<int>(g.oriented_count(), 0));
    for (std::size_t e = 0; e < g.oriented_count(); ++e) {
        for (std::size_t f : g.successors(e)) w[e][f] = 1;
    }
    return w;
}

std::vector<BigInt> closed_walk_counts(const Graph& g, std::size_t n) {
    const std::size_t k = g.oriented_count();
    std::vector<BigInt> out(n + 1, 0);
    out[0] = static_cast<unsigned long>(k);
    // power = W^m, advanced by right multiplication with the sparse W
    std::vector<std::vector<BigInt>> power(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i) power[i][i] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::vector<BigInt>> next(k, std::vector<BigInt>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                if (power[i][j] == 0) continue;
                for (std::size_t f : g.successors(j)) next[i][f] += power[i][j];
            }
        }
        power = std::move(next);
        BigInt trace = 0;
        for (std::size_t i = 0; i < k; ++i) trace += power[i][i];
        out[m] = trace;
    }
    return out;
}

std::vector<BigInt> prime_class_counts(const Graph& g, std::size_t n) {
    auto walks = closed_walk_counts(g, n);
    std::vector<BigInt> out(n + 1, 0);
    for (std::size_t nu = 1; nu <= n; ++nu) {
        BigInt acc = 0;
        for (std::size_t d = 1; d <= nu; ++d) {
            if (nu % d) continue;
            int mu = integer_mobius(nu / d);
            if (mu > 0) acc += walks[d];
            if (mu < 0) acc -= walks[d];
        }
        if (acc % static_cast<unsigned long>(nu) != 0 || acc < 0) {
            throw std::logic_error("prime_class_counts: inconsistent walk counts at length " + std::to_string(nu));
        }
        out[nu] = acc / static_cast<unsigned long>(nu);
    }
    return out;
}

std::vector<PathClass> enumerate_primitive_classes(const Graph& g, std::size_t max_len, unsigned workers) {
    if (max_len > kMaxClassLength) {
        throw std::out_of_range("enumerate_primitive_classes: max_len " + std::to_string(max_len) + " exceeds " +
                                std::to_string(kMaxClassLength));
    }
    const std::size_t k = g.oriented_count();
    auto per_start = map_buckets<std::vector<PathClass>>(k, workers, [&](std::size_t s) {
        std::vector<PathClass> found;
        std::vector<std::uint32_t> path{static_cast<std::uint32_t>(s)};

        auto accept = [&]() {
            const std::size_t len = path.size();
            for (std::size_t r = 1; r < len; ++r) {
                // compare rotation by r with the path itself
                int cmp = 0;
                for (std::size_t i = 0; i < len && cmp == 0; ++i) {
                    std::uint32_t a = path[(i + r) % len];
                    std::uint32_t b = path[i];
                    cmp = a < b ? -1 : (a > b ? 1 : 0);
                }
                if (cmp <= 0) return false;  // smaller rotation, or a proper power
            }
            return true;
        };

        auto dfs = [&](auto&& self) -> void {
            const std::uint32_t last = path.back();
            if (g.head(last) == g.tail(s) && last != g.inverse(s) && accept()) found.push_back({path});
            if (path.size() == max_len) return;
            for (std::size_t f : g.successors(last)) {
                if (f < s) continue;
                path.push_back(static_cast<std::uint32_t>(f));
                self(self);
                path.pop_back();
            }
        };
        if (max_len >= 1) dfs(dfs);
        return found;
    });
    std::vector<PathClass> out;
    for (auto& bucket : per_start) {
        for (auto& c : bucket) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- zeta ---------------------------------------------------------------------

std::vector<BigInt> reciprocal_zeta_polynomial(const Graph& g) {
    const std::size_t l = g.vertex_count();
    const std::size_t degree = 2 * l;
    const auto& a = g.adjacency();

    // values of det(I - Az + Qz^2) at z = 0..degree
    std::vector<Rational> ys;
    for (std::size_t z = 0; z <= degree; ++z) {
        std::vector<std::vector<BigInt>> m(l, std::vector<BigInt>(l, 0));
        const BigInt bz = static_cast<unsigned long>(z);
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) m[i][j] = -BigInt(static_cast<long>(a[i][j])) * bz;
            m[i][i] += 1 + BigInt(static_cast<long>(g.degree(i) - 1)) * bz * bz;
        }
        ys.emplace_back(bareiss_determinant(std::move(m)));
    }
    // Newton divided differences, then expansion into monomials
    std::vector<Rational> coef = ys;
    for (std::size_t j = 1; j <= degree; ++j) {
        for (std::size_t i = degree; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / static_cast<unsigned long>(j);
            if (i == j) break;
        }
    }
    Poly det(degree + 1, 0);
    for (std::size_t i = degree + 1; i-- > 0;) {
        // det = det * (z - i) + coef[i]
        Poly next(degree + 1, 0);
        for (std::size_t d = 0; d < degree; ++d) {
            next[d + 1] += det[d];
            next[d] -= det[d] * static_cast<unsigned long>(i);
        }
        next[0] += coef[i];
        det = std::move(next);
    }

    std::vector<BigInt> poly;
    for (const Rational& c : det) {
        if (c.get_den() != 1) throw std::logic_error("reciprocal_zeta_polynomial: non-integral coefficient");
        poly.push_back(c.get_num());
    }
    const std::int64_t r = g.cycle_rank();
    for (std::int64_t i = 0; i + 1 < r; ++i) {
        std::vector<BigInt> next(poly.size() + 2, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d];
            next[d + 2] -= poly[d];
        }
        poly = std::move(next);
    }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    return poly;
}

PowerSeries ihara_zeta_series(const Graph& g, std::size_t n) {
    auto poly = reciprocal_zeta_polynomial(g);
    PowerSeries p(n);
    for (std::size_t d = 0; d < poly.size() && d <= n; ++d) p[d] = Rational(poly[d]);
    return p.reciprocal();
}

// --- radius ---------------------------------------------------------------------

RadiusInfo radius_and_delta(const Graph& g, unsigned precision_bits, std::size_t delta_horizon) {
    RadiusInfo out;
    out.kotani_lower = Rational(1, g.max_degree() - 1);
    out.kotani_upper = Rational(1, g.min_degree() - 1);

    Poly p;
    for (const BigInt& c : reciprocal_zeta_polynomial(g)) p.emplace_back(c);
    trim(p);
    Poly common = poly_gcd(p, derivative(p));
    Poly squarefree = common.size() > 1 ? divmod(p, common).first : p;

    Rational lo = out.kotani_lower;
    Rational hi = out.kotani_upper;
    if (evaluate(squarefree, lo) == 0) {
        out.radius = out.lower = out.upper = lo;
        out.exact = true;
    } else {
        SturmChain sturm(squarefree);
        if (lo == hi || sturm.roots_in(lo, hi) == 0) {
            throw std::runtime_error("radius_and_delta: no root of the reciprocal zeta in [1/alpha, 1/beta]");
        }
        const Rational width(BigInt(1), power(BigInt(2), precision_bits));
        while (hi - lo > width) {
            Rational mid = (lo + hi) / 2;
            if (evaluate(squarefree, mid) == 0) {
                lo = hi = mid;
                break;
            }
            if (sturm.roots_in(lo, mid) >= 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.lower = lo;
        out.upper = hi;
        out.exact = lo == hi || evaluate(squarefree, hi) == 0;
        out.radius = out.exact ? Rational(hi) : Rational((lo + hi) / 2);
    }

    if (delta_horizon == 0) delta_horizon = 2 * g.oriented_count();
    auto walks = closed_walk_counts(g, delta_horizon);
    std::uint64_t delta = 0;
    for (std::size_t m = 1; m <= delta_horizon; ++m) {
        if (walks[m] > 0) delta = std::gcd(delta, static_cast<std::uint64_t>(m));
    }
    out.delta = delta;
    return out;
}

ClassNorm norm_of_class(const PathClass& c, double radius) {
    return {c.length(), std::pow(radius, -static_cast<double>(c.length()))};
}

// --- semigroup ------------------------------------------------------------------

GraphBackend::GraphBackend(Graph g, std::size_t max_len, unsigned workers)
    : graph_(std::move(g)), radius_(radius_and_delta(graph_)) {
    auto classes = enumerate_primitive_classes(graph_, max_len, workers);
    std::vector<Prime> primes;
    primes.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string label;
        for (std::uint32_t e : classes[i].edges) {
            if (!label.empty()) label += ",";
            label += std::to_string(e);
        }
        primes.push_back({static_cast<PrimeId>(i), classes[i].length(), Rational(0), label});
    }
    classes_ = std::make_shared<const std::vector<PathClass>>(std::move(classes));
    semigroup_ = std::make_shared<const Semigroup>(graph_.name().empty() ? "graph" : graph_.name(), Ordering::Degree,
                                                   NormKind::Symbolic, std::move(primes), max_len);
}

PrimeSet GraphBackend::length_class_prime_set(std::uint64_t modulus, std::uint64_t residue) const {
    if (modulus == 0) throw std::invalid_argument("length_class_prime_set: modulus must be positive");
    const std::uint64_t r = residue % modulus;
    return PrimeSet([modulus, r](const Prime& p) { return p.degree % modulus == r; }, std::nullopt,
                    "length = " + std::to_string(r) + " mod " + std::to_string(modulus));
}

double GraphBackend::euler_phi_numeric(const Element& g) const {
    const double radius = radius_.value();
    double out = 1;
    for (const Factor& f : g.factors()) {
        const double nu = static_cast<double>(semigroup_->prime(f.prime).degree);
        out *= std::pow(radius, -nu * f.mult) * (1 - std::pow(radius, nu));
    }
    return out;
}

}  // namespace asg::graph
