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

#pragma once

// Finite graphs, the Ihara zeta function and the semigroup of closed
// reduced path classes.

#include "asg/semigroup.hpp"
#include "asg/series.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asg::graph {

inline constexpr unsigned kMaxClassLength = 14;

/// Connected undirected multigraph with loops and minimum degree >= 2.
///
/// Edge j runs u_j -> v_j; oriented edge j + m is its inverse.
class Graph {
   public:
    /// Throws std::invalid_argument when the graph is empty, disconnected or
    /// has a vertex of degree < 2.
    Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges, std::string name = "");

    /// One "u v" pair per line, 0-based; blank lines and '#' comments ignored.
    static Graph parse_edge_list(std::string_view text, std::string name = "");
    /// k4, k5, c5, k33 or petersen.
    static Graph named(const std::string& name);
    static std::vector<std::string> named_graphs();

    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t oriented_count() const { return 2 * edges_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    std::size_t tail(std::size_t e) const;
    std::size_t head(std::size_t e) const;
    std::size_t inverse(std::size_t e) const { return e < edges_.size() ? e + edges_.size() : e - edges_.size(); }

    /// Adjacency with loops counted twice on the diagonal.
    const std::vector<std::vector<std::int64_t>>& adjacency() const { return adjacency_; }
    std::int64_t degree(std::size_t v) const { return degree_[v]; }
    std::int64_t max_degree() const;
    std::int64_t min_degree() const;
    /// Cycle rank m - l + 1.
    std::int64_t cycle_rank() const {
        return static_cast<std::int64_t>(edges_.size()) - static_cast<std::int64_t>(vertex_count_) + 1;
    }

    /// Oriented edges f that may follow e (head(e) = tail(f), f != e^-1).
    const std::vector<std::size_t>& successors(std::size_t e) const { return successors_[e]; }

   private:
    std::string name_;
    std::size_t vertex_count_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::int64_t>> adjacency_;
    std::vector<std::int64_t> degree_;
    std::vector<std::vector<std::size_t>> successors_;
};

/// Dense 0/1 non-backtracking edge matrix.
std::vector<std::vector<int>> non_backtracking_matrix(const Graph& g);

/// N_m = trace(W^m) for m = 0..n (entry 0 is the edge count 2m).
std::vector<BigInt> closed_walk_counts(const Graph& g, std::size_t n);

/// pi#(nu) for nu = 0..n by Möbius inversion of the walk counts.
/// Throws std::logic_error if an inversion is not a nonnegative integer.
std::vector<BigInt> prime_class_counts(const Graph& g, std::size_t n);

struct PathClass {
    std::vector<std::uint32_t> edges;  ///< rotation-minimal oriented edge sequence
    std::size_t length() const { return edges.size(); }
    friend auto operator<=>(const PathClass& a, const PathClass& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() <=> b.edges.size();
        return a.edges <=> b.edges;
    }
    friend bool operator==(const PathClass&, const PathClass&) = default;
};

/// Every primitive class with length <= max_len, sorted by (length, edges).
/// Throws std::out_of_range above kMaxClassLength.
std::vector<PathClass> enumerate_primitive_classes(const Graph& g, std::size_t max_len, unsigned workers = 1);

/// Integer coefficients of (1 - z^2)^(r-1) det(I - Az + Qz^2).
std::vector<BigInt> reciprocal_zeta_polynomial(const Graph& g);
/// Ihara zeta to order n.
PowerSeries ihara_zeta_series(const Graph& g, std::size_t n);

struct RadiusInfo {
    Rational radius;      ///< dyadic approximation within `precision` of R_G
    Rational lower;       ///< left end of the final bracket
    Rational upper;       ///< right end of the final bracket
    bool exact = false;   ///< radius is exactly R_G
    Rational kotani_lower;  ///< 1/alpha
    Rational kotani_upper;  ///< 1/beta
    std::uint64_t delta = 0;
    double value() const { return to_double(radius); }
};

/// Smallest positive root of the reciprocal zeta polynomial, located by
/// Sturm-guided bisection on [1/alpha, 1/beta], and the gcd of prime lengths
/// over walk lengths up to `delta_horizon` (0 picks 2 * oriented edge count).
/// Throws std::runtime_error when the bracket holds no root.
RadiusInfo radius_and_delta(const Graph& g, unsigned precision_bits = 60, std::size_t delta_horizon = 0);

struct ClassNorm {
    std::uint64_t exponent = 0;  ///< nu; the norm is R_G^-nu
    double value = 1;
};

ClassNorm norm_of_class(const PathClass& c, double radius);

/// Graph paths as an additive semigroup with symbolic norms R_G^-degree.
class GraphBackend {
   public:
    GraphBackend(Graph g, std::size_t max_len, unsigned workers = 1);

    const Graph& graph() const { return graph_; }
    const Semigroup& semigroup() const { return *semigroup_; }
    std::shared_ptr<const Semigroup> shared_semigroup() const { return semigroup_; }
    const PathClass& path_class(PrimeId id) const { return (*classes_).at(id); }
    const RadiusInfo& radius() const { return radius_; }

    /// Primes of length = residue (mod modulus); no known density.
    PrimeSet length_class_prime_set(std::uint64_t modulus, std::uint64_t residue) const;

    /// ||g|| prod (1 - 1/||P||) evaluated at the numeric R_G.
    double euler_phi_numeric(const Element& g) const;

   private:
    Graph graph_;
    std::shared_ptr<const std::vector<PathClass>> classes_;
    std::shared_ptr<const Semigroup> semigroup_;
    RadiusInfo radius_;
};

}  // namespace asg::graph
