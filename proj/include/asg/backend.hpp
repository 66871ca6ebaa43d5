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

// A tagged handle over the concrete backends, plus the text forms of prime
// sets and elements used by the command line and the Python bindings.

#include "asg/graph/graph.hpp"
#include "asg/integer/backend.hpp"
#include "asg/poly/backend.hpp"
#include "asg/semigroup.hpp"

#include <memory>
#include <string>
#include <variant>

namespace asg {

enum class BackendKind { Poly, Integer, Gaussian, Graph };

class Backend {
   public:
    explicit Backend(std::shared_ptr<const poly::PolyBackend> b) : impl_(std::move(b)) {}
    explicit Backend(std::shared_ptr<const integer::IntegerBackend> b) : impl_(std::move(b)) {}
    explicit Backend(std::shared_ptr<const integer::GaussianBackend> b) : impl_(std::move(b)) {}
    explicit Backend(std::shared_ptr<const graph::GraphBackend> b) : impl_(std::move(b)) {}

    static Backend poly(unsigned q, unsigned max_degree, Ordering ordering = Ordering::Degree);
    static Backend integers(std::uint64_t limit);
    static Backend gaussian(std::uint64_t limit);
    static Backend graph(graph::Graph g, std::size_t max_len, unsigned workers = 1);

    BackendKind kind() const { return static_cast<BackendKind>(impl_.index()); }
    /// Short identifier such as "poly:q=2", "int:Q", "int:Qi" or "graph:k4".
    std::string id() const;
    const Semigroup& semigroup() const;
    std::shared_ptr<const Semigroup> shared_semigroup() const;

    const poly::PolyBackend& as_poly() const;
    const integer::IntegerBackend& as_integer() const;
    const integer::GaussianBackend& as_gaussian() const;
    const graph::GraphBackend& as_graph() const;

    /// Prime sets by name:
    ///   all, none                       any backend
    ///   mod:k,l                         integers, p = l (mod k)
    ///   mod:<g>,<f>                     polynomials, P = f (mod g)
    ///   split, inert, ramified, split1mod8   Gaussian ideals
    ///   len:k,r                         graph classes of length = r (mod k)
    /// Throws std::invalid_argument for unknown or malformed specs.
    PrimeSet prime_set(const std::string& spec) const;

    /// Parses "12" (integers), "x^2+1" (polynomials), "2+i" (Gaussian
    /// generator) or "e" for the identity.
    Element parse_element(const std::string& text) const;

   private:
    std::variant<std::shared_ptr<const poly::PolyBackend>, std::shared_ptr<const integer::IntegerBackend>,
                 std::shared_ptr<const integer::GaussianBackend>, std::shared_ptr<const graph::GraphBackend>>
        impl_;
};

}  // namespace asg
