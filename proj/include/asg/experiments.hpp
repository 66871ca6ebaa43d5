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

// Alladi-type partial sums, duality and b-transform fuzzing, Q_S
// equidistribution, Mertens-type statistics, density estimates and axiom
// constant fits.

#include "asg/backend.hpp"
#include "asg/calculus.hpp"
#include "asg/semigroup.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asg::experiments {

enum class Weight { Norm, Phi };
std::string to_string(Weight w);

/// Description of the function a in the convolution sums.
struct ArithSpec {
    enum class Kind { Identity, PowerDecay, Table };
    Kind kind = Kind::Identity;
    Rational alpha;                      ///< PowerDecay exponent, > 0
    std::map<Element, Rational> table;   ///< Table values; missing elements are 0, e_G is 1

    static ArithSpec identity() { return {}; }
    /// Throws std::invalid_argument unless alpha > 0.
    static ArithSpec power_decay(const Rational& alpha);
    static ArithSpec from_table(std::map<Element, Rational> values);
    std::string describe() const;
};

/// a(e_G) = 1, a(g) = ||g||^-alpha on D(G,S) \ {e_G}, 0 elsewhere. Integer
/// alpha is exact; other exponents use the exact rational value of the double
/// pow(||g||, -alpha). Throws std::invalid_argument unless alpha > 0 and
/// std::logic_error for symbolic norms.
ArithFn convolution_arith_fn(std::shared_ptr<const Semigroup> sg, std::vector<bool> in_s, const Rational& alpha);

/// Finite table supported on D(G,S). Throws std::invalid_argument when e_G
/// maps to anything but 1 or an entry lies outside D(G,S).
ArithFn table_arith_fn(std::shared_ptr<const Semigroup> sg, const std::vector<bool>& in_s,
                       std::map<Element, Rational> values);

ArithFn make_arith_fn(std::shared_ptr<const Semigroup> sg, const std::vector<bool>& in_s, const ArithSpec& spec);

/// Pseudo-random rational function supported on D(G,S) with a(e_G) = 1.
ArithFn random_arith_fn(std::shared_ptr<const Semigroup> sg, std::vector<bool> in_s, std::uint64_t seed);

// --- partial sums -----------------------------------------------------------

/// Raw per-cutoff output of one summation route.
struct PartialSums {
    std::vector<std::optional<Rational>> exact;    ///< set by exact routes
    std::vector<double> value;
    std::vector<std::vector<BigInt>> coefficients; ///< coefficient route only
    std::vector<double> seconds;                   ///< elapsed when each cutoff finished
};

/// -sum over g in D(G,S), key in range, of (mu*a)(g)/weight(g), by
/// enumerating elements. Needs rational norms. With exact = false the
/// terms are rounded to doubles and added exactly.
PartialSums generic_partial_sums(const Semigroup& sg, const std::vector<bool>& in_s, const ArithFn& a, Weight weight,
                                 const std::vector<std::uint64_t>& cutoffs, unsigned workers, bool exact,
                                 bool a_is_identity = false);

/// Degree-ordered semigroups with norm u^-degree and a = u^(alpha*degree)
/// on D(G,S) (alpha = 0 means the convolution identity). Returns integer
/// coefficients c_k with partial sum = sum_k c_k u^k.
PartialSums coefficient_partial_sums(const Semigroup& sg, const std::vector<bool>& in_s, std::uint64_t alpha,
                                     const std::vector<std::uint64_t>& cutoffs, unsigned workers);

Rational evaluate_coefficients(const std::vector<BigInt>& coefficients, const Rational& u);

/// Sieve route over the rational integers; double terms, exact accumulation.
/// Supports the identity and power-decay specs.
PartialSums integer_partial_sums(const integer::IntegerSieve& sieve, const std::vector<bool>& in_s,
                                 const ArithSpec& spec, Weight weight, const std::vector<std::uint64_t>& cutoffs,
                                 unsigned workers);

struct AlladiRequest {
    PrimeSet set = PrimeSet::all();
    ArithSpec arith;
    Weight weight = Weight::Norm;
    std::vector<std::uint64_t> cutoffs;
    unsigned workers = 1;
    /// nullopt picks the backend default: exact for polynomials, numeric
    /// for integer rings, coefficient vectors for graphs.
    std::optional<bool> exact;
};

struct ReportRow {
    std::uint64_t cutoff = 0;
    std::optional<Rational> sum;
    double sum_float = 0;
    std::vector<BigInt> coefficients;
    double abs_error = 0;
    double seconds = 0;
};

struct ExperimentReport {
    std::string backend;
    std::string prime_set;
    std::string arith;
    Weight weight = Weight::Norm;
    Rational target;
    bool target_known = true;  ///< false when target is an empirical density
    bool exact = false;
    bool has_coefficients = false;
    std::vector<ReportRow> rows;

    /// cutoff,sum_num,sum_den,target,abs_error for exact reports;
    /// cutoff,sum_float,target,abs_error otherwise, plus coeffs for graphs.
    /// The seconds column is appended only when `timing` is set.
    void write_csv(std::ostream& os, bool timing = false) const;
    void write_table(std::ostream& os) const;
};

/// Validates cutoffs (strictly increasing, >= 1, within the backend's
/// limits) and a(e_G) = 1, then dispatches to the best route.
/// Throws std::invalid_argument or std::out_of_range on contract violations.
ExperimentReport alladi_partial_sums(const Backend& backend, const AlladiRequest& request);

/// Running sums of |a(g)| loglog||g|| / ||g|| over D(G,S), with loglog t = 0
/// for t < e^e. Needs rational norms.
std::vector<double> summability_profile(const Semigroup& sg, const std::vector<bool>& in_s, const ArithFn& a,
                                        const std::vector<std::uint64_t>& cutoffs);

// --- exact identities ----------------------------------------------------------

struct BTransform {
    Rational lhs;       ///< (mu*a)(g) / phi(g)
    Rational rhs;       ///< (mu*b)(g) / ||g||
    Rational residual;  ///< lhs - rhs
};

/// b(h) = sum_{k|h} (mu*a)(k) ||k|| / phi(k). Needs rational norms.
BTransform b_transform_check(const Semigroup& sg, const ArithFn& a, const Element& g);

struct FuzzReport {
    std::size_t trials = 0;
    Rational max_abs_residual;
    std::optional<std::string> failure;  ///< first offending input, serialized
};

/// Test functions on sizes, each vanishing at `identity_key`.
std::vector<SizeFn> standard_size_functions(std::uint64_t identity_key);

/// Random (g, S, f) with g among elements of key <= max_key.
FuzzReport duality_fuzz(const Semigroup& sg, std::uint64_t max_key, std::size_t triples, std::uint64_t seed,
                        unsigned workers = 1);

/// Every element of key <= max_key against every given set and f.
FuzzReport duality_sweep(const Semigroup& sg, std::uint64_t max_key, const std::vector<PrimeSet>& sets,
                         const std::vector<SizeFn>& fns, unsigned workers = 1);

/// Random (g, S, a) with a from random_arith_fn.
FuzzReport b_transform_fuzz(std::shared_ptr<const Semigroup> sg, std::uint64_t max_key, std::size_t trials,
                            std::uint64_t seed, unsigned workers = 1);

// --- statistics ----------------------------------------------------------------

struct PartialSumStatistics {
    BigInt C;                    ///< key = n, d_-(g) > m
    BigInt M;                    ///< key <= n, d_-(g) > m
    std::optional<Rational> R;   ///< as M weighted by 1/||g||; rational norms only
    BigInt Phi;                  ///< number of g with key <= n, d_-(g) > m
};

/// e_G has no prime factors and always counts.
PartialSumStatistics partial_sum_statistics(const Semigroup& sg, std::uint64_t n, std::uint64_t m);

struct DensityRow {
    std::uint64_t cutoff = 0;
    BigInt in_set;
    BigInt total;
    std::optional<Rational> ratio;  ///< nullopt when total is 0
};

/// Degree ordering: primes of degree exactly n. Norm ordering: primes of norm <= x.
std::vector<DensityRow> density_estimate(const Semigroup& sg, const PrimeSet& set,
                                         const std::vector<std::uint64_t>& cutoffs);

/// Last available ratio, or nullopt if none.
std::optional<Rational> final_density(const std::vector<DensityRow>& rows);

struct AxiomFit {
    double c = 0;
    double base = 0;  ///< fitted q for degree counts, 1 for norm counts
    std::optional<double> eta;
    std::vector<double> residuals;
    bool exact = false;
    bool degenerate = false;
    std::string note;
};

/// Degree ordering: counts are G#(n) at points n, fit G#(n) ~ c q^n.
/// Norm ordering: counts are N(x) at points x, fit N(x) ~ c x.
/// eta comes from a line through log|residual|. Needs at least 6 points;
/// throws std::invalid_argument otherwise.
AxiomFit fit_axiom_constants(Ordering ordering, std::span<const std::uint64_t> points, std::span<const BigInt> counts);

struct EquidistributionRow {
    std::uint64_t cutoff = 0;
    BigInt lhs;                          ///< sum of Q_S(g) over key = n (degrees) or 2 <= key <= x (norms)
    double ratio = 0;                    ///< lhs / q^n or lhs / x
    std::optional<double> known_reference;   ///< closed-form c_G times delta(S)
    std::optional<double> fitted_reference;  ///< fitted c_G times delta(S)
};

struct Equidistribution {
    std::vector<EquidistributionRow> rows;
    double base = 0;          ///< q used for degree scaling
    Rational density;         ///< delta(S) used for the references
    bool density_known = true;
    AxiomFit fit;
};

/// Degree cutoffs for A# backends, norm cutoffs for A backends.
Equidistribution equidistribution_check(const Backend& backend, const PrimeSet& set,
                                        const std::vector<std::uint64_t>& cutoffs);

}  // namespace asg::experiments
