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

#include "asg/experiments.hpp"

#include "asg/parallel.hpp"
#include "asg/series.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace asg::experiments {

namespace {

constexpr std::size_t kElementChunk = 4096;
constexpr std::uint64_t kIntegerChunk = std::uint64_t{1} << 15;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_element(const Element& g, std::uint64_t seed) {
    std::uint64_t h = splitmix(seed);
    for (const Factor& f : g.factors()) h = splitmix(h ^ (std::uint64_t{f.prime} << 8 | f.mult));
    return h;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

void validate_cutoffs(const std::vector<std::uint64_t>& cutoffs, std::uint64_t limit, const std::string& what) {
    if (cutoffs.empty()) throw std::invalid_argument("no cutoffs given");
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        if (cutoffs[i] < 1) throw std::invalid_argument("cutoffs must be >= 1");
        if (i > 0 && cutoffs[i] <= cutoffs[i - 1]) throw std::invalid_argument("cutoffs must be strictly increasing");
    }
    if (cutoffs.back() > limit) {
        throw std::out_of_range("cutoff " + std::to_string(cutoffs.back()) + " exceeds the " + what + " limit " +
                                std::to_string(limit));
    }
}

// Elements sorted by key, cut into one segment per cutoff. The identity is
// never part of a segment.
struct Segments {
    std::vector<Element> elements;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
};

Segments segment_elements(const Semigroup& sg, const std::vector<std::uint64_t>& cutoffs) {
    Segments out;
    out.elements = sg.enumerate(cutoffs.back());
    std::vector<std::uint64_t> keys;
    keys.reserve(out.elements.size());
    for (const auto& g : out.elements) keys.push_back(sg.key(g));
    std::size_t begin = 0;
    while (begin < keys.size() && out.elements[begin].is_identity()) ++begin;
    for (std::uint64_t c : cutoffs) {
        auto end = static_cast<std::size_t>(std::upper_bound(keys.begin() + begin, keys.end(), c) - keys.begin());
        out.ranges.emplace_back(begin, end);
        begin = end;
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> chunks(std::size_t begin, std::size_t end, std::size_t size) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t b = begin; b < end; b += size) out.emplace_back(b, std::min(end, b + size));
    return out;
}

Rational power_norm(const Rational& norm, const Rational& alpha) {
    if (is_integer(alpha)) return power(norm, -static_cast<std::int64_t>(alpha.get_num().get_si()));
    return Rational(std::pow(norm.get_d(), -alpha.get_d()));
}

}  // namespace

std::string to_string(Weight w) { return w == Weight::Norm ? "norm" : "phi"; }

// --- arithmetic functions ---------------------------------------------------------

ArithSpec ArithSpec::power_decay(const Rational& alpha) {
    if (alpha <= 0) throw std::invalid_argument("power-decay exponent must be positive, got " + asg::to_string(alpha));
    ArithSpec s;
    s.kind = Kind::PowerDecay;
    s.alpha = alpha;
    return s;
}

ArithSpec ArithSpec::from_table(std::map<Element, Rational> values) {
    ArithSpec s;
    s.kind = Kind::Table;
    s.table = std::move(values);
    return s;
}

std::string ArithSpec::describe() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::PowerDecay: return "power:" + asg::to_string(alpha);
        case Kind::Table: return "table:" + std::to_string(table.size());
    }
    return "?";
}

ArithFn convolution_arith_fn(std::shared_ptr<const Semigroup> sg, std::vector<bool> in_s, const Rational& alpha) {
    if (alpha <= 0) throw std::invalid_argument("convolution_arith_fn: alpha must be positive");
    if (sg->norm_kind() != NormKind::Rational) {
        throw std::logic_error("convolution_arith_fn: symbolic norms need the coefficient route");
    }
    auto eval = [sg, in_s = std::move(in_s), alpha](const Element& g) -> Rational {
        if (g.is_identity()) return Rational(1);
        if (!is_distinguished(*sg, g, in_s).member) return Rational(0);
        return power_norm(sg->norm(g), alpha);
    };
    return {eval, Support::DistinguishedOnly, true};
}

ArithFn table_arith_fn(std::shared_ptr<const Semigroup> sg, const std::vector<bool>& in_s,
                       std::map<Element, Rational> values) {
    auto id = values.find(Element::identity());
    if (id != values.end()) {
        if (id->second != 1) throw std::invalid_argument("a(e) must be 1, got " + asg::to_string(id->second));
        values.erase(id);
    }
    for (const auto& [g, v] : values) {
        if (v != 0 && !is_distinguished(*sg, g, in_s).member) {
            throw std::invalid_argument("table entry " + sg->label(g) + " lies outside the distinguished set");
        }
    }
    auto table = std::make_shared<const std::map<Element, Rational>>(std::move(values));
    auto eval = [table](const Element& g) -> Rational {
        if (g.is_identity()) return Rational(1);
        auto it = table->find(g);
        return it == table->end() ? Rational(0) : it->second;
    };
    return {eval, Support::DistinguishedOnly, true};
}

ArithFn make_arith_fn(std::shared_ptr<const Semigroup> sg, const std::vector<bool>& in_s, const ArithSpec& spec) {
    switch (spec.kind) {
        case ArithSpec::Kind::Identity: return ArithFn::convolution_identity();
        case ArithSpec::Kind::PowerDecay: return convolution_arith_fn(std::move(sg), in_s, spec.alpha);
        case ArithSpec::Kind::Table: return table_arith_fn(std::move(sg), in_s, spec.table);
    }
    throw std::logic_error("make_arith_fn: unknown kind");
}

ArithFn random_arith_fn(std::shared_ptr<const Semigroup> sg, std::vector<bool> in_s, std::uint64_t seed) {
    auto eval = [sg, in_s = std::move(in_s), seed](const Element& g) -> Rational {
        if (g.is_identity()) return Rational(1);
        if (!is_distinguished(*sg, g, in_s).member) return Rational(0);
        std::uint64_t h = hash_element(g, seed);
        return Rational(static_cast<long>(h % 21) - 10, static_cast<unsigned long>(1 + (h >> 8) % 12));
    };
    return {eval, Support::DistinguishedOnly, true};
}

// --- partial sums ----------------------------------------------------------------

PartialSums generic_partial_sums(const Semigroup& sg, const std::vector<bool>& in_s, const ArithFn& a, Weight weight,
                                 const std::vector<std::uint64_t>& cutoffs, unsigned workers, bool exact,
                                 bool a_is_identity) {
    if (sg.norm_kind() != NormKind::Rational) throw std::logic_error("generic_partial_sums: needs rational norms");
    const auto start = Clock::now();
    Segments seg = segment_elements(sg, cutoffs);

    struct Bucket {
        Rational exact = 0;
        ExactFloatSum numeric;
    };
    auto compute = [&](std::size_t begin, std::size_t end) {
        Bucket out;
        for (std::size_t i = begin; i < end; ++i) {
            const Element& g = seg.elements[i];
            if (!is_distinguished(sg, g, in_s).member) continue;
            Rational c = a_is_identity ? Rational(mobius(g)) : mobius_convolve(a, g);
            if (c == 0) continue;
            Rational w = weight == Weight::Norm ? sg.norm(g) : euler_phi(sg, g);
            Rational term = -c / w;
            if (exact) {
                out.exact += term;
            } else {
                out.numeric.add(to_double(term));
            }
        }
        return out;
    };

    PartialSums out;
    Bucket running;
    for (auto [begin, end] : seg.ranges) {
        auto parts = chunks(begin, end, kElementChunk);
        auto results = map_buckets<Bucket>(parts.size(), workers,
                                           [&](std::size_t k) { return compute(parts[k].first, parts[k].second); });
        for (const auto& r : results) {
            running.exact += r.exact;
            running.numeric += r.numeric;
        }
        if (exact) {
            out.exact.emplace_back(running.exact);
            out.value.push_back(to_double(running.exact));
        } else {
            out.exact.emplace_back(std::nullopt);
            out.value.push_back(running.numeric.value());
        }
        out.seconds.push_back(seconds_since(start));
    }
    return out;
}

PartialSums coefficient_partial_sums(const Semigroup& sg, const std::vector<bool>& in_s, std::uint64_t alpha,
                                     const std::vector<std::uint64_t>& cutoffs, unsigned workers) {
    if (sg.ordering() != Ordering::Degree) throw std::logic_error("coefficient_partial_sums: needs degree ordering");
    const auto start = Clock::now();
    Segments seg = segment_elements(sg, cutoffs);
    const std::size_t length = static_cast<std::size_t>(cutoffs.back() * (1 + alpha) + 1);

    auto compute = [&](std::size_t begin, std::size_t end) {
        std::vector<BigInt> c(length);
        for (std::size_t i = begin; i < end; ++i) {
            const Element& g = seg.elements[i];
            if (!is_distinguished(sg, g, in_s).member) continue;
            const std::uint64_t deg = sg.key(g);
            if (alpha == 0) {
                c[deg] -= mobius(g);
                continue;
            }
            for_each_squarefree_cofactor(g, [&](const Element& h, int mu_rest) {
                std::uint64_t e = deg;
                if (!h.is_identity()) {
                    if (!is_distinguished(sg, h, in_s).member) return;
                    e += alpha * sg.key(h);
                }
                c[e] -= mu_rest;
            });
        }
        return c;
    };

    PartialSums out;
    std::vector<BigInt> running(length);
    for (auto [begin, end] : seg.ranges) {
        auto parts = chunks(begin, end, kElementChunk);
        auto results = map_buckets<std::vector<BigInt>>(
            parts.size(), workers, [&](std::size_t k) { return compute(parts[k].first, parts[k].second); });
        for (const auto& r : results) {
            for (std::size_t k = 0; k < length; ++k) running[k] += r[k];
        }
        std::vector<BigInt> trimmed = running;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.coefficients.push_back(std::move(trimmed));
        out.exact.emplace_back(std::nullopt);
        out.value.push_back(0);
        out.seconds.push_back(seconds_since(start));
    }
    return out;
}

Rational evaluate_coefficients(const std::vector<BigInt>& coefficients, const Rational& u) {
    Rational acc = 0;
    for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * u + Rational(coefficients[k]);
    return acc;
}

PartialSums integer_partial_sums(const integer::IntegerSieve& sieve, const std::vector<bool>& in_s,
                                 const ArithSpec& spec, Weight weight, const std::vector<std::uint64_t>& cutoffs,
                                 unsigned workers) {
    if (spec.kind == ArithSpec::Kind::Table) throw std::invalid_argument("integer_partial_sums: table specs unsupported");
    validate_cutoffs(cutoffs, sieve.limit(), "sieve");
    const auto start = Clock::now();
    const std::uint64_t x = cutoffs.back();

    // n in D(Z, S) iff its smallest prime factor lies in S
    std::vector<char> in_d(x + 1, 0);
    in_d[1] = 1;
    for (std::uint64_t n = 2; n <= x; ++n) in_d[n] = in_s.at(sieve.prime_index(sieve.spf(n))) ? 1 : 0;

    std::vector<double> a_of;
    const bool identity = spec.kind == ArithSpec::Kind::Identity;
    if (!identity) {
        const double alpha = spec.alpha.get_d();
        a_of.assign(x + 1, 0.0);
        for (std::uint64_t d = 2; d <= x; ++d) {
            if (in_d[d]) a_of[d] = std::pow(static_cast<double>(d), -alpha);
        }
    }

    auto compute = [&](std::uint64_t lo, std::uint64_t hi) {
        ExactFloatSum sum;
        std::vector<double> conv(hi - lo + 1, 0.0);
        for (std::uint64_t n = lo; n <= hi; ++n) conv[n - lo] = sieve.mu(n);
        if (!identity) {
            for (std::uint64_t d = 2; d <= hi; ++d) {
                if (!in_d[d]) continue;
                const double ad = a_of[d];
                for (std::uint64_t m = std::max<std::uint64_t>(1, (lo + d - 1) / d); m * d <= hi; ++m) {
                    int mu = sieve.mu(m);
                    if (mu != 0) conv[m * d - lo] += mu * ad;
                }
            }
        }
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
            if (!in_d[n] || conv[n - lo] == 0) continue;
            const double w = weight == Weight::Norm ? static_cast<double>(n) : static_cast<double>(sieve.phi(n));
            sum.add(-conv[n - lo] / w);
        }
        return sum;
    };

    PartialSums out;
    ExactFloatSum running;
    std::uint64_t prev = 1;
    for (std::uint64_t c : cutoffs) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
        for (std::uint64_t lo = prev + 1; lo <= c; lo += kIntegerChunk) parts.emplace_back(lo, std::min(c, lo + kIntegerChunk - 1));
        auto results = map_buckets<ExactFloatSum>(parts.size(), workers,
                                                  [&](std::size_t k) { return compute(parts[k].first, parts[k].second); });
        for (const auto& r : results) running += r;
        out.exact.emplace_back(std::nullopt);
        out.value.push_back(running.value());
        out.seconds.push_back(seconds_since(start));
        prev = c;
    }
    return out;
}

ExperimentReport alladi_partial_sums(const Backend& backend, const AlladiRequest& request) {
    const Semigroup& sg = backend.semigroup();
    const auto shared = backend.shared_semigroup();
    const std::vector<bool> in_s = request.set.mask(sg);
    const auto& cutoffs = request.cutoffs;
    const auto& spec = request.arith;

    if (backend.kind() == BackendKind::Integer) {
        validate_cutoffs(cutoffs, backend.as_integer().limit(), "sieve");
    } else {
        validate_cutoffs(cutoffs, sg.horizon(), "enumeration");
    }
    // rejects tables with a(e) != 1 or entries outside D(G,S)
    std::optional<ArithFn> a;
    if (spec.kind == ArithSpec::Kind::Table) {
        a = table_arith_fn(shared, in_s, spec.table);
    } else if (spec.kind == ArithSpec::Kind::PowerDecay && spec.alpha <= 0) {
        throw std::invalid_argument("power-decay exponent must be positive");
    }
    auto arith_fn = [&]() -> ArithFn { return a ? *a : make_arith_fn(shared, in_s, spec); };

    ExperimentReport report;
    report.backend = backend.id();
    report.prime_set = request.set.description();
    report.arith = spec.describe();
    report.weight = request.weight;
    if (request.set.known_density()) {
        report.target = *request.set.known_density();
    } else {
        auto est = final_density(density_estimate(sg, request.set, {cutoffs.back()}));
        report.target_known = false;
        report.target = est.value_or(Rational(0));
    }

    const bool small_alpha = spec.kind == ArithSpec::Kind::Identity ||
                             (spec.kind == ArithSpec::Kind::PowerDecay && is_integer(spec.alpha));
    const std::uint64_t int_alpha =
        spec.kind == ArithSpec::Kind::PowerDecay && small_alpha ? spec.alpha.get_num().get_ui() : 0;
    const bool identity = spec.kind == ArithSpec::Kind::Identity;

    PartialSums sums;
    switch (backend.kind()) {
        case BackendKind::Poly: {
            report.exact = request.exact.value_or(true);
            if (report.exact && sg.ordering() == Ordering::Degree && request.weight == Weight::Norm && small_alpha) {
                sums = coefficient_partial_sums(sg, in_s, int_alpha, cutoffs, request.workers);
                const Rational u(1, backend.as_poly().q());
                for (std::size_t i = 0; i < cutoffs.size(); ++i) {
                    Rational v = evaluate_coefficients(sums.coefficients[i], u);
                    sums.value[i] = to_double(v);
                    sums.exact[i] = std::move(v);
                }
                sums.coefficients.clear();
            } else {
                sums = generic_partial_sums(sg, in_s, arith_fn(), request.weight, cutoffs, request.workers,
                                            report.exact, identity);
            }
            break;
        }
        case BackendKind::Integer:
            report.exact = request.exact.value_or(false);
            if (report.exact || spec.kind == ArithSpec::Kind::Table) {
                sums = generic_partial_sums(sg, in_s, arith_fn(), request.weight, cutoffs, request.workers,
                                            report.exact, identity);
            } else {
                sums = integer_partial_sums(backend.as_integer().sieve(), in_s, spec, request.weight, cutoffs,
                                            request.workers);
            }
            break;
        case BackendKind::Gaussian:
            report.exact = request.exact.value_or(false);
            sums = generic_partial_sums(sg, in_s, arith_fn(), request.weight, cutoffs, request.workers, report.exact,
                                        identity);
            break;
        case BackendKind::Graph: {
            if (request.weight == Weight::Phi) throw std::invalid_argument("phi weights need rational norms");
            if (!small_alpha) throw std::invalid_argument("graph sums need the identity or an integer exponent");
            if (request.exact.value_or(false)) throw std::invalid_argument("graph sums have no exact rational form");
            report.has_coefficients = true;
            sums = coefficient_partial_sums(sg, in_s, int_alpha, cutoffs, request.workers);
            const Rational& radius = backend.as_graph().radius().radius;
            for (std::size_t i = 0; i < cutoffs.size(); ++i) {
                sums.value[i] = to_double(evaluate_coefficients(sums.coefficients[i], radius));
            }
            break;
        }
    }

    const double target = to_double(report.target);
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        ReportRow row;
        row.cutoff = cutoffs[i];
        row.sum = sums.exact[i];
        row.sum_float = sums.value[i];
        if (report.has_coefficients) row.coefficients = sums.coefficients[i];
        row.abs_error = row.sum ? to_double(abs(*row.sum - report.target)) : std::fabs(row.sum_float - target);
        row.seconds = sums.seconds[i];
        report.rows.push_back(std::move(row));
    }
    return report;
}

void ExperimentReport::write_csv(std::ostream& os, bool timing) const {
    if (exact) {
        os << "cutoff,sum_num,sum_den,target,abs_error";
    } else {
        os << "cutoff,sum_float,target,abs_error";
        if (has_coefficients) os << ",coeffs";
    }
    if (timing) os << ",seconds";
    os << '\n';
    const std::string t = asg::to_string(target);
    for (const auto& row : rows) {
        os << row.cutoff << ',';
        if (exact) {
            os << row.sum->get_num().get_str() << ',' << row.sum->get_den().get_str();
        } else {
            os << format_double(row.sum_float);
        }
        os << ',' << t << ',' << format_double(row.abs_error);
        if (!exact && has_coefficients) {
            os << ',';
            for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
                if (k) os << ' ';
                os << row.coefficients[k].get_str();
            }
        }
        if (timing) os << ',' << format_double(row.seconds);
        os << '\n';
    }
}

void ExperimentReport::write_table(std::ostream& os) const {
    os << "backend " << backend << ", set " << prime_set << ", a = " << arith << ", weight " << to_string(weight)
       << ", target " << asg::to_string(target) << (target_known ? "" : " (estimated)") << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%12s  %22s  %12s  %10s\n", "cutoff", "partial sum", "abs error", "seconds");
    os << line;
    for (const auto& row : rows) {
        std::snprintf(line, sizeof line, "%12llu  %22.15f  %12.4e  %10.3f\n",
                      static_cast<unsigned long long>(row.cutoff), row.sum_float, row.abs_error, row.seconds);
        os << line;
    }
}

std::vector<double> summability_profile(const Semigroup& sg, const std::vector<bool>& in_s, const ArithFn& a,
                                        const std::vector<std::uint64_t>& cutoffs) {
    if (sg.norm_kind() != NormKind::Rational) throw std::logic_error("summability_profile: needs rational norms");
    validate_cutoffs(cutoffs, sg.horizon(), "enumeration");
    const double ee = std::exp(std::exp(1.0));
    Segments seg = segment_elements(sg, cutoffs);
    std::vector<double> out;
    ExactFloatSum running;
    for (auto [begin, end] : seg.ranges) {
        for (std::size_t i = begin; i < end; ++i) {
            const Element& g = seg.elements[i];
            if (!is_distinguished(sg, g, in_s).member) continue;
            const double v = std::fabs(to_double(a(g)));
            if (v == 0) continue;
            const double norm = to_double(sg.norm(g));
            const double ll = norm < ee ? 0.0 : std::log(std::log(norm));
            running.add(v * ll / norm);
        }
        out.push_back(running.value());
    }
    return out;
}

// --- exact identities --------------------------------------------------------------

BTransform b_transform_check(const Semigroup& sg, const ArithFn& a, const Element& g) {
    if (sg.norm_kind() != NormKind::Rational) throw std::logic_error("b_transform_check: needs rational norms");
    ArithFn b{[&](const Element& h) -> Rational {
                  Rational s = 0;
                  for_each_divisor(h, [&](const Element& k, const Element&) {
                      Rational c = mobius_convolve(a, k);
                      if (c != 0) s += c * sg.norm(k) / euler_phi(sg, k);
                  });
                  return s;
              },
              Support::All, false};
    BTransform out;
    out.lhs = mobius_convolve(a, g) / euler_phi(sg, g);
    out.rhs = mobius_convolve(b, g) / sg.norm(g);
    out.residual = out.lhs - out.rhs;
    return out;
}

std::vector<SizeFn> standard_size_functions(std::uint64_t identity_key) {
    const auto k0 = static_cast<std::int64_t>(identity_key);
    return {
        SizeFn([k0](std::uint64_t n) -> Rational { return Rational(static_cast<long>(static_cast<std::int64_t>(n) - k0)); },
               "n-k0"),
        SizeFn(
            [k0](std::uint64_t n) -> Rational {
                Rational d(static_cast<long>(static_cast<std::int64_t>(n) - k0));
                return d * d - Rational(3) * d;
            },
            "(n-k0)^2-3(n-k0)"),
        SizeFn([k0](std::uint64_t n) -> Rational { return Rational(static_cast<std::int64_t>(n) > k0 ? 1 : 0); },
               "[n>k0]"),
        SizeFn(
            [k0](std::uint64_t n) -> Rational {
                return Rational(1, static_cast<unsigned long>(n + 1)) - Rational(1, static_cast<unsigned long>(k0 + 1));
            },
            "1/(n+1)-1/(k0+1)"),
    };
}

namespace {

// Random test function vanishing at k0: a short polynomial in (n - k0), a
// step, or a shifted reciprocal, chosen by `r`.
SizeFn random_size_fn(std::uint64_t k0, std::uint64_t r) {
    const auto base = static_cast<std::int64_t>(k0);
    const long c1 = static_cast<long>((r >> 4) % 11) - 5;
    const long c2 = static_cast<long>((r >> 12) % 11) - 5;
    const long c3 = static_cast<long>((r >> 20) % 7) - 3;
    const std::uint64_t step = (r >> 28) % 16;
    switch (r % 4) {
        case 0:
            return SizeFn(
                [=](std::uint64_t n) -> Rational {
                    Rational d(static_cast<long>(static_cast<std::int64_t>(n) - base));
                    return d * (Rational(c1) + d * (Rational(c2) + d * Rational(c3)));
                },
                "poly(" + std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(c3) + ")");
        case 1:
            return SizeFn([=](std::uint64_t n) -> Rational { return Rational(n > k0 + step ? c1 : 0); },
                          "step(" + std::to_string(step) + "," + std::to_string(c1) + ")");
        case 2:
            return SizeFn(
                [=](std::uint64_t n) -> Rational {
                    return Rational(1, static_cast<unsigned long>(n + 1 + step)) -
                           Rational(1, static_cast<unsigned long>(k0 + 1 + step));
                },
                "recip(" + std::to_string(step) + ")");
        default:
            return SizeFn([=](std::uint64_t n) -> Rational { return Rational((n - k0) % (step + 2) == 0 ? 0 : c2); },
                          "periodic(" + std::to_string(step + 2) + "," + std::to_string(c2) + ")");
    }
}

// Membership of prime id p in random set number `salt`: all, none, or a
// hashed subset of density 1/2 or 1/4.
bool random_member(std::uint64_t salt, PrimeId p) {
    switch (salt % 4) {
        case 0: return true;
        case 1: return false;
        case 2: return splitmix(salt ^ (std::uint64_t{p} * 0x9E3779B97F4A7C15ULL)) % 2 == 0;
        default: return splitmix(salt ^ (std::uint64_t{p} * 0x9E3779B97F4A7C15ULL)) % 4 == 0;
    }
}

std::string describe_random_set(std::uint64_t salt) {
    static const char* names[] = {"all", "none", "hash1/2", "hash1/4"};
    return std::string(names[salt % 4]) + "#" + std::to_string(salt);
}

std::vector<bool> random_mask_for(const Semigroup& sg, const Element& g, std::uint64_t salt) {
    std::vector<bool> mask(sg.prime_count(), false);
    for (const Factor& f : g.factors()) mask[f.prime] = random_member(salt, f.prime);
    return mask;
}

FuzzReport merge_fuzz(std::vector<FuzzReport>& parts) {
    FuzzReport out;
    out.max_abs_residual = 0;
    for (auto& p : parts) {
        out.trials += p.trials;
        if (p.max_abs_residual > out.max_abs_residual) out.max_abs_residual = p.max_abs_residual;
        if (!out.failure && p.failure) out.failure = std::move(p.failure);
    }
    return out;
}

}  // namespace

FuzzReport duality_fuzz(const Semigroup& sg, std::uint64_t max_key, std::size_t triples, std::uint64_t seed,
                        unsigned workers) {
    if (max_key > sg.horizon()) throw std::out_of_range("duality_fuzz: max_key beyond the prime table");
    const std::vector<Element> elements = sg.enumerate(max_key);
    struct Triple {
        std::size_t element;
        std::uint64_t set_salt;
        std::uint64_t fn_bits;
    };
    std::mt19937_64 rng(seed);
    std::vector<Triple> inputs(triples);
    for (auto& t : inputs) {
        t.element = static_cast<std::size_t>(rng() % elements.size());
        t.set_salt = rng();
        t.fn_bits = rng();
    }
    const std::uint64_t k0 = sg.identity_key();
    auto parts = chunks(0, inputs.size(), 512);
    auto results = map_buckets<FuzzReport>(parts.size(), workers, [&](std::size_t k) {
        FuzzReport r;
        r.max_abs_residual = 0;
        for (std::size_t i = parts[k].first; i < parts[k].second; ++i) {
            const Triple& t = inputs[i];
            const Element& g = elements[t.element];
            SizeFn f = random_size_fn(k0, t.fn_bits);
            Rational res = abs(duality_residual(sg, g, random_mask_for(sg, g, t.set_salt), f));
            ++r.trials;
            if (res > r.max_abs_residual) r.max_abs_residual = res;
            if (res != 0 && !r.failure) {
                r.failure = "g=" + sg.label(g) + " S=" + describe_random_set(t.set_salt) + " f=" + f.name() +
                            " residual=" + asg::to_string(res);
            }
        }
        return r;
    });
    return merge_fuzz(results);
}

FuzzReport duality_sweep(const Semigroup& sg, std::uint64_t max_key, const std::vector<PrimeSet>& sets,
                         const std::vector<SizeFn>& fns, unsigned workers) {
    if (max_key > sg.horizon()) throw std::out_of_range("duality_sweep: max_key beyond the prime table");
    const std::vector<Element> elements = sg.enumerate(max_key);
    std::vector<std::vector<bool>> masks;
    for (const auto& s : sets) masks.push_back(s.mask(sg));
    auto parts = chunks(0, elements.size(), kElementChunk);
    auto results = map_buckets<FuzzReport>(parts.size(), workers, [&](std::size_t k) {
        FuzzReport r;
        r.max_abs_residual = 0;
        for (std::size_t i = parts[k].first; i < parts[k].second; ++i) {
            for (std::size_t s = 0; s < sets.size(); ++s) {
                for (const auto& f : fns) {
                    Rational res = abs(duality_residual(sg, elements[i], masks[s], f));
                    ++r.trials;
                    if (res > r.max_abs_residual) r.max_abs_residual = res;
                    if (res != 0 && !r.failure) {
                        r.failure = "g=" + sg.label(elements[i]) + " S=" + sets[s].description() + " f=" + f.name();
                    }
                }
            }
        }
        return r;
    });
    return merge_fuzz(results);
}

FuzzReport b_transform_fuzz(std::shared_ptr<const Semigroup> sg, std::uint64_t max_key, std::size_t trials,
                            std::uint64_t seed, unsigned workers) {
    if (max_key > sg->horizon()) throw std::out_of_range("b_transform_fuzz: max_key beyond the prime table");
    const std::vector<Element> elements = sg->enumerate(max_key);
    std::mt19937_64 rng(seed);
    struct Input {
        std::size_t element;
        std::uint64_t set_salt;
        std::uint64_t fn_seed;
    };
    std::vector<Input> inputs(trials);
    for (auto& t : inputs) {
        t.element = static_cast<std::size_t>(rng() % elements.size());
        t.set_salt = rng();
        t.fn_seed = rng();
    }
    auto parts = chunks(0, inputs.size(), 64);
    auto results = map_buckets<FuzzReport>(parts.size(), workers, [&](std::size_t k) {
        FuzzReport r;
        r.max_abs_residual = 0;
        for (std::size_t i = parts[k].first; i < parts[k].second; ++i) {
            const Input& t = inputs[i];
            const Element& g = elements[t.element];
            // a must see membership for every divisor of g, which only involves primes of g
            ArithFn a = random_arith_fn(sg, random_mask_for(*sg, g, t.set_salt), t.fn_seed);
            Rational res = abs(b_transform_check(*sg, a, g).residual);
            ++r.trials;
            if (res > r.max_abs_residual) r.max_abs_residual = res;
            if (res != 0 && !r.failure) {
                r.failure = "g=" + sg->label(g) + " S=" + describe_random_set(t.set_salt) +
                            " a-seed=" + std::to_string(t.fn_seed);
            }
        }
        return r;
    });
    return merge_fuzz(results);
}

// --- statistics --------------------------------------------------------------------

PartialSumStatistics partial_sum_statistics(const Semigroup& sg, std::uint64_t n, std::uint64_t m) {
    if (n > sg.horizon()) throw std::out_of_range("partial_sum_statistics: n beyond the prime table");
    PartialSumStatistics out;
    const bool rational = sg.norm_kind() == NormKind::Rational;
    Rational r = 0;
    sg.for_each_element(n, [&](const Element& g, std::uint64_t key) {
        // prime ids follow key order, so the first factor has the smallest key
        if (!g.is_identity() && sg.key(g.factors().front().prime) <= m) return;
        ++out.Phi;
        int mu = mobius(g);
        if (mu == 0) return;
        out.M += mu;
        if (key == n) out.C += mu;
        if (rational) r += Rational(mu) / sg.norm(g);
    });
    if (rational) out.R = r;
    return out;
}

std::vector<DensityRow> density_estimate(const Semigroup& sg, const PrimeSet& set,
                                         const std::vector<std::uint64_t>& cutoffs) {
    validate_cutoffs(cutoffs, sg.horizon(), "prime table");
    std::vector<DensityRow> out;
    const bool by_degree = sg.ordering() == Ordering::Degree;
    BigInt in_set = 0;
    BigInt total = 0;
    std::uint64_t prev = 0;
    for (std::uint64_t c : cutoffs) {
        if (by_degree) {
            in_set = 0;
            total = 0;
            auto [first, last] = sg.primes_with_key(c);
            for (PrimeId id = first; id < last; ++id) {
                ++total;
                if (set.contains(sg.prime(id))) ++in_set;
            }
        } else {
            for (const Prime& p : sg.primes()) {
                const std::uint64_t k = sg.key(p.id);
                if (k <= prev || k > c) continue;
                ++total;
                if (set.contains(p)) ++in_set;
            }
        }
        DensityRow row{c, in_set, total, std::nullopt};
        if (total != 0) row.ratio = Rational(in_set) / Rational(total);
        out.push_back(std::move(row));
        prev = c;
    }
    return out;
}

std::optional<Rational> final_density(const std::vector<DensityRow>& rows) {
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (it->ratio) return it->ratio;
    }
    return std::nullopt;
}

namespace {

// Least-squares line y = a + b t; returns (a, b).
std::pair<double, double> fit_line(const std::vector<double>& t, const std::vector<double>& y) {
    const double n = static_cast<double>(t.size());
    const double st = std::accumulate(t.begin(), t.end(), 0.0);
    const double sy = std::accumulate(y.begin(), y.end(), 0.0);
    double stt = 0;
    double sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double den = n * stt - st * st;
    if (den == 0) return {sy / n, 0};
    const double b = (n * sty - st * sy) / den;
    return {(sy - b * st) / n, b};
}

double big_log(const BigInt& z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

AxiomFit fit_axiom_constants(Ordering ordering, std::span<const std::uint64_t> points, std::span<const BigInt> counts) {
    if (points.size() != counts.size()) throw std::invalid_argument("fit_axiom_constants: size mismatch");
    if (points.size() < 6) throw std::invalid_argument("fit_axiom_constants: needs at least 6 counts");
    AxiomFit fit;

    if (ordering == Ordering::Degree) {
        // exact geometric sequence on consecutive degrees
        bool geometric = counts[0] > 0;
        Rational ratio;
        for (std::size_t i = 1; geometric && i < counts.size(); ++i) {
            if (points[i] != points[i - 1] + 1 || counts[i] <= 0) {
                geometric = false;
                break;
            }
            Rational r(counts[i], counts[i - 1]);
            r.canonicalize();
            if (i == 1) {
                ratio = r;
            } else if (r != ratio) {
                geometric = false;
            }
        }
        if (geometric && ratio > 1) {
            Rational c = Rational(counts[0]) / power(ratio, static_cast<std::int64_t>(points[0]));
            fit.c = to_double(c);
            fit.base = to_double(ratio);
            fit.exact = true;
            fit.residuals.assign(counts.size(), 0.0);
            fit.note = "exact geometric sequence";
            return fit;
        }

        std::vector<double> t;
        std::vector<double> y;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] > 0) {
                t.push_back(static_cast<double>(points[i]));
                y.push_back(big_log(counts[i]));
            }
        }
        if (t.size() < 2) {
            fit.degenerate = true;
            fit.note = "fewer than two positive counts";
            return fit;
        }
        auto [a, b] = fit_line(t, y);
        fit.c = std::exp(a);
        fit.base = std::exp(b);
        if (fit.base <= 1) {
            fit.degenerate = true;
            fit.note = "fitted base is not above 1";
        }
        std::vector<double> lt;
        std::vector<double> lr;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const double model = fit.c * std::pow(fit.base, static_cast<double>(points[i]));
            const double res = counts[i].get_d() - model;
            fit.residuals.push_back(res);
            if (res != 0 && counts[i] > 0) {
                lt.push_back(static_cast<double>(points[i]));
                lr.push_back(std::log(std::fabs(res)));
            }
        }
        if (lt.size() >= 2 && !fit.degenerate) fit.eta = fit_line(lt, lr).second / std::log(fit.base);
        return fit;
    }

    // N(x) ~ c x by least squares through the origin
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double x = static_cast<double>(points[i]);
        sxx += x * x;
        sxy += x * counts[i].get_d();
    }
    fit.base = 1;
    if (sxx == 0) {
        fit.degenerate = true;
        fit.note = "all points are zero";
        return fit;
    }
    fit.c = sxy / sxx;
    std::vector<double> lt;
    std::vector<double> lr;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double x = static_cast<double>(points[i]);
        const double res = counts[i].get_d() - fit.c * x;
        fit.residuals.push_back(res);
        if (res != 0 && x > 1) {
            lt.push_back(std::log(x));
            lr.push_back(std::log(std::fabs(res)));
        }
    }
    if (fit.c <= 0) {
        fit.degenerate = true;
        fit.note = "non-positive density constant";
    }
    if (lt.size() >= 2) fit.eta = fit_line(lt, lr).second;
    return fit;
}

Equidistribution equidistribution_check(const Backend& backend, const PrimeSet& set,
                                        const std::vector<std::uint64_t>& cutoffs) {
    const Semigroup& sg = backend.semigroup();
    validate_cutoffs(cutoffs, sg.horizon(), "enumeration");
    const std::vector<bool> in_s = set.mask(sg);
    const bool by_degree = sg.ordering() == Ordering::Degree;
    const std::uint64_t top = cutoffs.back();

    Equidistribution out;
    if (set.known_density()) {
        out.density = *set.known_density();
    } else {
        out.density_known = false;
        out.density = final_density(density_estimate(sg, set, {top})).value_or(Rational(0));
    }

    // sum of Q_S and element counts, per key (degrees) or as sorted keys (norms)
    std::map<std::uint64_t, BigInt> q_by_key;
    std::map<std::uint64_t, BigInt> count_by_key;
    sg.for_each_element(top, [&](const Element& g, std::uint64_t key) {
        ++count_by_key[key];
        if (g.is_identity()) return;
        auto data = max_prime_data(sg, g, in_s);
        if (data.q_s) q_by_key[key] += data.q_s;
    });

    std::optional<double> known_c;
    switch (backend.kind()) {
        case BackendKind::Poly:
        case BackendKind::Integer: known_c = 1.0; break;
        case BackendKind::Gaussian: known_c = std::acos(-1.0) / 4; break;
        case BackendKind::Graph: break;
    }

    std::vector<std::uint64_t> points;
    std::vector<BigInt> counts;
    if (by_degree) {
        for (std::uint64_t n = 0; n <= top; ++n) {
            points.push_back(n);
            counts.push_back(count_by_key.count(n) ? count_by_key[n] : BigInt(0));
        }
        out.base = backend.kind() == BackendKind::Graph ? 1.0 / backend.as_graph().radius().value()
                                                        : static_cast<double>(backend.as_poly().q());
    } else {
        BigInt running = 0;
        auto it = count_by_key.begin();
        for (int i = 1; i <= 12; ++i) {
            const std::uint64_t x = std::max<std::uint64_t>(1, top * static_cast<std::uint64_t>(i) / 12);
            for (; it != count_by_key.end() && it->first <= x; ++it) running += it->second;
            if (!points.empty() && points.back() == x) continue;
            points.push_back(x);
            counts.push_back(running);
        }
        out.base = 1;
    }
    try {
        out.fit = fit_axiom_constants(sg.ordering(), points, counts);
    } catch (const std::invalid_argument& e) {
        out.fit.degenerate = true;
        out.fit.note = e.what();
    }

    const double delta = to_double(out.density);
    BigInt cumulative = 0;
    auto q_it = q_by_key.begin();
    for (std::uint64_t c : cutoffs) {
        EquidistributionRow row;
        row.cutoff = c;
        if (by_degree) {
            row.lhs = q_by_key.count(c) ? q_by_key[c] : BigInt(0);
            row.ratio = row.lhs.get_d() / std::pow(out.base, static_cast<double>(c));
        } else {
            for (; q_it != q_by_key.end() && q_it->first <= c; ++q_it) cumulative += q_it->second;
            row.lhs = cumulative;
            row.ratio = row.lhs.get_d() / static_cast<double>(c);
        }
        if (known_c) row.known_reference = *known_c * delta;
        if (!out.fit.degenerate) row.fitted_reference = out.fit.c * delta;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace asg::experiments
