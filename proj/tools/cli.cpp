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

#include "cli.hpp"

#include "asg/config.hpp"
#include "asg/experiments.hpp"
#include "asg/series.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace asg::cli {

namespace {

using config::RunConfig;
using config::UsageError;
namespace ex = experiments;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

PrimeSet prime_set_of(const Backend& backend, const RunConfig& c) {
    try {
        return backend.prime_set(c.set);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Writes `emit` to the configured output file, or to `out` when there is none.
void write_output(const RunConfig& c, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
    if (!c.output) {
        emit(out);
        return;
    }
    std::ofstream file(*c.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + *c.output + "'");
    emit(file);
}

int cmd_run(const RunConfig& c, std::ostream& out) {
    Backend backend = config::make_backend(c);
    ex::AlladiRequest request;
    request.set = prime_set_of(backend, c);
    switch (c.arith) {
        case ex::ArithSpec::Kind::Identity: break;
        case ex::ArithSpec::Kind::PowerDecay:
            if (c.alpha <= 0) throw UsageError("alpha must be positive");
            request.arith = ex::ArithSpec::power_decay(c.alpha);
            break;
        case ex::ArithSpec::Kind::Table:
            request.arith = ex::ArithSpec::from_table(config::parse_arith_table(backend, read_file(*c.arith_file)));
            break;
    }
    request.weight = c.weight;
    request.cutoffs = c.cutoffs;
    request.workers = c.workers;
    request.exact = c.exact;

    ex::ExperimentReport report = ex::alladi_partial_sums(backend, request);
    if (c.output) {
        write_output(c, out, [&](std::ostream& os) { report.write_csv(os, c.timing); });
        report.write_table(out);
    } else {
        report.write_csv(out, c.timing);
    }
    return kExitOk;
}

int cmd_duality_fuzz(const RunConfig& c, std::ostream& out, std::ostream& err) {
    Backend backend = config::make_backend(c);
    auto report = ex::duality_fuzz(backend.semigroup(), config::horizon(c), c.triples, c.seed, c.workers);
    out << report.trials << " triples, max residual " << to_string(report.max_abs_residual) << '\n';
    if (report.failure) {
        err << "offending triple: " << *report.failure << '\n';
        return kExitContract;
    }
    return kExitOk;
}

int cmd_zeta(const RunConfig& c, std::ostream& out) {
    Backend backend = config::make_backend(c);
    const Semigroup& sg = backend.semigroup();
    const std::uint64_t top = config::horizon(c);

    if (sg.ordering() == Ordering::Norm) {
        std::vector<std::uint64_t> primes_below;
        for (std::uint64_t x : c.cutoffs) {
            std::uint64_t count = 0;
            for (const Prime& p : sg.primes()) count += sg.key(p.id) <= x ? 1 : 0;
            primes_below.push_back(count);
        }
        std::vector<ex::PartialSumStatistics> stats;
        for (std::uint64_t x : c.cutoffs) stats.push_back(ex::partial_sum_statistics(sg, x, 0));
        write_output(c, out, [&](std::ostream& os) {
            os << "x,pi,N,M\n";
            for (std::size_t i = 0; i < c.cutoffs.size(); ++i) {
                os << c.cutoffs[i] << ',' << primes_below[i] << ',' << stats[i].Phi.get_str() << ','
                   << stats[i].M.get_str() << '\n';
            }
        });
        return kExitOk;
    }

    std::vector<BigInt> pi(top + 1);
    for (std::uint64_t n = 1; n <= top; ++n) {
        auto [first, last] = sg.primes_with_key(n);
        pi[n] = last - first;
    }
    std::vector<BigInt> g = euler_transform(pi);
    PowerSeries zeta = PowerSeries::from_integers(g, top);
    PowerSeries inv = reciprocal_coefficients(zeta);

    if (!c.output) {
        if (backend.kind() == BackendKind::Graph) {
            const auto& r = backend.as_graph().radius();
            out << "R_G = " << fmt(r.value()) << (r.exact ? " (exact)" : "") << '\n';
            out << "Delta_G = " << r.delta << '\n';
            out << "Kotani bounds = [" << fmt(to_double(r.kotani_lower)) << ", " << fmt(to_double(r.kotani_upper))
                << "]\n";
        } else {
            const unsigned q = backend.as_poly().q();
            auto check = assumption_check_minus_q_inverse(zeta, q);
            const char* verdict = check.verdict == AssumptionVerdict::Holds   ? "holds"
                                  : check.verdict == AssumptionVerdict::Fails ? "fails"
                                                                              : "inconclusive";
            out << "1/Z(-1/" << q << ") ~ " << fmt(to_double(check.reciprocal_value)) << " (" << verdict << ")\n";
        }
        if (top >= 5) {
            std::vector<std::uint64_t> points;
            for (std::uint64_t n = 0; n <= top; ++n) points.push_back(n);
            auto fit = ex::fit_axiom_constants(Ordering::Degree, points, g);
            out << "fit: c_G = " << fmt(fit.c) << ", q = " << fmt(fit.base);
            if (fit.eta) out << ", eta = " << fmt(*fit.eta);
            if (fit.degenerate) out << " (degenerate: " << fit.note << ")";
            out << '\n';
        }
    }
    write_output(c, out, [&](std::ostream& os) {
        os << "n,pi,G,C_mu\n";
        for (std::uint64_t n = 0; n <= top; ++n) {
            os << n << ',' << pi[n].get_str() << ',' << g[n].get_str() << ',' << to_string(inv[n]) << '\n';
        }
    });
    return kExitOk;
}

int cmd_density(const RunConfig& c, std::ostream& out) {
    Backend backend = config::make_backend(c);
    PrimeSet set = prime_set_of(backend, c);
    auto rows = ex::density_estimate(backend.semigroup(), set, c.cutoffs);
    write_output(c, out, [&](std::ostream& os) {
        os << "cutoff,in_set,total,ratio\n";
        for (const auto& r : rows) {
            os << r.cutoff << ',' << r.in_set.get_str() << ',' << r.total.get_str() << ','
               << (r.ratio ? to_string(*r.ratio) : "NA") << '\n';
        }
    });
    return kExitOk;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
    Backend backend = config::make_backend(c);
    const std::uint64_t n = c.n.value_or(config::horizon(c));
    auto s = ex::partial_sum_statistics(backend.semigroup(), n, c.m);
    write_output(c, out, [&](std::ostream& os) {
        os << "n,m,C,M,R,Phi\n";
        os << n << ',' << c.m << ',' << s.C.get_str() << ',' << s.M.get_str() << ','
           << (s.R ? to_string(*s.R) : "NA") << ',' << s.Phi.get_str() << '\n';
    });
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Experiments on arithmetical semigroups: Alladi sums, duality, zeta functions."};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* app = nullptr;
        std::map<std::string, std::string> values;
        std::string config_path;
        bool timing = false;
        bool exact = false;
        bool numeric = false;
    };
    const std::vector<std::pair<std::string, std::string>> commands{
        {"run", "Alladi partial sums as CSV"},
        {"duality-fuzz", "randomised duality identity check"},
        {"zeta", "prime counts, element counts and 1/Z coefficients"},
        {"density", "empirical prime-set density"},
        {"stats", "C, M, R and Phi partial-sum statistics"},
    };
    const std::map<std::string, std::string> help{
        {"backend", "poly, int or graph"},
        {"q", "field size for poly"},
        {"ordering", "degree or norm (poly)"},
        {"field", "Q or Qi (int)"},
        {"limit", "sieve limit (int)"},
        {"graph", "named graph (graph)"},
        {"graph-file", "edge-list file (graph)"},
        {"set", "prime set, e.g. all, mod:4,1, split, len:2,0"},
        {"arith", "identity, power or table"},
        {"alpha", "power decay exponent"},
        {"arith-file", "table of '<element> <value>' lines"},
        {"cutoff", "largest cutoff"},
        {"cutoffs", "comma-separated cutoffs"},
        {"weight", "norm or phi"},
        {"output", "CSV path; a table goes to stdout"},
        {"workers", "worker threads"},
        {"seed", "random seed"},
        {"triples", "number of fuzz triples"},
        {"n", "size bound for stats"},
        {"m", "least-prime threshold for stats"},
    };
    std::vector<Sub> subs(commands.size());
    for (std::size_t i = 0; i < commands.size(); ++i) {
        Sub& s = subs[i];
        s.app = app.add_subcommand(commands[i].first, commands[i].second);
        s.app->add_option("--config", s.config_path, "key=value file; flags take precedence");
        for (const std::string& key : config::known_keys()) {
            if (key == "timing" || key == "exact") continue;
            auto h = help.find(key);
            s.app->add_option("--" + key, s.values[key], h == help.end() ? std::string() : h->second);
        }
        s.app->add_flag("--timing", s.timing, "append a seconds column");
        s.app->add_flag("--exact", s.exact, "force exact rational sums");
        s.app->add_flag("--numeric", s.numeric, "force floating-point sums");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::size_t which = 0;
    while (!subs[which].app->parsed()) ++which;
    Sub& s = subs[which];
    const std::string& command = commands[which].first;

    RunConfig cfg;
    try {
        std::map<std::string, std::string> flags;
        for (const auto& [key, value] : s.values) {
            if (s.app->get_option("--" + key)->count() > 0) flags[key] = value;
        }
        if (s.timing) flags["timing"] = "true";
        if (s.exact && s.numeric) throw UsageError("--exact and --numeric are exclusive");
        if (s.exact) flags["exact"] = "true";
        if (s.numeric) flags["exact"] = "false";
        std::map<std::string, std::string> file_values;
        if (!s.config_path.empty()) file_values = config::parse_config_text(read_file(s.config_path));
        cfg = config::parse_run_config(config::merge(file_values, flags));
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (command == "run") return cmd_run(cfg, out);
        if (command == "duality-fuzz") return cmd_duality_fuzz(cfg, out, err);
        if (command == "zeta") return cmd_zeta(cfg, out);
        if (command == "density") return cmd_density(cfg, out);
        return cmd_stats(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitContract;
    }
}

}  // namespace asg::cli
