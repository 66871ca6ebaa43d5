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

#include "asg/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace asg::config {

namespace {

std::string trim(std::string_view s) {
    const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
    auto b = std::find_if(s.begin(), s.end(), not_space);
    auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return b < e ? std::string(b, e) : std::string();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(trim(part));
    return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw UsageError(key + ": expected a boolean, got '" + v + "'");
}

std::vector<std::uint64_t> decades(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 10; d < x; d *= 10) out.push_back(d);
    out.push_back(x);
    return out;
}

}  // namespace

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{
        "backend", "q",       "ordering", "field",  "limit",   "graph", "graph-file", "set",
        "arith",   "alpha",   "arith-file", "cutoff", "cutoffs", "weight", "exact",     "output",
        "workers", "seed",    "triples",  "timing", "n",       "m",
    };
    return keys;
}

std::string canonical_key(const std::string& key) {
    static const std::map<std::string, std::string> aliases{
        {"backend.int.limit", "limit"},   {"backend.int.field", "field"},  {"backend.poly.q", "q"},
        {"backend.poly.ordering", "ordering"}, {"backend.graph.source", "graph"},
        {"backend.graph.file", "graph-file"},
    };
    if (auto it = aliases.find(key); it != aliases.end()) return it->second;
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) return key;
    throw UsageError("unknown configuration key '" + key + "'");
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::string body = trim(line);
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = canonical_key(trim(std::string_view(body).substr(0, eq)));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        if (!out.emplace(key, value).second) {
            throw UsageError("config line " + std::to_string(line_no) + ": repeated key '" + key + "'");
        }
    }
    return out;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
    const std::string s = trim(text);
    std::uint64_t mant = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), mant);
    if (ec != std::errc() || ptr == s.data()) throw UsageError(what + ": expected a number, got '" + text + "'");
    if (ptr == s.data() + s.size()) return mant;
    if (*ptr != 'e' && *ptr != 'E') throw UsageError(what + ": expected a number, got '" + text + "'");
    unsigned exp = 0;
    auto [ptr2, ec2] = std::from_chars(ptr + 1, s.data() + s.size(), exp);
    if (ec2 != std::errc() || ptr2 != s.data() + s.size() || exp > 19) {
        throw UsageError(what + ": bad exponent in '" + text + "'");
    }
    unsigned __int128 v = mant;
    for (unsigned i = 0; i < exp; ++i) {
        v *= 10;
        if (v > UINT64_MAX) throw UsageError(what + ": '" + text + "' is too large");
    }
    return static_cast<std::uint64_t>(v);
}

std::map<std::string, std::string> merge(std::map<std::string, std::string> file_values,
                                         const std::map<std::string, std::string>& flag_values) {
    for (const auto& [k, v] : flag_values) file_values[canonical_key(k)] = v;
    return file_values;
}

RunConfig parse_run_config(const std::map<std::string, std::string>& raw) {
    std::map<std::string, std::string> values;
    for (const auto& [k, v] : raw) values[canonical_key(k)] = v;
    auto get = [&](const std::string& key) -> std::optional<std::string> {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    };

    RunConfig c;
    if (auto v = get("backend")) {
        if (*v != "poly" && *v != "int" && *v != "graph") throw UsageError("backend must be poly, int or graph");
        c.backend = *v;
    }
    if (auto v = get("q")) c.q = static_cast<unsigned>(parse_count(*v, "q"));
    if (auto v = get("ordering")) {
        if (*v == "degree") {
            c.ordering = Ordering::Degree;
        } else if (*v == "norm") {
            c.ordering = Ordering::Norm;
        } else {
            throw UsageError("ordering must be degree or norm");
        }
    }
    if (auto v = get("field")) {
        if (*v != "Q" && *v != "Qi") throw UsageError("field must be Q or Qi");
        c.field = *v;
    }
    if (auto v = get("limit")) c.limit = parse_count(*v, "limit");
    if (auto v = get("graph")) c.graph = *v;
    if (auto v = get("graph-file")) c.graph_file = *v;
    if (auto v = get("set")) c.set = *v;
    if (auto v = get("arith")) {
        if (*v == "identity") {
            c.arith = experiments::ArithSpec::Kind::Identity;
        } else if (*v == "power") {
            c.arith = experiments::ArithSpec::Kind::PowerDecay;
        } else if (*v == "table") {
            c.arith = experiments::ArithSpec::Kind::Table;
        } else {
            throw UsageError("arith must be identity, power or table");
        }
    }
    if (auto v = get("alpha")) {
        try {
            c.alpha = parse_rational(*v);
        } catch (const std::exception&) {
            throw UsageError("alpha: expected a rational or decimal, got '" + *v + "'");
        }
    }
    if (auto v = get("arith-file")) c.arith_file = *v;
    if (c.arith == experiments::ArithSpec::Kind::Table && !c.arith_file) {
        throw UsageError("arith=table needs arith-file");
    }
    if (auto v = get("weight")) {
        if (*v == "norm") {
            c.weight = experiments::Weight::Norm;
        } else if (*v == "phi") {
            c.weight = experiments::Weight::Phi;
        } else {
            throw UsageError("weight must be norm or phi");
        }
    }
    if (auto v = get("exact")) c.exact = parse_bool(*v, "exact");
    if (auto v = get("output")) c.output = *v;
    if (auto v = get("workers")) {
        auto w = parse_count(*v, "workers");
        if (w < 1 || w > 1024) throw UsageError("workers must lie in [1, 1024]");
        c.workers = static_cast<unsigned>(w);
    }
    if (auto v = get("seed")) c.seed = parse_count(*v, "seed");
    if (auto v = get("triples")) c.triples = parse_count(*v, "triples");
    if (auto v = get("timing")) c.timing = parse_bool(*v, "timing");
    if (auto v = get("n")) c.n = parse_count(*v, "n");
    if (auto v = get("m")) c.m = parse_count(*v, "m");

    const bool by_norm = c.backend == "int" || (c.backend == "poly" && c.ordering == Ordering::Norm);
    if (auto v = get("cutoffs")) {
        if (get("cutoff")) throw UsageError("give either cutoff or cutoffs, not both");
        for (const auto& part : split(*v, ',')) c.cutoffs.push_back(parse_count(part, "cutoffs"));
        if (c.cutoffs.empty()) throw UsageError("cutoffs: empty list");
        for (std::size_t i = 1; i < c.cutoffs.size(); ++i) {
            if (c.cutoffs[i] <= c.cutoffs[i - 1]) throw UsageError("cutoffs must be strictly increasing");
        }
    } else {
        std::uint64_t top = 0;
        if (auto cut = get("cutoff")) {
            top = parse_count(*cut, "cutoff");
        } else if (c.backend == "int") {
            top = 10000;
        } else if (c.backend == "graph") {
            top = 8;
        } else {
            top = c.ordering == Ordering::Norm ? 1024 : 10;
        }
        if (by_norm) {
            c.cutoffs = decades(top);
        } else {
            for (std::uint64_t k = 1; k <= top; ++k) c.cutoffs.push_back(k);
        }
    }
    if (c.cutoffs.empty() || c.cutoffs.front() < 1) throw UsageError("cutoffs must be >= 1");
    return c;
}

std::uint64_t horizon(const RunConfig& config) {
    std::uint64_t h = config.cutoffs.back();
    if (config.n) h = std::max(h, *config.n);
    return h;
}

Backend make_backend(const RunConfig& c) {
    const std::uint64_t h = horizon(c);
    if (c.backend == "poly") {
        unsigned degree = static_cast<unsigned>(h);
        if (c.ordering == Ordering::Norm) {
            degree = 1;
            for (std::uint64_t norm = c.q; norm < h; norm *= c.q) ++degree;
        }
        return Backend::poly(c.q, degree, c.ordering);
    }
    if (c.backend == "int") {
        const std::uint64_t limit = std::max<std::uint64_t>(2, c.limit.value_or(h));
        return c.field == "Qi" ? Backend::gaussian(limit) : Backend::integers(limit);
    }
    if (c.graph_file) {
        std::ifstream in(*c.graph_file);
        if (!in) throw UsageError("cannot read graph file '" + *c.graph_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        std::string name = *c.graph_file;
        if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
        return Backend::graph(graph::Graph::parse_edge_list(ss.str(), name), h, c.workers);
    }
    return Backend::graph(graph::Graph::named(c.graph), h, c.workers);
}

std::map<Element, Rational> parse_arith_table(const Backend& backend, std::string_view text) {
    std::map<Element, Rational> out;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string element;
        std::string value;
        if (!(fields >> element)) continue;
        std::string extra;
        if (!(fields >> value) || (fields >> extra)) {
            throw UsageError("arith table line " + std::to_string(line_no) + ": expected '<element> <value>'");
        }
        Element g;
        Rational v;
        try {
            g = backend.parse_element(element);
            v = parse_rational(value);
        } catch (const std::exception& e) {
            throw UsageError("arith table line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!out.emplace(g, v).second) {
            throw UsageError("arith table line " + std::to_string(line_no) + ": repeated element");
        }
    }
    return out;
}

}  // namespace asg::config
