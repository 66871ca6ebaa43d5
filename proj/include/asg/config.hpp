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

// Run configuration for the command line tool: key=value text, flag
// overrides, validation and backend construction.

#include "asg/backend.hpp"
#include "asg/experiments.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asg::config {

/// Malformed or inconsistent configuration (exit code 2).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Canonical keys accepted in files and as flags (without the leading --).
const std::vector<std::string>& known_keys();

/// Maps dotted aliases such as backend.int.limit onto canonical keys.
/// Throws UsageError for unknown keys.
std::string canonical_key(const std::string& key);

/// One key=value pair per line; '#' starts a comment. Throws UsageError on
/// malformed lines, unknown keys or repeated keys.
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Non-negative integer, also accepting "1e6" style powers of ten.
std::uint64_t parse_count(const std::string& text, const std::string& what);

struct RunConfig {
    std::string backend = "poly";  ///< poly, int or graph
    unsigned q = 2;
    Ordering ordering = Ordering::Degree;
    std::string field = "Q";  ///< Q or Qi
    std::optional<std::uint64_t> limit;
    std::string graph = "k4";
    std::optional<std::string> graph_file;
    std::string set = "all";
    experiments::ArithSpec::Kind arith = experiments::ArithSpec::Kind::Identity;
    Rational alpha = 1;
    std::optional<std::string> arith_file;
    std::vector<std::uint64_t> cutoffs;
    experiments::Weight weight = experiments::Weight::Norm;
    std::optional<bool> exact;
    std::optional<std::string> output;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::size_t triples = 10000;
    bool timing = false;
    std::optional<std::uint64_t> n;
    std::uint64_t m = 0;
};

/// Applies `values` over the defaults. Cutoffs come from "cutoffs" (a comma
/// list) or "cutoff": 1..N for degree-ordered backends, decades up to X
/// (plus X itself) for norm-ordered ones. Throws UsageError.
RunConfig parse_run_config(const std::map<std::string, std::string>& values);

/// Values from `file_values` overridden by `flag_values`.
std::map<std::string, std::string> merge(std::map<std::string, std::string> file_values,
                                         const std::map<std::string, std::string>& flag_values);

/// Largest key the backend has to cover for this configuration.
std::uint64_t horizon(const RunConfig& config);

/// Builds the backend; library exceptions propagate unchanged.
Backend make_backend(const RunConfig& config);

/// "<element> <value>" lines for table arithmetic functions.
std::map<Element, Rational> parse_arith_table(const Backend& backend, std::string_view text);

}  // namespace asg::config
