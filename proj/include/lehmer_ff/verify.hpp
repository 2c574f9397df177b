/*
   Copyright 2026 The lehmer-ff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lehmer_ff/fpoly.hpp"
#include "lehmer_ff/serialize.hpp"

namespace lehmer_ff {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Counts on success; expected-vs-found diff or first counterexample on failure.
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    Json to_json() const;
    std::string to_text() const;
};

/// The sets the classification theorem predicts, restricted to degree <= max_degree
/// and given as monic representatives.
std::vector<Poly> expected_lehmer_set(const Field& field, std::size_t max_degree);

struct MainTheoremOptions {
    /// Field orders to sweep; empty means {2, 3, 4, 5}.
    std::vector<std::uint32_t> orders;
    /// Overrides the per-field default (12 for q = 2, 8 for q = 3, 7 for
    /// q = 4 and 5, 5 otherwise).
    std::optional<std::size_t> max_degree;
    unsigned workers = 1;
};

std::size_t default_sweep_degree(std::uint32_t q);

SuiteReport verify_main_theorem(const MainTheoremOptions& options);
SuiteReport verify_prop31(std::uint64_t a_max = 8, unsigned n_max = 10, unsigned workers = 1);
SuiteReport verify_prop36_suite(unsigned n_max = 30, unsigned workers = 1);
SuiteReport verify_cyclo_lemmas();
SuiteReport verify_bounds(std::uint64_t n_max = 100000);
SuiteReport verify_oracle(std::uint64_t seed = 20260101);

/// Text for a set difference, e.g. "missing: {x^2+1}; unexpected: {}".
std::string set_diff(const std::vector<std::string>& expected, const std::vector<std::string>& found);

}  // namespace lehmer_ff
