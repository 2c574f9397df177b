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

#include <string>
#include <vector>

#include <json.hpp>

#include "lehmer_ff/cyclo.hpp"
#include "lehmer_ff/lehmer_search.hpp"
#include "lehmer_ff/totient.hpp"

namespace lehmer_ff {

using Json = nlohmann::json;

/// Version of every JSON document the CLI emits.
inline constexpr int json_schema_version = 1;

/// {q, degree, poly, phi, modulus_value, divides, reducible, factors}; big
/// integers as decimal strings, factors as [text, multiplicity] pairs.
Json to_json(const TotientReport& r);

/// {a, b, n, primitive_primes, algebraic_primes, exception, primitive_part}.
Json to_json(const ZsigmondyResult& r);

/// {a, n, parts, divides, exponent_map: {"d": e}}.
Json search_report(std::uint64_t a, const Partition& part);

Json to_json(const CandidateSets& c);

/// Header row and data row for the flat TotientReport record. The factors
/// column is "(text)^mult" entries joined by ';'.
std::string totient_csv_header();
std::string to_csv(const TotientReport& r);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace lehmer_ff
