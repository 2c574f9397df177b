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

#include "lehmer_ff/serialize.hpp"

namespace lehmer_ff {

Json to_json(const TotientReport& r)
{
    Json factors = Json::array();
    for (const auto& [poly, mult] : r.factorization.factors)
        factors.push_back(Json::array({format(poly), mult}));
    return Json{
        {"q", r.f.field().q()},
        {"degree", r.f.degree().value()},
        {"poly", format(r.f)},
        {"phi", to_decimal(r.phi)},
        {"modulus_value", to_decimal(r.modulus_value)},
        {"divides", r.divides},
        {"reducible", r.reducible},
        {"factors", factors},
    };
}

Json to_json(const ZsigmondyResult& r)
{
    auto decimals = [](const std::vector<BigInt>& v) {
        Json out = Json::array();
        for (const auto& p : v)
            out.push_back(to_decimal(p));
        return out;
    };
    return Json{
        {"a", r.a},
        {"b", r.b},
        {"n", r.n},
        {"primitive_primes", decimals(r.primitive_primes)},
        {"algebraic_primes", decimals(r.algebraic_primes)},
        {"exception", r.exception ? Json(to_string(*r.exception)) : Json(nullptr)},
        {"primitive_part", to_decimal(r.primitive_part)},
    };
}

Json search_report(std::uint64_t a, const Partition& part)
{
    Json exps = Json::object();
    const auto map = exponent_map(part.n(), part);
    for (auto [d, e] : map.exponents())
        exps[std::to_string(d)] = e;
    return Json{
        {"a", a},
        {"n", part.n()},
        {"parts", part.parts()},
        {"divides", mersenne_divisibility(a, part)},
        {"exponent_map", exps},
    };
}

Json to_json(const CandidateSets& c)
{
    return Json{{"coarse", c.coarse}, {"refined", c.refined}, {"min_margin", c.min_margin.str(12)}};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string totient_csv_header() { return "q,degree,poly,phi,modulus_value,divides,reducible,factors"; }

std::string to_csv(const TotientReport& r)
{
    std::string factors;
    for (const auto& [poly, mult] : r.factorization.factors) {
        if (!factors.empty())
            factors += ';';
        factors += "(" + format(poly) + ")^" + std::to_string(mult);
    }
    std::string row;
    row += std::to_string(r.f.field().q()) + ",";
    row += std::to_string(r.f.degree().value()) + ",";
    row += csv_field(format(r.f)) + ",";
    row += to_decimal(r.phi) + ",";
    row += to_decimal(r.modulus_value) + ",";
    row += std::string(r.divides ? "true" : "false") + ",";
    row += std::string(r.reducible ? "true" : "false") + ",";
    row += csv_field(factors);
    return row;
}

}  // namespace lehmer_ff
