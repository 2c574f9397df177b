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

#include "lehmer_ff/totient.hpp"

#include <algorithm>

#include "lehmer_ff/errors.hpp"
#include "lehmer_ff/parallel.hpp"

namespace lehmer_ff {

namespace {

constexpr std::uint64_t oracle_limit = 1ull << 24;

void require_positive_degree(const Poly& f)
{
    if (f.degree() < Degree(1))
        throw InvalidInput("totient needs deg(f) >= 1, got " + f.degree().str());
}

}  // namespace

BigInt totient(const Factorization& fac, std::uint64_t q)
{
    BigInt phi = 1;
    for (const auto& [poly, mult] : fac.factors) {
        const std::uint64_t n = poly.degree().value();
        phi *= ipow(BigInt(q), n * (mult - 1)) * (ipow(BigInt(q), n) - 1);
    }
    return phi;
}

BigInt totient(const Poly& f)
{
    require_positive_degree(f);
    return totient(factor(f), f.field().q());
}

BigInt totient_bruteforce(const Poly& f)
{
    require_positive_degree(f);
    const std::uint64_t q = f.field().q();
    const std::size_t n = f.degree().value();
    std::uint64_t residues = 1;
    for (std::size_t i = 0; i < n; ++i) {
        residues *= q;
        if (residues > oracle_limit)
            throw OracleOverflow("brute-force totient over " + std::to_string(q) + "^" + std::to_string(n) +
                                 " residues exceeds 2^24");
    }
    const Poly one = Poly::constant(f.field_ptr(), f.field().one());
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < residues; ++code)
        if (poly_gcd(f, decode(f.field_ptr(), code)) == one)
            ++count;
    return count;
}

TotientReport totient_report(const Poly& f)
{
    require_positive_degree(f);
    TotientReport r{f, 0, 0, false, false, factor(f)};
    const std::uint64_t q = f.field().q();
    r.phi = totient(r.factorization, q);
    r.modulus_value = ipow(BigInt(q), f.degree().value()) - 1;
    r.divides = r.modulus_value % r.phi == 0;
    r.reducible = r.factorization.total_multiplicity() >= 2;
    return r;
}

LehmerVerdict is_lehmer(const Poly& f)
{
    LehmerVerdict v{false, false, totient_report(f)};
    v.in_script_L = v.report.divides;
    v.in_L = v.in_script_L && v.report.reducible;
    return v;
}

unsigned min_lehmer_factor_count(std::uint64_t q)
{
    unsigned bits = 0;
    for (std::uint64_t v = q + 1; v > 1; v >>= 1)
        ++bits;
    return bits;
}

std::vector<std::string> lehmer_invariant_violations(const Poly& f, const Factorization& fac)
{
    std::vector<std::string> problems;
    const std::size_t n = f.degree().value();
    if (!fac.is_squarefree())
        problems.push_back(format(f) + " is not squarefree");
    for (const auto& [poly, mult] : fac.factors)
        if (n % poly.degree().value() != 0)
            problems.push_back(format(f) + " has factor " + format(poly) + " whose degree does not divide " +
                               std::to_string(n));
    const unsigned needed = min_lehmer_factor_count(f.field().q());
    if (fac.factors.size() < needed)
        problems.push_back(format(f) + " has " + std::to_string(fac.factors.size()) +
                           " distinct irreducible factors, fewer than " + std::to_string(needed));
    return problems;
}

std::vector<Poly> lehmer_set(const Field& field, std::size_t max_degree, const LehmerSweepOptions& options)
{
    if (max_degree < 1)
        throw InvalidInput("max_degree must be at least 1");
    const std::uint64_t q = field->q();
    std::vector<Poly> hits;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const BigInt target = ipow(BigInt(q), n) - 1;
        const auto shards = enumerate_polys(field, n, true).split(std::max(1u, options.workers) * 4);
        auto found = run_sharded<std::vector<Poly>>(shards.size(), options.workers, [&](std::size_t i) {
            std::vector<Poly> local;
            for (const Poly& f : shards[i]) {
                const Factorization fac = factor(f);
                if (fac.total_multiplicity() < 2)
                    continue;
                if (target % totient(fac, q) == 0)
                    local.push_back(f);
            }
            return local;
        });
        for (auto& block : found)
            for (auto& f : block)
                hits.push_back(std::move(f));
    }

    for (const Poly& f : hits) {
        const auto problems = lehmer_invariant_violations(f, factor(f));
        if (!problems.empty())
            throw InvariantViolation("Lehmer set member violates a structural property: " + problems.front());
    }

    if (options.expand_units) {
        std::vector<Poly> expanded;
        for (const Poly& f : hits)
            for (std::uint32_t u = 1; u < q; ++u)
                expanded.push_back(f.scaled(field->element(u)));
        hits = std::move(expanded);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace lehmer_ff
