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

#include "lehmer_ff/lehmer_search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lehmer_ff/cyclo.hpp"
#include "lehmer_ff/errors.hpp"
#include "lehmer_ff/parallel.hpp"

namespace lehmer_ff {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    if (parts_.size() < 2)
        throw InvalidInput("a partition needs at least two parts");
    std::sort(parts_.begin(), parts_.end());
    if (parts_.front() == 0)
        throw InvalidInput("partition parts must be positive");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned Partition::multiplicity(unsigned d) const noexcept
{
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), d));
}

std::string Partition::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
{
    if (a.n_ != b.n_)
        return a.n_ <=> b.n_;
    return std::lexicographical_compare_three_way(a.parts_.rbegin(), a.parts_.rend(), b.parts_.rbegin(),
                                                  b.parts_.rend());
}

std::vector<Partition> partitions(unsigned n)
{
    std::vector<Partition> out;
    std::vector<unsigned> current;
    std::function<void(unsigned, unsigned)> extend = [&](unsigned remaining, unsigned min_part) {
        if (remaining == 0) {
            if (current.size() >= 2)
                out.emplace_back(current);
            return;
        }
        for (unsigned e = min_part; e <= remaining; ++e) {
            current.push_back(e);
            extend(remaining - e, e);
            current.pop_back();
        }
    };
    extend(n, 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool mersenne_divisibility(std::uint64_t a, const Partition& part)
{
    if (a < 2)
        throw InvalidInput("mersenne_divisibility needs a >= 2");
    BigInt denom = 1;
    for (unsigned e : part.parts())
        denom *= ipow(BigInt(a), e) - 1;
    return (ipow(BigInt(a), part.n()) - 1) % denom == 0;
}

std::vector<SearchHit> classify_a_ge_3(std::uint64_t a_max, unsigned n_max, std::uint64_t a_min, unsigned workers)
{
    if (a_min < 3 || a_max < a_min)
        throw InvalidInput("classify_a_ge_3 needs 3 <= a_min <= a_max");
    if (n_max < 2)
        throw InvalidInput("classify_a_ge_3 needs n_max >= 2");
    std::vector<std::vector<Partition>> by_n(n_max + 1);
    for (unsigned n = 2; n <= n_max; ++n)
        by_n[n] = partitions(n);

    auto found = run_sharded<std::vector<SearchHit>>(a_max - a_min + 1, workers, [&](std::size_t i) {
        const std::uint64_t a = a_min + i;
        std::vector<SearchHit> local;
        for (unsigned n = 2; n <= n_max; ++n)
            for (const Partition& part : by_n[n])
                if (mersenne_divisibility(a, part))
                    local.push_back({a, part});
        return local;
    });
    std::vector<SearchHit> out;
    for (auto& block : found)
        out.insert(out.end(), block.begin(), block.end());
    return out;
}

ExponentMap::ExponentMap(unsigned n, const Partition& part)
{
    if (part.n() != n)
        throw InvalidInput("partition " + part.str() + " does not sum to " + std::to_string(n));
    auto touch = [&](std::uint64_t d) { exponents_.try_emplace(static_cast<unsigned>(d), 0); };
    for (auto d : arith::divisors(n)) {
        touch(d);
        exponents_[static_cast<unsigned>(d)] += 1;
    }
    for (unsigned e : part.parts())
        for (auto d : arith::divisors(e)) {
            touch(d);
            exponents_[static_cast<unsigned>(d)] -= 1;
        }
}

int ExponentMap::at(unsigned d) const noexcept
{
    auto it = exponents_.find(d);
    return it == exponents_.end() ? 0 : it->second;
}

std::vector<unsigned> ExponentMap::numerator_indices() const
{
    std::vector<unsigned> out;
    for (auto [d, e] : exponents_)
        if (d > 1 && e > 0)
            out.push_back(d);
    return out;
}

std::vector<unsigned> ExponentMap::denominator_indices() const
{
    std::vector<unsigned> out;
    for (auto [d, e] : exponents_)
        if (d >= 2)
            for (int i = 0; i < -e; ++i)
                out.push_back(d);
    return out;
}

Rational ExponentMap::evaluate(std::uint64_t a) const
{
    BigInt num = 1, den = 1;
    for (auto [d, e] : exponents_) {
        if (e == 0)
            continue;
        const BigInt v = ipow(cyclotomic_eval(d, BigInt(a)), static_cast<std::uint64_t>(std::abs(e)));
        (e > 0 ? num : den) *= v;
    }
    return Rational(num, den);
}

ExponentMap exponent_map(unsigned n, const Partition& part) { return ExponentMap(n, part); }

Rational abundancy(std::uint64_t n)
{
    if (n < 1)
        throw InvalidInput("abundancy needs n >= 1");
    return Rational(BigInt(arith::sigma(n)), BigInt(n));
}

Rational c_factor(std::uint64_t n)
{
    if (n < 2)
        throw InvalidInput("c_factor needs n >= 2");
    switch (arith::ord2(n)) {
    case 1:
        return Rational(59, 100);
    case 2:
        return Rational(70, 100);
    case 3:
        return Rational(84, 100);
    default:
        return Rational(1);
    }
}

namespace {

Real to_real(const Rational& r)
{
    return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

}  // namespace

CandidateSets candidate_degrees(unsigned n_max)
{
    if (n_max < 7)
        throw InvalidInput("candidate_degrees needs n_max >= 7");
    const Real log2 = boost::multiprecision::log(Real(2));
    const Real log4 = boost::multiprecision::log(Real(4));
    const Real log4_3 = boost::multiprecision::log(Real(4) / Real(3));
    const Real coarse_coeff = Real(128) / Real(100);
    const Real tolerance("1e-6");

    CandidateSets out;
    out.min_margin = Real(1e9);
    auto decide = [&](const Real& lhs, const Real& rhs, unsigned n, const char* which) {
        const Real margin = abs(lhs - rhs);
        if (margin < out.min_margin)
            out.min_margin = margin;
        if (margin < tolerance)
            throw PrecisionAlert(std::string(which) + " inequality is marginal at n = " + std::to_string(n));
        return lhs > rhs;
    };

    for (unsigned n = 7; n <= n_max; ++n) {
        const Real rn(n);
        const Real delta = n % 2 == 0 ? Real(1) : Real(0);
        const Real quarter = sqrt(sqrt(rn));
        const Real base = log4 + delta * log4_3 - 1 - delta / 2 - Real(1) / rn;
        const Real log_2n = boost::multiprecision::log(Real(2 * n));

        const Real coarse_lhs = base + coarse_coeff * quarter;
        const Real coarse_rhs = to_real(c_factor(n)) * log2 * quarter * quarter * quarter - log_2n;
        if (decide(coarse_lhs, coarse_rhs, n, "coarse"))
            out.coarse.push_back(n);

        const Real refined_lhs = base + to_real(abundancy(n));
        const Real refined_rhs = Real(arith::euler_phi(n)) * log2 - log_2n;
        if (decide(refined_lhs, refined_rhs, n, "refined"))
            out.refined.push_back(n);
    }
    return out;
}

std::vector<Partition> verify_prop36(unsigned n_max, unsigned workers)
{
    if (n_max < 2)
        throw InvalidInput("verify_prop36 needs n_max >= 2");
    auto admissible = [](const Partition& part) {
        const auto& p = part.parts();
        for (std::size_t i = 0; i < p.size();) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i])
                ++j;
            const unsigned d = p[i];
            const auto u = static_cast<unsigned>(j - i);
            if (d == 1 ? u > 2 : BigInt(u) * d > ipow(BigInt(2), d) - 1)
                return false;
            i = j;
        }
        return true;
    };
    auto found = run_sharded<std::vector<Partition>>(n_max - 1, workers, [&](std::size_t i) {
        std::vector<Partition> local;
        for (const Partition& part : partitions(static_cast<unsigned>(i + 2)))
            if (admissible(part) && mersenne_divisibility(2, part))
                local.push_back(part);
        return local;
    });
    std::vector<Partition> out;
    for (auto& block : found)
        out.insert(out.end(), block.begin(), block.end());
    return out;
}

namespace {

// sigma(n) and phi(n) for all n <= n_max.
std::vector<std::uint64_t> sigma_table(std::uint64_t n_max)
{
    std::vector<std::uint64_t> s(n_max + 1, 0);
    for (std::uint64_t d = 1; d <= n_max; ++d)
        for (std::uint64_t m = d; m <= n_max; m += d)
            s[m] += d;
    return s;
}

std::vector<std::uint64_t> phi_table(std::uint64_t n_max)
{
    std::vector<std::uint64_t> phi(n_max + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::uint64_t p = 2; p <= n_max; ++p)
        if (phi[p] == p)
            for (std::uint64_t m = p; m <= n_max; m += p)
                phi[m] -= phi[m] / p;
    return phi;
}

}  // namespace

std::vector<std::uint64_t> abundancy_bound_violations(std::uint64_t n_max)
{
    const auto sigma = sigma_table(n_max);
    const BigInt scale = ipow(BigInt(100), 4);
    const BigInt coeff = ipow(BigInt(128), 4);
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        // (sigma/n)^4 < (128/100)^4 n  <=>  sigma^4 100^4 < 128^4 n^5
        if (!(ipow(BigInt(sigma[n]), 4) * scale < coeff * ipow(BigInt(n), 5)))
            bad.push_back(n);
    }
    return bad;
}

std::vector<std::uint64_t> totient_bound_violations(std::uint64_t n_max)
{
    const auto phi = phi_table(n_max);
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const Rational c = c_factor(n);
        const BigInt num = boost::multiprecision::numerator(c);
        const BigInt den = boost::multiprecision::denominator(c);
        // phi^4 > (num/den)^4 n^3  <=>  phi^4 den^4 > num^4 n^3
        if (!(ipow(BigInt(phi[n]), 4) * ipow(den, 4) > ipow(num, 4) * ipow(BigInt(n), 3)))
            bad.push_back(n);
    }
    return bad;
}

}  // namespace lehmer_ff
