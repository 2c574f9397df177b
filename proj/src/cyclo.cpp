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

#include "lehmer_ff/cyclo.hpp"

#include <limits>
#include <map>
#include <mutex>

#include "lehmer_ff/errors.hpp"

namespace lehmer_ff {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

BigInt IntPoly::eval_homogeneous(const BigInt& a, const BigInt& b) const
{
    BigInt acc = 0;
    BigInt bpow = 1;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * a + coeffs_[i] * bpow;
        bpow *= b;
    }
    return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

std::string IntPoly::str() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        const BigInt mag = abs(c);
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (i == 0 || mag != 1)
            out += mag.str();
        if (i > 0) {
            if (mag != 1)
                out += '*';
            out += 'x';
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& d)
{
    if (d.is_zero() || d.coeffs().back() != 1)
        throw InvalidInput("divisor must be monic");
    std::vector<BigInt> rem = a.coeffs();
    const auto& dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    if (rem.size() <= dd)
        return {IntPoly(), a};
    std::vector<BigInt> quot(rem.size() - dd, 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
        const BigInt c = rem[i];
        if (c == 0)
            continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] -= c * dc[j];
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly cyclotomic(std::uint64_t n)
{
    if (n < 1)
        throw InvalidInput("cyclotomic index must be at least 1");
    static std::mutex mutex;
    static std::map<std::uint64_t, IntPoly> memo;
    {
        std::lock_guard lock(mutex);
        auto it = memo.find(n);
        if (it != memo.end())
            return it->second;
    }
    std::vector<BigInt> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    IntPoly acc(std::move(c));
    for (std::uint64_t d : arith::divisors(n)) {
        if (d == n)
            continue;
        auto [quot, rem] = divmod_monic(acc, cyclotomic(d));
        if (!rem.is_zero())
            throw InvariantViolation("x^" + std::to_string(n) + "-1 not divisible by Phi_" + std::to_string(d));
        acc = std::move(quot);
    }
    if (acc.degree() != arith::euler_phi(n))
        throw InvariantViolation("Phi_" + std::to_string(n) + " has the wrong degree");
    std::lock_guard lock(mutex);
    return memo.emplace(n, std::move(acc)).first->second;
}

BigInt cyclotomic_eval(std::uint64_t n, const BigInt& a) { return cyclotomic(n).eval(a); }

BigInt cyclotomic_eval(std::uint64_t n, const BigInt& a, const BigInt& b)
{
    return cyclotomic(n).eval_homogeneous(a, b);
}

unsigned ord_p(std::uint64_t p, const BigInt& m)
{
    if (!arith::is_prime(p))
        throw InvalidPrime(std::to_string(p) + " is not prime");
    if (m == 0)
        throw UndefinedValuation("valuation of zero is undefined");
    BigInt r = abs(m);
    unsigned v = 0;
    while (r % p == 0) {
        r /= p;
        ++v;
    }
    return v;
}

std::string to_string(ZsigmondyException e)
{
    switch (e) {
    case ZsigmondyException::N6:
        return "N6";
    case ZsigmondyException::PowerOfTwoSum:
        return "POWER_OF_TWO_SUM";
    }
    return "?";
}

std::vector<std::pair<BigInt, unsigned>> trial_factor(BigInt v)
{
    if (v < 1)
        throw InvalidInput("trial_factor needs a positive integer");
    std::vector<std::pair<BigInt, unsigned>> out;
    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    };
    strip(2);
    const BigInt u64_max = std::numeric_limits<std::uint64_t>::max();
    BigInt d = 3;
    while (v > u64_max && d * d <= v) {
        strip(d);
        d += 2;
    }
    if (v <= u64_max) {
        auto w = v.convert_to<std::uint64_t>();
        auto dd = d.convert_to<std::uint64_t>();
        for (; w > 1 && !arith::is_prime_u64(w) && dd <= w / dd; dd += 2) {
            unsigned e = 0;
            while (w % dd == 0) {
                w /= dd;
                ++e;
            }
            if (e)
                out.emplace_back(BigInt(dd), e);
        }
        v = w;
    }
    if (v > 1)
        out.emplace_back(v, 1);
    return out;
}

std::optional<ZsigmondyException> zsigmondy_exception(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    if (a == 2 && b == 1 && n == 6)
        return ZsigmondyException::N6;
    const std::uint64_t s = a + b;
    if (n == 2 && (s & (s - 1)) == 0)
        return ZsigmondyException::PowerOfTwoSum;
    return std::nullopt;
}

namespace {

void check_zsigmondy_args(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    if (!(a > b && b > 0))
        throw InvalidInput("zsigmondy needs a > b > 0");
    if (arith::gcd(a, b) != 1)
        throw InvalidInput("zsigmondy needs gcd(a, b) = 1");
    if (n < 2)
        throw InvalidInput("zsigmondy needs n >= 2");
}

}  // namespace

ZsigmondyResult zsigmondy(std::uint64_t a, std::uint64_t b, std::uint64_t n, const ZsigmondyOptions& options)
{
    check_zsigmondy_args(a, b, n);
    const BigInt value = ipow(BigInt(a), n) - ipow(BigInt(b), n);
    if (value > options.factoring_budget)
        throw FactoringBudgetExceeded(std::to_string(a) + "^" + std::to_string(n) + " - " + std::to_string(b) + "^" +
                                      std::to_string(n) + " exceeds the factoring budget " +
                                      options.factoring_budget.str());
    ZsigmondyResult r;
    r.a = a;
    r.b = b;
    r.n = n;
    for (const auto& [p, e] : trial_factor(value)) {
        bool primitive = true;
        BigInt ak = 1, bk = 1;
        for (std::uint64_t k = 1; k < n && primitive; ++k) {
            ak = ak * a % p;
            bk = bk * b % p;
            primitive = ak != bk;
        }
        if (primitive) {
            r.primitive_primes.push_back(p);
            r.primitive_part *= ipow(p, e);
        } else {
            r.algebraic_primes.push_back(p);
        }
    }
    r.exception = zsigmondy_exception(a, b, n);
    return r;
}

BigInt primitive_part_structural(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    check_zsigmondy_args(a, b, n);
    BigInt v = cyclotomic_eval(n, BigInt(a), BigInt(b));
    for (std::uint64_t p : arith::prime_factors(n))
        while (v % p == 0)
            v /= p;
    return v;
}

}  // namespace lehmer_ff
