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

#include "lehmer_ff/ffield.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "expr_parser.hpp"
#include "lehmer_ff/errors.hpp"
#include "lehmer_ff/numeric.hpp"

namespace lehmer_ff {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits unpack(std::uint32_t code, std::uint32_t p, std::uint32_t len)
{
    Digits d(len);
    for (std::uint32_t i = 0; i < len; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

std::uint32_t pack(const Digits& d, std::uint32_t p)
{
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        code = code * p + d[i];
    return code;
}

// Remainder of a by the monic polynomial m over F_p (digit vectors, low first).
Digits reduce(Digits a, const Digits& m, std::uint32_t p)
{
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        const std::uint32_t c = a[i];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dm; ++j)
            a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
    }
    a.resize(std::min(a.size(), dm));
    return a;
}

bool is_zero(const Digits& a)
{
    for (auto c : a)
        if (c)
            return false;
    return true;
}

// Monic polynomial of degree deg over F_p whose lower coefficients are the
// base-p digits of low.
Digits monic_from(std::uint32_t low, std::uint32_t deg, std::uint32_t p)
{
    Digits d = unpack(low, p, deg);
    d.push_back(1);
    return d;
}

// Irreducible iff no monic factor of degree 1..deg/2.
bool irreducible_over_prime_field(const Digits& f, std::uint32_t p)
{
    const auto deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint32_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint32_t low = 0; low < count; ++low)
            if (is_zero(reduce(f, monic_from(low, d, p), p)))
                return false;
    }
    return true;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1)
{
    if (!arith::is_prime(p))
        throw InvalidPrime("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw InvalidDegree("extension degree must be at least 1");
    for (std::uint32_t i = 0; i < k; ++i) {
        if (static_cast<std::uint64_t>(q_) * p > max_order)
            throw InvalidInput("field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^16");
        q_ *= p;
    }

    if (k > 1) {
        for (std::uint32_t low = 0; low < q_; ++low) {
            Digits cand = monic_from(low, k, p);
            if (irreducible_over_prime_field(cand, p)) {
                modulus_ = std::move(cand);
                break;
            }
        }
        if (modulus_.empty())
            throw InvariantViolation("no irreducible modulus found");
    }

    if (q_ <= table_limit) {
        add_table_.resize(q_ * q_);
        mul_table_.resize(q_ * q_);
        neg_table_.resize(q_);
        inv_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_table_[a] = static_cast<std::uint16_t>(add_slow(0, a, true));
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b, false));
                const std::uint32_t m = mul_slow(a, b);
                mul_table_[a * q_ + b] = static_cast<std::uint16_t>(m);
                if (m == 1)
                    inv_table_[a] = static_cast<std::uint16_t>(b);
            }
        }
    }
}

std::uint32_t FieldSpec::add_slow(std::uint32_t a, std::uint32_t b, bool subtract) const noexcept
{
    if (k_ == 1)
        return subtract ? (a + p_ - b) % p_ : (a + b) % p_;
    Digits da = unpack(a, p_, k_), db = unpack(b, p_, k_);
    for (std::uint32_t i = 0; i < k_; ++i)
        da[i] = subtract ? (da[i] + p_ - db[i]) % p_ : (da[i] + db[i]) % p_;
    return pack(da, p_);
}

std::uint32_t FieldSpec::mul_slow(std::uint32_t a, std::uint32_t b) const noexcept
{
    if (k_ == 1)
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    const Digits da = unpack(a, p_, k_), db = unpack(b, p_, k_);
    Digits prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    return pack(reduce(std::move(prod), modulus_, p_), p_);
}

FieldElement FieldSpec::element(std::uint32_t code) const
{
    if (code >= q_)
        throw InvalidInput("element code " + std::to_string(code) + " out of range for F_" + std::to_string(q_));
    return {code};
}

FieldElement FieldSpec::from_coeffs(const std::vector<std::int64_t>& coeffs) const
{
    if (coeffs.size() > k_)
        throw InvalidInput("too many coefficients for F_" + std::to_string(q_));
    Digits d(k_, 0);
    const auto p = static_cast<std::int64_t>(p_);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        d[i] = static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p);
    return {pack(d, p_)};
}

FieldElement FieldSpec::from_int(std::int64_t v) const { return from_coeffs({v}); }

std::vector<std::uint32_t> FieldSpec::coeffs(FieldElement a) const { return unpack(a.code, p_, k_); }

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const noexcept
{
    if (!add_table_.empty())
        return {add_table_[a.code * q_ + b.code]};
    return {add_slow(a.code, b.code, false)};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const noexcept
{
    if (!add_table_.empty())
        return {add_table_[a.code * q_ + neg_table_[b.code]]};
    return {add_slow(a.code, b.code, true)};
}

FieldElement FieldSpec::neg(FieldElement a) const noexcept
{
    if (!neg_table_.empty())
        return {neg_table_[a.code]};
    return {add_slow(0, a.code, true)};
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const noexcept
{
    if (!mul_table_.empty())
        return {mul_table_[a.code * q_ + b.code]};
    return {mul_slow(a.code, b.code)};
}

FieldElement FieldSpec::inv(FieldElement a) const
{
    if (a.is_zero())
        throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    if (!inv_table_.empty())
        return {inv_table_[a.code]};
    return pow(a, q_ - 2);
}

FieldElement FieldSpec::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const noexcept
{
    FieldElement r = one();
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string FieldSpec::format(FieldElement a) const
{
    if (k_ == 1)
        return std::to_string(a.code);
    if (a.is_zero())
        return "0";
    const Digits d = coeffs(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1)
            out += std::to_string(d[i]) + "*";
        out += 't';
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

struct ElementAlgebra {
    using Value = FieldElement;
    const FieldSpec& f;

    Value integer(std::uint64_t v) const { return f.from_int(static_cast<std::int64_t>(v % f.p())); }
    bool has_variable(char c) const { return c == 't' && !f.is_prime_field(); }
    Value variable(char) const { return f.from_coeffs({0, 1}); }
    Value add(Value a, Value b) const { return f.add(a, b); }
    Value sub(Value a, Value b) const { return f.sub(a, b); }
    Value neg(Value a) const { return f.neg(a); }
    Value mul(Value a, Value b) const { return f.mul(a, b); }
    Value pow(Value a, std::uint64_t e) const { return f.pow(a, e); }
};

}  // namespace

FieldElement FieldSpec::parse(std::string_view text) const
{
    ElementAlgebra algebra{*this};
    return detail::ExprParser<ElementAlgebra>(text, algebra).parse();
}

Field make_field(std::uint32_t p, std::uint32_t k)
{
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({p, k});
    if (it != cache.end())
        return it->second;
    auto field = std::make_shared<const FieldSpec>(p, k);
    cache.emplace(std::make_pair(p, k), field);
    return field;
}

Field make_field_of_order(std::uint32_t q)
{
    if (q < 2)
        throw InvalidInput("field order must be at least 2");
    const auto primes = arith::prime_factors(q);
    if (primes.size() != 1)
        throw InvalidInput(std::to_string(q) + " is not a prime power");
    const auto p = static_cast<std::uint32_t>(primes[0]);
    std::uint32_t k = 0;
    for (std::uint32_t r = q; r > 1; r /= p)
        ++k;
    return make_field(p, k);
}

}  // namespace lehmer_ff
