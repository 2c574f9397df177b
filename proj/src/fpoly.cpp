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

#include "lehmer_ff/fpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "expr_parser.hpp"
#include "lehmer_ff/errors.hpp"

namespace lehmer_ff {

namespace {

void require_same_field(const Poly& a, const Poly& b)
{
    if (!(a.field() == b.field()))
        throw FieldMismatch("polynomials over F_" + std::to_string(a.field().q()) + " and F_" +
                            std::to_string(b.field().q()));
}

// q^n, or nullopt-like zero when it overflows 64 bits.
std::uint64_t checked_power(std::uint64_t q, std::size_t n)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > UINT64_MAX / q)
            return 0;
        r *= q;
    }
    return r;
}

}  // namespace

std::size_t Degree::value() const
{
    if (is_neg_inf())
        throw InvalidInput("degree of the zero polynomial is NEG_INF");
    return static_cast<std::size_t>(value_);
}

std::string Degree::str() const { return is_neg_inf() ? "-inf" : std::to_string(value_); }

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    for (auto c : coeffs_)
        if (c.code >= field_->q())
            throw InvalidInput("coefficient out of range for F_" + std::to_string(field_->q()));
    normalize();
}

Poly Poly::constant(Field field, FieldElement c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(Field field, FieldElement c, std::size_t e)
{
    std::vector<FieldElement> v(e + 1, field->zero());
    v[e] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::from_ints(Field field, const std::vector<std::int64_t>& coeffs)
{
    std::vector<FieldElement> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs)
        v.push_back(field->from_int(c));
    return Poly(std::move(field), std::move(v));
}

void Poly::normalize() noexcept
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

FieldElement Poly::coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }

FieldElement Poly::lead() const noexcept { return is_zero() ? FieldElement{} : coeffs_.back(); }

Poly& Poly::operator+=(const Poly& rhs)
{
    require_same_field(*this, rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] = field_->add(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    require_same_field(*this, rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] = field_->sub(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    require_same_field(lhs, rhs);
    if (lhs.is_zero() || rhs.is_zero())
        return Poly(lhs.field_);
    const FieldSpec& f = *lhs.field_;
    std::vector<FieldElement> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        const FieldElement a = lhs.coeffs_[i];
        if (a.is_zero())
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a, rhs.coeffs_[j]));
    }
    return Poly(lhs.field_, std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly Poly::operator-() const { return scaled(field_->neg(field_->one())); }

Poly Poly::scaled(FieldElement c) const
{
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (auto a : coeffs_)
        out.push_back(field_->mul(a, c));
    return Poly(field_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) noexcept
{
    return a.field() == b.field() && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept
{
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (a.coeffs_[i] != b.coeffs_[i])
            return a.coeffs_[i] <=> b.coeffs_[i];
    return std::strong_ordering::equal;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    const FieldSpec& f = a.field();
    if (a.coeffs().size() < b.coeffs().size())
        return {Poly(a.field_ptr()), a};

    std::vector<FieldElement> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<FieldElement> quot(rem.size() - db, f.zero());
    const FieldElement lead_inv = f.inv(bc.back());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero())
            continue;
        const FieldElement c = f.mul(rem[i], lead_inv);
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, bc[j]));
    }
    rem.resize(db);
    return {Poly(a.field_ptr(), std::move(quot)), Poly(a.field_ptr(), std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly monic(const Poly& f)
{
    if (f.is_zero() || f.is_monic())
        return f;
    return f.scaled(f.field().inv(f.lead()));
}

Poly poly_gcd(const Poly& f, const Poly& g)
{
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero())
        throw UndefinedGcd("gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly poly_powmod(const Poly& g, const BigInt& e, const Poly& f)
{
    require_same_field(g, f);
    if (f.degree() < Degree(1))
        throw InvalidModulus("modulus must have degree at least 1");
    if (e < 0)
        throw InvalidInput("negative exponent");
    Poly base = poly_mod(g, f);
    Poly result = poly_mod(Poly::constant(f.field_ptr(), f.field().one()), f);
    if (e == 0)
        return result;
    const std::size_t top = boost::multiprecision::msb(e);
    for (std::size_t i = top + 1; i-- > 0;) {
        result = poly_mod(result * result, f);
        if (boost::multiprecision::bit_test(e, i))
            result = poly_mod(result * base, f);
    }
    return result;
}

std::uint64_t encode(const Poly& f)
{
    const std::uint64_t q = f.field().q();
    std::uint64_t code = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        if (code > (UINT64_MAX - f.coeffs()[i].code) / q)
            throw InvalidInput("polynomial encoding exceeds 64 bits");
        code = code * q + f.coeffs()[i].code;
    }
    return code;
}

Poly decode(const Field& field, std::uint64_t code)
{
    const std::uint64_t q = field->q();
    std::vector<FieldElement> v;
    while (code) {
        v.push_back({static_cast<std::uint32_t>(code % q)});
        code /= q;
    }
    return Poly(field, std::move(v));
}

namespace {

constexpr std::uint64_t sieve_limit = 1ull << 24;

struct SieveCache {
    std::mutex mutex;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::size_t>, std::shared_ptr<const std::vector<Poly>>> entries;
};

SieveCache& sieve_cache()
{
    static SieveCache cache;
    return cache;
}

std::vector<Poly> sieve_irreducibles(const Field& field, std::size_t d)
{
    const std::uint64_t q = field->q();
    const std::uint64_t count = checked_power(q, d);
    if (count == 0 || count > sieve_limit)
        throw SieveBudgetExceeded("sieving degree " + std::to_string(d) + " over F_" + std::to_string(q) +
                                  " needs more than 2^24 slots");
    // Slot i stands for the monic polynomial with encoding count + i.
    std::vector<bool> reducible(count, false);
    for (std::size_t i = 1; 2 * i <= d; ++i) {
        const auto small = irreducibles(field, i);
        for (const Poly& a : *small)
            for (const Poly& b : enumerate_polys(field, d - i, true))
                reducible[encode(a * b) - count] = true;
    }
    std::vector<Poly> out;
    for (std::uint64_t i = 0; i < count; ++i)
        if (!reducible[i])
            out.push_back(decode(field, count + i));
    return out;
}

}  // namespace

std::shared_ptr<const std::vector<Poly>> irreducibles(const Field& field, std::size_t d)
{
    if (d < 1)
        throw InvalidDegree("irreducible degree must be at least 1");
    auto& cache = sieve_cache();
    const auto key = std::make_tuple(field->p(), field->k(), d);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end())
            return it->second;
    }
    auto computed = std::make_shared<const std::vector<Poly>>(sieve_irreducibles(field, d));
    std::lock_guard lock(cache.mutex);
    return cache.entries.emplace(key, std::move(computed)).first->second;
}

BigInt irreducible_count(std::uint64_t q, std::uint64_t d)
{
    if (q < 2 || d < 1)
        throw InvalidInput("irreducible_count needs q >= 2 and d >= 1");
    BigInt sum = 0;
    for (std::uint64_t e : arith::divisors(d)) {
        const int mu = arith::mobius(d / e);
        if (mu != 0)
            sum += mu * ipow(BigInt(q), e);
    }
    return sum / d;
}

bool is_irreducible(const Poly& f)
{
    if (f.degree() < Degree(1))
        throw InvalidInput("irreducibility is defined for degree >= 1");
    const std::size_t n = f.degree().value();
    for (std::size_t d = 1; 2 * d <= n; ++d)
        for (const Poly& g : *irreducibles(f.field_ptr(), d))
            if (poly_mod(f, g).is_zero())
                return false;
    return true;
}

Poly Factorization::expand(const Field& field) const
{
    Poly out = Poly::constant(field, unit);
    for (const auto& [poly, mult] : factors)
        for (unsigned i = 0; i < mult; ++i)
            out *= poly;
    return out;
}

unsigned Factorization::total_multiplicity() const noexcept
{
    unsigned total = 0;
    for (const auto& f : factors)
        total += f.multiplicity;
    return total;
}

bool Factorization::is_squarefree() const noexcept
{
    return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.multiplicity == 1; });
}

Factorization factor(const Poly& f)
{
    if (f.is_zero())
        throw CannotFactorZero("cannot factor the zero polynomial");
    Factorization out{f.lead(), {}};
    Poly rest = monic(f);
    for (std::size_t d = 1; 2 * d <= rest.coeffs().size() - 1; ++d) {
        for (const Poly& g : *irreducibles(f.field_ptr(), d)) {
            unsigned mult = 0;
            for (;;) {
                auto [quot, rem] = poly_divmod(rest, g);
                if (!rem.is_zero())
                    break;
                rest = std::move(quot);
                ++mult;
            }
            if (mult)
                out.factors.push_back({g, mult});
            if (2 * d > rest.coeffs().size() - 1)
                break;
        }
    }
    // No factor of degree <= deg(rest)/2 remains, so rest is 1 or irreducible.
    if (rest.coeffs().size() > 1)
        out.factors.push_back({rest, 1});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    return out;
}

PolyStream::PolyStream(Field field, std::size_t degree, bool monic_only) : field_(std::move(field)), begin_(0)
{
    const std::uint64_t q = field_->q();
    first_code_ = checked_power(q, degree);
    const std::uint64_t top = checked_power(q, degree + 1);
    if (first_code_ == 0 || top == 0)
        throw InvalidInput("enumeration range exceeds 64-bit encodings");
    end_ = monic_only ? first_code_ : top - first_code_;
}

PolyStream::PolyStream(Field field, std::uint64_t first_code, std::uint64_t begin, std::uint64_t end)
    : field_(std::move(field)), first_code_(first_code), begin_(begin), end_(end)
{
}

Poly PolyStream::at(std::uint64_t i) const { return decode(field_, first_code_ + begin_ + i); }

std::vector<PolyStream> PolyStream::split(std::size_t parts) const
{
    std::vector<PolyStream> out;
    const std::uint64_t n = size();
    if (parts == 0)
        parts = 1;
    const std::uint64_t block = (n + parts - 1) / parts;
    for (std::uint64_t lo = 0; lo < n; lo += block)
        out.push_back(PolyStream(field_, first_code_, begin_ + lo, begin_ + std::min(n, lo + block)));
    return out;
}

PolyStream enumerate_polys(const Field& field, std::size_t n, bool monic_only)
{
    return PolyStream(field, n, monic_only);
}

std::string format(const Poly& f)
{
    if (f.is_zero())
        return "0";
    const FieldSpec& field = f.field();
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const FieldElement c = f.coeffs()[i];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += '+';
        std::string ctext = field.format(c);
        if (i == 0) {
            out += ctext;
            continue;
        }
        if (c != field.one()) {
            if (ctext.find('+') != std::string::npos)
                ctext = "(" + ctext + ")";
            out += ctext + "*";
        }
        out += 'x';
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

constexpr std::uint64_t max_parsed_exponent = 1u << 16;

struct PolyAlgebra {
    using Value = Poly;
    Field field;

    Value integer(std::uint64_t v) const
    {
        return Poly::constant(field, field->from_int(static_cast<std::int64_t>(v % field->p())));
    }
    bool has_variable(char c) const { return c == 'x' || (c == 't' && !field->is_prime_field()); }
    Value variable(char c) const
    {
        if (c == 'x')
            return Poly::x(field);
        return Poly::constant(field, field->from_coeffs({0, 1}));
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value pow(Value a, std::uint64_t e) const
    {
        if (e > max_parsed_exponent)
            throw ParseError("exponent " + std::to_string(e) + " too large");
        Value r = Poly::constant(field, field->one());
        while (e) {
            if (e & 1)
                r *= a;
            e >>= 1;
            if (e)
                a = a * a;
        }
        return r;
    }
};

}  // namespace

Poly parse_poly(const Field& field, std::string_view text)
{
    PolyAlgebra algebra{field};
    return detail::ExprParser<PolyAlgebra>(text, algebra).parse();
}

}  // namespace lehmer_ff
