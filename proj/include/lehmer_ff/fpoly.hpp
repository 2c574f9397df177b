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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lehmer_ff/ffield.hpp"
#include "lehmer_ff/numeric.hpp"

namespace lehmer_ff {

/// Polynomial degree. The zero polynomial has the distinguished degree
/// NEG_INF, which compares below every finite degree and absorbs addition.
class Degree {
public:
    constexpr Degree(std::size_t d) noexcept : value_(static_cast<std::int64_t>(d)) {}  // NOLINT
    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return value_ < 0; }
    /// Finite degree; throws InvalidInput for NEG_INF.
    std::size_t value() const;

    friend constexpr Degree operator+(Degree a, Degree b) noexcept
    {
        if (a.is_neg_inf() || b.is_neg_inf())
            return neg_inf();
        return Degree(static_cast<std::size_t>(a.value_ + b.value_));
    }
    friend constexpr auto operator<=>(Degree, Degree) noexcept = default;

    std::string str() const;

private:
    constexpr Degree() noexcept : value_(-1) {}
    std::int64_t value_;
};

inline constexpr Degree NEG_INF = Degree::neg_inf();

/// A polynomial over a finite field in canonical form: coefficients lowest
/// degree first with no trailing zeros. The zero polynomial stores nothing.
class Poly {
public:
    explicit Poly(Field field);
    Poly(Field field, std::vector<FieldElement> coeffs);

    static Poly constant(Field field, FieldElement c);
    /// c * x^e
    static Poly monomial(Field field, FieldElement c, std::size_t e);
    static Poly x(const Field& field) { return monomial(field, field->one(), 1); }
    /// Polynomial from small integer coefficients (lowest first) mapped into F_p.
    static Poly from_ints(Field field, const std::vector<std::int64_t>& coeffs);

    const FieldSpec& field() const noexcept { return *field_; }
    const Field& field_ptr() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept { return is_zero() ? NEG_INF : Degree(coeffs_.size() - 1); }
    /// Coefficient of x^i; zero beyond the degree.
    FieldElement coeff(std::size_t i) const noexcept;
    /// Leading coefficient; zero for the zero polynomial.
    FieldElement lead() const noexcept;
    bool is_monic() const noexcept { return !is_zero() && coeffs_.back().code == 1; }

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    Poly operator-() const;
    Poly scaled(FieldElement c) const;

    /// Same field and same coefficients.
    friend bool operator==(const Poly& a, const Poly& b) noexcept;
    /// Canonical order: by degree, then by coefficients from the top down.
    /// Agrees with the integer encoding sum code_i q^i.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

private:
    void normalize() noexcept;

    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// (quotient, remainder) of a by b; throws DivisionByZero for b = 0 and
/// FieldMismatch for different fields.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
/// Scales to leading coefficient one; zero stays zero.
Poly monic(const Poly& f);

/// Monic gcd. gcd(f, 0) = monic(f). Throws UndefinedGcd when both are zero.
Poly poly_gcd(const Poly& f, const Poly& g);

/// g^e mod f by square-and-multiply. Throws InvalidModulus when deg f < 1.
Poly poly_powmod(const Poly& g, const BigInt& e, const Poly& f);

/// Trial division against the sieved irreducibles of degree <= deg(f)/2.
/// Throws InvalidInput when deg f < 1.
bool is_irreducible(const Poly& f);

/// All monic irreducibles of degree d, ascending. Computed once per (q, d)
/// by sieving out products of lower-degree irreducibles, then shared.
/// Throws SieveBudgetExceeded when q^d > 2^24.
std::shared_ptr<const std::vector<Poly>> irreducibles(const Field& field, std::size_t d);

/// Necklace count (1/d) sum_{e | d} mu(d/e) q^e.
BigInt irreducible_count(std::uint64_t q, std::uint64_t d);

struct Factor {
    Poly poly;
    unsigned multiplicity;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// unit * prod poly_i^multiplicity_i, factors monic, distinct and ascending.
struct Factorization {
    FieldElement unit;
    std::vector<Factor> factors;

    Poly expand(const Field& field) const;
    /// Number of irreducible factors counted with multiplicity.
    unsigned total_multiplicity() const noexcept;
    bool is_squarefree() const noexcept;
};

/// Throws CannotFactorZero for f = 0.
Factorization factor(const Poly& f);

/// Every polynomial of exact degree n over a field (or only the monic ones),
/// in encoding order. The encodings of such polynomials form a contiguous
/// integer range, so the stream is an index range that can be split into
/// disjoint blocks for independent workers.
class PolyStream {
public:
    PolyStream(Field field, std::size_t degree, bool monic_only);

    std::uint64_t size() const noexcept { return end_ - begin_; }
    Poly at(std::uint64_t i) const;
    /// Splits into at most `parts` consecutive, non-empty sub-streams.
    std::vector<PolyStream> split(std::size_t parts) const;

    class iterator {
    public:
        using value_type = Poly;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(const PolyStream* s, std::uint64_t i) : stream_(s), index_(i) {}
        Poly operator*() const { return stream_->at(index_); }
        iterator& operator++()
        {
            ++index_;
            return *this;
        }
        iterator operator++(int)
        {
            auto tmp = *this;
            ++index_;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const PolyStream* stream_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    PolyStream(Field field, std::uint64_t first_code, std::uint64_t begin, std::uint64_t end);

    Field field_;
    std::uint64_t first_code_;
    std::uint64_t begin_;
    std::uint64_t end_;
};

PolyStream enumerate_polys(const Field& field, std::size_t n, bool monic_only);

/// Integer encoding sum code_i q^i. Throws InvalidInput when it does not
/// fit in 64 bits.
std::uint64_t encode(const Poly& f);
Poly decode(const Field& field, std::uint64_t code);

/// Canonical descending-degree text, e.g. "x^3+x+1" or "(t+1)*x^2+t*x+1".
std::string format(const Poly& f);
/// Accepts any term order, '-', parentheses and t for the field generator.
/// Throws ParseError on malformed text.
Poly parse_poly(const Field& field, std::string_view text);

}  // namespace lehmer_ff
