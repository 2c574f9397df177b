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
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lehmer_ff {

/// An element of F_q. The value is the coefficient sequence (c_0, ..., c_{k-1})
/// of c_0 + c_1 t + ... in F_p[t]/(modulus), packed base p as
/// code = sum c_i p^i. For prime fields the code is the residue itself.
/// Ordering by code is the canonical element order.
struct FieldElement {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) noexcept = default;
};

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// F_q with q = p^k <= 2^16. Immutable after construction; safe to share
/// between threads.
class FieldSpec {
public:
    static constexpr std::uint32_t max_order = 1u << 16;

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return k_ == 1; }

    /// Coefficients of the monic modulus, lowest degree first (length k + 1).
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// Element with the given packed code; throws InvalidInput when code >= q.
    FieldElement element(std::uint32_t code) const;
    /// Reduces each coefficient mod p. Throws InvalidInput when more than k
    /// coefficients are supplied.
    FieldElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;
    /// Image of an integer under Z -> F_p -> F_q.
    FieldElement from_int(std::int64_t v) const;
    std::vector<std::uint32_t> coeffs(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept;
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    /// Throws DivisionByZero for a = 0.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

    /// Decimal residue for k = 1, polynomial in t otherwise ("t^2+2*t+1").
    std::string format(FieldElement a) const;
    /// Inverse of format. Also accepts any term order, '-' and
    /// out-of-range integer coefficients (reduced mod p).
    FieldElement parse(std::string_view text) const;

    /// Fields are equal when (p, k) agree; the modulus is a function of (p, k).
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept
    {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }

    /// Use make_field.
    FieldSpec(std::uint32_t p, std::uint32_t k);

private:
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b, bool subtract) const noexcept;

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    // Operation tables, filled when q <= table_limit.
    static constexpr std::uint32_t table_limit = 256;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint16_t> neg_table_;
    std::vector<std::uint16_t> inv_table_;
};

/// Builds F_{p^k} with the canonical modulus: the monic irreducible of
/// degree k over F_p with the smallest code sum c_i p^i. Instances are
/// cached, so equal (p, k) return the same object.
///
/// Throws InvalidPrime if p is not prime, InvalidDegree if k < 1, and
/// InvalidInput if p^k exceeds FieldSpec::max_order.
Field make_field(std::uint32_t p, std::uint32_t k);

/// Builds F_q for a prime power q.
Field make_field_of_order(std::uint32_t q);

}  // namespace lehmer_ff
