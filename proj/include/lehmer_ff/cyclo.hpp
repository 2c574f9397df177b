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
#include <utility>
#include <vector>

#include "lehmer_ff/numeric.hpp"

namespace lehmer_ff {

/// Dense polynomial over Z, lowest degree first, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; 0 for the zero polynomial (callers check is_zero first).
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    BigInt eval(const BigInt& x) const;
    /// b^deg * P(a / b), the homogenized value.
    BigInt eval_homogeneous(const BigInt& a, const BigInt& b) const;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Sparse text, e.g. "x^4-x^2+1".
    std::string str() const;

private:
    std::vector<BigInt> coeffs_;
};

/// (quotient, remainder) for a monic divisor; exact over Z.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic_divisor);

/// The n-th cyclotomic polynomial, obtained from x^n - 1 by exact division
/// by Phi_d for every proper divisor d of n. Memoized across calls.
/// Throws InvalidInput for n < 1.
IntPoly cyclotomic(std::uint64_t n);

/// Phi_n(a).
BigInt cyclotomic_eval(std::uint64_t n, const BigInt& a);
/// b^phi(n) Phi_n(a / b).
BigInt cyclotomic_eval(std::uint64_t n, const BigInt& a, const BigInt& b);

/// Largest v with p^v | m. Throws UndefinedValuation for m = 0 and
/// InvalidPrime when p is not prime.
unsigned ord_p(std::uint64_t p, const BigInt& m);

enum class ZsigmondyException {
    N6,                // a = 2, b = 1, n = 6
    PowerOfTwoSum,     // n = 2 and a + b a power of two
};

std::string to_string(ZsigmondyException e);

struct ZsigmondyResult {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t n = 0;
    /// Primes dividing a^n - b^n and no a^k - b^k with k < n, ascending.
    std::vector<BigInt> primitive_primes;
    /// The remaining prime divisors of a^n - b^n, ascending.
    std::vector<BigInt> algebraic_primes;
    std::optional<ZsigmondyException> exception;
    /// prod over primitive p of p^{ord_p(a^n - b^n)}.
    BigInt primitive_part = 1;
};

struct ZsigmondyOptions {
    /// Largest a^n - b^n that will be factored.
    BigInt factoring_budget = BigInt(1) << 64;
};

/// Factors a^n - b^n by trial division and classifies each prime by
/// checking a^k - b^k for every k < n.
///
/// Throws InvalidInput unless a > b > 0, gcd(a, b) = 1 and n >= 2, and
/// FactoringBudgetExceeded when a^n - b^n exceeds the budget.
ZsigmondyResult zsigmondy(std::uint64_t a, std::uint64_t b, std::uint64_t n, const ZsigmondyOptions& options = {});

/// The exception tag the Bang-Zsigmondy theorem predicts for (a, b, n).
std::optional<ZsigmondyException> zsigmondy_exception(std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// Primitive part computed without factoring: the primitive primes of
/// a^n - b^n are exactly the primes of Phi_n(a, b) not dividing n, so this
/// is Phi_n(a, b) with every prime of n removed. Works at any size.
BigInt primitive_part_structural(std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// Prime factorization by trial division, ascending (prime, exponent).
/// Throws InvalidInput for v < 1.
std::vector<std::pair<BigInt, unsigned>> trial_factor(BigInt v);

}  // namespace lehmer_ff
