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
#include <map>
#include <string>
#include <vector>

#include "lehmer_ff/numeric.hpp"

namespace lehmer_ff {

/// A multiset of positive parts e_1 <= ... <= e_s with s >= 2, standing for
/// the degrees of the irreducible factors of a squarefree polynomial.
class Partition {
public:
    /// Sorts the parts. Throws InvalidInput for fewer than two parts or a
    /// zero part.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned n() const noexcept { return n_; }
    std::size_t s() const noexcept { return parts_.size(); }
    /// Number of parts equal to d.
    unsigned multiplicity(unsigned d) const noexcept;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Colex: compare the largest parts first.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// All partitions of n into at least two parts, in colex order.
std::vector<Partition> partitions(unsigned n);

/// prod_i (a^{e_i} - 1) divides a^n - 1, decided in exact arithmetic.
bool mersenne_divisibility(std::uint64_t a, const Partition& part);

struct SearchHit {
    std::uint64_t a;
    Partition partition;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Every (a, partition) with a_min <= a <= a_max and 2 <= n <= n_max for
/// which mersenne_divisibility holds, ordered by (a, n, colex).
std::vector<SearchHit> classify_a_ge_3(std::uint64_t a_max, unsigned n_max, std::uint64_t a_min = 3,
                                       unsigned workers = 1);

/// The cyclotomic decomposition of (x^n - 1) / prod_i (x^{e_i} - 1): the
/// exponent of Phi_d is [d | n] - #{i : d | e_i}, for every d dividing n
/// or some part.
class ExponentMap {
public:
    ExponentMap(unsigned n, const Partition& part);

    const std::map<unsigned, int>& exponents() const noexcept { return exponents_; }
    int at(unsigned d) const noexcept;
    /// {d > 1 : exponent(d) > 0}; each such exponent is exactly 1.
    std::vector<unsigned> numerator_indices() const;
    /// d >= 2 with negative exponent, repeated -exponent(d) times.
    std::vector<unsigned> denominator_indices() const;
    /// prod_d Phi_d(a)^exponent(d), exactly.
    Rational evaluate(std::uint64_t a) const;

private:
    std::map<unsigned, int> exponents_;
};

ExponentMap exponent_map(unsigned n, const Partition& part);

/// sigma(n) / n in lowest terms. Throws InvalidInput for n < 1.
Rational abundancy(std::uint64_t n);

/// 59/100, 70/100, 84/100 or 1 by ord_2(n) = 1, 2, 3, or otherwise.
/// Throws InvalidInput for n < 2.
Rational c_factor(std::uint64_t n);

struct CandidateSets {
    std::vector<unsigned> coarse;
    std::vector<unsigned> refined;
    /// Smallest |lhs - rhs| seen across both inequalities.
    Real min_margin;
};

/// n in [7, n_max] satisfying the coarse inequality
///   log 4 + d log(4/3) - 1 - d/2 - 1/n + 1.28 n^{1/4} > c(n) log 2 n^{3/4} - log 2n
/// and the refined one with h(n) on the left and phi(n) log 2 - log 2n on the
/// right, d = [n even]. Evaluated with 50 significant digits; throws
/// PrecisionAlert if either side is within 1e-6 of the other.
CandidateSets candidate_degrees(unsigned n_max);

/// Partitions of n <= n_max, s >= 2, with at most two parts equal to 1 and
/// at most (2^d - 1)/d parts equal to d >= 2, for which
/// prod (2^{e_i} - 1) | 2^n - 1.
std::vector<Partition> verify_prop36(unsigned n_max, unsigned workers = 1);

/// n in [1, n_max] with (sigma(n)/n)^4 >= 1.28^4 n, in exact arithmetic.
std::vector<std::uint64_t> abundancy_bound_violations(std::uint64_t n_max);

/// n in [2, n_max] with phi(n)^4 <= c(n)^4 n^3, in exact arithmetic.
std::vector<std::uint64_t> totient_bound_violations(std::uint64_t n_max);

}  // namespace lehmer_ff
