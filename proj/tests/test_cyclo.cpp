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

#include <doctest.h>

#include <numeric>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>

#include "lehmer_ff/cyclo.hpp"
#include "lehmer_ff/errors.hpp"
#include "oracles.hpp"

using namespace lehmer_ff;

namespace {

IntPoly ints(std::vector<int> c)
{
    std::vector<BigInt> out(c.begin(), c.end());
    return IntPoly(out);
}

std::vector<BigInt> bigs(std::vector<std::uint64_t> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == ints({-1, 1}));
    CHECK(cyclotomic(6) == ints({1, -1, 1}));
    CHECK(cyclotomic(12) == ints({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(12).str() == "x^4-x^2+1");
    CHECK(cyclotomic(1).str() == "x-1");
    CHECK_THROWS_AS(cyclotomic(0), InvalidInput);

    // Phi_105 is the first with a coefficient of absolute value 2.
    bool has_two = false;
    const auto phi105 = cyclotomic(105);
    for (const auto& c : phi105.coeffs())
        has_two = has_two || c == -2;
    CHECK(has_two);
}

TEST_CASE("cyclotomic degrees and values match the Moebius product")
{
    for (std::uint64_t n = 1; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(cyclotomic(n).degree() == oracle::phi(n));
        for (std::int64_t a : {2, 3, 7})
            CHECK(cyclotomic_eval(n, a) == oracle::cyclotomic_value(n, a));
    }
}

TEST_CASE("x^n - 1 is the product over divisors")
{
    for (std::uint64_t n = 1; n <= 60; ++n) {
        IntPoly prod = ints({1});
        for (auto d : oracle::divisors(n))
            prod = prod * cyclotomic(d);
        std::vector<int> expected(n + 1, 0);
        expected[0] = -1;
        expected[n] = 1;
        CHECK(prod == ints(expected));
    }
}

TEST_CASE("evaluation")
{
    CHECK(cyclotomic_eval(1, 2) == 1);
    CHECK(cyclotomic_eval(2, 3) == 4);
    CHECK(cyclotomic_eval(6, 2) == 3);
    CHECK(cyclotomic_eval(6, -2) == 7);
    CHECK(cyclotomic_eval(12, 2, 1) == 13);
    // Homogeneous form b^phi(n) Phi_n(a/b).
    CHECK(cyclotomic_eval(3, 3, 2) == 9 + 6 + 4);
    CHECK(cyclotomic_eval(2, 5, 3) == 8);
}

TEST_CASE("monic division")
{
    auto [quot, rem] = divmod_monic(ints({-1, 0, 0, 0, 0, 0, 1}), cyclotomic(6));
    CHECK(rem.is_zero());
    CHECK(quot * cyclotomic(6) == ints({-1, 0, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(divmod_monic(ints({1, 1}), ints({1, 2})), InvalidInput);
}

TEST_CASE("valuations")
{
    CHECK(ord_p(2, 80) == 4);
    CHECK(ord_p(3, 80) == 0);
    CHECK(ord_p(2, cyclotomic_eval(2, 3)) == 2);
    CHECK(ord_p(5, -125) == 3);
    CHECK_THROWS_AS(ord_p(2, 0), UndefinedValuation);
    CHECK_THROWS_AS(ord_p(4, 16), InvalidPrime);
}

TEST_CASE("Zsigmondy examples")
{
    auto a = zsigmondy(2, 1, 6);
    CHECK(a.primitive_primes.empty());
    CHECK(a.exception == ZsigmondyException::N6);
    CHECK(to_string(*a.exception) == "N6");

    auto b = zsigmondy(3, 1, 2);
    CHECK(b.primitive_primes.empty());
    CHECK(b.exception == ZsigmondyException::PowerOfTwoSum);
    CHECK(to_string(*b.exception) == "POWER_OF_TWO_SUM");

    auto c = zsigmondy(2, 1, 4);
    CHECK(c.primitive_primes == bigs({5}));
    CHECK(c.algebraic_primes == bigs({3}));
    CHECK(c.primitive_part == 5);

    auto d = zsigmondy(2, 1, 11);
    CHECK(d.primitive_primes == bigs({23, 89}));
    CHECK(d.primitive_part == 2047);
    CHECK_FALSE(d.exception.has_value());

    auto e = zsigmondy(5, 3, 2);
    CHECK(e.primitive_primes.empty());
    CHECK(e.exception == ZsigmondyException::PowerOfTwoSum);
}

TEST_CASE("Zsigmondy errors")
{
    CHECK_THROWS_AS(zsigmondy(2, 2, 3), InvalidInput);
    CHECK_THROWS_AS(zsigmondy(1, 2, 3), InvalidInput);
    CHECK_THROWS_AS(zsigmondy(4, 2, 3), InvalidInput);
    CHECK_THROWS_AS(zsigmondy(2, 1, 1), InvalidInput);
    CHECK_THROWS_AS(zsigmondy(3, 1, 60), FactoringBudgetExceeded);
    CHECK_THROWS_AS(zsigmondy(2, 1, 20, {.factoring_budget = 1000}), FactoringBudgetExceeded);
}

TEST_CASE("primitive primes match the definition")
{
    for (std::uint64_t a = 2; a <= 7; ++a)
        for (std::uint64_t b = 1; b < a; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            for (unsigned n = 2; n <= 12; ++n) {
                auto r = zsigmondy(a, b, n);
                std::vector<BigInt> expected;
                for (auto p : oracle::primitive_primes(a, b, n))
                    expected.push_back(p);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(n);
                CHECK(r.primitive_primes == expected);
                CHECK(r.primitive_primes.empty() == zsigmondy_exception(a, b, n).has_value());
                CHECK(r.primitive_part == primitive_part_structural(a, b, n));
            }
        }
}

TEST_CASE("structural primitive part beyond the factoring budget")
{
    // 12^30 - 1 exceeds 2^64; the structural route still applies.
    auto m = primitive_part_structural(12, 1, 30);
    CHECK(m > 1);
    CHECK(cyclotomic_eval(30, 12) % m == 0);
    CHECK((ipow(12, 30) - 1) % m == 0);
    CHECK(primitive_part_structural(2, 1, 6) == 1);
}

TEST_CASE("trial factorization")
{
    CHECK(trial_factor(1).empty());
    CHECK(trial_factor(360) == std::vector<std::pair<BigInt, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK_THROWS_AS(trial_factor(0), InvalidInput);

    for (std::uint64_t v : {2047ull, 1ull << 61, 18446744073709551557ull, 600851475143ull,
                            (1ull << 32) + 1, 999999000001ull}) {
        auto fac = trial_factor(v);
        BigInt prod = 1;
        for (auto [p, e] : fac) {
            CHECK(boost::multiprecision::miller_rabin_test(p, 40));
            prod *= ipow(p, e);
        }
        CHECK(prod == v);
    }
}
